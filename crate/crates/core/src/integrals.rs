//! The I₇ integral family and its closed forms.
//!
//! With s = √7 the central object is
//!
//! I(n) = ∫_{√3}^∞ lnⁿ|(u + s)/(u − s)| du/(1 + u²) = ∫_{π/3}^{π/2} lnⁿ|(tan t + s)/(tan t − s)| dt,
//!
//! split at u = s into I⁽¹⁾(n) (over [√3, s]) and I⁽²⁾(n) (over [s, ∞)).
//! I₇ = 24/(7s) · I(1). The constants r₇₃, θ±, ω±, v± and θ₇ that appear in
//! the closed forms are collected in [`I7Constants`].

use num_complex::Complex64;
use crate::constants::{PI, SQRT_3, SQRT_7};
use crate::error::domain;
use crate::quad::QuadProblem;
use crate::specfun::{
    cl2, hurwitz_zeta, incomplete_gamma_upper_int, polylog_complex, trigamma, Angle,
};
use crate::{Error, EvalResult, Result};

/// Fixed constants of the I₇ closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct I7Constants {
    /// (√7 + √3)/(√7 − √3)
    pub r73: f64,
    /// ±arctan(√7/3)
    pub theta_plus: Angle,
    pub theta_minus: Angle,
    /// arctan(r₇₃ sin θ± / (1 − r₇₃ cos θ±)), principal branch
    pub omega_plus: Angle,
    pub omega_minus: Angle,
    /// (3 ± i√7)/4 = e^{iθ±}
    pub v_plus: Complex64,
    pub v_minus: Complex64,
    /// 2 arctan √7
    pub theta7: Angle,
}

impl Default for I7Constants {
    fn default() -> Self {
        Self::new()
    }
}

impl I7Constants {
    pub fn new() -> Self {
        let r73 = (SQRT_7 + SQRT_3) / (SQRT_7 - SQRT_3);
        let tp = (SQRT_7 / 3.0).atan();
        let omega = |t: f64| (r73 * t.sin() / (1.0 - r73 * t.cos())).atan();
        let k = Self {
            r73,
            theta_plus: Angle::new(tp),
            theta_minus: Angle::new(-tp),
            omega_plus: Angle::new(omega(tp)),
            omega_minus: Angle::new(omega(-tp)),
            v_plus: Complex64::new(3.0, SQRT_7) / 4.0,
            v_minus: Complex64::new(3.0, -SQRT_7) / 4.0,
            theta7: Angle::new(2.0 * SQRT_7.atan()),
        };
        debug_assert!(k.invariant_residuals().iter().all(|(_, r)| *r < 1e-14));
        k
    }

    /// Residuals of the defining identities; all should be at rounding level.
    pub fn invariant_residuals(&self) -> Vec<(&'static str, f64)> {
        let op = self.omega_plus.raw();
        let tp = self.theta_plus.raw();
        vec![
            ("r73 closed form", (self.r73 - (5.0 + 21f64.sqrt()) / 2.0).abs()),
            ("omega+ = atan(sqrt7) - 2pi/3", (op - (SQRT_7.atan() - 2.0 * PI / 3.0)).abs()),
            ("omega+ = -acot(2sqrt3 - sqrt7)", (op + (1.0 / (2.0 * SQRT_3 - SQRT_7)).atan()).abs()),
            ("omega- = -omega+", (self.omega_minus.raw() + op).abs()),
            ("v+ v- = 1", (self.v_plus * self.v_minus - 1.0).norm()),
            ("v+ = exp(i theta+)", (self.v_plus - Complex64::from_polar(1.0, tp)).norm()),
            ("v- = exp(i theta-)", (self.v_minus - Complex64::from_polar(1.0, -tp)).norm()),
            ("2 omega+ = theta7 - 4pi/3", (2.0 * op - (self.theta7.raw() - 4.0 * PI / 3.0)).abs()),
        ]
    }
}

/// ln|(u + s)/(u − s)| for u ≥ 0, written with ln_1p so both the far tail
/// and the region near u = 0 keep full relative accuracy.
fn log_ratio(u: f64) -> f64 {
    if u > SQRT_7 {
        (2.0 * SQRT_7 / (u - SQRT_7)).ln_1p()
    } else {
        (2.0 * u / (SQRT_7 - u)).ln_1p()
    }
}

fn pow_log(u: f64, n: u32) -> f64 {
    match n {
        0 => 1.0,
        1 => log_ratio(u),
        _ => log_ratio(u).powi(n as i32),
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("tolerance must be positive, got {tol}")))
    }
}

/// I(n) in the u variable over [√3, ∞).
#[allow(non_snake_case)]
pub fn integral_In_u(n: u32, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    QuadProblem::new(|u: f64| pow_log(u, n) / (1.0 + u * u), SQRT_3, f64::INFINITY)
        .singular_at(SQRT_7)
        .tol(tol)
        .integrate()
}

/// I(n) in the t variable over [π/3, π/2], with tan t = sin t / cos t kept
/// as a ratio so the upper limit is harmless.
#[allow(non_snake_case)]
pub fn integral_In_t(n: u32, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    let t_star = SQRT_7.atan();
    QuadProblem::new(
        move |t: f64| {
            if n == 0 {
                return 1.0;
            }
            let (s, c) = t.sin_cos();
            let l = ((s + SQRT_7 * c) / (s - SQRT_7 * c)).abs().ln();
            l.powi(n as i32)
        },
        PI / 3.0,
        PI / 2.0,
    )
    .singular_at(t_star)
    .tol(tol)
    .integrate()
}

/// I(n) by quadrature. Both the u- and t-forms are evaluated; they must
/// agree within their combined error bounds. Returns the u-form.
#[allow(non_snake_case)]
pub fn integral_In(n: u32, tol: f64) -> Result<EvalResult> {
    let u = integral_In_u(n, tol)?;
    let t = integral_In_t(n, tol)?;
    let gap = (u.value - t.value).abs();
    if gap > u.err_bound + t.err_bound + 1e-15 * u.value.abs() {
        return Err(Error::Inconsistent(format!(
            "I({n}): u-form {} and t-form {} differ by {gap:e}",
            u.value, t.value
        )));
    }
    Ok(u)
}

/// I⁽¹⁾(n) = ∫_{√3}^{√7} lnⁿ((√7 + u)/(√7 − u)) du/(1 + u²).
#[allow(non_snake_case)]
pub fn integral_I1(n: u32, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    QuadProblem::new(|u: f64| pow_log(u, n) / (1.0 + u * u), SQRT_3, SQRT_7)
        .singular_at(SQRT_7)
        .tol(tol)
        .integrate()
}

/// I⁽²⁾(n) = ∫_{√7}^∞ lnⁿ((u + √7)/(u − √7)) du/(1 + u²).
#[allow(non_snake_case)]
pub fn integral_I2(n: u32, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    QuadProblem::new(|u: f64| pow_log(u, n) / (1.0 + u * u), SQRT_7, f64::INFINITY)
        .singular_at(SQRT_7)
        .tol(tol)
        .integrate()
}

/// (I⁽¹⁾(1), I⁽²⁾(1)) by quadrature.
#[allow(non_snake_case)]
pub fn integral_I1_split(tol: f64) -> Result<(EvalResult, EvalResult)> {
    Ok((integral_I1(1, tol)?, integral_I2(1, tol)?))
}

/// I(n) through the substitution v = (u + √7)/|u − √7|:
/// (√7/2)[∫_{r₇₃}^∞ lnⁿv/(2v² − 3v + 2) dv + ∫_1^∞ lnⁿv/(2v² + 3v + 2) dv].
#[allow(non_snake_case)]
pub fn integral_In_v_form(n: u32, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    let k = I7Constants::new();
    let lp = |v: f64| if n == 0 { 1.0 } else { v.ln().powi(n as i32) };
    let a = QuadProblem::new(move |v: f64| lp(v) / (2.0 * v * v - 3.0 * v + 2.0), k.r73, f64::INFINITY)
        .tol(tol / SQRT_7)
        .integrate()?;
    let b = QuadProblem::new(move |v: f64| lp(v) / (2.0 * v * v + 3.0 * v + 2.0), 1.0, f64::INFINITY)
        .tol(tol / SQRT_7)
        .integrate()?;
    let h = SQRT_7 / 2.0;
    Ok(EvalResult::new(
        h * (a.value + b.value),
        h * (a.err_bound + b.err_bound),
        a.effort + b.effort,
        "quadrature-v",
    ))
}

/// I⁽¹⁾(n) from its expansion in y = 1/v:
///
/// I⁽¹⁾(n) = Σ_{ℓ≥1} sin(ℓθ₊) Γ(n + 1, ℓ ln r₇₃)/ℓ^{n+1},
///
/// truncated after `terms` terms. The reported error is a geometric bound on
/// the omitted tail, using |Γ(n+1, x)| ≤ n!(n+1)(1+x)ⁿe^{−x}.
#[allow(non_snake_case)]
pub fn i1_series(n: u32, terms: usize) -> Result<EvalResult> {
    if terms == 0 {
        return Err(domain("series needs at least one term"));
    }
    let k = I7Constants::new();
    let lr = k.r73.ln();
    let tp = k.theta_plus.raw();
    let mut sum = 0.0;
    for l in (1..=terms).rev() {
        let lf = l as f64;
        let g = incomplete_gamma_upper_int(n, lf * lr)?;
        sum += (lf * tp).sin() * g / lf.powi(n as i32 + 1);
    }
    let nf = f64::from(n);
    let fact: f64 = (1..=n).map(f64::from).product();
    let next = (terms + 1) as f64;
    let bound_next = fact * (nf + 1.0) * (1.0 + next * lr).powf(nf) / k.r73.powf(next) / next.powf(nf + 1.0);
    let q = (1.0 + 1.0 / terms as f64).powf(nf) / k.r73;
    let tail = if q < 1.0 { bound_next / (1.0 - q) } else { f64::INFINITY };
    if !tail.is_finite() {
        return Err(domain("too few terms for a tail bound"));
    }
    Ok(EvalResult::new(sum, tail + 1e-16 * sum.abs() * terms as f64, terms, "incomplete-gamma-series"))
}

/// Closed form of I⁽¹⁾(n) for n ∈ {1, 2}:
///
/// I⁽¹⁾(n) = −(i/2) n! Σ_{m=0}^{n} (lnᵐ r₇₃ / m!) [Li_{n+1−m}(v₊/r₇₃) − Li_{n+1−m}(v₋/r₇₃)],
///
/// with Li₁(z) = −ln(1 − z). All polylogarithm arguments lie inside the unit
/// disk. The assembled value must be real; an imaginary residue above 1e−10
/// is reported as an inconsistency.
pub fn i1_polylog_form(n: u32) -> Result<EvalResult> {
    if !(1..=2).contains(&n) {
        return Err(domain(format!("closed form available for n = 1, 2 only, got {n}")));
    }
    let k = I7Constants::new();
    let lr = k.r73.ln();
    let zp = k.v_plus / k.r73;
    let zm = k.v_minus / k.r73;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut lm = 1.0;
    let mut effort = 0;
    for m in 0..=n {
        if m > 0 {
            lm *= lr / f64::from(m);
        }
        let order = n + 1 - m;
        let a = polylog_complex(order, zp, 1e-17)?;
        let b = polylog_complex(order, zm, 1e-17)?;
        acc += lm * (a.value - b.value);
        err += lm.abs() * (a.err_bound + b.err_bound);
        effort += a.effort + b.effort;
    }
    let fact: f64 = (1..=n).map(f64::from).product();
    let v = Complex64::new(0.0, -0.5) * fact * acc;
    if v.im.abs() > 1e-10 {
        return Err(Error::Inconsistent(format!("imaginary residue {:e} in closed form", v.im)));
    }
    let err = 0.5 * fact * err + v.im.abs() + 4.0 * f64::EPSILON * v.re.abs();
    Ok(EvalResult::new(v.re, err, effort, "polylog"))
}

/// ½[Cl₂(2ω₊) − Cl₂(2ω₊ + 2θ₊) + Cl₂(2θ₊)] for the I₇ constants; equals
/// I⁽¹⁾(1).
pub fn i1_clausen_form(tol: f64) -> Result<EvalResult> {
    let k = I7Constants::new();
    clausen_triple(k.omega_plus.raw(), k.theta_plus.raw(), tol)
}

/// ½[Cl₂(2ω) − Cl₂(2ω + 2θ) + Cl₂(2θ)].
fn clausen_triple(omega: f64, theta: f64, tol: f64) -> Result<EvalResult> {
    let part = tol / 4.0;
    let a = cl2(2.0 * omega, part)?;
    let b = cl2(2.0 * omega + 2.0 * theta, part)?;
    let c = cl2(2.0 * theta, part)?;
    Ok(EvalResult::new(
        0.5 * (a.value - b.value + c.value),
        0.5 * (a.err_bound + b.err_bound + c.err_bound),
        a.effort + b.effort + c.effort,
        "clausen",
    ))
}

/// I₇ = 24/(7√7) · I(1) by quadrature in the u variable, with the
/// singularity at u = √7 declared.
#[allow(non_snake_case)]
pub fn integral_I7(tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    let scale = 24.0 / (7.0 * SQRT_7);
    let i = integral_In_u(1, tol / scale)?;
    Ok(EvalResult::new(scale * i.value, scale * i.err_bound, i.effort, "quadrature"))
}

/// 24/(7√7) · {Cl₂(θ₊) + ½[Cl₂(2ω₊) − Cl₂(2ω₊ + 2θ₊)]}.
#[allow(non_snake_case)]
pub fn i7_clausen_form(tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    let k = I7Constants::new();
    let scale = 24.0 / (7.0 * SQRT_7);
    let part = tol / (3.0 * scale);
    let op = k.omega_plus.raw();
    let tp = k.theta_plus.raw();
    let a = cl2(tp, part)?;
    let b = cl2(2.0 * op, part)?;
    let c = cl2(2.0 * op + 2.0 * tp, part)?;
    let v = a.value + 0.5 * (b.value - c.value);
    let err = a.err_bound + 0.5 * (b.err_bound + c.err_bound);
    Ok(EvalResult::new(scale * v, scale * err, a.effort + b.effort + c.effort, "clausen"))
}

/// Signs χ(p) of the residues p = 1..6 mod 7 in L₋₇(2).
pub const CHI7: [f64; 6] = [1.0, 1.0, -1.0, 1.0, -1.0, -1.0];

/// L₋₇(2) = Σ_{n≥0} Σ_{p=1}^{6} χ(p)/(7n + p)², summed directly over the
/// first `direct` blocks with the remaining tail taken from Hurwitz zeta:
/// (1/49) Σ_p χ(p) ζ(2, direct + p/7).
#[allow(non_snake_case)]
pub fn l_minus7_series(tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    let direct = 1000usize;
    let mut sum = 0.0;
    for n in (0..direct).rev() {
        let base = 7.0 * n as f64;
        for (i, chi) in CHI7.iter().enumerate() {
            let d = base + (i + 1) as f64;
            sum += chi / (d * d);
        }
    }
    let mut tail = 0.0;
    let mut err = 0.0;
    for (i, chi) in CHI7.iter().enumerate() {
        let z = hurwitz_zeta(2.0, direct as f64 + (i + 1) as f64 / 7.0, tol)?;
        tail += chi * z.value;
        err += z.err_bound;
    }
    let v = sum + tail / 49.0;
    let err = err / 49.0 + 8.0 * f64::EPSILON * v;
    Ok(EvalResult::new(v, err, 6 * direct, "series+hurwitz-tail"))
}

/// L₋₇(2) = (1/49)[ψ'(1/7) + ψ'(2/7) − ψ'(3/7) + ψ'(4/7) − ψ'(5/7) − ψ'(6/7)].
#[allow(non_snake_case)]
pub fn l_minus7_trigamma() -> Result<EvalResult> {
    let mut sum = 0.0;
    let mut err = 0.0;
    for (i, chi) in CHI7.iter().enumerate() {
        let t = trigamma((i + 1) as f64 / 7.0)?;
        sum += chi * t.value;
        err += t.err_bound;
    }
    Ok(EvalResult::new(sum / 49.0, err / 49.0, 6, "trigamma"))
}

/// The three evaluations of I(a, b) = ∫_a^∞ ln y dy/(y² + 2by + 1).
#[derive(Debug, Clone, PartialEq)]
pub struct IabForms {
    pub quadrature: EvalResult,
    /// ½(1 − b²)^{−½}[Cl₂(2ω) − Cl₂(2ω + 2θ) + Cl₂(2θ)] with
    /// θ = −arctan(√(1−b²)/b), ω = arctan(√(1−b²)/(a+b)).
    pub omega_form: EvalResult,
    /// ½(1 − b²)^{−½}[Cl₂(2θ₂ − 2θ₁) − Cl₂(π − 2θ₁) + Cl₂(π − 2θ₂)] with
    /// tan θ₁ = b/√(1−b²), tan θ₂ = (1/a + b)/√(1−b²).
    pub theta_form: EvalResult,
}

/// The angles (θ, ω) of the ω-form; the b = 0 and a + b = 0 limits are
/// taken as −π/2 and π/2.
pub fn iab_omega_angles(a: f64, b: f64) -> (f64, f64) {
    let sb = (1.0 - b * b).sqrt();
    let theta = if b == 0.0 { -PI / 2.0 } else { -(sb / b).atan() };
    let omega = if a + b == 0.0 { PI / 2.0 } else { (sb / (a + b)).atan() };
    (theta, omega)
}

/// The angles (θ₁, θ₂) of the θ-form; θ₂ = π/2 at a = 0.
pub fn iab_theta_angles(a: f64, b: f64) -> (f64, f64) {
    let sb = (1.0 - b * b).sqrt();
    let t1 = (b / sb).atan();
    let t2 = if a == 0.0 { PI / 2.0 } else { ((1.0 / a + b) / sb).atan() };
    (t1, t2)
}

/// The ω-form closed expression for I(a, b).
pub fn iab_omega_form(a: f64, b: f64, tol: f64) -> Result<EvalResult> {
    check_iab(a, b)?;
    let sb = (1.0 - b * b).sqrt();
    let (theta, omega) = iab_omega_angles(a, b);
    Ok(clausen_triple(omega, theta, tol * sb)?.scaled(1.0 / sb))
}

/// The θ-form closed expression for I(a, b).
pub fn iab_theta_form(a: f64, b: f64, tol: f64) -> Result<EvalResult> {
    check_iab(a, b)?;
    let sb = (1.0 - b * b).sqrt();
    let (t1, t2) = iab_theta_angles(a, b);
    let part = tol * sb / 3.0;
    let x = cl2(2.0 * t2 - 2.0 * t1, part)?;
    let y = cl2(PI - 2.0 * t1, part)?;
    let z = cl2(PI - 2.0 * t2, part)?;
    let h = 0.5 / sb;
    Ok(EvalResult::new(
        h * (x.value - y.value + z.value),
        h * (x.err_bound + y.err_bound + z.err_bound),
        x.effort + y.effort + z.effort,
        "clausen",
    ))
}

fn check_iab(a: f64, b: f64) -> Result<()> {
    if !(a >= 0.0) || !a.is_finite() {
        return Err(domain(format!("I(a, b) needs finite a >= 0, got {a}")));
    }
    if !(b.abs() < 1.0) {
        return Err(domain(format!("I(a, b) needs |b| < 1, got {b}")));
    }
    Ok(())
}

/// I(a, b) by quadrature together with both closed forms. The three values
/// must agree within `tol` (widened by their own error bounds).
#[allow(non_snake_case)]
pub fn integral_I_ab(a: f64, b: f64, tol: f64) -> Result<IabForms> {
    check_tol(tol)?;
    check_iab(a, b)?;
    let mut p = QuadProblem::new(move |y: f64| y.ln() / (y * y + 2.0 * b * y + 1.0), a, f64::INFINITY).tol(tol / 2.0);
    if a == 0.0 {
        p = p.singular_at(0.0);
    }
    let quadrature = p.integrate()?;
    let omega_form = iab_omega_form(a, b, tol / 10.0)?;
    let theta_form = iab_theta_form(a, b, tol / 10.0)?;
    let vals = [&quadrature, &omega_form, &theta_form];
    for x in vals {
        for y in vals {
            let gap = (x.value - y.value).abs();
            if gap > tol + x.err_bound + y.err_bound {
                return Err(Error::Inconsistent(format!(
                    "I({a}, {b}): {} ({}) vs {} ({})",
                    x.value, x.method, y.value, y.method
                )));
            }
        }
    }
    Ok(IabForms {
        quadrature,
        omega_form,
        theta_form,
    })
}

/// A quadrature value paired with its closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadVsClosed {
    pub quadrature: EvalResult,
    pub closed: EvalResult,
}

impl QuadVsClosed {
    pub fn residual(&self) -> f64 {
        (self.quadrature.value - self.closed.value).abs()
    }
}

/// ∫₀^∞ ln x dx/(x² + 2xc cos t + c²) by quadrature, and (ln c / c)(t / sin t).
pub fn corollary3(c: f64, t: f64, tol: f64) -> Result<QuadVsClosed> {
    check_tol(tol)?;
    if !(c > 0.0) || !c.is_finite() {
        return Err(domain(format!("corollary3 needs c > 0, got {c}")));
    }
    if !(t > 0.0 && t < PI) {
        return Err(domain(format!("corollary3 needs 0 < t < pi, got {t}")));
    }
    let ct = t.cos();
    let quadrature = QuadProblem::new(move |x: f64| x.ln() / (x * x + 2.0 * x * c * ct + c * c), 0.0, f64::INFINITY)
        .singular_at(0.0)
        .tol(tol)
        .integrate()?;
    let closed = EvalResult::exact(c.ln() / c * t / t.sin(), "closed-form");
    Ok(QuadVsClosed { quadrature, closed })
}
