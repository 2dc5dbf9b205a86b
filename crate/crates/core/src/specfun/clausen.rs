use super::bernoulli::zeta_int;
use super::gamma::trigamma;
use super::polylog::li_exp_series;
use super::{check_tol, rounding_floor, trunc_floor, Angle, RationalAngle};
use crate::constants::PI;
use crate::error::domain;
use crate::{Error, EvalResult, Result};
use num_complex::Complex64;

const MAX_TERMS: usize = 200;

/// Clausen function Cl₂(θ) = Σ_{n≥1} sin(nθ)/n².
///
/// After reduction to [0, π] the Bernoulli expansion
/// Cl₂(θ) = θ − θ ln θ + Σ_{k≥1} ζ(2k)/(k(2k+1)) · θ (θ/2π)^{2k}
/// is summed; the term ratio is at most 1/4.
pub fn cl2(theta: impl Into<Angle>, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    let t = theta.into().reduced();
    let (sign, t) = if t < 0.0 { (-1.0, -t) } else { (1.0, t) };
    if t == 0.0 || t == PI {
        return Ok(EvalResult::exact(0.0, "bernoulli-series"));
    }
    let x = (t / (2.0 * PI)).powi(2);
    let head = t - t * t.ln();
    let mut sum = 0.0;
    let mut p = t;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        p *= x;
        sum += zeta_int(2 * k as u32) / (kf * (2.0 * kf + 1.0)) * p;
        let next = zeta_int(2 * k as u32 + 2) / ((kf + 1.0) * (2.0 * kf + 3.0)) * p * x;
        let tail = next / (1.0 - x);
        let v = head + sum;
        if tail <= tol.max(trunc_floor(v)) {
            let err = tail + rounding_floor(head.abs() + sum);
            return Ok(EvalResult::new(sign * v, err, k, "bernoulli-series"));
        }
    }
    Err(Error::NonConvergence {
        what: "cl2",
        achieved: f64::NAN,
        tol,
        effort: MAX_TERMS,
    })
}

/// Li_n(e^{iθ}) for θ in (0, π] via the logarithmic expansion.
fn li_unit(n: u32, t: f64, tol: f64) -> Result<crate::ComplexEval> {
    li_exp_series(n, Complex64::new(0.0, t), tol)
}

/// Sine-type Clausen function Σ_{k≥1} sin(kθ)/kⁿ for n ≥ 1.
pub fn cl_sin(n: u32, theta: impl Into<Angle>, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    if n == 0 {
        return Err(domain("Clausen order must be at least 1"));
    }
    let t = theta.into().reduced();
    if t == 0.0 {
        return Ok(EvalResult::exact(0.0, "log-series"));
    }
    let (sign, t) = if t < 0.0 { (-1.0, -t) } else { (1.0, t) };
    let li = li_unit(n, t, tol)?;
    Ok(li.im().scaled(sign))
}

/// Cosine-type Clausen function Σ_{k≥1} cos(kθ)/kⁿ for n ≥ 1.
///
/// For n = 1 this is −ln|2 sin(θ/2)|, which diverges at θ ≡ 0.
pub fn cl_cos(n: u32, theta: impl Into<Angle>, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    if n == 0 {
        return Err(domain("Clausen order must be at least 1"));
    }
    let t = theta.into().reduced().abs();
    if t == 0.0 {
        if n == 1 {
            return Err(domain("cosine Clausen function of order 1 diverges at 0"));
        }
        return Ok(EvalResult::exact(zeta_int(n), "zeta"));
    }
    Ok(li_unit(n, t, tol)?.re())
}

/// Cl_{2q}(θ) = Σ sin(nθ)/n^{2q}.
pub fn cl_even(q: u32, theta: impl Into<Angle>, tol: f64) -> Result<EvalResult> {
    if q == 0 {
        return Err(domain("cl_even needs q >= 1"));
    }
    cl_sin(2 * q, theta, tol)
}

/// Cl_{2r+1}(θ) = Σ cos(nθ)/n^{2r+1}; r = 0 gives −ln|2 sin(θ/2)|.
pub fn cl_odd(r: u32, theta: impl Into<Angle>, tol: f64) -> Result<EvalResult> {
    cl_cos(2 * r + 1, theta, tol)
}

/// Cl₂(pπ/q) as a finite trigamma sum, for p even and q odd, q ≥ 3:
///
/// Cl₂(pπ/q) = −(1/4q²) Σ_{k=1}^{q−1} [ψ'(1 − k/2q) + ψ'(½ − k/2q)] sin(kpπ/q).
pub fn cl2_rational(angle: RationalAngle, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    let (p, q) = (angle.p(), angle.q());
    if p % 2 != 0 || q % 2 == 0 || q < 3 {
        return Err(domain(format!(
            "cl2_rational needs p even and q odd with q >= 3, got {p}/{q}"
        )));
    }
    let qf = q as f64;
    let mut sum = 0.0;
    let mut err = 0.0;
    let mut mag = 0.0;
    for k in 1..q {
        let kf = k as f64;
        let a = trigamma(1.0 - kf / (2.0 * qf))?;
        let b = trigamma(0.5 - kf / (2.0 * qf))?;
        // k·p mod 2q keeps the sine argument small
        let m = (k * p).rem_euclid(2 * q) as f64;
        let s = (m * PI / qf).sin();
        sum += (a.value + b.value) * s;
        mag += (a.value + b.value) * s.abs();
        err += (a.err_bound + b.err_bound) * s.abs();
    }
    let scale = 1.0 / (4.0 * qf * qf);
    let v = -scale * sum;
    let err = scale * (err + rounding_floor(mag));
    if err > tol.max(rounding_floor(v)) {
        return Err(Error::NonConvergence {
            what: "cl2_rational",
            achieved: err,
            tol,
            effort: 2 * (q as usize - 1),
        });
    }
    Ok(EvalResult::new(v, err, 2 * (q as usize - 1), "trigamma-sum"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{CATALAN, ZETA_3};

    const TOL: f64 = 1e-15;

    fn close(a: f64, b: f64, eps: f64) {
        assert!((a - b).abs() <= eps, "{a} vs {b} (diff {:e})", a - b);
    }

    #[test]
    fn cl2_values() {
        close(cl2(0.0, TOL).unwrap().value, 0.0, 0.0);
        close(cl2(PI, TOL).unwrap().value, 0.0, 0.0);
        close(cl2(PI / 2.0, TOL).unwrap().value, CATALAN, 4e-16);
        for (t, want) in [
            (PI / 3.0, 1.014941606409653625021203),
            (2.0 * PI / 3.0, 0.676627737606435750014135),
            (1.0, 1.013959132360768504294574),
            (3.0, 0.09802620939130142116142979),
            (0.001, 0.007907755292871026010387308),
        ] {
            let r = cl2(t, 1e-14).unwrap();
            close(r.value, want, r.err_bound);
            assert!(r.err_bound <= 1e-14);
            close(cl2(t, 1e-17).unwrap().value, want, 1e-15);
        }
    }

    #[test]
    fn cl2_against_raw_series() {
        // Σ sin(nθ)/n² to N terms has error at most about 1/(N sin(θ/2))
        let t = 1.3;
        let n = 2_000_000;
        let raw: f64 = (1..=n).rev().map(|k| (k as f64 * t).sin() / (k as f64).powi(2)).sum();
        close(cl2(t, 1e-14).unwrap().value, raw, 2.0 / (n as f64 * (t / 2.0).sin()));
    }

    #[test]
    fn general_orders() {
        // cancellation among the leading terms costs a few ulps of the head
        close(cl_even(1, PI / 2.0, TOL).unwrap().value, CATALAN, 1e-15);
        close(cl_even(2, PI / 2.0, TOL).unwrap().value, 0.9889445517411053361084226, 1e-15);
        close(cl_even(2, 0.0, TOL).unwrap().value, 0.0, 0.0);
        close(cl_odd(1, 0.0, TOL).unwrap().value, ZETA_3, 0.0);
        close(cl_odd(1, PI, TOL).unwrap().value, -0.75 * ZETA_3, 1e-15);
        close(cl_odd(2, PI / 2.0, TOL).unwrap().value, -0.03037874282646591581048922, 4e-15);
        close(cl_cos(3, 1.1, TOL).unwrap().value, 0.3471151632087881522910931, 1e-15);
        close(cl_sin(3, 1.1, TOL).unwrap().value, 0.9700123624888032921513737, 1e-15);
        close(cl_sin(6, 2.5, TOL).unwrap().value, 0.5846468560221735338719362, 1e-15);
        close(cl_cos(3, PI, TOL).unwrap().value, -0.9015426773696957140498036, 1e-15);
        close(cl_sin(3, -1.1, TOL).unwrap().value, -0.9700123624888032921513737, 1e-15);
        close(cl_sin(1, 1.0, TOL).unwrap().value, (PI - 1.0) / 2.0, 1e-15);
    }

    #[test]
    fn order_one_cosine() {
        let t = 0.7;
        close(cl_odd(0, t, TOL).unwrap().value, -(2.0 * (t / 2.0).sin()).ln(), 1e-15);
        assert!(cl_odd(0, 0.0, TOL).is_err());
        assert!(cl_odd(0, 2.0 * PI, TOL).is_err());
    }

    #[test]
    fn bernoulli_and_log_series_agree() {
        for i in 1..100 {
            let t = -3.1 + 0.0625 * i as f64;
            let a = cl2(t, 1e-15).unwrap().value;
            let b = cl_sin(2, t, 1e-15).unwrap().value;
            close(a, b, 2e-15);
        }
    }

    #[test]
    fn rational_form() {
        for (p, q) in [(2, 3), (2, 7), (4, 7), (6, 7), (2, 5), (4, 9), (8, 7), (-2, 7)] {
            let a = RationalAngle::new(p, q).unwrap();
            let r = cl2_rational(a, 1e-13).unwrap().value;
            let s = cl2(a.radians(), 1e-15).unwrap().value;
            close(r, s, 1e-13);
        }
        assert!(cl2_rational(RationalAngle::new(1, 3).unwrap(), 1e-12).is_err());
        assert!(cl2_rational(RationalAngle::new(1, 4).unwrap(), 1e-12).is_err());
    }

    #[test]
    fn clausen_combination_of_sevenths() {
        let f = |p| cl2_rational(RationalAngle::new(p, 7).unwrap(), 1e-13).unwrap().value;
        close(f(2) + f(4) - f(6), 1.523854161970891309026692, 1e-13);
    }
}
