use super::bernoulli::bernoulli_2j;
use super::rounding_floor;
use super::zeta::hurwitz_zeta;
use crate::constants::{EULER_GAMMA, PI};
use crate::error::domain;
use crate::{Error, EvalResult, Result};

const SHIFT_TO: f64 = 10.0;

fn check_pole(x: f64) -> Result<()> {
    if x.is_nan() || x.is_infinite() {
        return Err(domain(format!("argument must be finite, got {x}")));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole(x));
    }
    Ok(())
}

/// sin(πx) and cos(πx) with the argument reduced to [−½, ½] first.
fn sincos_pi(x: f64) -> (f64, f64) {
    let n = x.round();
    let r = x - n;
    let (s, c) = (PI * r).sin_cos();
    if (n as i64) % 2 == 0 {
        (s, c)
    } else {
        (-s, -c)
    }
}

/// Digamma ψ(x) = Γ'(x)/Γ(x).
///
/// Negative arguments use reflection, positive ones an upward shift to
/// x ≥ 10 followed by the asymptotic series.
pub fn digamma(x: f64) -> Result<EvalResult> {
    check_pole(x)?;
    if x < 0.0 {
        let (s, c) = sincos_pi(x);
        let refl = digamma(1.0 - x)?;
        let v = refl.value - PI * c / s;
        return Ok(EvalResult::new(
            v,
            refl.err_bound + rounding_floor(PI * c / s),
            refl.effort,
            "reflection+asymptotic",
        ));
    }
    let mut x = x;
    let mut shift = 0.0;
    let mut steps = 0;
    while x < SHIFT_TO {
        shift -= 1.0 / x;
        x += 1.0;
        steps += 1;
    }
    let x2 = x * x;
    let mut xp = x2;
    let mut series = x.ln() - 0.5 / x;
    let mut trunc = 0.0;
    for k in 1..20usize {
        let term = bernoulli_2j(k) / (2.0 * k as f64 * xp);
        series -= term;
        let next = (bernoulli_2j(k + 1) / ((2 * k + 2) as f64 * xp * x2)).abs();
        trunc = next;
        if next < 1e-17 * series.abs() {
            break;
        }
        xp *= x2;
    }
    let v = shift + series;
    let err = trunc + rounding_floor(shift.abs() + series.abs());
    Ok(EvalResult::new(v, err, steps, "shift+asymptotic"))
}

/// Trigamma ψ'(x).
///
/// Computed independently of [`hurwitz_zeta`]; the two routes are compared
/// in the tests.
pub fn trigamma(x: f64) -> Result<EvalResult> {
    check_pole(x)?;
    if x < 0.0 {
        let (s, _) = sincos_pi(x);
        let csc2 = PI * PI / (s * s);
        let refl = trigamma(1.0 - x)?;
        return Ok(EvalResult::new(
            csc2 - refl.value,
            refl.err_bound + rounding_floor(csc2),
            refl.effort,
            "reflection+asymptotic",
        ));
    }
    let mut x = x;
    let mut shift = 0.0;
    let mut steps = 0;
    while x < SHIFT_TO {
        shift += 1.0 / (x * x);
        x += 1.0;
        steps += 1;
    }
    let x2 = x * x;
    let mut xp = x2 * x;
    let mut series = 1.0 / x + 0.5 / x2;
    let mut trunc = 0.0;
    for k in 1..20usize {
        series += bernoulli_2j(k) / xp;
        let next = (bernoulli_2j(k + 1) / (xp * x2)).abs();
        trunc = next;
        if next < 1e-17 * series {
            break;
        }
        xp *= x2;
    }
    let v = shift + series;
    Ok(EvalResult::new(v, trunc + rounding_floor(v), steps, "shift+asymptotic"))
}

/// Polygamma ψ⁽ⁿ⁾(x); n = 0 is the digamma function.
///
/// For n ≥ 1 and x > 0 this is (−1)^{n+1} n! ζ(n+1, x); negative
/// non-integer x is shifted up with ψ⁽ⁿ⁾(x) = ψ⁽ⁿ⁾(x+1) − (−1)ⁿ n! x^{−n−1}.
pub fn polygamma(n: u32, x: f64) -> Result<EvalResult> {
    check_pole(x)?;
    if n == 0 {
        return digamma(x);
    }
    let fact: f64 = (1..=n).map(f64::from).product();
    if !fact.is_finite() {
        return Err(Error::Overflow(format!("{n}! in polygamma")));
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let mut x = x;
    let mut corr = 0.0;
    let mut steps = 0;
    while x <= 0.0 {
        // ψ⁽ⁿ⁾(x) = ψ⁽ⁿ⁾(x+1) + sign · n! x^{−n−1}, sign = (−1)^{n+1}
        corr += sign * fact * x.powi(-(n as i32) - 1);
        x += 1.0;
        steps += 1;
    }
    let z = hurwitz_zeta(f64::from(n) + 1.0, x, f64::MIN_POSITIVE)?;
    let main = sign * fact * z.value;
    let v = main + corr;
    if !v.is_finite() {
        return Err(Error::Overflow(format!("polygamma({n}, {x})")));
    }
    let err = fact * z.err_bound + rounding_floor(main.abs() + corr.abs());
    Ok(EvalResult::new(v, err, z.effort + steps, "hurwitz-zeta"))
}

/// Harmonic number H_j = Σ_{k=1}^{j} 1/k, with H₀ = 0.
pub fn harmonic(j: u64) -> f64 {
    if j > 1_000_000 {
        // ψ(j+1) + γ; the asymptotic series is exact to rounding here
        return digamma(j as f64 + 1.0).map(|d| d.value).unwrap_or(f64::NAN) + EULER_GAMMA;
    }
    (1..=j).rev().map(|k| 1.0 / k as f64).sum()
}

/// Γ(n+1, x) = n! e^{−x} Σ_{m=0}^{n} x^m/m! for integer n ≥ 0 and any real x.
pub fn incomplete_gamma_upper_int(n: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain(format!("incomplete gamma needs finite x, got {x}")));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..=n {
        term *= x / f64::from(m);
        sum += term;
    }
    let fact: f64 = (1..=n).map(f64::from).product();
    let v = fact * (-x).exp() * sum;
    if !v.is_finite() {
        return Err(Error::Overflow(format!("Gamma({}, {x})", n + 1)));
    }
    Ok(v)
}
