//! Acceleration of alternating series Σ (−1)ᵏ aₖ.
//!
//! Uses the Cohen, Rodriguez Villegas and Zagier weights. For aₖ a moment
//! sequence (aₖ = ∫ tᵏ dμ with μ ≥ 0 on [0, 1]) the error after n terms is
//! at most 2·a₀/(3+√8)ⁿ. Sequences such as 1/(2k+1)², Hₖ₊₁/(2k+3) and the
//! digamma differences used in the Catalan checks fall in this class or
//! behave like it.

use crate::{Error, EvalResult, Result};

/// Largest number of terms; beyond this the weights exceed f64 range.
pub const MAX_TERMS: usize = 200;

/// Convergence rate per term, 3 + √8.
const RATE: f64 = 5.828_427_124_746_19;

/// Sum Σ_{k≥0} (−1)ᵏ a(k) using the first `n` terms.
pub fn cvz_alternating(a: impl Fn(usize) -> f64, n: usize) -> Result<EvalResult> {
    if n == 0 || n > MAX_TERMS {
        return Err(crate::error::domain(format!(
            "term count {n} outside 1..={MAX_TERMS}"
        )));
    }
    let nf = n as f64;
    let e = RATE.powf(nf);
    let d = (e + 1.0 / e) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    let mut amax = 0.0f64;
    for k in 0..n {
        let ak = a(k);
        if !ak.is_finite() {
            return Err(Error::Overflow(format!("series term {k} is not finite")));
        }
        amax = amax.max(ak.abs());
        c = b - c;
        s += c * ak;
        let kf = k as f64;
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    let value = s / d;
    let err = 2.0 * amax / e + nf * f64::EPSILON * amax;
    Ok(EvalResult::new(value, err, n, "cvz-alternating"))
}

/// Sum Σ_{k≥0} (−1)ᵏ a(k) choosing the term count from `tol`.
pub fn alternating(a: impl Fn(usize) -> f64, tol: f64) -> Result<EvalResult> {
    crate::specfun::check_tol(tol)?;
    let a0 = a(0).abs().max(f64::MIN_POSITIVE);
    let n = ((2.0 * a0 / tol).ln() / RATE.ln()).ceil().max(1.0) as usize + 2;
    let n = n.min(MAX_TERMS);
    let r = cvz_alternating(a, n)?;
    let floor = crate::specfun::rounding_floor(r.value) + n as f64 * f64::EPSILON * a0;
    if r.err_bound > tol.max(floor) {
        return Err(Error::NonConvergence {
            what: "alternating series",
            achieved: r.err_bound,
            tol,
            effort: n,
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{CATALAN, LN_2, PI};

    #[test]
    fn catalan_defining_series() {
        let r = cvz_alternating(|k| 1.0 / ((2 * k + 1) as f64).powi(2), 30).unwrap();
        assert!((r.value - CATALAN).abs() < 1e-15, "{}", r.value - CATALAN);
        assert!(r.err_bound < 1e-14);
    }

    #[test]
    fn log_two() {
        let r = alternating(|k| 1.0 / (k + 1) as f64, 1e-14).unwrap();
        assert!((r.value - LN_2).abs() < 1e-14);
        assert!((r.value - LN_2).abs() <= r.err_bound);
    }

    #[test]
    fn leibniz_pi() {
        let r = alternating(|k| 4.0 / (2 * k + 1) as f64, 1e-13).unwrap();
        assert!((r.value - PI).abs() < 1e-13);
    }

    #[test]
    fn rejects_bad_counts() {
        assert!(cvz_alternating(|_| 1.0, 0).is_err());
        assert!(cvz_alternating(|_| 1.0, MAX_TERMS + 1).is_err());
        assert!(alternating(|_| 1.0, 0.0).is_err());
    }
}
