use super::bernoulli::bernoulli_2j;
use super::{rounding_floor, trunc_floor};
use crate::error::domain;
use crate::{Error, EvalResult, Result};

/// Hurwitz zeta ζ(s, a) = Σ_{k≥0} (k + a)^{−s} for s > 1, a > 0.
///
/// Euler–Maclaurin summation: the first terms are added directly until
/// a + N ≥ max(10, s), then the integral, half-term and Bernoulli corrections
/// are applied. For real s > 1 the remainder is bounded by the first omitted
/// correction, which is what `err_bound` reports.
pub fn hurwitz_zeta(s: f64, a: f64, tol: f64) -> Result<EvalResult> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(domain(format!("hurwitz_zeta needs s > 1, got {s}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain(format!("hurwitz_zeta needs a > 0, got {a}")));
    }
    if !(tol > 0.0) {
        return Err(domain("tolerance must be positive"));
    }

    let mut start = 10f64.max(s);
    loop {
        let n = (start - a).ceil().max(0.0) as usize;
        let x = a + n as f64;

        let mut direct = 0.0;
        for k in (0..n).rev() {
            direct += (a + k as f64).powf(-s);
        }
        if !direct.is_finite() {
            return Err(Error::Overflow(format!("hurwitz_zeta({s}, {a})")));
        }

        let xs = x.powf(-s);
        let mut sum = direct + x * xs / (s - 1.0) + 0.5 * xs;

        // f_j = (s)_{2j-1} / (2j)! · x^{-s-2j+1}
        let x2 = x * x;
        let mut f = 0.5 * s * xs / x;
        let mut converged = None;
        for j in 1..20usize {
            let term = bernoulli_2j(j) * f;
            sum += term;
            let jf = j as f64;
            f *= (s + 2.0 * jf - 1.0) * (s + 2.0 * jf) / ((2.0 * jf + 1.0) * (2.0 * jf + 2.0) * x2);
            let next = (bernoulli_2j(j + 1) * f).abs();
            let target = tol.max(trunc_floor(sum));
            if next <= target {
                converged = Some((next, j));
                break;
            }
        }
        match converged {
            Some((trunc, j)) => {
                let err = trunc + rounding_floor(sum);
                return Ok(EvalResult::new(sum, err, n + j, "euler-maclaurin"));
            }
            None if start < 1e4 => start *= 2.0,
            None => {
                return Err(Error::NonConvergence {
                    what: "hurwitz_zeta",
                    achieved: f64::NAN,
                    tol,
                    effort: n,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{PI, ZETA_3};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn known_values() {
        let z = hurwitz_zeta(2.0, 1.0, 1e-15).unwrap();
        assert!(rel(z.value, PI * PI / 6.0) < 1e-15);
        let z = hurwitz_zeta(2.0, 0.5, 1e-15).unwrap();
        assert!(rel(z.value, PI * PI / 2.0) < 1e-15);
        let z = hurwitz_zeta(3.0, 1.0, 1e-15).unwrap();
        assert!(rel(z.value, ZETA_3) < 1e-15);
    }

    #[test]
    fn oracle_values() {
        for (s, a, want) in [
            (2.0, 1.0 / 7.0, 50.35747143691169318567353),
            (3.5, 0.2, 280.131960838733383067185),
            (1.5, 2.5, 1.403779768856825795818298),
        ] {
            let z = hurwitz_zeta(s, a, 1e-14).unwrap();
            assert!(rel(z.value, want) < 2e-15, "zeta({s},{a}) = {} vs {want}", z.value);
            assert!((z.value - want).abs() <= z.err_bound.max(1e-300) * 4.0);
        }
    }

    #[test]
    fn shift_identity() {
        let a = 0.3;
        let d = hurwitz_zeta(2.0, a, 1e-15).unwrap().value - hurwitz_zeta(2.0, a + 1.0, 1e-15).unwrap().value;
        assert!(rel(d, a.powi(-2)) < 1e-13);
    }

    #[test]
    fn large_order() {
        let z = hurwitz_zeta(40.0, 1.0, 1e-15).unwrap();
        assert!((z.value - 1.0 - 2f64.powi(-40)).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_domain() {
        assert!(hurwitz_zeta(1.0, 1.0, 1e-10).is_err());
        assert!(hurwitz_zeta(2.0, 0.0, 1e-10).is_err());
        assert!(hurwitz_zeta(2.0, -1.0, 1e-10).is_err());
    }
}
