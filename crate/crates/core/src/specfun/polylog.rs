use num_complex::Complex64;

use super::bernoulli::{bernoulli_poly, zeta_int, MAX_BERNOULLI};
use super::clausen::cl2;
use super::gamma::harmonic;
use super::{check_tol, rounding_floor, trunc_floor, PolarPoint};
use crate::constants::PI;
use crate::error::domain;
use crate::{ComplexEval, Error, EvalResult, Result};

const MAX_TERMS: usize = 2000;
const INNER: f64 = 0.8;
const OUTER: f64 = 1.25;

fn non_convergence(what: &'static str, tol: f64, effort: usize) -> Error {
    Error::NonConvergence {
        what,
        achieved: f64::NAN,
        tol,
        effort,
    }
}

/// Complex polylogarithm Liₙ(z) on the principal branch, n ≥ 1.
///
/// Regions: the defining series for |z| ≤ 0.8, the expansion in μ = ln z for
/// 0.8 < |z| < 1.25, and the inversion formula
/// Liₙ(z) = −(−1)ⁿ Liₙ(1/z) − (2πi)ⁿ/n! · Bₙ(½ + ln(−z)/(2πi))
/// for |z| ≥ 1.25. Li₁(z) = −ln(1 − z) is returned directly.
pub fn polylog_complex(n: u32, z: Complex64, tol: f64) -> Result<ComplexEval> {
    check_tol(tol)?;
    if n == 0 {
        return Err(domain("polylog order must be at least 1"));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain(format!("polylog argument must be finite, got {z}")));
    }
    if n == 1 {
        if z == Complex64::new(1.0, 0.0) {
            return Err(Error::Pole(1.0));
        }
        let v = -(Complex64::new(1.0, 0.0) - z).ln();
        return Ok(ComplexEval::new(v, rounding_floor(v.norm()), 1, "closed-form"));
    }
    let r = z.norm();
    if r == 0.0 {
        return Ok(ComplexEval::new(Complex64::new(0.0, 0.0), 0.0, 0, "series"));
    }
    if r <= INNER {
        return direct_series(n, z, tol);
    }
    if r < OUTER {
        let mu = z.ln();
        if mu == Complex64::new(0.0, 0.0) {
            return Ok(ComplexEval::new(Complex64::new(zeta_int(n), 0.0), 0.0, 0, "zeta"));
        }
        return li_exp_series(n, mu, tol);
    }
    if n as usize > MAX_BERNOULLI {
        return Err(domain(format!("polylog order {n} too large for |z| >= {OUTER}")));
    }
    let inner = direct_series(n, z.inv(), tol / 2.0)?;
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    let arg = Complex64::new(0.5, 0.0) + (-z).ln() / two_pi_i;
    let fact: f64 = (1..=n).map(f64::from).product();
    let poly = two_pi_i.powu(n) / fact * bernoulli_poly(n as usize, arg);
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
    let v = sign * inner.value - poly;
    let err = inner.err_bound + rounding_floor(poly.norm() * n as f64 + inner.value.norm());
    Ok(ComplexEval::new(v, err, inner.effort, "inversion"))
}

fn direct_series(n: u32, z: Complex64, tol: f64) -> Result<ComplexEval> {
    let r = z.norm();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zk = Complex64::new(1.0, 0.0);
    let mut rk = 1.0;
    let e = -(n as i32);
    for k in 1..MAX_TERMS {
        zk *= z;
        rk *= r;
        sum += zk * (k as f64).powi(e);
        let tail = rk * r * ((k + 1) as f64).powi(e) / (1.0 - r);
        if tail <= tol.max(trunc_floor(sum.norm())) {
            let err = tail + rounding_floor(sum.norm()) * (k as f64).sqrt();
            return Ok(ComplexEval::new(sum, err, k, "series"));
        }
    }
    Err(non_convergence("polylog series", tol, MAX_TERMS))
}

/// Liₙ(e^μ) for 0 < |μ| < 2π, n ≥ 1:
///
/// Σ_{k≠n−1} ζ(n−k) μ^k/k! + μ^{n−1}/(n−1)! · [H_{n−1} − ln(−μ)].
///
/// The k > n terms are rewritten with ζ(1−2j) = (−1)^j 2(2j−1)! ζ(2j)/(2π)^{2j}
/// so no large factorials are formed; they decay by |μ/2π|² per step.
pub(crate) fn li_exp_series(n: u32, mu: Complex64, tol: f64) -> Result<ComplexEval> {
    let x = (mu / (2.0 * PI)).norm_sqr();
    if !(x < 0.49) || mu == Complex64::new(0.0, 0.0) {
        return Err(domain(format!("log-series argument {mu} outside 0 < |mu| < 1.4 pi")));
    }
    let nn = n as usize;
    let mut head = Complex64::new(0.0, 0.0);
    let mut mk = Complex64::new(1.0, 0.0);
    let mut fact = 1.0;
    for k in 0..nn.saturating_sub(1) {
        if k > 0 {
            mk *= mu;
            fact *= k as f64;
        }
        head += zeta_int(n - k as u32) * mk / fact;
    }
    // μ^{n−1}/(n−1)!
    let mut lead = Complex64::new(1.0, 0.0);
    let mut lead_fact = 1.0;
    for k in 1..nn {
        lead *= mu;
        lead_fact *= k as f64;
    }
    lead /= lead_fact;
    head += lead * (harmonic(n as u64 - 1) - (-mu).ln());
    // ζ(0) μⁿ/n!
    head += -0.5 * lead * mu / n as f64;

    let w = mu / (2.0 * PI);
    let w2 = w * w;
    let mut wp = Complex64::new(1.0, 0.0);
    let mut tail_sum = Complex64::new(0.0, 0.0);
    let mut wn = 1.0;
    for j in 1..200usize {
        wp *= w2;
        wn *= x;
        let sign = if j % 2 == 0 { 2.0 } else { -2.0 };
        let denom: f64 = (2 * j..2 * j + nn).map(|i| i as f64).product();
        tail_sum += sign * zeta_int(2 * j as u32) * wp / denom;
        let denom_next: f64 = (2 * j + 2..2 * j + 2 + nn).map(|i| i as f64).product();
        let next = 2.0 * zeta_int(2 * j as u32 + 2) * wn * x / denom_next;
        let scale = (lead_fact * lead).norm();
        let bound = scale * next / (1.0 - x);
        let v = head + lead * lead_fact * tail_sum;
        if bound <= tol.max(trunc_floor(v.norm())) {
            let err = bound + rounding_floor(head.norm() + v.norm()) * n as f64;
            return Ok(ComplexEval::new(v, err, nn + j, "log-series"));
        }
    }
    Err(non_convergence("polylog log-series", tol, 200))
}

/// Im Li₂(r e^{iθ}) = ω ln r + ½[Cl₂(2ω) − Cl₂(2ω + 2θ) + Cl₂(2θ)],
/// ω = arctan(r sin θ / (1 − r cos θ)) on the principal branch.
///
/// This equals the principal-branch Im Li₂ whenever 1 − r cos θ > 0. For
/// 1 − r cos θ < 0 it differs from it by a multiple of π ln r; the value is
/// still returned since the closed forms built on it use this branch.
pub fn im_li2_polar(z: PolarPoint, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    let r = z.r();
    if r == 0.0 {
        return Ok(EvalResult::exact(0.0, "clausen-form"));
    }
    let t = z.theta().reduced();
    let den = 1.0 - r * t.cos();
    if den == 0.0 {
        return Err(Error::BranchUndefined(format!(
            "omega undefined at r = {r}, theta = {t} (1 - r cos theta = 0)"
        )));
    }
    let omega = (r * t.sin() / den).atan();
    let part = tol / 4.0;
    let a = cl2(2.0 * omega, part)?;
    let b = cl2(2.0 * omega + 2.0 * t, part)?;
    let c = cl2(2.0 * t, part)?;
    let v = omega * r.ln() + 0.5 * (a.value - b.value + c.value);
    let err = 0.5 * (a.err_bound + b.err_bound + c.err_bound) + rounding_floor((omega * r.ln()).abs() + 2.0);
    Ok(EvalResult::new(v, err, a.effort + b.effort + c.effort, "clausen-form"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{LN_2, ZETA_2, ZETA_3};
    use crate::integrals::I7Constants;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn oracle_values() {
        let table: &[(u32, Complex64, f64, f64)] = &[
            (2, c(0.3, 0.4), 0.2665968667427404341612, 0.4613628918191089731891),
            (3, c(0.3, 0.4), 0.2861517803958896358264, 0.4308214059247546046362),
            (4, c(0.3, 0.4), 0.2939833048055313645188, 0.415355937037094696264),
            (2, c(-0.7, 0.2), -0.6099920685850669365746, 0.1513444220884601435641),
            (3, c(-0.7, 0.2), -0.6517021724518104052133, 0.1727854083791687699922),
            (2, c(0.9, 0.3), 1.104986351524215680135, 0.6170530280848619820406),
            (3, c(0.9, 0.3), 1.005874898042138991682, 0.4164134953128234110182),
            (4, c(0.9, 0.3), 0.9511245080540629307795, 0.3474627845574920212471),
            (2, c(-1.0, 0.1), -0.8234321080805464636006, 0.06929202401162236353),
            (3, c(-1.0, 0.1), -0.9021890260769420729285, 0.08223579473563393654769),
            (2, c(1.1, -0.2), 1.552486594157534209839, -0.6862948536946907673965),
            (3, c(1.1, -0.2), 1.313339352340737284493, -0.3358844082338541448203),
            (2, c(3.0, 4.0), -0.6048070120611999834919, 3.733619532294385885581),
            (3, c(3.0, 4.0), 0.7216918916865137814473, 4.535830046833907295559),
            (4, c(3.0, 4.0), 1.782819107880661793111, 4.650874837539767069871),
            (2, c(-5.0, -0.5), -2.754060835249228551343, -0.1789728054661474036232),
            (3, c(-5.0, -0.5), -3.542292189948389791217, -0.2747688160126893817622),
            (2, c(0.5, 0.5), 0.4539852691502955833142, 0.643767332889268748742),
            (3, c(0.5, 0.5), 0.4861595370855600789667, 0.5700774070887689781956),
            (4, c(0.5, 0.5), 0.4957811218218387784359, 0.5340223840797535499602),
            (2, c(2.0, 0.001), 2.465830554076340265732, 2.177586482835968141848),
            (3, c(2.0, 0.001), 2.760983421503291014305, 0.7559274094484781445654),
        ];
        for &(n, z, re, im) in table {
            let v = polylog_complex(n, z, 1e-15).unwrap();
            let d = (v.value - c(re, im)).norm();
            assert!(d < 4e-15, "Li{n}({z}) = {} (diff {d:e}, method {})", v.value, v.method);
            assert!(d <= v.err_bound.max(4e-16) * 4.0, "Li{n}({z}) err bound {:e} < {d:e}", v.err_bound);
        }
    }

    #[test]
    fn special_points() {
        let one = polylog_complex(2, c(1.0, 0.0), 1e-15).unwrap();
        assert!((one.value - c(ZETA_2, 0.0)).norm() < 1e-15);
        let zero = polylog_complex(3, c(0.0, 0.0), 1e-15).unwrap();
        assert_eq!(zero.value, c(0.0, 0.0));
        let re = polylog_complex(3, c(0.5, 0.5), 1e-15).unwrap().value.re;
        let closed = LN_2.powi(3) / 48.0 - 5.0 / 192.0 * PI * PI * LN_2 + 35.0 / 64.0 * ZETA_3;
        assert!((re - closed).abs() < 1e-15);
    }

    #[test]
    fn far_point_of_the_integral() {
        let k = I7Constants::new();
        let z = k.v_plus * k.r73;
        let l2 = polylog_complex(2, z, 1e-15).unwrap().value;
        let l3 = polylog_complex(3, z, 1e-15).unwrap().value;
        assert!((l2 - c(-0.1041234939506287831083, 3.939575333696364362905)).norm() < 4e-15);
        assert!((l3 - c(1.522240833567080787951, 4.445365277208165927235)).norm() < 4e-15);
    }

    #[test]
    fn region_boundaries_continuous() {
        for &r in &[INNER, OUTER] {
            for i in 0..12 {
                let t = 0.1 + 0.5 * i as f64;
                let lo = polylog_complex(3, Complex64::from_polar(r * (1.0 - 1e-12), t), 1e-15).unwrap();
                let hi = polylog_complex(3, Complex64::from_polar(r * (1.0 + 1e-12), t), 1e-15).unwrap();
                assert!((lo.value - hi.value).norm() < 1e-11, "r={r} t={t}: {} vs {}", lo.value, hi.value);
            }
        }
    }

    #[test]
    fn polar_imaginary_part() {
        let p = PolarPoint::new(0.5, PI / 3.0).unwrap();
        let v = im_li2_polar(p, 1e-14).unwrap().value;
        assert!((v - 0.4828536569574443324342206).abs() < 1e-15);
        assert_eq!(im_li2_polar(PolarPoint::new(0.0, 1.0).unwrap(), 1e-14).unwrap().value, 0.0);
        // r > 1 but 1 − r cos θ > 0: still the principal branch
        for (r, t) in [(2.0, 2.0), (3.0, 2.5)] {
            let a = im_li2_polar(PolarPoint::new(r, t).unwrap(), 1e-14).unwrap().value;
            let b = polylog_complex(2, Complex64::from_polar(r, t), 1e-15).unwrap().value.im;
            assert!((a - b).abs() < 1e-14, "r={r}, t={t}: {a} vs {b}");
        }
        assert!(matches!(
            im_li2_polar(PolarPoint::new(1.0, 0.0).unwrap(), 1e-12),
            Err(Error::BranchUndefined(_))
        ));
    }
}
