//! BBP-type formulas, their integral links and the Li₃((1+i)/2) closed forms.

use super::{proved, quad, Check, Outcome, Tag, TOL_CHAIN, TOL_CLOSED, TOL_QUAD};
use crate::bbp::{self, eval_bbp_sum, li3_binomial_sums, monomial};
use crate::constants::{CATALAN, LN_2, PI, ZETA_3};
use crate::specfun::polylog_complex;
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

const T: &[Tag] = &[Tag::Lemma4];

pub(super) const CHECKS: &[Check] = &[
    proved("L4a", "G = (1/4) sum 16^{-j}[4/(8j+1)^2 - 2/(8j+4)^2 - 1/(8j+5)^2 - 1/(8j+6)^2] - pi^2/32 + (pi/8) ln2", T, TOL_CLOSED, l4a),
    proved("L4b", "Re Li3((1+i)/2) = ln^3(2)/48 - (5/192) pi^2 ln2 + (35/64) zeta(3)", T, TOL_CLOSED, l4b),
    proved("L4c", "8 sum 16^{-j}[4/(8j+1)^3 - 2/(8j+4)^3 - 1/(8j+5)^3 - 1/(8j+6)^3] = -(pi^2/2) ln2 + 14 zeta(3) + 32 Im Li3((1+i)/2)", T, TOL_CLOSED, l4c),
    proved("eq2.38", "-4 int_0^1 (y-1) ln(y/sqrt2)/(y^4-2y^3+4y-4) dy = G + pi^2/32", T, TOL_QUAD, eq2_38),
    proved("eq2.39", "sum 16^{-j}/(8j+k)^2 + (ln2/2) sum 16^{-j}/(8j+k) = -2^{k/2} int_0^{1/sqrt2} x^{k-1} ln x/(1-x^8) dx, k in {1,4,5,6}", T, TOL_QUAD, eq2_39),
    proved("eq2.40", "2^{k/2} int_0^{1/sqrt2} x^{k-1} ln^2 x/(1-x^8) dx = (1/4) sum 16^{-j}/(8j+k) [ln^2 2 + 4ln2/(8j+k) + 8/(8j+k)^2], k in {1,4,5,6}", T, TOL_QUAD, eq2_40),
    proved("eq2.41", "8S3 + 4ln2 S2 + ln^2(2) S1 = 64 int_0^1 (y-1) ln^2(y/sqrt2)/(y^4-2y^3+4y-4) dy = 16G ln2 - pi ln^2 2 + (2/3)i ln^3 2 - (5/6)i pi^2 ln2 - 32i Li3((1+i)/2) + 14(1+5i/4) zeta(3); imaginary part vanishes", T, TOL_CHAIN, eq2_41),
    proved("li3-binom", "Re/Im Li3((1+i)/2) = sum_n sum_m [C(n,4m) - C(n,4m+2)] / [C(n,4m+1) - C(n,4m+3)] / (2^n n^3)", T, TOL_CLOSED, li3_binom),
];

fn li3_half_i() -> Result<Complex64> {
    Ok(polylog_complex(3, Complex64::new(0.5, 0.5), 1e-17)?.value)
}

fn re_li3_closed() -> f64 {
    LN_2.powi(3) / 48.0 - 5.0 / 192.0 * PI * PI * LN_2 + 35.0 / 64.0 * ZETA_3
}

fn l4a(tol: f64) -> Result<Outcome> {
    let f = bbp::formula("eq2.35-sum")?;
    Ok(Outcome::pair(f.lhs(tol / 100.0)?.value, CATALAN))
}

fn l4b(_tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(li3_half_i()?.re, re_li3_closed()))
}

fn l4c(tol: f64) -> Result<Outcome> {
    let f = bbp::formula("eq2.37-sum")?;
    let rhs = -PI * PI / 2.0 * LN_2 + 14.0 * ZETA_3 + 32.0 * li3_half_i()?.im;
    Ok(Outcome::pair(f.lhs(tol / 100.0)?.value, rhs))
}

/// y⁴ − 2y³ + 4y − 4 = (y² − 2)(y² − 2y + 2), nonzero on [0, 1].
fn quartic(y: f64) -> f64 {
    (y * y - 2.0) * (y * y - 2.0 * y + 2.0)
}

fn eq2_38(tol: f64) -> Result<Outcome> {
    let f = |y: f64| (y - 1.0) * (y * FRAC_1_SQRT_2).ln() / quartic(y);
    let lhs = -4.0 * quad(f, 0.0, 1.0, &[0.0], tol / 40.0)?;
    Ok(Outcome::pair(lhs, CATALAN + PI * PI / 32.0))
}

fn s(degree: u32, k: usize, tol: f64) -> Result<f64> {
    Ok(eval_bbp_sum(&monomial(degree, k)?, tol)?.value)
}

const RESIDUES: [usize; 4] = [1, 4, 5, 6];

fn eq2_39(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for k in RESIDUES {
        let lhs = s(2, k, tol / 100.0)? + LN_2 / 2.0 * s(1, k, tol / 100.0)?;
        let f = move |x: f64| x.powi(k as i32 - 1) * x.ln() / (1.0 - x.powi(8));
        let scale = 2f64.powf(k as f64 / 2.0);
        let rhs = -scale * quad(f, 0.0, FRAC_1_SQRT_2, &[0.0], tol / (10.0 * scale))?;
        items.push((format!("k = {k}"), lhs, rhs));
    }
    Ok(Outcome::worst(items))
}

fn eq2_40(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for k in RESIDUES {
        let f = move |x: f64| x.powi(k as i32 - 1) * x.ln().powi(2) / (1.0 - x.powi(8));
        let scale = 2f64.powf(k as f64 / 2.0);
        let lhs = scale * quad(f, 0.0, FRAC_1_SQRT_2, &[0.0], tol / (10.0 * scale))?;
        let t = tol / 100.0;
        let rhs = 0.25 * (LN_2 * LN_2 * s(1, k, t)? + 4.0 * LN_2 * s(2, k, t)? + 8.0 * s(3, k, t)?);
        items.push((format!("k = {k}"), lhs, rhs));
    }
    Ok(Outcome::worst(items))
}

fn comb(degree: u32, tol: f64) -> Result<f64> {
    let mut f = bbp::formula("pi-degree1")?;
    f.degree = degree;
    Ok(eval_bbp_sum(&f, tol)?.value)
}

fn eq2_41(tol: f64) -> Result<Outcome> {
    let t = tol / 100.0;
    let lhs = 8.0 * comb(3, t)? + 4.0 * LN_2 * comb(2, t)? + LN_2 * LN_2 * comb(1, t)?;
    let f = |y: f64| (y - 1.0) * (y * FRAC_1_SQRT_2).ln().powi(2) / quartic(y);
    let integral = 64.0 * quad(f, 0.0, 1.0, &[0.0], tol / 640.0)?;
    let li3 = li3_half_i()?;
    let i = Complex64::i();
    let rhs = Complex64::from(16.0 * CATALAN * LN_2 - PI * LN_2 * LN_2)
        + i * (2.0 / 3.0 * LN_2.powi(3) - 5.0 / 6.0 * PI * PI * LN_2)
        - 32.0 * i * li3
        + Complex64::new(14.0, 14.0 * 1.25) * ZETA_3;
    Ok(Outcome::pair(lhs, rhs.re)
        .with_extra("sum vs integral", (lhs - integral).abs())
        .with_extra("Im of closed form", rhs.im.abs()))
}

fn li3_binom(tol: f64) -> Result<Outcome> {
    let (re, im) = li3_binomial_sums(tol / 100.0)?;
    let want_im = li3_half_i()?.im;
    Ok(Outcome::pair(re.value, re_li3_closed()).with_extra("imaginary part", (im.value - want_im).abs()))
}

