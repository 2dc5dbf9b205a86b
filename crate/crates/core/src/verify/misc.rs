//! Trigamma functional equations, the rational-angle Clausen formula and
//! small auxiliary series.

use super::catalan::sqrt_pi_series;
use super::{cl2v, csc2, proved, tg, Check, Outcome, Tag, TOL_CLOSED};
use crate::constants::{EULER_GAMMA, PI};
use crate::specfun::{cl2_rational, digamma, harmonic, RationalAngle};
use crate::Result;

const T: &[Tag] = &[Tag::Misc];

pub(super) const CHECKS: &[Check] = &[
    proved("refl", "psi'(1-x) + psi'(x) = pi^2 csc^2(pi x)", T, TOL_CLOSED, refl),
    proved("dup", "2 psi'(2x) = (1/2)[psi'(x) + psi'(x+1/2)]", T, TOL_CLOSED, dup),
    proved("mult", "psi'(mx) = (1/m^2) sum_{k<m} psi'(x + k/m), m in {2, 3, 7}", T, TOL_CLOSED, mult),
    proved("zeta2", "(1/49) sum_{k=1}^{7} psi'(k/7) = zeta(2) = pi^2/6", T, TOL_CLOSED, zeta2),
    proved("eq2.5", "Cl2(p pi/q) = -(1/4q^2) sum_{k<q} [psi'(1 - k/2q) + psi'(1/2 - k/2q)] sin(k p pi/q), p even, q odd", T, TOL_CLOSED, eq2_5),
    proved("eq2.20", "psi(j+1) + gamma = H_j, j = 0..60", T, TOL_CLOSED, eq2_20),
    proved("eq2.30", "sum_{j>=0} j!/(2^j Gamma(j+3/2)) = sqrt(pi)", T, TOL_CLOSED, eq2_30),
];

const XS: [f64; 6] = [0.1, 0.25, 1.0 / 7.0, 0.3, 0.45, 0.6];

fn refl(_tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for x in XS {
        items.push((format!("x = {x}"), tg(1.0 - x)? + tg(x)?, PI * PI * csc2(PI * x)));
    }
    Ok(Outcome::worst(items))
}

fn dup(_tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for x in XS.into_iter().chain([1.5, 3.2]) {
        items.push((format!("x = {x}"), 2.0 * tg(2.0 * x)?, 0.5 * (tg(x)? + tg(x + 0.5)?)));
    }
    Ok(Outcome::worst(items))
}

fn mult(_tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for m in [2u32, 3, 7] {
        let mf = f64::from(m);
        for x in [0.1, 0.3, 0.8, 2.5] {
            let mut s = 0.0;
            for k in 0..m {
                s += tg(x + f64::from(k) / mf)?;
            }
            items.push((format!("m = {m}, x = {x}"), tg(mf * x)?, s / (mf * mf)));
        }
    }
    Ok(Outcome::worst(items))
}

fn zeta2(_tol: f64) -> Result<Outcome> {
    let mut s = 0.0;
    for k in 1..=7 {
        s += tg(f64::from(k) / 7.0)?;
    }
    Ok(Outcome::pair(s / 49.0, PI * PI / 6.0))
}

fn eq2_5(_tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for (p, q) in [(2, 3), (2, 5), (4, 5), (2, 7), (4, 7), (6, 7), (2, 9), (8, 9), (-2, 7), (10, 7)] {
        let lhs = cl2_rational(RationalAngle::new(p, q)?, 1e-14)?.value;
        items.push((format!("{p}pi/{q}"), lhs, cl2v(p as f64 * PI / q as f64)?));
    }
    Ok(Outcome::worst(items))
}

fn eq2_20(_tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for j in 0..=60u64 {
        items.push((format!("j = {j}"), digamma(j as f64 + 1.0)?.value + EULER_GAMMA, harmonic(j)));
    }
    Ok(Outcome::worst(items))
}

fn eq2_30(tol: f64) -> Result<Outcome> {
    // Γ(3/2) = √π/2 turns the sum into (2/√π) Σ r_j.
    let s = sqrt_pi_series(tol)?;
    Ok(Outcome::pair(2.0 * s / PI.sqrt(), PI.sqrt()))
}
