//! L₋₇(2) in trigamma, Hurwitz-zeta, integral and Clausen forms.

use super::{cl2v, csc2, proved, quad, tg, Check, Outcome, Tag, TOL_CLOSED, TOL_QUAD};
use crate::constants::{PI, SQRT_7};
use crate::integrals::{l_minus7_series, l_minus7_trigamma, CHI7};
use crate::specfun::hurwitz_zeta;
use crate::Result;

const T: &[Tag] = &[Tag::Lemma1];

pub(super) const CHECKS: &[Check] = &[
    proved("L1a", "L_-7(2) = sum chi(n)/n^2 = (1/49)[psi'(1/7)+psi'(2/7)-psi'(3/7)+psi'(4/7)-psi'(5/7)-psi'(6/7)]", T, TOL_CLOSED, l1a),
    proved("L1b", "L_-7(2) = (1/49){2[psi'(1/7)+psi'(2/7)-psi'(3/7)] - pi^2[csc^2(pi/7)+csc^2(2pi/7)-csc^2(3pi/7)]}", T, TOL_CLOSED, l1b),
    proved("L1c", "L_-7(2) = (2/49){psi'(1/7)+psi'(2/7)-psi'(3/7) + [csc^2(3pi/7)-4]pi^2}", T, TOL_CLOSED, l1c),
    proved("L1d", "L_-7(2) = (1/49)[zeta(2,1/7)+zeta(2,2/7)-zeta(2,3/7)+zeta(2,4/7)-zeta(2,5/7)-zeta(2,6/7)]", T, TOL_CLOSED, l1d),
    proved("L1e-1", "L_-7(2) = -int_0^1 (1+u-u^2+u^3-u^4-u^5)/(1-u^7) ln u du", T, TOL_QUAD, l1e1),
    proved("L1e-2", "L_-7(2) = -int_0^1 (1+2u+u^2+2u^3+u^4)/Phi_7(u) ln u du", T, TOL_QUAD, l1e2),
    proved("L1e-3", "L_-7(2) = 1 - int_0^1 u(1+u^2-u^4-u^5)/Phi_7(u) ln u du", T, TOL_QUAD, l1e3),
    proved("L1f", "Cl2(2pi/7)+Cl2(4pi/7)-Cl2(6pi/7) = (1/(56 sqrt7)){8[psi'(1/7)+psi'(2/7)-psi'(3/7)] + pi^2[-csc^2(pi/14)+csc^2(3pi/14)+csc^2(5pi/14)+csc^2(pi/7)-7csc^2(2pi/7)-csc^2(3pi/7)]}", T, TOL_CLOSED, l1f),
    proved("eq2.6", "Cl2(2pi/7)+Cl2(4pi/7)-Cl2(6pi/7) = (1/(56 sqrt7)) sum of twelve psi'(k/14) with signs", T, TOL_CLOSED, eq2_6),
    proved("eq2.10a", "psi'(1/14) = 4psi'(1/7)+psi'(3/7)-pi^2 csc^2(4pi/7)", T, TOL_CLOSED, eq2_10a),
    proved("eq2.10b", "psi'(3/14) = 4psi'(3/7)+psi'(2/7)-pi^2 csc^2(2pi/7)", T, TOL_CLOSED, eq2_10b),
    proved("eq2.10c", "psi'(5/14) = -4psi'(2/7)+psi'(1/7)-pi^2 csc^2(pi/7)+4pi^2 csc^2(2pi/7)", T, TOL_CLOSED, eq2_10c),
];

fn series(tol: f64) -> Result<f64> {
    Ok(l_minus7_series(tol / 100.0)?.value)
}

fn tg7(p: f64) -> Result<f64> {
    tg(p / 7.0)
}

fn tg14(p: f64) -> Result<f64> {
    tg(p / 14.0)
}

/// Cl₂(2π/7) + Cl₂(4π/7) − Cl₂(6π/7).
pub(super) fn clausen_combo() -> Result<f64> {
    Ok(cl2v(2.0 * PI / 7.0)? + cl2v(4.0 * PI / 7.0)? - cl2v(6.0 * PI / 7.0)?)
}

fn l1a(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(series(tol)?, l_minus7_trigamma()?.value))
}

fn l1b(tol: f64) -> Result<Outcome> {
    let t = tg7(1.0)? + tg7(2.0)? - tg7(3.0)?;
    let c = csc2(PI / 7.0) + csc2(2.0 * PI / 7.0) - csc2(3.0 * PI / 7.0);
    Ok(Outcome::pair((2.0 * t - PI * PI * c) / 49.0, series(tol)?))
}

fn l1c(tol: f64) -> Result<Outcome> {
    let t = tg7(1.0)? + tg7(2.0)? - tg7(3.0)?;
    let lhs = 2.0 * (t + (csc2(3.0 * PI / 7.0) - 4.0) * PI * PI) / 49.0;
    Ok(Outcome::pair(lhs, series(tol)?))
}

fn l1d(tol: f64) -> Result<Outcome> {
    let mut s = 0.0;
    for (i, chi) in CHI7.iter().enumerate() {
        s += chi * hurwitz_zeta(2.0, (i + 1) as f64 / 7.0, tol / 100.0)?.value;
    }
    Ok(Outcome::pair(s / 49.0, l_minus7_trigamma()?.value))
}

fn phi7(u: f64) -> f64 {
    1.0 + u * (1.0 + u * (1.0 + u * (1.0 + u * (1.0 + u * (1.0 + u)))))
}

fn l1e1(tol: f64) -> Result<Outcome> {
    let f = |u: f64| {
        let n = 1.0 + u - u * u + u.powi(3) - u.powi(4) - u.powi(5);
        // 1 − u⁷ without cancellation near u = 1; the integrand tends to 0 there.
        let d = -(7.0 * u.ln()).exp_m1();
        if d == 0.0 {
            0.0
        } else {
            -n / d * u.ln()
        }
    };
    Ok(Outcome::pair(quad(f, 0.0, 1.0, &[0.0], tol / 10.0)?, series(tol)?))
}

fn l1e2(tol: f64) -> Result<Outcome> {
    let f = |u: f64| -(1.0 + 2.0 * u + u * u + 2.0 * u.powi(3) + u.powi(4)) / phi7(u) * u.ln();
    Ok(Outcome::pair(quad(f, 0.0, 1.0, &[0.0], tol / 10.0)?, series(tol)?))
}

fn l1e3(tol: f64) -> Result<Outcome> {
    let f = |u: f64| u * (1.0 + u * u - u.powi(4) - u.powi(5)) / phi7(u) * u.ln();
    Ok(Outcome::pair(1.0 - quad(f, 0.0, 1.0, &[0.0], tol / 10.0)?, series(tol)?))
}

fn l1f(_tol: f64) -> Result<Outcome> {
    let a = 8.0 * (tg7(1.0)? + tg7(2.0)? - tg7(3.0)?);
    let b = -csc2(PI / 14.0) + csc2(3.0 * PI / 14.0) + csc2(5.0 * PI / 14.0) + csc2(PI / 7.0)
        - 7.0 * csc2(2.0 * PI / 7.0)
        - csc2(3.0 * PI / 7.0);
    let rhs = (a + PI * PI * b) / (56.0 * SQRT_7);
    Ok(Outcome::pair(clausen_combo()?, rhs))
}

fn eq2_6(_tol: f64) -> Result<Outcome> {
    // Signs of ψ'(k/14), k = 1..13 (k = 7 absent).
    const SIGNS: [(f64, f64); 12] = [
        (1.0, 1.0),
        (2.0, 1.0),
        (3.0, -1.0),
        (4.0, 1.0),
        (5.0, -1.0),
        (6.0, -1.0),
        (8.0, 1.0),
        (9.0, 1.0),
        (10.0, -1.0),
        (11.0, 1.0),
        (12.0, -1.0),
        (13.0, -1.0),
    ];
    let mut s = 0.0;
    for (k, sign) in SIGNS {
        s += sign * tg14(k)?;
    }
    Ok(Outcome::pair(s / (56.0 * SQRT_7), clausen_combo()?))
}

fn eq2_10a(_tol: f64) -> Result<Outcome> {
    let rhs = 4.0 * tg7(1.0)? + tg7(3.0)? - PI * PI * csc2(4.0 * PI / 7.0);
    Ok(Outcome::pair(tg14(1.0)?, rhs))
}

fn eq2_10b(_tol: f64) -> Result<Outcome> {
    let rhs = 4.0 * tg7(3.0)? + tg7(2.0)? - PI * PI * csc2(2.0 * PI / 7.0);
    Ok(Outcome::pair(tg14(3.0)?, rhs))
}

fn eq2_10c(_tol: f64) -> Result<Outcome> {
    let rhs = -4.0 * tg7(2.0)? + tg7(1.0)? - PI * PI * csc2(PI / 7.0) + 4.0 * PI * PI * csc2(2.0 * PI / 7.0);
    Ok(Outcome::pair(tg14(5.0)?, rhs))
}
