//! Integral and series representations of Cl₂ at θ(a) = arccos((1−a²)/(1+a²)),
//! the Im Li₂ decomposition and duplication.

use super::{cl2v, proved, quad, Check, Outcome, Tag, TOL_CLOSED, TOL_QUAD};
use crate::constants::{EULER_GAMMA, LN_2, PI, SQRT_3, SQRT_7};
use crate::specfun::{digamma, harmonic, im_li2_polar, polylog_complex, PolarPoint};
use crate::{Error, Result};
use num_complex::Complex64;

const T: &[Tag] = &[Tag::Lemma2];

pub(super) const CHECKS: &[Check] = &[
    proved("L2a", "Cl2(theta(a)) = int_a^inf ln((u+a)/(u-a)) du/(1+u^2), theta(a) = arccos((1-a^2)/(1+a^2)), a in {0.5, 1, sqrt3, sqrt7, 3}", T, TOL_QUAD, l2a),
    proved("L2b-1", "Cl2(theta(a)) = 2 acot(a) ln2 + (1/a) sum_{j>=1} (-1)^j a^{-2j} H_j/(2j+1), a in {1.5, 2, 3}", T, TOL_QUAD, l2b1),
    proved("L2b-2", "Cl2(theta(a)) = acot(a)(2ln2+gamma-2) + (2-gamma)/a - ln(1+1/a^2)/a + (1/a) sum_{j>=1} (-1)^j a^{-2j} psi(j)/(2j+1), a in {1.5, 2, 3}", T, TOL_QUAD, l2b2),
    proved("L2c", "Cl2(theta(a)) = 2 acot(a) ln2 + 2 int_1^inf [y acot(ay) - acot(a)] dy/((1-y^2) y), a in {0.5, 1, sqrt3, 3}", T, TOL_QUAD, l2c),
    proved("eq1.14", "Cl2(theta) = -int_0^theta ln(2 sin(t/2)) dt", T, TOL_QUAD, eq1_14),
    proved("eq1.15", "Im Li2(r e^{i theta}) = omega ln r + (1/2)[Cl2(2omega) - Cl2(2omega+2theta) + Cl2(2theta)], omega = atan(r sin theta/(1 - r cos theta))", T, TOL_CLOSED, eq1_15),
    proved("eq1.17", "Cl2(2theta) = 2Cl2(theta) - 2Cl2(pi - theta)", T, TOL_CLOSED, eq1_17),
];

pub(super) fn theta_of(a: f64) -> f64 {
    ((1.0 - a * a) / (1.0 + a * a)).acos()
}

fn acot(x: f64) -> f64 {
    (1.0 / x).atan()
}

fn l2a(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for a in [0.5, 1.0, SQRT_3, SQRT_7, 3.0] {
        let f = move |u: f64| (2.0 * a / (u - a)).ln_1p() / (1.0 + u * u);
        let lhs = quad(f, a, f64::INFINITY, &[a], tol / 10.0)?;
        items.push((format!("a = {a}"), lhs, cl2v(theta_of(a))?));
    }
    Ok(Outcome::worst(items))
}

/// Σ_{j≥1} term(j) for a series dominated by C·qʲ, with the tail bounded by
/// the first omitted term over (1 − q).
fn geometric_sum(mut term: impl FnMut(u64) -> f64, q: f64, tol: f64) -> Result<f64> {
    let mut s = 0.0;
    for j in 1..10_000u64 {
        let t = term(j);
        s += t;
        let next = term(j + 1).abs();
        if next / (1.0 - q) <= tol * 1e-3 {
            return Ok(s);
        }
    }
    Err(Error::NonConvergence {
        what: "geometric series",
        achieved: f64::NAN,
        tol,
        effort: 10_000,
    })
}

fn l2b1(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for a in [1.5f64, 2.0, 3.0] {
        let q = 1.0 / (a * a);
        let s = geometric_sum(
            |j| {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * q.powi(j as i32) * harmonic(j) / (2 * j + 1) as f64
            },
            q,
            tol,
        )?;
        let lhs = 2.0 * acot(a) * LN_2 + s / a;
        items.push((format!("a = {a}"), lhs, cl2v(theta_of(a))?));
    }
    Ok(Outcome::worst(items))
}

fn l2b2(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for a in [1.5f64, 2.0, 3.0] {
        let q = 1.0 / (a * a);
        let mut err = None;
        let s = geometric_sum(
            |j| {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                let psi = match digamma(j as f64) {
                    Ok(v) => v.value,
                    Err(e) => {
                        err.get_or_insert(e);
                        f64::NAN
                    }
                };
                sign * q.powi(j as i32) * psi / (2 * j + 1) as f64
            },
            q,
            tol,
        );
        let s = match (err, s) {
            (Some(e), _) => return Err(e),
            (None, s) => s?,
        };
        let lhs = acot(a) * (2.0 * LN_2 + EULER_GAMMA - 2.0) + (2.0 - EULER_GAMMA) / a - q.ln_1p() / a + s / a;
        items.push((format!("a = {a}"), lhs, cl2v(theta_of(a))?));
    }
    Ok(Outcome::worst(items))
}

fn l2c(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for a in [0.5, 1.0, SQRT_3, 3.0] {
        let ca = acot(a);
        // Removable 0/0 at y = 1; the limit is −(acot a − a/(1+a²))/2.
        let limit = -(ca - a / (1.0 + a * a)) / 2.0;
        let f = move |y: f64| {
            if (y - 1.0).abs() < 1e-7 {
                limit
            } else {
                (y * acot(a * y) - ca) / ((1.0 - y * y) * y)
            }
        };
        let lhs = 2.0 * ca * LN_2 + 2.0 * quad(f, 1.0, f64::INFINITY, &[], tol / 20.0)?;
        items.push((format!("a = {a}"), lhs, cl2v(theta_of(a))?));
    }
    Ok(Outcome::worst(items))
}

fn eq1_14(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for th in [0.5, PI / 3.0, PI / 2.0, 2.0, 3.0] {
        let f = |t: f64| -(2.0 * (t / 2.0).sin()).ln();
        let lhs = quad(f, 0.0, th, &[0.0], tol / 10.0)?;
        items.push((format!("theta = {th}"), lhs, cl2v(th)?));
    }
    Ok(Outcome::worst(items))
}

fn eq1_15(_tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for (r, th) in [(0.5, PI / 3.0), (2.0, 2.0), (3.0, 2.5), (0.9, 1.0), (1.5, -2.2), (0.3, -0.7)] {
        let lhs = im_li2_polar(PolarPoint::new(r, th)?, 1e-15)?.value;
        let rhs = polylog_complex(2, Complex64::from_polar(r, th), 1e-16)?.value.im;
        items.push((format!("r = {r}, theta = {th}"), lhs, rhs));
    }
    Ok(Outcome::worst(items))
}

fn eq1_17(_tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for th in [0.3, 1.0, PI / 3.0, 2.0, 2.9, -1.2] {
        let rhs = 2.0 * cl2v(th)? - 2.0 * cl2v(PI - th)?;
        items.push((format!("theta = {th}"), cl2v(2.0 * th)?, rhs));
    }
    Ok(Outcome::worst(items))
}
