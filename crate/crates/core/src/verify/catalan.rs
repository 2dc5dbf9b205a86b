//! Representations of Catalan's constant G = Cl₂(π/2) and of Cl₂(θ(a)).

use super::lemma2::theta_of;
use super::{cl2v, proved, quad, Check, Outcome, Tag, TOL_CLOSED, TOL_QUAD};
use crate::bbp;
use crate::constants::{CATALAN, EULER_GAMMA, LN_2, PI, SQRT_3};
use crate::series::alternating;
use crate::specfun::{digamma, harmonic};
use crate::{Error, Result};

const T: &[Tag] = &[Tag::Catalan];
const T3: &[Tag] = &[Tag::Catalan, Tag::Lemma3];

pub(super) const CHECKS: &[Check] = &[
    proved("C1", "G = (pi/2) ln2 + sum_{j>=1} (-1)^j H_j/(2j+1)", T, TOL_QUAD, c1),
    proved("cat-2.22", "G = (pi/2) ln2 - (1/2) int_0^1 ln(1+u)/((1+u) sqrt u) du", T, TOL_QUAD, cat_2_22),
    proved("cat-2.25", "G = -(pi/4) ln2 + (1/2) sum_{j>=0} (-1)^j [psi(j/2+3/4) - psi(j/2+1/4)]/(2j+1)", T, TOL_QUAD, cat_2_25),
    proved("cat-2.27", "G = 2 int_1^inf arccoth(u)/(1+u^2) du", T, TOL_QUAD, cat_2_27),
    proved("cat-2.28a", "G = -(1/4) int_0^1 ln(x/2)/((1-x/2) sqrt(1-x)) dx", T3, TOL_QUAD, cat_2_28a),
    proved("cat-2.28b", "G = (pi/4) ln2 + (sqrt(pi)/4) sum_{j>=0} j!/(2^j Gamma(j+3/2)) [psi(j+3/2) - psi(j+1)]", T3, TOL_CLOSED, cat_2_28b),
    proved("cat-2.28c", "G = (pi/4) ln2 + 2 int_0^1 arcsin(y/sqrt2)/((y+1) sqrt(2-y^2)) dy", T3, TOL_QUAD, cat_2_28c),
    proved("cat-2.32", "Cl2(theta(a)) = [ln(a^2+1) - 2ln a] atan(a) - a int_0^1 ln(1-t^2)/(1+a^2 t^2) dt, a in {0.5, 1, sqrt3, 3}", T, TOL_QUAD, cat_2_32),
    proved("cat-2.33", "G = (pi/4) ln2 - int_0^1 ln(1-t^2)/(1+t^2) dt", T, TOL_QUAD, cat_2_33),
    proved("cat-2.34", "Cl2(theta(a)) = [ln(a^2+1) - 2ln a] atan(a) + a sum_{j>=0} (-1)^j a^{2j} [psi(j+3/2) + gamma]/(2j+1), a in {0.5, 0.8, 1}", T, TOL_QUAD, cat_2_34),
];

/// One evaluation route for G.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalanRoute {
    pub name: &'static str,
    pub value: f64,
}

fn dg(x: f64) -> Result<f64> {
    Ok(digamma(x)?.value)
}

/// Σ_{j≥0} (−1)ʲ a(j) where a may fail; the first failure is returned.
fn alt_fallible(a: impl Fn(usize) -> Result<f64>, tol: f64) -> Result<f64> {
    let first_err = std::sync::Mutex::new(None);
    let r = alternating(
        |k| match a(k) {
            Ok(v) => v,
            Err(e) => {
                first_err.lock().unwrap().get_or_insert(e);
                0.0
            }
        },
        tol,
    );
    if let Some(e) = first_err.into_inner().unwrap() {
        return Err(e);
    }
    Ok(r?.value)
}

fn defining_series(tol: f64) -> Result<f64> {
    Ok(alternating(|k| 1.0 / ((2 * k + 1) as f64).powi(2), tol)?.value)
}

fn route_c1(tol: f64) -> Result<f64> {
    // Σ_{j≥1} (−1)ʲ H_j/(2j+1) = −Σ_{k≥0} (−1)ᵏ H_{k+1}/(2k+3).
    let s = alternating(|k| harmonic(k as u64 + 1) / (2 * k + 3) as f64, tol)?.value;
    Ok(PI / 2.0 * LN_2 - s)
}

fn route_2_22(tol: f64) -> Result<f64> {
    let f = |u: f64| u.ln_1p() / ((1.0 + u) * u.sqrt());
    Ok(PI / 2.0 * LN_2 - 0.5 * quad(f, 0.0, 1.0, &[0.0], tol)?)
}

fn route_2_25(tol: f64) -> Result<f64> {
    let s = alt_fallible(
        |j| {
            let x = j as f64 / 2.0;
            Ok((dg(x + 0.75)? - dg(x + 0.25)?) / (2 * j + 1) as f64)
        },
        tol,
    )?;
    Ok(-PI / 4.0 * LN_2 + 0.5 * s)
}

fn route_2_27(tol: f64) -> Result<f64> {
    // arccoth u = ½ ln((u+1)/(u−1)).
    let f = |u: f64| 0.5 * (2.0 / (u - 1.0)).ln_1p() / (1.0 + u * u);
    Ok(2.0 * quad(f, 1.0, f64::INFINITY, &[1.0], tol)?)
}

fn route_2_28a(tol: f64) -> Result<f64> {
    // On [½, 1] the substitution x = 1 − s² removes the inverse square root
    // at x = 1: the piece becomes 4∫₀^{1/√2} ln((1−s²)/2)/(1+s²) ds.
    let f = |x: f64| (x / 2.0).ln() / ((1.0 - x / 2.0) * (1.0 - x).sqrt());
    let left = quad(f, 0.0, 0.5, &[0.0], tol / 2.0)?;
    let g = |s: f64| 4.0 * (((1.0 - s) * (1.0 + s)) / 2.0).ln() / (1.0 + s * s);
    let right = quad(g, 0.0, std::f64::consts::FRAC_1_SQRT_2, &[], tol / 2.0)?;
    Ok(-0.25 * (left + right))
}

/// r_j = j!/(2ʲ (3/2)_j) = Γ(3/2) j!/(2ʲ Γ(j+3/2)); r₀ = 1, ratio (j+1)/(2j+3).
fn gamma_ratio_terms() -> impl Iterator<Item = (usize, f64)> {
    (0..).scan(1.0f64, |r, j: usize| {
        let cur = *r;
        *r *= (j + 1) as f64 / (2 * j + 3) as f64;
        Some((j, cur))
    })
}

fn route_2_28b(tol: f64) -> Result<f64> {
    // (√π/4) j!/(2ʲΓ(j+3/2)) = r_j/2, since Γ(3/2) = √π/2.
    let mut s = 0.0;
    for (j, r) in gamma_ratio_terms() {
        let jf = j as f64;
        s += r * (dg(jf + 1.5)? - dg(jf + 1.0)?);
        // Later terms shrink by at least half and the digamma gap decreases.
        if r <= tol * 1e-2 {
            break;
        }
        if j > 200 {
            return Err(Error::NonConvergence {
                what: "gamma-ratio series",
                achieved: r,
                tol,
                effort: j,
            });
        }
    }
    Ok(PI / 4.0 * LN_2 + 0.5 * s)
}

fn route_2_28c(tol: f64) -> Result<f64> {
    let f = |y: f64| (y / std::f64::consts::SQRT_2).asin() / ((y + 1.0) * (2.0 - y * y).sqrt());
    Ok(PI / 4.0 * LN_2 + 2.0 * quad(f, 0.0, 1.0, &[], tol / 2.0)?)
}

fn route_2_33(tol: f64) -> Result<f64> {
    let f = |t: f64| ((1.0 - t) * (1.0 + t)).ln() / (1.0 + t * t);
    Ok(PI / 4.0 * LN_2 - quad(f, 0.0, 1.0, &[1.0], tol)?)
}

fn route_2_35(tol: f64) -> Result<f64> {
    Ok(bbp::formula("eq2.35-sum")?.lhs(tol)?.value)
}

type Route = (&'static str, fn(f64) -> Result<f64>);

const ROUTES: [Route; 9] = [
    ("series", defining_series),
    ("eq1.11", route_c1),
    ("eq2.22", route_2_22),
    ("eq2.25", route_2_25),
    ("eq2.27", route_2_27),
    ("eq2.28a", route_2_28a),
    ("eq2.28c", route_2_28c),
    ("eq2.33", route_2_33),
    ("eq2.35", route_2_35),
];

/// Names accepted by [`catalan_route`], in evaluation order.
pub fn catalan_route_names() -> impl Iterator<Item = &'static str> {
    ROUTES.iter().map(|r| r.0)
}

/// G by the named route; "series" is the defining alternating series.
pub fn catalan_route(name: &str, tol: f64) -> Result<f64> {
    let (_, f) = ROUTES
        .iter()
        .find(|r| r.0 == name)
        .ok_or_else(|| crate::error::domain(format!("unknown Catalan route '{name}'")))?;
    f(tol)
}

/// G by nine independent routes.
pub fn catalan_routes(tol: f64) -> Result<Vec<CatalanRoute>> {
    let t = tol / 10.0;
    ROUTES
        .iter()
        .map(|&(name, f)| Ok(CatalanRoute { name, value: f(t)? }))
        .collect()
}

fn c1(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(route_c1(tol / 10.0)?, CATALAN))
}

fn cat_2_22(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(route_2_22(tol / 10.0)?, CATALAN))
}

fn cat_2_25(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(route_2_25(tol / 10.0)?, CATALAN))
}

fn cat_2_27(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(route_2_27(tol / 10.0)?, CATALAN))
}

fn cat_2_28a(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(route_2_28a(tol / 10.0)?, CATALAN))
}

fn cat_2_28b(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(route_2_28b(tol / 10.0)?, CATALAN))
}

fn cat_2_28c(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(route_2_28c(tol / 10.0)?, CATALAN))
}

fn cat_2_33(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(route_2_33(tol / 10.0)?, CATALAN))
}

fn log_prefactor(a: f64) -> f64 {
    ((a * a).ln_1p() - 2.0 * a.ln()) * a.atan()
}

fn cat_2_32(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for a in [0.5, 1.0, SQRT_3, 3.0] {
        let f = move |t: f64| ((1.0 - t) * (1.0 + t)).ln() / (1.0 + a * a * t * t);
        let i = quad(f, 0.0, 1.0, &[1.0], tol / (10.0 * a))?;
        items.push((format!("a = {a}"), log_prefactor(a) - a * i, cl2v(theta_of(a))?));
    }
    Ok(Outcome::worst(items))
}

fn cat_2_34(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for a in [0.5f64, 0.8, 1.0] {
        let a2 = a * a;
        let s = alt_fallible(
            |j| {
                let jf = j as f64;
                Ok(a2.powi(j as i32) * (dg(jf + 1.5)? + EULER_GAMMA) / (2.0 * jf + 1.0))
            },
            tol / 10.0,
        )?;
        items.push((format!("a = {a}"), log_prefactor(a) + a * s, cl2v(theta_of(a))?));
    }
    Ok(Outcome::worst(items))
}

pub(super) fn sqrt_pi_series(tol: f64) -> Result<f64> {
    let mut s = 0.0;
    for (j, r) in gamma_ratio_terms() {
        s += r;
        // Tail after term j is below r_j (ratio ≤ ½).
        if r <= tol * 1e-2 {
            return Ok(s);
        }
        if j > 200 {
            break;
        }
    }
    Err(Error::NonConvergence {
        what: "gamma-ratio series",
        achieved: f64::NAN,
        tol,
        effort: 200,
    })
}
