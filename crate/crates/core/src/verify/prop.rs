//! The I₇ evaluation and its intermediate steps, the conjectured I₇ = L₋₇(2),
//! and the I(a, b) family with its corollaries.

use super::{cl2v, conjecture, proved, quad, Check, Outcome, Tag, TOL_CHAIN, TOL_CLOSED, TOL_QUAD};
use crate::constants::{PI, SQRT_3, SQRT_7};
use crate::integrals::{
    corollary3, i1_clausen_form, i1_polylog_form, i1_series, i7_clausen_form, iab_omega_form, iab_theta_form,
    integral_I1, integral_I2, integral_I7, integral_In_u, integral_In_v_form, l_minus7_series, l_minus7_trigamma,
    I7Constants, CHI7,
};
use crate::specfun::{cl_sin, hurwitz_zeta, incomplete_gamma_upper_int};
use crate::Result;
use num_complex::Complex64;

const T1: &[Tag] = &[Tag::Prop1];
const T2: &[Tag] = &[Tag::Prop2];

pub(super) const CHECKS: &[Check] = &[
    proved("P1", "I7 = (24/(7 sqrt7)) {Cl2(theta+) + (1/2)[Cl2(2omega+) - Cl2(2omega+ + 2theta+)]}", T1, TOL_CHAIN, p1),
    proved("P1-3.3", "I(n) over u in [sqrt3, inf) equals its v-substituted form, n in {1, 2}", T1, TOL_QUAD, p1_3_3),
    proved("P1-3.4", "I2(1) = Cl2(arccos(-3/4))", T1, TOL_QUAD, p1_3_4),
    proved("P1-3.9trunc", "I1(1) = sum_{l=1}^{40} sin(l theta+) Gamma(2, l ln r73)/l^2 + tail", T1, TOL_CHAIN, p1_3_9),
    proved("P1-3.10", "I1(n) = -(i/2) n! sum_m (ln^m r73/m!)[Li_{n+1-m}(v+/r73) - Li_{n+1-m}(v-/r73)], n in {1, 2}", T1, TOL_CHAIN, p1_3_10),
    proved("P1-3.11", "w = (1 - v- r73)/(1 - v+ r73) has |w| = 1 and arg w = 2omega+ = -2 atan((2sqrt3 + sqrt7)/5)", T1, TOL_CLOSED, p1_3_11),
    proved("P1-3.12", "I1(1) = (1/2)[Cl2(2omega+) - Cl2(2omega+ + 2theta+) + Cl2(2theta+)]", T1, TOL_QUAD, p1_3_12),
    proved("eq1.12b", "omega+ = atan(sqrt7) - 2pi/3 = -atan((2sqrt3 + sqrt7)/5), omega- = -omega+, 2omega+ = theta7 - 4pi/3", T1, TOL_CLOSED, eq1_12b),
    proved("eq3.8", "Gamma(n+1, x) = int_x^inf t^n e^{-t} dt = n! e^{-x} sum_{m<=n} x^m/m!", T1, TOL_QUAD, eq3_8),
    conjecture("conj-L7", "I7 ?= L_-7(2)", T1, TOL_CHAIN, conj_l7),
    proved("eq4.1", "2Cl2(2theta+) - 3Cl2(2theta+ - theta7) - Cl2(3theta7 - 2theta+) + 6Cl2(pi + theta7) = 0", T2, TOL_CLOSED, eq4_1),
    proved("eq4.3", "Cl_q(2pi/7) + Cl_q(4pi/7) - Cl_q(6pi/7) = (sqrt7/2) 7^{-q} sum chi(p) zeta(q, p/7), q in {2, 3, 4}", T2, TOL_QUAD, eq4_3),
    proved("P2", "I(a,b) = int_a^inf ln y dy/(y^2+2by+1) = (1/2)(1-b^2)^{-1/2}[Cl2(2omega) - Cl2(2omega+2theta) + Cl2(2theta)]", T2, TOL_CHAIN, p2),
    proved("P2-4.7", "I(a,b) = (1/2)(1-b^2)^{-1/2}[Cl2(2theta2 - 2theta1) - Cl2(pi - 2theta1) + Cl2(pi - 2theta2)]", T2, TOL_CHAIN, p2_4_7),
    proved("C2", "Cl2(2omega) - Cl2(2omega+2theta) + Cl2(2theta) = Cl2(2theta2 - 2theta1) - Cl2(pi - 2theta1) + Cl2(pi - 2theta2)", T2, TOL_CLOSED, c2),
    proved("C3", "int_0^inf ln x dx/(x^2 + 2xc cos t + c^2) = (ln c/c)(t/sin t)", T2, TOL_QUAD, c3),
    proved("P2-I1b", "I(1,b) = Cl2(arccos(-b))/sqrt(1-b^2)", T2, TOL_QUAD, p2_i1b),
    proved("P2-I0b", "I(0,b) = 0", T2, TOL_QUAD, p2_i0b),
];

fn p1(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(integral_I7(tol / 10.0)?.value, i7_clausen_form(tol / 10.0)?.value))
}

fn p1_3_3(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for n in [1, 2] {
        let u = integral_In_u(n, tol / 10.0)?.value;
        let v = integral_In_v_form(n, tol / 10.0)?.value;
        items.push((format!("n = {n}"), v, u));
    }
    Ok(Outcome::worst(items))
}

fn p1_3_4(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(integral_I2(1, tol / 10.0)?.value, cl2v((-0.75f64).acos())?))
}

fn p1_3_9(tol: f64) -> Result<Outcome> {
    let s = i1_series(1, 40)?;
    let q = integral_I1(1, tol / 10.0)?;
    Ok(Outcome::pair(s.value, q.value).with_extra("series tail bound", s.err_bound))
}

fn p1_3_10(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for n in [1, 2] {
        items.push((format!("n = {n}"), i1_polylog_form(n)?.value, integral_I1(n, tol / 10.0)?.value));
    }
    Ok(Outcome::worst(items))
}

fn p1_3_11(_tol: f64) -> Result<Outcome> {
    let k = I7Constants::new();
    let r = Complex64::from(k.r73);
    let w = (1.0 - k.v_minus * r) / (1.0 - k.v_plus * r);
    let closed = -2.0 * ((2.0 * SQRT_3 + SQRT_7) / 5.0).atan();
    Ok(Outcome::pair(w.arg(), closed)
        .with_extra("ln|w|", w.norm().ln().abs())
        .with_extra("arg w vs 2omega+", (w.arg() - 2.0 * k.omega_plus.raw()).abs()))
}

fn p1_3_12(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(integral_I1(1, tol / 10.0)?.value, i1_clausen_form(tol / 10.0)?.value))
}

fn eq1_12b(_tol: f64) -> Result<Outcome> {
    let k = I7Constants::new();
    let op = k.omega_plus.raw();
    let mut items: Vec<(String, f64, f64)> = k
        .invariant_residuals()
        .into_iter()
        .map(|(label, r)| (label.to_string(), r, 0.0))
        .collect();
    items.push(("-omega+ = atan((2sqrt3 + sqrt7)/5)".into(), -op, ((2.0 * SQRT_3 + SQRT_7) / 5.0).atan()));
    items.push(("2omega+ = theta7 - 4pi/3".into(), 2.0 * op, 2.0 * SQRT_7.atan() - 4.0 * PI / 3.0));
    Ok(Outcome::worst(items))
}

fn eq3_8(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for (n, x) in [(0u32, 1.0f64), (1, 0.5), (2, 2.0), (3, 1.0), (4, 3.0), (2, -0.5)] {
        let f = move |t: f64| t.powi(n as i32) * (-t).exp();
        let q = quad(f, x, f64::INFINITY, &[], tol / 100.0)?;
        items.push((format!("n = {n}, x = {x}"), incomplete_gamma_upper_int(n, x)?, q));
    }
    Ok(Outcome::worst(items))
}

fn conj_l7(tol: f64) -> Result<Outcome> {
    Ok(Outcome::pair(integral_I7(tol / 10.0)?.value, l_minus7_series(tol / 10.0)?.value))
}

fn eq4_1(_tol: f64) -> Result<Outcome> {
    let k = I7Constants::new();
    let tp = k.theta_plus.raw();
    let t7 = k.theta7.raw();
    let lhs = 2.0 * cl2v(2.0 * tp)? - 3.0 * cl2v(2.0 * tp - t7)? - cl2v(3.0 * t7 - 2.0 * tp)? + 6.0 * cl2v(PI + t7)?;
    Ok(Outcome::pair(lhs, 0.0))
}

fn eq4_3(tol: f64) -> Result<Outcome> {
    let t = tol / 100.0;
    let mut items = Vec::new();
    for q in [2u32, 3, 4] {
        let lhs = cl_sin(q, 2.0 * PI / 7.0, t)?.value + cl_sin(q, 4.0 * PI / 7.0, t)?.value
            - cl_sin(q, 6.0 * PI / 7.0, t)?.value;
        let mut z = 0.0;
        for (i, chi) in CHI7.iter().enumerate() {
            z += chi * hurwitz_zeta(f64::from(q), (i + 1) as f64 / 7.0, t)?.value;
        }
        let rhs = SQRT_7 / 2.0 * 7f64.powi(-(q as i32)) * z;
        items.push((format!("q = {q}"), lhs, rhs));
        if q == 2 {
            items.push(("q = 2 vs L_-7(2)".into(), lhs, SQRT_7 / 2.0 * l_minus7_trigamma()?.value));
        }
    }
    Ok(Outcome::worst(items))
}

const A_GRID: [f64; 4] = [0.1, 0.5, 1.0, 2.0];
const B_GRID: [f64; 5] = [-0.9, -0.5, 0.0, 0.25, 0.9];

fn iab_quad(a: f64, b: f64, tol: f64) -> Result<f64> {
    let f = move |y: f64| y.ln() / (y * y + 2.0 * b * y + 1.0);
    quad(f, a, f64::INFINITY, &[], tol)
}

fn grid(tol: f64, form: fn(f64, f64, f64) -> Result<crate::EvalResult>) -> Result<Outcome> {
    let mut items = Vec::new();
    for a in A_GRID {
        for b in B_GRID {
            let q = iab_quad(a, b, tol / 10.0)?;
            items.push((format!("a = {a}, b = {b}"), q, form(a, b, tol / 10.0)?.value));
        }
    }
    Ok(Outcome::worst(items))
}

fn p2(tol: f64) -> Result<Outcome> {
    grid(tol, iab_omega_form)
}

fn p2_4_7(tol: f64) -> Result<Outcome> {
    grid(tol, iab_theta_form)
}

fn c2(_tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for a in A_GRID.into_iter().chain([0.0, 5.0]) {
        for b in B_GRID {
            // Both forms carry the same ½(1 − b²)^{−½} prefactor; compare the brackets.
            let s = 2.0 * (1.0 - b * b).sqrt();
            let o = iab_omega_form(a, b, 1e-15)?.value * s;
            let t = iab_theta_form(a, b, 1e-15)?.value * s;
            items.push((format!("a = {a}, b = {b}"), o, t));
        }
    }
    Ok(Outcome::worst(items))
}

fn c3(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for (c, t) in [(1.0, PI / 3.0), (2.0, PI / 2.0), (std::f64::consts::E, 0.1), (0.5, 2.5), (3.0, 1.0)] {
        let r = corollary3(c, t, tol / 10.0)?;
        items.push((format!("c = {c}, t = {t}"), r.quadrature.value, r.closed.value));
    }
    Ok(Outcome::worst(items))
}

fn p2_i1b(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for b in [-0.6f64, -0.3, 0.0, 0.3, 0.7] {
        let rhs = cl2v((-b).acos())? / (1.0 - b * b).sqrt();
        items.push((format!("b = {b}"), iab_quad(1.0, b, tol / 10.0)?, rhs));
    }
    Ok(Outcome::worst(items))
}

fn p2_i0b(tol: f64) -> Result<Outcome> {
    let mut items = Vec::new();
    for b in [-0.5f64, 0.0, 0.5, 0.9] {
        let f = move |y: f64| y.ln() / (y * y + 2.0 * b * y + 1.0);
        items.push((format!("b = {b}"), quad(f, 0.0, f64::INFINITY, &[0.0], tol / 10.0)?, 0.0));
    }
    Ok(Outcome::worst(items))
}
