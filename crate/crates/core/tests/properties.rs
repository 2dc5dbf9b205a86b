//! Property tests for the special functions, the quadrature engine and
//! digit extraction.

use clausen::bbp;
use clausen::quad::QuadProblem;
use clausen::specfun::{
    cl2, cl2_rational, hurwitz_zeta, im_li2_polar, incomplete_gamma_upper_int, trigamma, PolarPoint, RationalAngle,
};
use proptest::prelude::*;
use std::f64::consts::PI;

const TOL: f64 = 1e-15;

fn cl(x: f64) -> f64 {
    cl2(x, TOL).unwrap().value
}

fn tg(x: f64) -> f64 {
    trigamma(x).unwrap().value
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

proptest! {
    #[test]
    fn cl2_is_odd(t in 1e-6..PI) {
        prop_assert!((cl(-t) + cl(t)).abs() < 1e-12);
    }

    #[test]
    fn cl2_is_periodic(t in -10.0..10.0f64) {
        // Stay away from the logarithmic slope at multiples of 2π.
        let d = (t / (2.0 * PI)).round() * 2.0 * PI - t;
        prop_assume!(d.abs() > 1e-3);
        prop_assert!((cl(t + 2.0 * PI) - cl(t)).abs() < 1e-12);
    }

    #[test]
    fn cl2_duplication(t in 1e-4..(PI - 1e-4)) {
        prop_assert!((0.5 * cl(2.0 * t) - cl(t) + cl(PI - t)).abs() < 1e-11);
    }

    #[test]
    fn hurwitz_shift(s in prop::sample::select(vec![2.0, 3.0, 4.0]), a in 0.05..10.0f64) {
        let z0 = hurwitz_zeta(s, a, 1e-16).unwrap().value;
        let z1 = hurwitz_zeta(s, a + 1.0, 1e-16).unwrap().value;
        prop_assert!(rel(z0 - z1, a.powf(-s)) < 1e-12);
    }

    #[test]
    fn trigamma_reflection(x in 0.01..0.99f64) {
        let s = (PI * x).sin();
        prop_assert!(rel(tg(1.0 - x) + tg(x), PI * PI / (s * s)) < 1e-12);
    }

    #[test]
    fn trigamma_duplication(x in 0.05..20.0f64) {
        prop_assert!(rel(2.0 * tg(2.0 * x), 0.5 * (tg(x) + tg(x + 0.5))) < 1e-10);
    }

    #[test]
    fn trigamma_multiplication(m in 2u32..=7, x in 0.05..5.0f64) {
        let mf = f64::from(m);
        let s: f64 = (0..m).map(|k| tg(x + f64::from(k) / mf)).sum();
        prop_assert!(rel(tg(mf * x), s / (mf * mf)) < 1e-10);
    }

    #[test]
    fn incomplete_gamma_recurrence(n in 1u32..12, x in -2.0..25.0f64) {
        let lhs = incomplete_gamma_upper_int(n, x).unwrap();
        let rhs = f64::from(n) * incomplete_gamma_upper_int(n - 1, x).unwrap() + x.powi(n as i32) * (-x).exp();
        prop_assert!(rel(lhs, rhs) < 1e-13, "{lhs} vs {rhs}");
    }

    #[test]
    fn quad_split_at_interior_singularity(c in 0.1..0.9f64) {
        let f = move |x: f64| (x - c).abs().ln();
        let whole = QuadProblem::new(f, 0.0, 1.0).singular_at(c).tol(1e-12).integrate().unwrap();
        let left = QuadProblem::new(f, 0.0, c).singular_at(c).tol(1e-12).integrate().unwrap();
        let right = QuadProblem::new(f, c, 1.0).singular_at(c).tol(1e-12).integrate().unwrap();
        let gap = (whole.value - left.value - right.value).abs();
        prop_assert!(gap <= whole.err_bound + left.err_bound + right.err_bound + 1e-15);
        let exact = c * c.ln() + (1.0 - c) * (1.0 - c).ln() - 1.0;
        prop_assert!((whole.value - exact).abs() < 1e-11);
    }

    #[test]
    fn quad_compactification_matches_truncation(a in 0.0..5.0f64, which in 0usize..3) {
        let f = move |x: f64| match which {
            0 => x * x * (-x).exp(),
            1 => x.ln_1p() * (-x).exp(),
            _ => (-x).exp() / (1.0 + x),
        };
        let inf = QuadProblem::new(f, a, f64::INFINITY).tol(1e-12).integrate().unwrap().value;
        let cut = a + 60.0;
        let finite = QuadProblem::new(f, a, cut).tol(1e-12).integrate().unwrap().value;
        // Each integrand is at most (1 + x)² e^{−x}; its tail past `cut` is below (cut + 3)² e^{−cut}.
        let tail = (cut + 3.0).powi(2) * (-cut).exp();
        prop_assert!((inf - finite).abs() < 1e-10 + tail);
    }

    #[test]
    fn digit_windows_overlap(p in 0u64..5000, c in 2usize..=8) {
        let f = bbp::formula("pi-degree1").unwrap();
        let (Ok(long), Ok(short)) = (bbp::extract_hex_digits(&f, p, c), bbp::extract_hex_digits(&f, p + 1, c - 1)) else {
            // A precision abort is a refusal, not a wrong digit.
            return Ok(());
        };
        prop_assert_eq!(&long[1..], short.as_str());
    }
}

#[test]
fn cl2_duplication_grid() {
    for i in 1..=100 {
        let t = PI * f64::from(i) / 101.0;
        assert!((0.5 * cl(2.0 * t) - cl(t) + cl(PI - t)).abs() < 1e-11, "theta = {t}");
    }
}

#[test]
fn trigamma_duplication_grid() {
    for i in 1..=30 {
        let x = f64::from(i) / 10.0;
        assert!(rel(2.0 * tg(2.0 * x), 0.5 * (tg(x) + tg(x + 0.5))) < 1e-10, "x = {x}");
    }
}

#[test]
fn trigamma_multiplication_grid() {
    for m in 2..=7u32 {
        let mf = f64::from(m);
        for j in 1..=3 * m {
            let x = f64::from(j) / mf;
            let s: f64 = (0..m).map(|k| tg(x + f64::from(k) / mf)).sum();
            assert!(rel(tg(mf * x), s / (mf * mf)) < 1e-10, "m = {m}, x = {x}");
        }
    }
    // m = 7 at x = 1/7: the seven values ψ'(k/7) sum to 49 ζ(2).
    let s: f64 = (1..=7).map(|k| tg(f64::from(k) / 7.0)).sum();
    assert!(rel(s, 49.0 * PI * PI / 6.0) < 1e-12);
}

#[test]
fn cl2_rational_agrees_everywhere() {
    for q in [3i64, 5, 7, 9] {
        for p in (-2 * q..=2 * q).filter(|p| p % 2 == 0) {
            let angle = RationalAngle::new(p, q).unwrap();
            // Only reduced fractions with odd denominator are in the domain.
            if angle.q() != q {
                continue;
            }
            let v = cl2_rational(angle, 1e-14).unwrap().value;
            let d = cl(p as f64 * PI / q as f64);
            assert!((v - d).abs() < 1e-11, "{p}/{q}: {v} vs {d}");
        }
    }
}

#[test]
fn im_li2_polar_matches_direct_series() {
    for i in 1..=9 {
        let r = f64::from(i) / 10.0;
        for j in -6..=6 {
            let t = f64::from(j) * 0.5;
            let got = im_li2_polar(PolarPoint::new(r, t).unwrap(), 1e-14).unwrap().value;
            // Σ rᵏ sin(kθ)/k² until rᵏ/k² is negligible.
            let mut direct = 0.0;
            let mut rk = 1.0;
            for k in 1..2000 {
                rk *= r;
                let kf = f64::from(k);
                direct += rk * (kf * t).sin() / (kf * kf);
                if rk < 1e-18 {
                    break;
                }
            }
            assert!((got - direct).abs() < 1e-10, "r = {r}, theta = {t}");
        }
    }
}

#[test]
fn quad_refinement_is_monotone() {
    type Case = (fn(f64) -> f64, f64, f64, Option<f64>, f64);
    let corpus: [Case; 5] = [
        (|x| x.ln(), 0.0, 1.0, Some(0.0), -1.0),
        (|x| 1.0 / x.sqrt(), 0.0, 1.0, Some(0.0), 2.0),
        (|x| (-x).exp(), 0.0, f64::INFINITY, None, 1.0),
        (|x| 1.0 / (1.0 + x * x), 0.0, f64::INFINITY, None, PI / 2.0),
        (|x| x.ln() * (1.0 - x).ln(), 0.0, 1.0, Some(0.0), 2.0 - PI * PI / 6.0),
    ];
    for (i, (f, a, b, sing, exact)) in corpus.into_iter().enumerate() {
        let err_at = |tol: f64| {
            let mut p = QuadProblem::new(f, a, b).tol(tol);
            if let Some(s) = sing {
                p = p.singular_at(s);
            }
            if i == 4 {
                p = p.singular_at(1.0);
            }
            (p.integrate().unwrap().value - exact).abs()
        };
        let mut prev = err_at(1e-4);
        let mut tol = 1e-4;
        while tol > 1e-12 {
            tol /= 2.0;
            let e = err_at(tol);
            // A few ulps of slack: once at rounding level the error is noise.
            assert!(e <= prev + 8.0 * f64::EPSILON, "case {i}, tol {tol}: {e} > {prev}");
            prev = prev.min(e);
        }
    }
}
