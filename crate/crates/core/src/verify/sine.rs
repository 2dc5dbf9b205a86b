//! Finite sine and cosecant identities.
//!
//! Each sine sum Σ ± sin(k x π / n) takes values in a small set. The sign
//! taken at each x was determined once by high-precision evaluation and is
//! frozen in [`SINE_SUMS`]; the checks assert that exact assignment.

use super::{csc2, proved, Check, Outcome, Tag, TOL_CLOSED};
use crate::constants::{PI, SQRT_7};
use crate::Result;

const T: &[Tag] = &[Tag::Sine];

pub(super) const CHECKS: &[Check] = &[
    proved("sine7", "sin(2x pi/7) + sin(4x pi/7) - sin(6x pi/7) = +-sqrt7/2 for x = 1..6, minus sign for x = 3, 5, 6", T, TOL_CLOSED, |_| sine_check("sine7")),
    proved("sine10", "sin(x pi/10) + sin(3x pi/10) + sin(7x pi/10) + sin(9x pi/10) in {+-sqrt5, 0} for x = 1..20", T, TOL_CLOSED, |_| sine_check("sine10")),
    proved("sine12", "sin(x pi/12) + sin(5x pi/12) + sin(7x pi/12) + sin(11x pi/12) in {+-sqrt6, 0} for x = 1..24", T, TOL_CLOSED, |_| sine_check("sine12")),
    proved("sine11", "sin(2x pi/11) - sin(4x pi/11) + sin(6x pi/11) + sin(8x pi/11) + sin(10x pi/11) in {+-sqrt11/2, 0} for x = 1..22", T, TOL_CLOSED, |_| sine_check("sine11")),
    proved("sine15", "sin(2x pi/15) + sin(4x pi/15) + sin(8x pi/15) - sin(14x pi/15) in {+-sqrt15/2, 0} for x = 1..15", T, TOL_CLOSED, |_| sine_check("sine15")),
    proved("sine5a", "sin(x pi/5) + sin(2x pi/5) + sin(3x pi/5) + sin(4x pi/5) in {+-sqrt(5 +- 2sqrt5), 0} for x = 1..10", T, TOL_CLOSED, |_| sine_check("sine5a")),
    proved("sine5b", "sin(x pi/5) - sin(2x pi/5) - sin(3x pi/5) + sin(4x pi/5) in {-+sqrt(5 -+ 2sqrt5), 0} for x = 1..10", T, TOL_CLOSED, |_| sine_check("sine5b")),
    proved("sine8a", "sin(x pi/8) + sin(3x pi/8) + sin(7x pi/8) in {+-sqrt(10 +- sqrt2)/2, 1/sqrt2, -1, 0} for x = 1..8, negated for x = 9..16", T, TOL_CLOSED, |_| sine_check("sine8a")),
    proved("sine8b", "sin(x pi/8) + sin(5x pi/8) + sin(7x pi/8) in {+-sqrt(10 +- sqrt2)/2, -1/sqrt2, 1, 0} for x = 1..8, negated for x = 9..16", T, TOL_CLOSED, |_| sine_check("sine8b")),
    proved("cheb7", "(x - sin(2pi/7))(x - sin(4pi/7))(x + sin(6pi/7)) = x^3 - (sqrt7/2)x^2 + sqrt7/8, its partner is x^3 + (sqrt7/2)x^2 - sqrt7/8, and p1 p2 = T7(x)/(64x)", T, 1e-13, cheb7),
    proved("csc7", "csc^2(pi/7) + csc^2(2pi/7) + csc^2(3pi/7) = 8", T, TOL_CLOSED, csc7),
    proved("csc14", "csc^2(pi/14) + csc^2(pi/7) + csc^2(3pi/14) + csc^2(2pi/7) + csc^2(5pi/14) + csc^2(3pi/7) = 32", T, TOL_CLOSED, csc14),
    proved("cscN", "sum_{j=1}^{[(n-1)/2]} csc^2(j pi/n) = (n^2-1)/6 - [1+(-1)^n]/4 for n = 3..20", T, TOL_CLOSED, csc_n),
];

/// Closed-form magnitudes appearing in the sine sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SineValue {
    One,
    /// 1/√2
    InvSqrt2,
    /// √7/2
    Sqrt7Half,
    Sqrt5,
    Sqrt6,
    /// √11/2
    Sqrt11Half,
    /// √15/2
    Sqrt15Half,
    /// √(5 + 2√5)
    A5,
    /// √(5 − 2√5)
    B5,
    /// √(10 + √2)/2
    C8,
    /// √(10 − √2)/2
    D8,
}

impl SineValue {
    pub fn value(self) -> f64 {
        use SineValue::*;
        let s5 = 5f64.sqrt();
        let s2 = std::f64::consts::SQRT_2;
        match self {
            One => 1.0,
            InvSqrt2 => std::f64::consts::FRAC_1_SQRT_2,
            Sqrt7Half => SQRT_7 / 2.0,
            Sqrt5 => s5,
            Sqrt6 => 6f64.sqrt(),
            Sqrt11Half => 11f64.sqrt() / 2.0,
            Sqrt15Half => 15f64.sqrt() / 2.0,
            A5 => (5.0 + 2.0 * s5).sqrt(),
            B5 => (5.0 - 2.0 * s5).sqrt(),
            C8 => (10.0 + s2).sqrt() / 2.0,
            D8 => (10.0 - s2).sqrt() / 2.0,
        }
    }
}

/// A signed value: sign ∈ {−1, 0, 1} times a magnitude (ignored for 0).
pub type Signed = (i8, SineValue);

/// Σ sign·sin(k x π / modulus) over `terms`, for x = 1..=expected.len().
#[derive(Debug, Clone, Copy)]
pub struct SineSum {
    pub id: &'static str,
    pub modulus: u32,
    /// (sign, k) pairs.
    pub terms: &'static [(i8, u32)],
    /// Frozen value for x = 1, 2, ….
    pub expected: &'static [Signed],
    /// For x ≤ printed_range the value lies in `printed_set`.
    pub printed_range: u32,
    pub printed_set: &'static [Signed],
}

impl SineSum {
    pub fn eval(&self, x: u32) -> f64 {
        let n = f64::from(self.modulus);
        self.terms
            .iter()
            .map(|&(s, k)| f64::from(s) * (f64::from(k * x) * PI / n).sin())
            .sum()
    }

    pub fn expected_value(&self, x: u32) -> f64 {
        let (s, v) = self.expected[x as usize - 1];
        f64::from(s) * v.value()
    }
}

use SineValue::{Sqrt11Half as S11H, Sqrt15Half as S15H, Sqrt5 as S5, Sqrt6 as S6, Sqrt7Half as S7H, A5, B5, C8, D8, InvSqrt2 as IR2, One as ONE};

pub const SINE_SUMS: [SineSum; 9] = [
    SineSum {
        id: "sine7",
        modulus: 7,
        terms: &[(1, 2), (1, 4), (-1, 6)],
        expected: &[(1, S7H), (1, S7H), (-1, S7H), (1, S7H), (-1, S7H), (-1, S7H)],
        printed_range: 6,
        printed_set: &[(1, S7H), (-1, S7H)],
    },
    SineSum {
        id: "sine10",
        modulus: 10,
        terms: &[(1, 1), (1, 3), (1, 7), (1, 9)],
        expected: &[(1, S5), (0, ONE), (1, S5), (0, ONE), (0, ONE), (0, ONE), (1, S5), (0, ONE), (1, S5), (0, ONE), (-1, S5), (0, ONE), (-1, S5), (0, ONE), (0, ONE), (0, ONE), (-1, S5), (0, ONE), (-1, S5), (0, ONE)],
        printed_range: 20,
        printed_set: &[(1, S5), (-1, S5), (0, ONE)],
    },
    SineSum {
        id: "sine12",
        modulus: 12,
        terms: &[(1, 1), (1, 5), (1, 7), (1, 11)],
        expected: &[(1, S6), (0, ONE), (0, ONE), (0, ONE), (1, S6), (0, ONE), (1, S6), (0, ONE), (0, ONE), (0, ONE), (1, S6), (0, ONE), (-1, S6), (0, ONE), (0, ONE), (0, ONE), (-1, S6), (0, ONE), (-1, S6), (0, ONE), (0, ONE), (0, ONE), (-1, S6), (0, ONE)],
        printed_range: 24,
        printed_set: &[(1, S6), (-1, S6), (0, ONE)],
    },
    SineSum {
        id: "sine11",
        modulus: 11,
        terms: &[(1, 2), (-1, 4), (1, 6), (1, 8), (1, 10)],
        expected: &[(1, S11H), (-1, S11H), (1, S11H), (1, S11H), (1, S11H), (-1, S11H), (-1, S11H), (-1, S11H), (1, S11H), (-1, S11H), (0, ONE), (1, S11H), (-1, S11H), (1, S11H), (1, S11H), (1, S11H), (-1, S11H), (-1, S11H), (-1, S11H), (1, S11H), (-1, S11H), (0, ONE)],
        printed_range: 22,
        printed_set: &[(1, S11H), (-1, S11H), (0, ONE)],
    },
    SineSum {
        id: "sine15",
        modulus: 15,
        terms: &[(1, 2), (1, 4), (1, 8), (-1, 14)],
        expected: &[(1, S15H), (1, S15H), (0, ONE), (1, S15H), (0, ONE), (0, ONE), (-1, S15H), (1, S15H), (0, ONE), (0, ONE), (-1, S15H), (0, ONE), (-1, S15H), (-1, S15H), (0, ONE)],
        printed_range: 15,
        printed_set: &[(1, S15H), (-1, S15H), (0, ONE)],
    },
    SineSum {
        id: "sine5a",
        modulus: 5,
        terms: &[(1, 1), (1, 2), (1, 3), (1, 4)],
        expected: &[(1, A5), (0, ONE), (1, B5), (0, ONE), (0, ONE), (0, ONE), (-1, B5), (0, ONE), (-1, A5), (0, ONE)],
        printed_range: 10,
        printed_set: &[(1, A5), (-1, A5), (1, B5), (-1, B5), (0, ONE)],
    },
    SineSum {
        id: "sine5b",
        modulus: 5,
        terms: &[(1, 1), (-1, 2), (-1, 3), (1, 4)],
        expected: &[(-1, B5), (0, ONE), (1, A5), (0, ONE), (0, ONE), (0, ONE), (-1, A5), (0, ONE), (1, B5), (0, ONE)],
        printed_range: 10,
        printed_set: &[(1, A5), (-1, A5), (1, B5), (-1, B5), (0, ONE)],
    },
    SineSum {
        id: "sine8a",
        modulus: 8,
        terms: &[(1, 1), (1, 3), (1, 7)],
        expected: &[(1, C8), (1, IR2), (1, D8), (-1, ONE), (1, D8), (1, IR2), (1, C8), (0, ONE), (-1, C8), (-1, IR2), (-1, D8), (1, ONE), (-1, D8), (-1, IR2), (-1, C8), (0, ONE)],
        printed_range: 8,
        printed_set: &[(1, C8), (-1, C8), (1, D8), (-1, D8), (1, IR2), (-1, ONE), (0, ONE)],
    },
    SineSum {
        id: "sine8b",
        modulus: 8,
        terms: &[(1, 1), (1, 5), (1, 7)],
        expected: &[(1, C8), (-1, IR2), (1, D8), (1, ONE), (1, D8), (-1, IR2), (1, C8), (0, ONE), (-1, C8), (1, IR2), (-1, D8), (-1, ONE), (-1, D8), (1, IR2), (-1, C8), (0, ONE)],
        printed_range: 8,
        printed_set: &[(1, C8), (-1, C8), (1, D8), (-1, D8), (-1, IR2), (1, ONE), (0, ONE)],
    },
];

fn sine_check(id: &str) -> Result<Outcome> {
    let s = SINE_SUMS.iter().find(|s| s.id == id).expect("sine sum registered");
    let items = (1..=s.expected.len() as u32).map(|x| (format!("x = {x}"), s.eval(x), s.expected_value(x)));
    Ok(Outcome::worst(items))
}

fn cheb7(_tol: f64) -> Result<Outcome> {
    let s2 = (2.0 * PI / 7.0).sin();
    let s4 = (4.0 * PI / 7.0).sin();
    let s6 = (6.0 * PI / 7.0).sin();
    let h = SQRT_7 / 2.0;
    let e = SQRT_7 / 8.0;
    // Monic cubic with roots r: x³ − e₁x² + e₂x − e₃.
    let sym = |r: [f64; 3]| {
        (
            r[0] + r[1] + r[2],
            r[0] * r[1] + r[0] * r[2] + r[1] * r[2],
            r[0] * r[1] * r[2],
        )
    };
    let r1 = [s2, s4, -s6];
    let r2 = [s6, -s2, -s4];
    let (a1, b1, c1) = sym(r1);
    let (a2, b2, c2) = sym(r2);
    let mut items = vec![
        ("p1 x^2 coefficient".to_string(), -a1, -h),
        ("p1 x coefficient".to_string(), b1, 0.0),
        ("p1 constant".to_string(), -c1, e),
        ("p2 x^2 coefficient".to_string(), -a2, h),
        ("p2 x coefficient".to_string(), b2, 0.0),
        ("p2 constant".to_string(), -c2, -e),
    ];
    let p = |r: [f64; 3], x: f64| (x - r[0]) * (x - r[1]) * (x - r[2]);
    for i in 0..10 {
        let x = -0.95 + 0.2 * i as f64 + 0.013;
        let x2 = x * x;
        // T₇(x)/(64x) = x⁶ − (7/4)x⁴ + (7/8)x² − 7/64.
        let t = ((x2 - 1.75) * x2 + 0.875) * x2 - 7.0 / 64.0;
        items.push((format!("p1 p2 at x = {x:.3}"), p(r1, x) * p(r2, x), t));
    }
    Ok(Outcome::worst(items))
}

fn csc_half_sum(n: u32) -> f64 {
    (1..=(n - 1) / 2).map(|j| csc2(f64::from(j) * PI / f64::from(n))).sum()
}

fn csc_closed(n: u32) -> f64 {
    let nf = f64::from(n);
    let even = if n % 2 == 0 { 2.0 } else { 0.0 };
    (nf * nf - 1.0) / 6.0 - even / 4.0
}

fn csc7(_tol: f64) -> Result<Outcome> {
    let lhs = csc2(PI / 7.0) + csc2(2.0 * PI / 7.0) + csc2(3.0 * PI / 7.0);
    Ok(Outcome::pair(lhs, 8.0))
}

fn csc14(_tol: f64) -> Result<Outcome> {
    let lhs = csc2(PI / 14.0)
        + csc2(PI / 7.0)
        + csc2(3.0 * PI / 14.0)
        + csc2(2.0 * PI / 7.0)
        + csc2(5.0 * PI / 14.0)
        + csc2(3.0 * PI / 7.0);
    Ok(Outcome::pair(lhs, 32.0))
}

fn csc_n(_tol: f64) -> Result<Outcome> {
    Ok(Outcome::worst((3..=20).map(|n| (format!("n = {n}"), csc_half_sum(n), csc_closed(n)))))
}
