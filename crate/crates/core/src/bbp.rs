//! Base-16, modulus-8 BBP-type sums.
//!
//! A formula is S = Σ_{j≥0} 16^{−j} Σ_{k=1}^{8} a_k/(8j+k)^s together with a
//! linear identity `scale·S + affine = rhs`, where `affine` and `rhs` are
//! rational combinations of known constants. Digit extraction works on the
//! pure sum S only.

use crate::constants::ConstantId;
use crate::specfun::{check_tol, rounding_floor};
use crate::{Error, EvalResult, Result};
use num_rational::Ratio;

/// Rational coefficient type used by formula descriptors.
pub type Rational = Ratio<i64>;

/// Base-16, modulus-8 BBP-type formula descriptor.
#[derive(Debug, Clone, PartialEq)]
pub struct BbpFormula {
    pub id: &'static str,
    pub base: u32,
    pub modulus: u32,
    pub degree: u32,
    /// a₁ … a₈.
    pub coeffs: [i64; 8],
    pub scale: Rational,
    /// Constant terms added to `scale·S`.
    pub affine: Vec<(ConstantId, Rational)>,
    /// The value `scale·S + affine` is claimed to equal.
    pub rhs: Vec<(ConstantId, Rational)>,
}

const CATALAN_COEFFS: [i64; 8] = [4, 0, 0, -2, -1, -1, 0, 0];

/// Ids accepted by [`formula`].
pub const REGISTRY: [&str; 4] = ["eq2.35-sum", "eq2.37-sum", "pi-degree1", "zero"];

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Look up a registered formula by id.
pub fn formula(id: &str) -> Result<BbpFormula> {
    use ConstantId::*;
    let f = match id {
        "eq2.35-sum" => BbpFormula {
            id: "eq2.35-sum",
            base: 16,
            modulus: 8,
            degree: 2,
            coeffs: CATALAN_COEFFS,
            scale: rat(1, 4),
            affine: vec![(PiSquared, rat(-1, 32)), (PiLn2, rat(1, 8))],
            rhs: vec![(Catalan, rat(1, 1))],
        },
        "eq2.37-sum" => BbpFormula {
            id: "eq2.37-sum",
            base: 16,
            modulus: 8,
            degree: 3,
            coeffs: CATALAN_COEFFS,
            scale: rat(8, 1),
            affine: vec![],
            rhs: vec![
                (PiSquaredLn2, rat(-1, 2)),
                (Zeta3, rat(14, 1)),
                (ImLi3OnePlusIOver2, rat(32, 1)),
            ],
        },
        "pi-degree1" => BbpFormula {
            id: "pi-degree1",
            base: 16,
            modulus: 8,
            degree: 1,
            coeffs: CATALAN_COEFFS,
            scale: rat(1, 1),
            affine: vec![],
            rhs: vec![(Pi, rat(1, 1))],
        },
        "zero" => BbpFormula {
            id: "zero",
            base: 16,
            modulus: 8,
            degree: 1,
            coeffs: [0; 8],
            scale: rat(1, 1),
            affine: vec![],
            rhs: vec![],
        },
        _ => return Err(Error::UnknownFormula(id.to_string())),
    };
    Ok(f)
}

/// Σ_{j≥0} 16^{−j}/(8j+k)^degree as a formula with a single unit
/// coefficient at residue `k` ∈ 1..=8.
pub fn monomial(degree: u32, k: usize) -> Result<BbpFormula> {
    if !(1..=8).contains(&k) || degree == 0 {
        return Err(crate::error::domain(format!(
            "monomial needs k in 1..=8 and degree >= 1, got k = {k}, degree = {degree}"
        )));
    }
    let mut coeffs = [0; 8];
    coeffs[k - 1] = 1;
    Ok(BbpFormula {
        id: "monomial",
        base: 16,
        modulus: 8,
        degree,
        coeffs,
        scale: rat(1, 1),
        affine: vec![],
        rhs: vec![],
    })
}

fn ratio_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn combination(terms: &[(ConstantId, Rational)]) -> Result<f64> {
    terms
        .iter()
        .map(|&(c, r)| Ok(ratio_f64(r) * c.value()?))
        .sum()
}

impl BbpFormula {
    /// `scale·S + affine`, the side of the identity carrying the sum.
    pub fn lhs(&self, tol: f64) -> Result<EvalResult> {
        let s = ratio_f64(self.scale);
        let sum = eval_bbp_sum(self, tol / s.abs().max(1.0))?;
        let v = s * sum.value + combination(&self.affine)?;
        Ok(EvalResult::new(
            v,
            s.abs() * sum.err_bound + rounding_floor(v),
            sum.effort,
            "bbp-sum+affine",
        ))
    }

    /// The closed-form side of the identity.
    pub fn rhs_value(&self) -> Result<f64> {
        combination(&self.rhs)
    }

    fn validate(&self) -> Result<()> {
        if self.base != 16 || self.modulus != 8 || self.degree == 0 {
            return Err(crate::error::domain(format!(
                "unsupported formula shape: base {}, modulus {}, degree {}",
                self.base, self.modulus, self.degree
            )));
        }
        Ok(())
    }
}

/// Σ_{j≥0} 16^{−j} Σ_k a_k/(8j+k)^s with a geometric tail bound; affine
/// terms are not added.
pub fn eval_bbp_sum(f: &BbpFormula, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    f.validate()?;
    let s = f.degree as i32;
    let amax: f64 = f.coeffs.iter().map(|a| a.unsigned_abs() as f64).sum();
    let mut sum = 0.0;
    let mut w = 1.0;
    for j in 0..400usize {
        let base = 8.0 * j as f64;
        let inner: f64 = f
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(k, &a)| a as f64 / (base + k as f64 + 1.0).powi(s))
            .sum();
        sum += w * inner;
        w /= 16.0;
        // Every later block is at most amax·w/(8j+9)^s in size.
        let tail = amax * w / (base + 9.0).powi(s) * 16.0 / 15.0;
        if tail <= tol.max(rounding_floor(sum) / 8.0) {
            let err = tail + rounding_floor(sum);
            return Ok(EvalResult::new(sum, err, j + 1, "bbp-direct"));
        }
    }
    Err(Error::NonConvergence {
        what: "bbp sum",
        achieved: f64::NAN,
        tol,
        effort: 400,
    })
}

/// Largest hex-digit count per extraction.
pub const MAX_DIGITS: usize = 16;

/// Terms beyond the position summed for the tail; 16^{−40} is below 2^{−128}.
const TAIL_TERMS: u64 = 40;

fn pow_mod_16(mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut base = 16u128 % m128;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// floor(r·2¹²⁸/m) for r < m, by two 64-bit long-division steps.
fn frac_fixed(r: u64, m: u64) -> u128 {
    let m = m as u128;
    let n1 = (r as u128) << 64;
    let q1 = n1 / m;
    let n2 = (n1 % m) << 64;
    let q2 = n2 / m;
    (q1 << 64) | q2
}

/// Hex digits of frac(16^position · S), with S the pure sum of `f`.
///
/// The sum is accumulated modulo 1 in 128-bit fixed point. Each term
/// contributes at most one unit of truncation error, so the accumulated
/// error stays far below 2⁻⁸⁴. If the bits after the last requested digit
/// lie within 2⁻²⁰ of a digit boundary, extraction aborts.
pub fn extract_hex_digits(f: &BbpFormula, position: u64, count: usize) -> Result<String> {
    f.validate()?;
    if count == 0 || count > MAX_DIGITS {
        return Err(crate::error::domain(format!(
            "digit count {count} outside 1..={MAX_DIGITS}"
        )));
    }
    if f.coeffs.iter().all(|&a| a == 0) {
        return Ok("0".repeat(count));
    }
    let s = f.degree;
    let mut acc: u128 = 0;
    let mut terms: u64 = 0;
    let mut add = |a: i64, frac: u128| {
        let t = frac.wrapping_mul(a.unsigned_abs() as u128);
        acc = if a < 0 { acc.wrapping_sub(t) } else { acc.wrapping_add(t) };
    };
    let last = position.checked_add(TAIL_TERMS).ok_or_else(|| {
        Error::PrecisionBudget(format!("position {position} too large"))
    })?;
    for j in 0..=last {
        for (k, &a) in f.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let d = 8 * j + k as u64 + 1;
            let m = d.checked_pow(s).ok_or_else(|| {
                Error::PrecisionBudget(format!(
                    "denominator ({d})^{s} exceeds 64 bits at position {position}"
                ))
            })?;
            terms += 1;
            if j <= position {
                let r = pow_mod_16(position - j, m);
                add(a, frac_fixed(r, m));
            } else {
                let shift = 4 * (j - position) as u32;
                if shift < 128 {
                    // 1/m in fixed point (m ≥ 9 here), divided by 16^(j−position).
                    add(a, frac_fixed(1, m) >> shift);
                }
            }
        }
    }
    let bits = 4 * count as u32;
    let rest_bits = 128 - bits;
    let rest = if rest_bits == 128 { acc } else { acc & ((1u128 << rest_bits) - 1) };
    let unit: u128 = if rest_bits == 128 { u128::MAX } else { 1u128 << rest_bits };
    let guard = unit >> 20;
    let slack = terms as u128 * 4 + 16;
    if guard <= slack || rest < guard || rest > unit - guard {
        return Err(Error::PrecisionBudget(format!(
            "carry ambiguity after digit {count} at position {position}"
        )));
    }
    let digits = acc >> rest_bits;
    Ok(format!("{:0width$X}", digits, width = count))
}

/// The double-binomial sums for Re and Im Li₃((1+i)/2), truncated at
/// n = `n_max`.
///
/// Re: Σₙ Σₘ [C(n,4m) − C(n,4m+2)]/(2ⁿn³); Im: Σₙ Σₘ [C(n,4m+1) − C(n,4m+3)]/(2ⁿn³).
pub fn li3_binomial_partial(n_max: usize) -> (f64, f64) {
    // row[k] = C(n,k)/2ⁿ, built by halved Pascal steps.
    let mut row = vec![1.0f64];
    let (mut re, mut im) = (0.0, 0.0);
    for n in 1..=n_max {
        let mut next = vec![0.0; n + 1];
        for k in 0..=n {
            let left = if k > 0 { row[k - 1] } else { 0.0 };
            let right = if k < n { row[k] } else { 0.0 };
            next[k] = 0.5 * (left + right);
        }
        row = next;
        let (mut r, mut i) = (0.0, 0.0);
        for (k, &c) in row.iter().enumerate() {
            match k % 4 {
                0 => r += c,
                1 => i += c,
                2 => r -= c,
                _ => i -= c,
            }
        }
        let n3 = (n as f64).powi(3);
        re += r / n3;
        im += i / n3;
    }
    (re, im)
}

/// Both double-binomial sums with a tail bound ≤ `tol`.
///
/// The inner sums are Re and Im of (1+i)ⁿ, so the n-th term is at most
/// 2^{−n/2}/n³.
pub fn li3_binomial_sums(tol: f64) -> Result<(EvalResult, EvalResult)> {
    check_tol(tol)?;
    let q = std::f64::consts::FRAC_1_SQRT_2;
    let mut n = 1usize;
    loop {
        let tail = q.powi(n as i32 + 1) / ((n + 1) as f64).powi(3) / (1.0 - q);
        if tail <= tol.max(1e-17) {
            break;
        }
        n += 1;
        if n > 2000 {
            return Err(Error::NonConvergence {
                what: "li3 binomial sums",
                achieved: tail,
                tol,
                effort: n,
            });
        }
    }
    let tail = q.powi(n as i32 + 1) / ((n + 1) as f64).powi(3) / (1.0 - q);
    let (re, im) = li3_binomial_partial(n);
    let err = |v: f64| tail + rounding_floor(v) + n as f64 * f64::EPSILON;
    Ok((
        EvalResult::new(re, err(re), n, "binomial-double-sum"),
        EvalResult::new(im, err(im), n, "binomial-double-sum"),
    ))
}
