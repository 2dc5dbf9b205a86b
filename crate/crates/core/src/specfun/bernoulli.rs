//! Bernoulli numbers and zeta values at integers.
#![allow(clippy::excessive_precision)]

/// B₀, B₂, …, B₄₀ as the nearest doubles to the exact rationals.
const B2N: [f64; 21] = [
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
];

/// Largest index `k` for which [`bernoulli`] is tabulated.
pub const MAX_BERNOULLI: usize = 40;

/// ζ(2), ζ(3), …, ζ(64).
const ZETA_INT: [f64; 63] = [
    1.644934066848226436472,
    1.2020569031595942854,
    1.082323233711138191516,
    1.036927755143369926331,
    1.017343061984449139715,
    1.00834927738192282684,
    1.004077356197944339379,
    1.002008392826082214418,
    1.000994575127818085337,
    1.000494188604119464559,
    1.000246086553308048299,
    1.000122713347578489147,
    1.000061248135058704829,
    1.000030588236307020494,
    1.000015282259408651872,
    1.000007637197637899762,
    1.00000381729326499984,
    1.000001908212716553939,
    1.000000953962033872796,
    1.000000476932986787806,
    1.000000238450502727733,
    1.000000119219925965311,
    1.000000059608189051259,
    1.000000029803503514652,
    1.000000014901554828365,
    1.000000007450711789835,
    1.000000003725334024788,
    1.000000001862659723513,
    1.00000000093132743242,
    1.000000000465662906503,
    1.000000000232831183368,
    1.000000000116415501727,
    1.000000000058207720879,
    1.000000000029103850445,
    1.000000000014551921891,
    1.000000000007275959835,
    1.000000000003637979547,
    1.00000000000181898965,
    1.000000000000909494784,
    1.000000000000454747378,
    1.000000000000227373685,
    1.000000000000113686841,
    1.00000000000005684342,
    1.00000000000002842171,
    1.000000000000014210855,
    1.000000000000007105427,
    1.000000000000003552714,
    1.000000000000001776357,
    1.000000000000000888178,
    1.000000000000000444089,
    1.000000000000000222045,
    1.000000000000000111022,
    1.000000000000000055511,
    1.000000000000000027756,
    1.000000000000000013878,
    1.000000000000000006939,
    1.000000000000000003469,
    1.000000000000000001735,
    1.000000000000000000867,
    1.000000000000000000434,
    1.000000000000000000217,
    1.000000000000000000108,
    1.000000000000000000054,
];

/// The Bernoulli number Bₖ with B₁ = −½, for k ≤ 40.
///
/// Panics for k > 40; callers bound their orders first.
pub fn bernoulli(k: usize) -> f64 {
    match k {
        0 => 1.0,
        1 => -0.5,
        k if k % 2 == 1 => 0.0,
        k => B2N[k / 2],
    }
}

/// B₂ⱼ for 0 ≤ j ≤ 20.
pub(crate) fn bernoulli_2j(j: usize) -> f64 {
    B2N[j]
}

/// ζ(s) for integer s ≥ 2.
pub fn zeta_int(s: u32) -> f64 {
    assert!(s >= 2, "zeta_int needs s >= 2");
    match ZETA_INT.get(s as usize - 2) {
        Some(&z) => z,
        // 2^-65 is below half an ulp of 1.0
        None => 1.0,
    }
}

/// The Bernoulli polynomial Bₙ(x) for n ≤ 40, with complex argument.
pub fn bernoulli_poly(n: usize, x: num_complex::Complex64) -> num_complex::Complex64 {
    assert!(n <= MAX_BERNOULLI);
    // Horner in x over Σ C(n,k) B_k x^{n−k}
    let mut acc = num_complex::Complex64::new(0.0, 0.0);
    let mut binom = 1.0f64;
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push(binom * bernoulli(k));
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    for c in coeffs {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::PI;
    use num_complex::Complex64;

    fn factorial(n: u32) -> f64 {
        (1..=n).map(f64::from).product()
    }

    #[test]
    fn even_zeta_from_bernoulli() {
        for j in 1..=20u32 {
            let z = (-1f64).powi(j as i32 + 1) * bernoulli(2 * j as usize) * (2.0 * PI).powi(2 * j as i32)
                / (2.0 * factorial(2 * j));
            let t = zeta_int(2 * j);
            assert!((z - t).abs() < 4e-15 * t, "j={j}: {z} vs {t}");
        }
    }

    #[test]
    fn zeta_table_vs_direct_sum() {
        for s in 8..=64u32 {
            let direct: f64 = (1..200).rev().map(|n| (n as f64).powi(-(s as i32))).sum();
            assert!((direct - zeta_int(s)).abs() < 4e-16, "s={s}");
        }
    }

    #[test]
    fn bernoulli_polynomial_values() {
        let half = Complex64::new(0.5, 0.0);
        // B_n(1/2) = (2^{1-n} - 1) B_n
        for n in [2usize, 4, 6, 10] {
            let want = (2f64.powi(1 - n as i32) - 1.0) * bernoulli(n);
            assert!((bernoulli_poly(n, half).re - want).abs() < 1e-14);
        }
        let x = Complex64::new(0.3, -0.2);
        let b2 = x * x - x + 1.0 / 6.0;
        assert!((bernoulli_poly(2, x) - b2).norm() < 1e-15);
        assert!((bernoulli_poly(1, x) - (x - 0.5)).norm() < 1e-15);
    }
}
