//! Special functions: Clausen functions, the gamma-function family, Hurwitz
//! zeta and complex polylogarithms.
//!
//! Every fallible evaluation takes an absolute tolerance. Tolerances below
//! the rounding floor of the result (a few ulps of its magnitude) are raised
//! to that floor rather than reported as failures.

mod angle;
pub mod bernoulli;
mod clausen;
mod gamma;
mod polylog;
mod zeta;

pub use angle::{Angle, PolarPoint, RationalAngle};
pub use clausen::{cl2, cl2_rational, cl_cos, cl_even, cl_odd, cl_sin};
pub use gamma::{digamma, harmonic, incomplete_gamma_upper_int, polygamma, trigamma};
pub use polylog::{im_li2_polar, polylog_complex};
pub use zeta::hurwitz_zeta;


/// Smallest error bound worth claiming for a value of this magnitude.
pub(crate) fn rounding_floor(v: f64) -> f64 {
    8.0 * f64::EPSILON * v.abs()
}

/// Truncation target below which further series terms cannot change the
/// rounded result.
pub(crate) fn trunc_floor(v: f64) -> f64 {
    0.25 * f64::EPSILON * v.abs()
}

pub(crate) fn check_tol(tol: f64) -> crate::Result<()> {
    if tol > 0.0 && !tol.is_nan() {
        Ok(())
    } else {
        Err(crate::error::domain(format!("tolerance must be positive, got {tol}")))
    }
}
