//! Clausen-function and polylogarithm numerics for the dilogarithmic
//! integral I₇ and its companion constants.
//!
//! The crate is organised by subsystem:
//!
//! - [`specfun`]: Clausen functions, digamma/trigamma/polygamma, Hurwitz zeta,
//!   complex polylogarithms and a few small helpers.
//! - [`quad`]: adaptive quadrature with declared singular points and
//!   semi-infinite ranges.
//! - [`integrals`]: the I₇ family of integrals and the fixed constants that
//!   appear in their closed forms.
//! - [`bbp`]: base-16 BBP-type sums, hex digit extraction and the binomial
//!   sums for Li₃((1+i)/2).
//! - [`verify`]: the identity ledger; every check compares two independently
//!   computed sides.
//!
//! All floating-point work is in `f64`. Every evaluation that can fail to
//! converge returns an [`EvalResult`] carrying an absolute error estimate.

pub mod bbp;
pub mod constants;
mod error;
mod eval;
pub mod integrals;
pub mod quad;
pub mod series;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use eval::{ComplexEval, EvalResult};
