use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A computed real value with an estimated absolute error bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    /// Estimated absolute error, finite and nonnegative.
    pub err_bound: f64,
    /// Terms summed or integrand evaluations used.
    pub effort: usize,
    pub method: String,
}

impl EvalResult {
    pub fn new(value: f64, err_bound: f64, effort: usize, method: impl Into<String>) -> Self {
        debug_assert!(value.is_finite(), "non-finite value {value}");
        debug_assert!(err_bound.is_finite() && err_bound >= 0.0);
        Self {
            value,
            err_bound,
            effort,
            method: method.into(),
        }
    }

    /// A value known to rounding, e.g. a closed form.
    pub fn exact(value: f64, method: impl Into<String>) -> Self {
        Self::new(value, 0.0, 0, method)
    }

    pub(crate) fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            err_bound: self.err_bound * factor.abs(),
            ..self
        }
    }
}

/// Complex counterpart of [`EvalResult`]; `err_bound` bounds the modulus of
/// the error.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexEval {
    pub value: Complex64,
    pub err_bound: f64,
    pub effort: usize,
    pub method: String,
}

impl ComplexEval {
    pub fn new(value: Complex64, err_bound: f64, effort: usize, method: impl Into<String>) -> Self {
        Self {
            value,
            err_bound,
            effort,
            method: method.into(),
        }
    }

    pub fn re(&self) -> EvalResult {
        EvalResult::new(self.value.re, self.err_bound, self.effort, self.method.clone())
    }

    pub fn im(&self) -> EvalResult {
        EvalResult::new(self.value.im, self.err_bound, self.effort, self.method.clone())
    }
}
