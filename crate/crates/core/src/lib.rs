//! Modified Bessel and Struve functions, exponentially weighted Bessel
//! integrals, and numerical verification of inequalities between them.
//!
//! The crate is organised in layers:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`specfun`] | Γ, I_ν, K_ν, the modified Struve function L_ν, ratios |
//! | [`integrals`] | ∫₀ˣ e^{βt} t^p I_ν(t) dt, ∫ₓ^∞ e^{βt} t^p K_ν(t) dt and closed forms |
//! | [`registry`] | declarative inequality cases, margins, grid verification, sharpness probes |
//! | [`sharp`] | infimum searches for the convex-combination constants a_ν, b_ν |
//! | [`tables`] | relative-error tables for the Struve–Bessel combination F_ν |
//! | [`report`] | CSV / JSON serialisation |
//!
//! Every evaluator returns an [`EvalResult`] holding an extended-range
//! [`ScaledReal`] so that e^{x}-growing and e^{-x}-decaying factors can be
//! combined without overflow.
//!
//! ```
//! use bessel_bounds::specfun::{bessel_i, bessel_k};
//!
//! let i = bessel_i(0.5, 1.0, false).unwrap().to_f64();
//! let k = bessel_k(0.5, 1.0, false).unwrap().to_f64();
//! assert!((i - 0.937_674_888_245_488).abs() < 1e-14);
//! assert!((k - 0.461_068_504_447_894).abs() < 1e-14);
//! ```

// `!(x > a)` guards are deliberate: they reject NaN along with out-of-range
// values. Series and quadrature coefficients keep their published digits.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod error;
pub mod integrals;
pub mod quad;
pub mod registry;
pub mod report;
pub mod scaled;
pub mod sharp;
pub mod specfun;
pub mod tables;

use serde::{Deserialize, Serialize};

pub use error::{Error, Result};
pub use scaled::ScaledReal;

/// Default relative accuracy for special-function values flagged [`Status::Ok`].
pub const SPECFUN_RTOL: f64 = 1e-12;

/// Accuracy flag attached to every evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// The error estimate exceeds the routine's accuracy target.
    ReducedAccuracy,
}

/// A value together with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: ScaledReal,
    /// Absolute error estimate, in the same extended range as `value`.
    pub abs_err: ScaledReal,
    pub status: Status,
}

impl EvalResult {
    /// Builds a result, flagging it as reduced accuracy when the error
    /// estimate exceeds `rtol * |value| + 1e-300`.
    pub fn with_tol(value: ScaledReal, abs_err: ScaledReal, rtol: f64) -> Self {
        let abs_err = abs_err.abs();
        let budget = value.abs() * rtol + ScaledReal::from_f64(1e-300);
        let status = if abs_err <= budget { Status::Ok } else { Status::ReducedAccuracy };
        EvalResult { value, abs_err, status }
    }

    /// [`with_tol`](Self::with_tol) with the special-function target.
    pub fn new(value: ScaledReal, abs_err: ScaledReal) -> Self {
        Self::with_tol(value, abs_err, SPECFUN_RTOL)
    }

    /// Result with a relative error estimate.
    pub fn from_rel(value: ScaledReal, rel_err: f64) -> Self {
        Self::new(value, value.abs() * rel_err)
    }

    pub(crate) fn ok(value: ScaledReal, abs_err: f64) -> Self {
        Self::new(value, ScaledReal::from_f64(abs_err))
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// `abs_err / |value|`, or `abs_err` itself when the value is zero.
    pub fn rel_err(&self) -> f64 {
        if self.value.is_zero() {
            return self.abs_err.to_f64();
        }
        (self.abs_err / self.value.abs()).to_f64()
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    /// Multiplies by an exactly known factor.
    pub fn scale(self, f: ScaledReal) -> Self {
        EvalResult { value: self.value * f, abs_err: self.abs_err * f.abs(), status: self.status }
    }
}

/// Maps `f` over `xs`, in parallel when the `parallel` feature is on. The
/// output order always matches the input order.
pub(crate) fn par_map<T, U, F>(xs: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        xs.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        xs.iter().map(f).collect()
    }
}
