//! Special functions: Γ, modified Bessel functions I_ν and K_ν, and the
//! modified Struve function L_ν.
//!
//! All evaluators work internally with [`ScaledReal`](crate::ScaledReal)
//! values, so plain and exponentially scaled variants share one code path.

mod bessel;
mod gamma;
mod struve;

pub use bessel::{bessel_i, bessel_k, ratio_i, ratio_k, ORDER_MAX, ORDER_MIN, X_MAX};
pub use gamma::{gamma, ln_gamma, rgamma};
pub use struve::{struve_l, struve_l_minus_i, STRUVE_X_MAX};

pub(crate) use bessel::{check_order, i_ratio_cf, i_value, i_with_err, k_pair, k_value};
pub(crate) use gamma::gamma_scaled;
pub(crate) use struve::{l_with_err, m_with_err};
