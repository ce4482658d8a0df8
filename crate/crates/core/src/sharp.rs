//! Numerical estimates of best constants.
//!
//! a_ν is the largest a ∈ [0, 1] with I_{ν+1} < (1−a) I_ν + a I_{ν+2} for all
//! x > 0, i.e. the infimum over x of
//!
//!   a(x) = (I_ν − I_{ν+1}) / (I_ν − I_{ν+2}) = x/(2(ν+1)) · (I_ν/I_{ν+1} − 1),
//!
//! where the second form follows from I_ν − I_{ν+2} = (2(ν+1)/x) I_{ν+1}.
//! Likewise b_ν is the infimum of
//!
//!   b(x) = (K_{ν+2} − K_{ν+1}) / (K_{ν+2} − K_ν) = x/(2(ν+1)) · (K_{ν+2}/K_{ν+1} − 1).
//!
//! Neither form subtracts nearly equal quantities at small x (both ratios
//! tend to 1 there). The subtraction of 1 loses about log10(x) digits as
//! x → ∞, which is harmless on the searched range.

use serde::{Serialize, Serializer};

use crate::error::{domain, Result};
use crate::integrals::int_lower_i;
use crate::scaled::ScaledReal;
use crate::specfun::{i_ratio_cf, i_value, k_pair, k_value};
use crate::{par_map, EvalResult};

const GRID_POINTS: usize = 200;
const GRID_X_MIN: f64 = 1e-3;
const GRID_X_MAX: f64 = 1e4;
const SUP_GRID_POINTS: usize = 120;

/// Label attached to every empirical supremum.
pub const EMPIRICAL_LABEL: &str = "empirical — not a proof";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstKind {
    A,
    B,
    EmpiricalSup,
}

/// Where an extremum is located.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Location {
    At(f64),
    /// Approached only as x → ∞.
    LimitInfinity,
}

impl Serialize for Location {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Location::At(x) => s.serialize_f64(*x),
            Location::LimitInfinity => s.serialize_str("limit x→∞"),
        }
    }
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::At(x) => write!(f, "{x}"),
            Location::LimitInfinity => f.write_str("limit x→∞"),
        }
    }
}

/// How an estimate was obtained.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchMeta {
    pub grid_points: usize,
    pub x_min: f64,
    pub x_max: f64,
    /// Best grid point and its value.
    pub grid_best_x: f64,
    pub grid_best: f64,
    /// x-interval searched by the golden-section refinement.
    pub refine_bracket: [f64; 2],
    pub refined_x: f64,
    pub refined: f64,
    /// Analytic x → ∞ limit, where known.
    pub asymptotic: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpConstantEstimate {
    pub kind: ConstKind,
    pub nu: f64,
    pub beta: Option<f64>,
    pub value: f64,
    /// [lo, hi] with lo ≤ value ≤ hi.
    pub bracket: [f64; 2],
    /// Minimiser for a/b, maximiser for empirical sups.
    pub argmin_x: Location,
    pub meta: SearchMeta,
    pub label: Option<&'static str>,
}

fn check_ratio_args(nu: f64, x: f64) -> Result<()> {
    if !(nu > -0.5 && nu <= 40.0) {
        return domain(format!("ratio requires -1/2 < nu <= 40, got {nu}"));
    }
    if !(x > 0.0 && x <= 1e5) {
        return domain(format!("ratio requires 0 < x <= 1e5, got {x}"));
    }
    Ok(())
}

/// Pointwise admissible a: (I_ν − I_{ν+1}) / (I_ν − I_{ν+2}).
pub fn a_ratio(nu: f64, x: f64) -> Result<EvalResult> {
    check_ratio_args(nu, x)?;
    let r = if x <= 1e3 { i_ratio_cf(nu, x) } else { (i_value(nu + 1.0, x) / i_value(nu, x)).to_f64() };
    let v = x / (2.0 * (nu + 1.0)) * ((1.0 - r) / r);
    // 1 − r carries the absolute error of r
    let rel = 8.0 * f64::EPSILON / (1.0 - r) + 4.0 * f64::EPSILON;
    Ok(EvalResult::with_tol(v.into(), (v.abs() * rel).into(), 1e-10))
}

/// Pointwise admissible b: (K_{ν+2} − K_{ν+1}) / (K_{ν+2} − K_ν).
pub fn b_ratio(nu: f64, x: f64) -> Result<EvalResult> {
    check_ratio_args(nu, x)?;
    let (k1, k2) = k_pair(nu + 1.0, x);
    let r = (k2 / k1).to_f64();
    let v = x / (2.0 * (nu + 1.0)) * (r - 1.0);
    let rel = 60.0 * f64::EPSILON * (3.0 + nu) * r / (r - 1.0);
    Ok(EvalResult::with_tol(v.into(), (v.abs() * rel).into(), 1e-10))
}

/// Golden-section minimisation of f(e^s) over s ∈ [ln a, ln b].
fn golden_min<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, iters: usize) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (a.ln(), b.ln());
    let mut c = hi - g * (hi - lo);
    let mut d = lo + g * (hi - lo);
    let mut fc = f(c.exp());
    let mut fd = f(d.exp());
    for _ in 0..iters {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c.exp());
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d.exp());
        }
    }
    if fc < fd {
        (c.exp(), fc)
    } else {
        (d.exp(), fd)
    }
}

fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let (la, lb) = (a.ln(), b.ln());
    (0..n).map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp()).collect()
}

/// Infimum over x of `ratio`, with the x → ∞ limit as a candidate.
fn estimate_inf<F>(kind: ConstKind, nu: f64, ratio: F, limit: f64, points: usize) -> SharpConstantEstimate
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let xs = log_grid(GRID_X_MIN, GRID_X_MAX, points);
    let vals = par_map(&xs, |&x| ratio(x));
    let (imin, &vmin) = vals.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).expect("non-empty grid");
    let a = xs[imin.saturating_sub(1)];
    let b = xs[(imin + 1).min(points - 1)];
    let (rx, rv) = golden_min(&ratio, a, b, 60);
    let (refined_x, refined) = if rv <= vmin { (rx, rv) } else { (xs[imin], vmin) };
    let value = refined.min(limit);
    let argmin_x = if refined - limit > -1e-6 { Location::LimitInfinity } else { Location::At(refined_x) };
    SharpConstantEstimate {
        kind,
        nu,
        beta: None,
        value,
        // hi: an attained value or the limit, so the infimum cannot exceed it;
        // lo allows for evaluation error in the ratios
        bracket: [value - 1e-8, value],
        argmin_x,
        meta: SearchMeta {
            grid_points: points,
            x_min: GRID_X_MIN,
            x_max: GRID_X_MAX,
            grid_best_x: xs[imin],
            grid_best: vmin,
            refine_bracket: [a, b],
            refined_x,
            refined,
            asymptotic: Some(limit),
        },
        label: None,
    }
}

fn check_estimate_nu(nu: f64) -> Result<()> {
    if !(nu > -0.5 && nu <= 20.0) {
        return domain(format!("estimates require -1/2 < nu <= 20, got {nu}"));
    }
    Ok(())
}

/// Estimate of a_ν = inf_x a(x). The x → ∞ limit (2ν+1)/(4ν+4) comes from
/// I_{ν+1}/I_ν = 1 − (2ν+1)/(2x) + O(x⁻²).
pub fn estimate_a(nu: f64) -> Result<SharpConstantEstimate> {
    estimate_a_with(nu, GRID_POINTS)
}

/// [`estimate_a`] on a coarse grid of `points` points.
pub fn estimate_a_with(nu: f64, points: usize) -> Result<SharpConstantEstimate> {
    check_estimate_nu(nu)?;
    let limit = (2.0 * nu + 1.0) / (4.0 * nu + 4.0);
    let f = move |x: f64| a_ratio(nu, x).map(|r| r.to_f64()).unwrap_or(f64::INFINITY);
    Ok(estimate_inf(ConstKind::A, nu, f, limit, points.max(3)))
}

/// Estimate of b_ν = inf_x b(x). The x → ∞ limit is (2ν+3)/(4ν+4).
pub fn estimate_b(nu: f64) -> Result<SharpConstantEstimate> {
    estimate_b_with(nu, GRID_POINTS)
}

/// [`estimate_b`] on a coarse grid of `points` points.
pub fn estimate_b_with(nu: f64, points: usize) -> Result<SharpConstantEstimate> {
    check_estimate_nu(nu)?;
    let limit = (2.0 * nu + 3.0) / (4.0 * nu + 4.0);
    let f = move |x: f64| b_ratio(nu, x).map(|r| r.to_f64()).unwrap_or(f64::INFINITY);
    Ok(estimate_inf(ConstKind::B, nu, f, limit, points.max(3)))
}

/// Expressions without a known uniform bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OpenExpr {
    /// ∫₀ˣ e^{βt} t^ν I_ν dt / (e^{βx} x^ν I_{ν+1}(x)), −1 < β < 0
    Open1,
    /// e^{−βx} K_{ν+1}(x) x^{1−ν} ∫₀ˣ e^{βt} t^ν I_ν dt, −1 < β < 0
    Open3,
}

impl std::str::FromStr for OpenExpr {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open1" => Ok(OpenExpr::Open1),
            "open3" => Ok(OpenExpr::Open3),
            _ => domain(format!("unknown expression `{s}` (expected open1 or open3)")),
        }
    }
}

fn open_value(expr: OpenExpr, nu: f64, beta: f64, x: f64) -> Result<ScaledReal> {
    let int = int_lower_i(nu, beta, nu, x)?.value;
    let v = match expr {
        OpenExpr::Open1 => int / i_value(nu + 1.0, x).mul_exp(beta * x + nu * x.ln()),
        OpenExpr::Open3 => int * k_value(nu + 1.0, x).mul_exp(-beta * x + (1.0 - nu) * x.ln()),
    };
    Ok(v)
}

/// Empirical supremum over x ∈ [1e-3, x_max] of an expression that no
/// registered theorem bounds. The result is labelled [`EMPIRICAL_LABEL`].
pub fn empirical_sup(expr: OpenExpr, nu: f64, beta: f64, x_max: f64) -> Result<SharpConstantEstimate> {
    if !(nu > -0.5 && nu <= 20.0) {
        return domain(format!("empirical_sup requires -1/2 < nu <= 20, got {nu}"));
    }
    if !(beta > -1.0 && beta < 0.0) {
        return domain(format!("empirical_sup requires -1 < beta < 0, got {beta}"));
    }
    if !(100.0..=1e3).contains(&x_max) {
        return domain(format!("empirical_sup requires 100 <= x_max <= 1000, got {x_max}"));
    }
    let x_min = GRID_X_MIN;
    let xs = log_grid(x_min, x_max, SUP_GRID_POINTS);
    let vals: Vec<f64> =
        par_map(&xs, |&x| open_value(expr, nu, beta, x).map(|v| v.to_f64())).into_iter().collect::<Result<_>>()?;
    let (imax, &vmax) = vals.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).expect("non-empty grid");
    let a = xs[imax.saturating_sub(1)];
    let b = xs[(imax + 1).min(xs.len() - 1)];
    let neg = |x: f64| open_value(expr, nu, beta, x).map(|v| -v.to_f64()).unwrap_or(f64::INFINITY);
    let (rx, rv) = golden_min(neg, a, b, 40);
    let (x_best, value) = if -rv >= vmax { (rx, -rv) } else { (xs[imax], vmax) };
    // each value carries the quadrature's 1e-9 relative accuracy
    let slack = value.abs() * 1e-9;
    Ok(SharpConstantEstimate {
        kind: ConstKind::EmpiricalSup,
        nu,
        beta: Some(beta),
        value,
        bracket: [value - slack, value + slack],
        argmin_x: Location::At(x_best),
        meta: SearchMeta {
            grid_points: xs.len(),
            x_min,
            x_max,
            grid_best_x: xs[imax],
            grid_best: vmax,
            refine_bracket: [a, b],
            refined_x: x_best,
            refined: value,
            asymptotic: None,
        },
        label: Some(EMPIRICAL_LABEL),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_tend_to_one_at_origin() {
        assert!((a_ratio(0.0, 1e-5).unwrap().to_f64() - 1.0).abs() < 1e-4);
        assert!((b_ratio(0.0, 1e-4).unwrap().to_f64() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn ratios_approach_their_limits() {
        assert!((a_ratio(0.0, 1e4).unwrap().to_f64() - 0.25).abs() < 1e-3);
        assert!((a_ratio(2.0, 1e4).unwrap().to_f64() - 5.0 / 12.0).abs() < 2e-3);
        assert!((b_ratio(0.0, 1e4).unwrap().to_f64() - 0.75).abs() < 5e-3);
    }

    #[test]
    fn golden_section_finds_minimum() {
        let (x, v) = golden_min(|x| (x.ln() - 1.0).powi(2), 0.1, 100.0, 80);
        assert!((x - 1f64.exp()).abs() < 1e-6 && v < 1e-12);
    }

    #[test]
    fn estimate_brackets_value() {
        let e = estimate_a(0.0).unwrap();
        assert!(e.bracket[0] <= e.value && e.value <= e.bracket[1]);
        assert!(e.bracket[1] - e.bracket[0] <= 1e-4);
        assert!(e.value < 1.0);
    }
}
