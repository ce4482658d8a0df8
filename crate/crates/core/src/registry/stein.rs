//! Products of a Bessel function with a weighted integral, and their
//! uniform bounds.
//!
//! | id  | expression |
//! |-----|------------|
//! | S1a | e^{−βx} K_{ν+1}(x) x^{−ν} ∫₀ˣ e^{βt} t^{ν+1} I_ν(t) dt |
//! | S1b | e^{−βx} I_{ν+1}(x) x^{−ν} ∫ₓ^∞ e^{βt} t^{ν+1} K_ν(t) dt |
//! | S2a | e^{−βx} K_{ν+1}(x) x^{1−ν} ∫₀ˣ e^{βt} t^ν I_ν(t) dt |
//! | S2b | e^{−βx} I_{ν+1}(x) x^{1−ν} ∫ₓ^∞ e^{βt} t^ν K_ν(t) dt |
//!
//! The companion variants replace the order ν+1 of the prefactor by ν.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::cases::{ex, sr, xp};
use super::{Ctx, Params};
use crate::error::{Error, Result};
use crate::scaled::ScaledReal;
use crate::specfun::{gamma_scaled, i_value, k_value};

type Sides = Result<(ScaledReal, ScaledReal)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SteinId {
    S1a,
    S1b,
    S2a,
    S2b,
}

impl std::str::FromStr for SteinId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s1a" => Ok(SteinId::S1a),
            "s1b" => Ok(SteinId::S1b),
            "s2a" => Ok(SteinId::S2a),
            "s2b" => Ok(SteinId::S2b),
            _ => Err(Error::OutOfDomain(format!("unknown expression `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SteinExpression {
    pub id: SteinId,
    pub nu: f64,
    pub beta: f64,
    pub x: f64,
    /// Prefactor of order ν instead of ν+1.
    pub companion: bool,
}

fn expr(c: &mut Ctx, id: SteinId, companion: bool, p: &Params) -> Result<ScaledReal> {
    let (nu, beta, x) = (p.nu, p.beta, p.x);
    let ord = if companion { nu } else { nu + 1.0 };
    let w = ex(-beta, x);
    Ok(match id {
        SteinId::S1a => w * k_value(ord, x) * xp(x, -nu) * c.lower(nu, beta, nu + 1.0, x)?,
        SteinId::S1b => w * i_value(ord, x) * xp(x, -nu) * c.upper(nu, beta, nu + 1.0, x)?,
        SteinId::S2a => w * k_value(ord, x) * xp(x, 1.0 - nu) * c.lower(nu, beta, nu, x)?,
        SteinId::S2b => w * i_value(ord, x) * xp(x, 1.0 - nu) * c.upper(nu, beta, nu, x)?,
    })
}

/// Evaluates one expression. The integrals carry the usual domain
/// restrictions (lower: convergence at 0; upper: β < 1).
pub fn stein_expression(e: &SteinExpression) -> Result<f64> {
    if !(e.x > 0.0 && e.x <= super::CASE_X_MAX) {
        return Err(Error::OutOfDomain(format!("x must lie in (0, {}], got {}", super::CASE_X_MAX, e.x)));
    }
    let p = Params::new(e.nu, e.beta, 0.0, e.x);
    Ok(expr(&mut Ctx::default(), e.id, e.companion, &p)?.to_f64())
}

/// Γ(a)/Γ(b)
fn gamma_ratio(a: f64, b: f64) -> f64 {
    (gamma_scaled(a) / gamma_scaled(b)).to_f64()
}

fn half_pos(nu: f64, beta: f64) -> f64 {
    PI.sqrt() * beta * gamma_ratio(nu + 1.5, nu + 1.0) / (1.0 - beta * beta).powf(nu + 1.5)
}

fn n_bound(nu: f64, beta: f64) -> f64 {
    if nu <= 0.5 {
        1.0 / (2.0 * (1.0 - beta))
    } else {
        PI.sqrt() * gamma_ratio(nu + 0.5, nu) / (1.0 - beta * beta).powf(nu + 0.5)
    }
}

/// The uniform-in-x bound registered for `id` at (ν, β).
///
/// Base ids (`propb2a12`, `propb2a125`, `jjj1`, `jjj2`, `fff11`, `fff2`,
/// `ddd1`, `ddd2`) select the branch matching the sign of β; suffixed ids
/// (`.neg`, `.pos`, `ddd3`, `ddd4`) are accepted only inside their own
/// region. Parameters no registered case covers give [`Error::Uncovered`].
pub fn uniform_bound(id: &str, nu: f64, beta: f64) -> Result<f64> {
    let uncovered = || Error::Uncovered { id: id.to_string(), nu, beta };
    if !nu.is_finite() || !beta.is_finite() {
        return Err(uncovered());
    }
    let (base, region) = match id.split_once('.') {
        Some((b, r)) => (b, Some(r)),
        None => (id, None),
    };
    let neg = beta > -1.0 && beta < 0.0;
    let pos = beta > 0.0 && beta < 1.0;
    let explicit_ok = |want: &str, inside: bool| match region {
        None => true,
        Some(r) => r == want && inside,
    };
    match base {
        "propb2a12" | "propb2a125" if nu > -0.5 => {
            if beta >= 0.0 && region.is_none() {
                Ok(0.5)
            } else if neg && explicit_ok("neg", neg) {
                Ok(1.0 / (2.0 * (1.0 + beta)))
            } else {
                Err(uncovered())
            }
        }
        "jjj1" | "jjj2" if nu > -0.5 => {
            if beta >= 0.0 && region.is_none() {
                Ok((nu + 1.0) / (2.0 * nu + 1.0))
            } else if neg && nu >= 0.5 && explicit_ok("neg", neg) {
                Ok((nu + 1.0) / ((2.0 * nu + 1.0) * (1.0 + beta)))
            } else {
                Err(uncovered())
            }
        }
        "fff11" | "fff2" | "ddd1" | "ddd2" | "ddd3" | "ddd4" => {
            let companion = matches!(base, "fff11" | "ddd1" | "ddd3");
            let min_ok = if companion { nu >= -0.5 } else { nu > -0.5 };
            if !min_ok {
                return Err(uncovered());
            }
            let is_d = base.starts_with("ddd");
            let explicit_pos = matches!(base, "ddd3" | "ddd4");
            if explicit_pos && region.is_some() {
                return Err(uncovered());
            }
            if beta <= 0.0 && !explicit_pos && region.is_none() {
                return Ok(if companion { 1.0 } else { 0.5 });
            }
            let pos_ok = pos && (explicit_pos || (is_d && region.is_none()) || explicit_ok("pos", pos));
            if !pos_ok || (is_d && region.is_some()) {
                return Err(uncovered());
            }
            Ok(if is_d {
                n_bound(nu, beta)
            } else if companion {
                1.0 + 2.0 * half_pos(nu, beta)
            } else {
                0.5 + half_pos(nu, beta)
            })
        }
        _ => Err(uncovered()),
    }
}

fn bounded(c: &mut Ctx, p: &Params, id: SteinId, companion: bool, bound_id: &str) -> Sides {
    let b = uniform_bound(bound_id, p.nu, p.beta)?;
    Ok((expr(c, id, companion, p)?, sr(b)))
}

macro_rules! stein_case {
    ($($name:ident => $id:ident, $comp:expr, $bound:literal;)*) => {
        $(pub(super) fn $name(c: &mut Ctx, p: &Params) -> Sides {
            bounded(c, p, SteinId::$id, $comp, $bound)
        })*
    };
}

stein_case! {
    s_propb2a12 => S1a, false, "propb2a12";
    s_propb2a125 => S1a, true, "propb2a125";
    s_jjj1 => S2a, false, "jjj1";
    s_jjj2 => S2a, true, "jjj2";
    s_propb2a12_neg => S1a, false, "propb2a12.neg";
    s_propb2a125_neg => S1a, true, "propb2a125.neg";
    s_jjj1_neg => S2a, false, "jjj1.neg";
    s_jjj2_neg => S2a, true, "jjj2.neg";
    s_fff11 => S1b, true, "fff11";
    s_fff2 => S1b, false, "fff2";
    s_ddd1 => S2b, true, "ddd1";
    s_ddd2 => S2b, false, "ddd2";
    s_fff11_pos => S1b, true, "fff11.pos";
    s_fff2_pos => S1b, false, "fff2.pos";
    s_ddd3 => S2b, true, "ddd3";
    s_ddd4 => S2b, false, "ddd4";
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_branches() {
        assert_eq!(uniform_bound("propb2a12", 1.0, 0.3).unwrap(), 0.5);
        assert!((uniform_bound("propb2a12", 1.0, -0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((uniform_bound("ddd3", 1.0, 0.5).unwrap() - 2.418_399_152_3).abs() < 1e-8);
        assert_eq!(uniform_bound("ddd3", 0.25, 0.5).unwrap(), 1.0);
        assert_eq!(uniform_bound("ddd1", 0.25, -0.5).unwrap(), 1.0);
        assert_eq!(uniform_bound("fff2", 0.25, -0.5).unwrap(), 0.5);
    }

    #[test]
    fn uncovered_regions() {
        for id in ["jjj1", "jjj2", "jjj1.neg"] {
            assert!(matches!(uniform_bound(id, 0.25, -0.5), Err(Error::Uncovered { .. })), "{id}");
        }
        assert!(uniform_bound("jjj1.neg", 1.0, 0.5).is_err());
        assert!(uniform_bound("propb2a12", 1.0, -1.5).is_err());
        assert!(uniform_bound("fff2.pos", 1.0, -0.5).is_err());
        assert!(uniform_bound("ddd2", 1.0, 1.0).is_err());
        assert!(uniform_bound("nope", 1.0, 0.0).is_err());
    }
}
