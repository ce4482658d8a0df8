//! The case table.
//!
//! Notation in the statements: lo(μ,β,p) = ∫₀ˣ e^{βt} t^p I_μ(t) dt,
//! up(μ,β,p) = ∫ₓ^∞ e^{βt} t^p K_μ(t) dt, I_{ν,β} = up(ν,β,ν) at x = 0,
//! c₀ = √π 2^{ν−1} Γ(ν+½).

use std::f64::consts::PI;

use super::stein::*;
use super::{a_hi, a_lo, b_lo, inb, Ctx, InequalityCase, Limit, Params, Strictness, Uses};
use crate::error::Result;
use crate::integrals::{closed_form_struve, struve_bessel_f, StruveForm};
use crate::scaled::ScaledReal;
use crate::specfun::{gamma_scaled, i_value, k_value};

type Sides = Result<(ScaledReal, ScaledReal)>;

pub(super) fn sr(v: f64) -> ScaledReal {
    ScaledReal::from_f64(v)
}

/// e^{βx}
pub(super) fn ex(beta: f64, x: f64) -> ScaledReal {
    ScaledReal::exp(beta * x)
}

/// x^p
pub(super) fn xp(x: f64, p: f64) -> ScaledReal {
    ScaledReal::exp(p * x.ln())
}

/// 2^{s} Γ(g)
fn pow2_gamma(s: f64, g: f64) -> ScaledReal {
    gamma_scaled(g).mul_exp(s * std::f64::consts::LN_2)
}

/// √π 2^{ν−1} Γ(ν+½)
fn c0(nu: f64) -> ScaledReal {
    pow2_gamma(nu - 1.0, nu + 0.5) * PI.sqrt()
}

const BX: Uses = Uses { beta: true, n: false, x: true };
const BNX: Uses = Uses { beta: true, n: true, x: true };
const NX: Uses = Uses { beta: false, n: true, x: true };
const X: Uses = Uses { beta: false, n: false, x: true };
const B: Uses = Uses { beta: true, n: false, x: false };

use Limit::{NuToInf, XTo0, XToInf};
use Strictness::{NonStrict, Strict};

fn never(_: &Params) -> bool {
    false
}

#[allow(clippy::too_many_arguments)]
const fn case(
    id: &'static str,
    statement: &'static str,
    hypotheses: &'static str,
    strictness: Strictness,
    equality_set: Option<&'static str>,
    uses: Uses,
    sharp: &'static [Limit],
    domain: fn(&Params) -> bool,
    equality: fn(&Params) -> bool,
    eval: fn(&mut Ctx, &Params) -> Sides,
) -> InequalityCase {
    InequalityCase {
        id,
        statement,
        hypotheses,
        strictness,
        equality_set,
        uses,
        sharp,
        domain,
        equality,
        eval,
        inverted: false,
    }
}

// ---- weighted I integrals, β ≥ 0 ----

fn propb2a1(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let r = ex(p.beta, p.x) * xp(p.x, nu) * i_value(nu + 1.0, p.x) * (2.0 * (nu + 1.0) / (2.0 * nu + 1.0));
    Ok((c.lower(nu, p.beta, nu, p.x)?, r))
}

fn propb2a(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    Ok((c.lower(nu, p.beta, nu + 1.0, p.x)?, ex(p.beta, p.x) * xp(p.x, nu + 1.0) * i_value(nu + 1.0, p.x)))
}

// ---- weighted K integrals ----

fn fff1(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    Ok((c.upper(nu, p.beta, nu, p.x)?, ex(p.beta, p.x) * xp(p.x, nu) * k_value(nu + 1.0, p.x)))
}

fn fff(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    Ok((c.upper(nu, p.beta, nu + 1.0, p.x)?, ex(p.beta, p.x) * xp(p.x, nu + 1.0) * k_value(nu + 1.0, p.x)))
}

fn lowerk(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let r = ex(p.beta, p.x) * xp(p.x, nu) * k_value(nu, p.x) / (1.0 - p.beta);
    Ok((c.upper(nu, p.beta, nu, p.x)?, r))
}

fn lowerk2_lower(c: &mut Ctx, p: &Params) -> Sides {
    let (l, r) = lowerk(c, p)?;
    Ok((r, l))
}

fn lowerk2_upper(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let r = inb(nu, p.beta)? / pow2_gamma(nu - 1.0, nu) * ex(p.beta, p.x) * xp(p.x, nu) * k_value(nu, p.x);
    Ok((c.upper(nu, p.beta, nu, p.x)?, r))
}

fn lowerk3_lower(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let l = ex(p.beta, p.x) * xp(p.x, nu + 1.0) * k_value(nu + 1.0, p.x) / (1.0 - p.beta);
    Ok((l, c.upper(nu, p.beta, nu + 1.0, p.x)?))
}

fn lowerk3_upper(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let f = ScaledReal::ONE + inb(nu + 1.0, p.beta)? * p.beta / pow2_gamma(nu, nu + 1.0);
    let r = f * ex(p.beta, p.x) * xp(p.x, nu + 1.0) * k_value(nu + 1.0, p.x);
    Ok((c.upper(nu, p.beta, nu + 1.0, p.x)?, r))
}

// ---- weighted I integrals with a shifted order ----

fn besi11(c: &mut Ctx, p: &Params) -> Sides {
    let (nu, n) = (p.nu, p.n);
    let l = ex(p.beta, p.x) * xp(p.x, nu) * i_value(nu + n + 1.0, p.x);
    Ok((l, c.lower(nu + n, p.beta, nu, p.x)?))
}

fn besi22(c: &mut Ctx, p: &Params) -> Sides {
    let (nu, n, x) = (p.nu, p.n, p.x);
    let r = xp(x, nu) / (2.0 * nu + n + 1.0)
        * (i_value(nu + n + 1.0, x) * (2.0 * (nu + n + 1.0)) - i_value(nu + n + 3.0, x) * (n + 1.0));
    Ok((c.lower(nu + n, 0.0, nu, x)?, r))
}

fn besi225(c: &mut Ctx, p: &Params) -> Sides {
    let (nu, n, x) = (p.nu, p.n, p.x);
    let r = xp(x, nu) * i_value(nu + n + 1.0, x) * (2.0 * (nu + n + 1.0) / (2.0 * nu + n + 1.0));
    Ok((c.lower(nu + n, 0.0, nu, x)?, r))
}

fn rrrr_lower(c: &mut Ctx, p: &Params) -> Sides {
    let (nu, n, x) = (p.nu, p.n, p.x);
    Ok((xp(x, nu) * i_value(nu + n + 1.0, x), c.lower(nu + n, 0.0, nu, x)?))
}

// ---- weighted I integrals, β < 0 ----

fn besi33(c: &mut Ctx, p: &Params) -> Sides {
    let (nu, x) = (p.nu, p.x);
    let r = ex(p.beta, x) * xp(x, nu) / ((2.0 * nu + 1.0) * (1.0 + p.beta))
        * (i_value(nu + 1.0, x) * (2.0 * (nu + 1.0)) - i_value(nu + 3.0, x));
    Ok((c.lower(nu, p.beta, nu, x)?, r))
}

fn besi44(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let l = ex(p.beta, p.x) * xp(p.x, nu + 1.0) * i_value(nu + 1.0, p.x);
    Ok((l, c.lower(nu, p.beta, nu + 1.0, p.x)?))
}

fn besi55(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let r = ex(p.beta, p.x) * xp(p.x, nu + 1.0) * i_value(nu + 1.0, p.x) / (1.0 + p.beta);
    Ok((c.lower(nu, p.beta, nu + 1.0, p.x)?, r))
}

fn lowerpa(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let r = ex(p.beta, p.x) / (1.0 + p.beta) * c.lower(nu, 0.0, nu, p.x)?;
    Ok((c.lower(nu, p.beta, nu, p.x)?, r))
}

fn bes18(c: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let k = 2.0 * (nu + 1.0) / ((2.0 * nu + 1.0) * (1.0 + p.beta));
    let r = ex(p.beta, p.x) * xp(p.x, nu) * i_value(nu + 1.0, p.x) * k;
    Ok((c.lower(nu, p.beta, nu, p.x)?, r))
}

/// Bound 2(ν+1)/((2ν+1)(1−(1−a)γ) − (1−a)γ) · e^{−γx} x^ν I_{ν+1} with γ = −β.
fn op_form(c: &mut Ctx, p: &Params, a: f64) -> Sides {
    let (nu, g) = (p.nu, -p.beta);
    let s = (1.0 - a) * g;
    let k = 2.0 * (nu + 1.0) / ((2.0 * nu + 1.0) * (1.0 - s) - s);
    let r = ex(p.beta, p.x) * xp(p.x, nu) * i_value(nu + 1.0, p.x) * k;
    Ok((c.lower(nu, p.beta, nu, p.x)?, r))
}

fn op14(c: &mut Ctx, p: &Params) -> Sides {
    op_form(c, p, a_lo(p.nu)?)
}

fn op12(c: &mut Ctx, p: &Params) -> Sides {
    op_form(c, p, 0.0)
}

fn op14_domain(p: &Params) -> bool {
    let (nu, g) = (p.nu, -p.beta);
    if !(nu > -0.5 && nu <= 20.0 && g > 0.0 && g < 1.0) {
        return false;
    }
    let (Ok(lo), Ok(hi)) = (a_lo(nu), a_hi(nu)) else { return false };
    g < 1.0 / (2.0 * (nu + 1.0) * hi) && g < (2.0 * nu + 1.0) / (2.0 * (nu + 1.0) * (1.0 - lo))
}

// ---- the full-range K integral ----

/// √π Γ(ν+½) 2^{s} / (1−β²)^{ν+½}
fn inb_closed(nu: f64, beta: f64, s: f64) -> ScaledReal {
    pow2_gamma(s, nu + 0.5).mul_exp(-(nu + 0.5) * (-beta * beta).ln_1p()) * PI.sqrt()
}

fn doubleivb_lower(_: &mut Ctx, p: &Params) -> Sides {
    Ok((inb_closed(p.nu, p.beta, p.nu - 1.0), inb(p.nu, p.beta)?))
}

fn doubleivb_upper(_: &mut Ctx, p: &Params) -> Sides {
    Ok((inb(p.nu, p.beta)?, inb_closed(p.nu, p.beta, p.nu)))
}

// ---- Struve–Bessel combinations ----

/// G = ∫ₓ^∞ t^ν K_ν / c₀ = −x(K_ν M_{ν−1} + K_{ν−1} M_ν)
fn dob11_g(p: &Params) -> Result<ScaledReal> {
    Ok(closed_form_struve(StruveForm::UpperKPEqNu, p.nu, p.x)?.value / c0(p.nu))
}

fn dob11_lower(_: &mut Ctx, p: &Params) -> Sides {
    Ok((xp(p.x, p.nu) * k_value(p.nu, p.x) / c0(p.nu), dob11_g(p)?))
}

fn dob11_upper(_: &mut Ctx, p: &Params) -> Sides {
    Ok((dob11_g(p)?, xp(p.x, p.nu) * k_value(p.nu, p.x) / pow2_gamma(p.nu - 1.0, p.nu)))
}

/// x^{ν−1} I_{ν+1} / c₀
fn dob22_lb(p: &Params) -> ScaledReal {
    xp(p.x, p.nu - 1.0) * i_value(p.nu + 1.0, p.x) / c0(p.nu)
}

fn dob22_lower(_: &mut Ctx, p: &Params) -> Sides {
    Ok((dob22_lb(p), struve_bessel_f(p.nu, p.x)?.value))
}

fn dob22_upper(_: &mut Ctx, p: &Params) -> Sides {
    let nu = p.nu;
    let corr = sr(1.0) - i_value(nu + 3.0, p.x) / i_value(nu + 1.0, p.x);
    let ub = dob22_lb(p) * (sr(1.0) + corr / (2.0 * nu + 1.0));
    Ok((struve_bessel_f(nu, p.x)?.value, ub))
}

fn dob22_relerr(_: &mut Ctx, p: &Params) -> Sides {
    let (nu, x) = (p.nu, p.x);
    let l = (sr(1.0) - i_value(nu + 3.0, x) / i_value(nu + 1.0, x)) / (2.0 * nu + 1.0);
    let num = 4.0 * (nu + 2.0) * (nu + 3.0) + (4.0 * nu + 10.0) * x;
    let den = (2.0 * nu + 1.0) * (2.0 * (nu + 2.0) + x) * (2.0 * (nu + 3.0) + x);
    Ok((l, sr(num / den)))
}

// ---- Bessel functions ----

fn nasell(_: &mut Ctx, p: &Params) -> Sides {
    let (nu, x) = (p.nu, p.x);
    Ok((sr(x / (2.0 * (nu + 1.0) + x)), i_value(nu + 1.0, x) / i_value(nu, x)))
}

fn anu(_: &mut Ctx, p: &Params) -> Sides {
    let (nu, x) = (p.nu, p.x);
    let a = a_lo(nu)?;
    Ok((i_value(nu + 1.0, x), i_value(nu, x) * (1.0 - a) + i_value(nu + 2.0, x) * a))
}

fn bnu(_: &mut Ctx, p: &Params) -> Sides {
    let (nu, x) = (p.nu, p.x);
    let b = b_lo(nu)?;
    Ok((k_value(nu + 1.0, x), k_value(nu, x) * b + k_value(nu + 2.0, x) * (1.0 - b)))
}

fn bdsjbc1(_: &mut Ctx, p: &Params) -> Sides {
    Ok((k_value(p.nu, p.x) * i_value(p.nu, p.x) * p.x, sr(0.5)))
}

fn bdsjbc1_lower(_: &mut Ctx, p: &Params) -> Sides {
    Ok((ScaledReal::ZERO, k_value(p.nu, p.x) * i_value(p.nu, p.x) * p.x))
}

fn bdsjbc_lower(_: &mut Ctx, p: &Params) -> Sides {
    Ok((sr(0.5), k_value(p.nu + 1.0, p.x) * i_value(p.nu, p.x) * p.x))
}

fn bdsjbc_upper(_: &mut Ctx, p: &Params) -> Sides {
    Ok((k_value(p.nu + 1.0, p.x) * i_value(p.nu, p.x) * p.x, sr(1.0)))
}

fn imon(_: &mut Ctx, p: &Params) -> Sides {
    Ok((i_value(p.nu, p.x), i_value(p.nu - 1.0, p.x)))
}

fn kmoni(_: &mut Ctx, p: &Params) -> Sides {
    Ok((k_value(p.nu, p.x), k_value(p.nu - 1.0, p.x)))
}

fn cake(_: &mut Ctx, p: &Params) -> Sides {
    Ok((k_value(p.nu - 1.0, p.x), k_value(p.nu, p.x)))
}

#[rustfmt::skip]
pub(super) static CASES: &[InequalityCase] = &[
    case(
        "propb2a1",
        "lo(ν,β,ν) < 2(ν+1)/(2ν+1) · e^{βx} x^ν I_{ν+1}(x)",
        "β ≥ 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta >= 0.0 && p.nu > -0.5,
        never, propb2a1,
    ),
    case(
        "propb2a",
        "lo(ν,β,ν+1) ≤ e^{βx} x^{ν+1} I_{ν+1}(x)",
        "β ≥ 0, ν > −1",
        NonStrict, Some("β = 0"), BX, &[],
        |p| p.beta >= 0.0 && p.nu > -1.0,
        |p| p.beta == 0.0, propb2a,
    ),
    case(
        "fff1",
        "up(ν,β,ν) < e^{βx} x^ν K_{ν+1}(x)",
        "β ≤ 0",
        Strict, None, BX, &[],
        |p| p.beta <= 0.0,
        never, fff1,
    ),
    case(
        "fff",
        "up(ν,β,ν+1) ≤ e^{βx} x^{ν+1} K_{ν+1}(x)",
        "β ≤ 0",
        NonStrict, Some("β = 0"), BX, &[],
        |p| p.beta <= 0.0,
        |p| p.beta == 0.0, fff,
    ),
    case(
        "lowerk",
        "up(ν,β,ν) ≤ e^{βx} x^ν K_ν(x) / (1−β)",
        "0 < β < 1, ν ≤ 1/2",
        NonStrict, Some("ν = 1/2"), BX, &[],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu <= 0.5,
        |p| p.nu == 0.5, lowerk,
    ),
    case(
        "lowerk2.lower",
        "e^{βx} x^ν K_ν(x) / (1−β) < up(ν,β,ν)",
        "0 < β < 1, ν > 1/2",
        Strict, None, BX, &[XToInf],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu > 0.5,
        never, lowerk2_lower,
    ),
    case(
        "lowerk2.upper",
        "up(ν,β,ν) < I_{ν,β} / (2^{ν−1} Γ(ν)) · e^{βx} x^ν K_ν(x)",
        "0 < β < 1, ν > 1/2",
        Strict, None, BX, &[XTo0],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu > 0.5,
        never, lowerk2_upper,
    ),
    case(
        "lowerk3.lower",
        "e^{βx} x^{ν+1} K_{ν+1}(x) / (1−β) ≤ up(ν,β,ν+1)",
        "0 < β < 1, ν ≥ −1/2",
        NonStrict, Some("ν = −1/2"), BX, &[XToInf],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu >= -0.5,
        |p| p.nu == -0.5, lowerk3_lower,
    ),
    case(
        "lowerk3.upper",
        "up(ν,β,ν+1) < (1 + β I_{ν+1,β} / (2^ν Γ(ν+1))) · e^{βx} x^{ν+1} K_{ν+1}(x)",
        "0 < β < 1, ν ≥ −1/2",
        Strict, None, BX, &[XTo0],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu >= -0.5,
        never, lowerk3_upper,
    ),
    case(
        "besi11",
        "e^{βx} x^ν I_{ν+n+1}(x) < lo(ν+n,β,ν)",
        "β < 0, n > −1, ν > −(n+1)/2",
        Strict, None, BNX, &[],
        |p| p.beta < 0.0 && p.n > -1.0 && p.nu > -(p.n + 1.0) / 2.0,
        never, besi11,
    ),
    case(
        "besi22",
        "lo(ν+n,0,ν) < x^ν/(2ν+n+1) · (2(ν+n+1) I_{ν+n+1}(x) − (n+1) I_{ν+n+3}(x))",
        "n > −1, ν > −(n+1)/2",
        Strict, None, NX, &[NuToInf, XTo0, XToInf],
        |p| p.n > -1.0 && p.nu > -(p.n + 1.0) / 2.0,
        never, besi22,
    ),
    case(
        "besi225",
        "lo(ν+n,0,ν) < 2(ν+n+1)/(2ν+n+1) · x^ν I_{ν+n+1}(x)",
        "n > −1, ν > −(n+1)/2",
        Strict, None, NX, &[XTo0, NuToInf],
        |p| p.n > -1.0 && p.nu > -(p.n + 1.0) / 2.0,
        never, besi225,
    ),
    case(
        "rrrr.lower",
        "x^ν I_{ν+n+1}(x) < lo(ν+n,0,ν)",
        "n > −1, ν > −(n+1)/2",
        Strict, None, NX, &[NuToInf, XToInf],
        |p| p.n > -1.0 && p.nu > -(p.n + 1.0) / 2.0,
        never, rrrr_lower,
    ),
    case(
        "besi33",
        "lo(ν,β,ν) < e^{βx} x^ν / ((2ν+1)(1+β)) · (2(ν+1) I_{ν+1}(x) − I_{ν+3}(x))",
        "−1 < β < 0, ν ≥ 1/2",
        Strict, None, BX, &[],
        |p| p.beta > -1.0 && p.beta < 0.0 && p.nu >= 0.5,
        never, besi33,
    ),
    case(
        "besi44",
        "e^{βx} x^{ν+1} I_{ν+1}(x) < lo(ν,β,ν+1)",
        "β < 0, ν > −1",
        Strict, None, BX, &[XTo0],
        |p| p.beta < 0.0 && p.nu > -1.0,
        never, besi44,
    ),
    case(
        "besi55",
        "lo(ν,β,ν+1) < e^{βx} x^{ν+1} I_{ν+1}(x) / (1+β)",
        "−1 < β < 0, ν > −1/2",
        Strict, None, BX, &[XToInf],
        |p| p.beta > -1.0 && p.beta < 0.0 && p.nu > -0.5,
        never, besi55,
    ),
    case(
        "lowerpa",
        "lo(ν,β,ν) < e^{βx} / (1+β) · lo(ν,0,ν)",
        "−1 < β < 0, ν ≥ 1/2",
        Strict, None, BX, &[],
        |p| p.beta > -1.0 && p.beta < 0.0 && p.nu >= 0.5,
        never, lowerpa,
    ),
    case(
        "bes18",
        "lo(ν,β,ν) < 2(ν+1)/((2ν+1)(1+β)) · e^{βx} x^ν I_{ν+1}(x)",
        "−1 < β < 0, ν ≥ 1/2",
        Strict, None, BX, &[],
        |p| p.beta > -1.0 && p.beta < 0.0 && p.nu >= 0.5,
        never, bes18,
    ),
    case(
        "op14",
        "lo(ν,−γ,ν) < 2(ν+1)/((2ν+1)(1−(1−a)γ) − (1−a)γ) · e^{−γx} x^ν I_{ν+1}(x), a = a_ν",
        "γ = −β ∈ (0,1), −1/2 < ν ≤ 20, γ < min{1/(2(ν+1)a_ν), (2ν+1)/(2(ν+1)(1−a_ν))}",
        Strict, None, BX, &[],
        op14_domain,
        never, op14,
    ),
    case(
        "op12",
        "lo(ν,−γ,ν) < 2(ν+1)/((2ν+1)(1−γ) − γ) · e^{−γx} x^ν I_{ν+1}(x)",
        "γ = −β ∈ (0,1), ν > −1/2, γ < (2ν+1)/(2(ν+1))",
        Strict, None, BX, &[],
        |p| p.nu > -0.5 && -p.beta > 0.0 && -p.beta < (2.0 * p.nu + 1.0) / (2.0 * (p.nu + 1.0)),
        never, op12,
    ),
    case(
        "doubleivb.lower",
        "√π Γ(ν+½) 2^{ν−1} / (1−β²)^{ν+½} ≤ I_{ν,β}",
        "ν > −1/2, |β| < 1",
        NonStrict, Some("β = 0"), B, &[],
        |p| p.nu > -0.5 && p.beta.abs() < 1.0,
        |p| p.beta == 0.0, doubleivb_lower,
    ),
    case(
        "doubleivb.upper",
        "I_{ν,β} < √π Γ(ν+½) 2^ν / (1−β²)^{ν+½}",
        "ν > −1/2, |β| < 1",
        Strict, None, B, &[],
        |p| p.nu > -0.5 && p.beta.abs() < 1.0,
        never, doubleivb_upper,
    ),
    case(
        "dob11.lower",
        "x^ν K_ν(x) / c₀ < −x(K_ν M_{ν−1} + K_{ν−1} M_ν)(x), M = L − I",
        "ν > 1/2",
        Strict, None, X, &[XToInf],
        |p| p.nu > 0.5,
        never, dob11_lower,
    ),
    case(
        "dob11.upper",
        "−x(K_ν M_{ν−1} + K_{ν−1} M_ν)(x) < x^ν K_ν(x) / (2^{ν−1} Γ(ν))",
        "ν > 1/2",
        Strict, None, X, &[XTo0],
        |p| p.nu > 0.5,
        never, dob11_upper,
    ),
    case(
        "dob22.lower",
        "x^{ν−1} I_{ν+1}(x) / c₀ < F_ν(x), F_ν = I_ν L_{ν−1} − I_{ν−1} L_ν",
        "ν > −1/2",
        Strict, None, X, &[NuToInf, XToInf],
        |p| p.nu > -0.5,
        never, dob22_lower,
    ),
    case(
        "dob22.upper",
        "F_ν(x) < x^{ν−1} I_{ν+1}(x) / c₀ · (1 + (1 − I_{ν+3}(x)/I_{ν+1}(x)) / (2ν+1))",
        "ν > −1/2",
        Strict, None, X, &[NuToInf, XToInf, XTo0],
        |p| p.nu > -0.5,
        never, dob22_upper,
    ),
    case(
        "dob22.relerr",
        "(1 − I_{ν+3}/I_{ν+1}) / (2ν+1) < (4(ν+2)(ν+3) + (4ν+10)x) / ((2ν+1)(2(ν+2)+x)(2(ν+3)+x))",
        "ν > −1/2",
        Strict, None, X, &[],
        |p| p.nu > -0.5,
        never, dob22_relerr,
    ),
    case(
        "nasell",
        "x / (2(ν+1) + x) < I_{ν+1}(x) / I_ν(x)",
        "ν > −1",
        Strict, None, X, &[],
        |p| p.nu > -1.0,
        never, nasell,
    ),
    case(
        "anu",
        "I_{ν+1}(x) < (1−a_ν) I_ν(x) + a_ν I_{ν+2}(x)",
        "ν > −1/2, ν ≤ 20",
        Strict, None, X, &[],
        |p| p.nu > -0.5 && p.nu <= 20.0,
        never, anu,
    ),
    case(
        "bnu",
        "K_{ν+1}(x) < b_ν K_ν(x) + (1−b_ν) K_{ν+2}(x)",
        "ν > −1/2, ν ≤ 20",
        Strict, None, X, &[],
        |p| p.nu > -0.5 && p.nu <= 20.0,
        never, bnu,
    ),
    case(
        "bdsjbc1",
        "x K_ν(x) I_ν(x) < 1/2",
        "ν > 1/2",
        Strict, None, X, &[],
        |p| p.nu > 0.5,
        never, bdsjbc1,
    ),
    case(
        "bdsjbc1.lower",
        "0 ≤ x K_ν(x) I_ν(x)",
        "ν > 1/2",
        NonStrict, None, X, &[],
        |p| p.nu > 0.5,
        never, bdsjbc1_lower,
    ),
    case(
        "bdsjbc.lower",
        "1/2 < x K_{ν+1}(x) I_ν(x)",
        "ν ≥ −1/2",
        Strict, None, X, &[],
        |p| p.nu >= -0.5,
        never, bdsjbc_lower,
    ),
    case(
        "bdsjbc.upper",
        "x K_{ν+1}(x) I_ν(x) ≤ 1",
        "ν ≥ −1/2",
        NonStrict, None, X, &[],
        |p| p.nu >= -0.5,
        never, bdsjbc_upper,
    ),
    case(
        "Imon",
        "I_ν(x) < I_{ν−1}(x)",
        "ν ≥ 1/2",
        Strict, None, X, &[],
        |p| p.nu >= 0.5,
        never, imon,
    ),
    case(
        "Kmoni",
        "K_ν(x) < K_{ν−1}(x)",
        "ν < 1/2",
        Strict, None, X, &[],
        |p| p.nu < 0.5,
        never, kmoni,
    ),
    case(
        "cake",
        "K_{ν−1}(x) ≤ K_ν(x)",
        "ν ≥ 1/2",
        NonStrict, Some("ν = 1/2"), X, &[],
        |p| p.nu >= 0.5,
        |p| p.nu == 0.5, cake,
    ),
    // ---- bounds on products of a Bessel function and a weighted integral ----
    case(
        "propb2a12",
        "S1a = e^{−βx} K_{ν+1}(x) x^{−ν} lo(ν,β,ν+1) < 1/2",
        "β ≥ 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta >= 0.0 && p.nu > -0.5,
        never, s_propb2a12,
    ),
    case(
        "propb2a125",
        "e^{−βx} K_ν(x) x^{−ν} lo(ν,β,ν+1) < 1/2",
        "β ≥ 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta >= 0.0 && p.nu > -0.5,
        never, s_propb2a125,
    ),
    case(
        "jjj1",
        "S2a = e^{−βx} K_{ν+1}(x) x^{1−ν} lo(ν,β,ν) < (ν+1)/(2ν+1)",
        "β ≥ 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta >= 0.0 && p.nu > -0.5,
        never, s_jjj1,
    ),
    case(
        "jjj2",
        "e^{−βx} K_ν(x) x^{1−ν} lo(ν,β,ν) < (ν+1)/(2ν+1)",
        "β ≥ 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta >= 0.0 && p.nu > -0.5,
        never, s_jjj2,
    ),
    case(
        "propb2a12.neg",
        "S1a < 1/(2(1+β))",
        "−1 < β < 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta > -1.0 && p.beta < 0.0 && p.nu > -0.5,
        never, s_propb2a12_neg,
    ),
    case(
        "propb2a125.neg",
        "e^{−βx} K_ν(x) x^{−ν} lo(ν,β,ν+1) < 1/(2(1+β))",
        "−1 < β < 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta > -1.0 && p.beta < 0.0 && p.nu > -0.5,
        never, s_propb2a125_neg,
    ),
    case(
        "jjj1.neg",
        "S2a < (ν+1)/((2ν+1)(1+β))",
        "−1 < β < 0, ν ≥ 1/2",
        Strict, None, BX, &[],
        |p| p.beta > -1.0 && p.beta < 0.0 && p.nu >= 0.5,
        never, s_jjj1_neg,
    ),
    case(
        "jjj2.neg",
        "e^{−βx} K_ν(x) x^{1−ν} lo(ν,β,ν) < (ν+1)/((2ν+1)(1+β))",
        "−1 < β < 0, ν ≥ 1/2",
        Strict, None, BX, &[],
        |p| p.beta > -1.0 && p.beta < 0.0 && p.nu >= 0.5,
        never, s_jjj2_neg,
    ),
    case(
        "fff11",
        "e^{−βx} I_ν(x) x^{−ν} up(ν,β,ν+1) < 1",
        "β ≤ 0, ν ≥ −1/2",
        Strict, None, BX, &[],
        |p| p.beta <= 0.0 && p.nu >= -0.5,
        never, s_fff11,
    ),
    case(
        "fff2",
        "S1b = e^{−βx} I_{ν+1}(x) x^{−ν} up(ν,β,ν+1) < 1/2",
        "β ≤ 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta <= 0.0 && p.nu > -0.5,
        never, s_fff2,
    ),
    case(
        "ddd1",
        "e^{−βx} I_ν(x) x^{1−ν} up(ν,β,ν) < 1",
        "β ≤ 0, ν ≥ −1/2",
        Strict, None, BX, &[],
        |p| p.beta <= 0.0 && p.nu >= -0.5,
        never, s_ddd1,
    ),
    case(
        "ddd2",
        "S2b = e^{−βx} I_{ν+1}(x) x^{1−ν} up(ν,β,ν) < 1/2",
        "β ≤ 0, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta <= 0.0 && p.nu > -0.5,
        never, s_ddd2,
    ),
    case(
        "fff11.pos",
        "e^{−βx} I_ν(x) x^{−ν} up(ν,β,ν+1) < 1 + 2√π β Γ(ν+3/2) / ((1−β²)^{ν+3/2} Γ(ν+1))",
        "0 < β < 1, ν ≥ −1/2",
        Strict, None, BX, &[],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu >= -0.5,
        never, s_fff11_pos,
    ),
    case(
        "fff2.pos",
        "S1b < 1/2 + √π β Γ(ν+3/2) / ((1−β²)^{ν+3/2} Γ(ν+1))",
        "0 < β < 1, ν > −1/2",
        Strict, None, BX, &[],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu > -0.5,
        never, s_fff2_pos,
    ),
    case(
        "ddd3",
        "e^{−βx} I_ν(x) x^{1−ν} up(ν,β,ν) < N_{ν,β}",
        "0 < β < 1, ν > −1/2; N = 1/(2(1−β)) for ν ≤ 1/2, √π Γ(ν+½) / ((1−β²)^{ν+½} Γ(ν)) for ν > 1/2",
        Strict, None, BX, &[],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu > -0.5,
        never, s_ddd3,
    ),
    case(
        "ddd4",
        "S2b < N_{ν,β}",
        "0 < β < 1, ν > −1/2; N as for ddd3",
        Strict, None, BX, &[],
        |p| p.beta > 0.0 && p.beta < 1.0 && p.nu > -0.5,
        never, s_ddd4,
    ),
];
