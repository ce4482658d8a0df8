//! Modified Struve function L_ν and the difference M_ν = L_ν − I_ν.
//!
//! L_ν is summed from its ascending series for moderate x. For large x,
//! and whenever a combination like I_ν L_{ν−1} − I_{ν−1} L_ν is needed,
//! the exponentially large parts cancel and M_ν must be computed directly:
//!
//! * ν > −0.4, x < 40: M_ν = −2(x/2)^ν / (√π Γ(ν+½)) ∫₀¹ e^{−xt}(1−t²)^{ν−½} dt
//!   by tanh-sinh quadrature;
//! * x ≥ 40: the asymptotic expansion
//!   M_ν ~ −(1/π) Σ_k (−1)^k Γ(k+½)/Γ(ν+½−k) (x/2)^{ν−2k−1} + (2/π) sin(νπ) K_ν;
//! * otherwise the three-term recurrence
//!   M_{μ−1} = M_{μ+1} + (2μ/x) M_μ + (x/2)^μ / (√π Γ(μ+3/2)).

use std::f64::consts::PI;

use super::bessel::{check_order, i_with_err, k_value};
use super::gamma::{gamma_scaled, rgamma, sin_pi};
use crate::error::{domain, Result};
use crate::quad::tanh_sinh_unit;
use crate::scaled::ScaledReal;
use crate::EvalResult;

/// Largest argument accepted by [`struve_l`].
pub const STRUVE_X_MAX: f64 = 1e3;

const EPS: f64 = f64::EPSILON;
const SERIES_MAX_X: f64 = 30.0;
const ASYMPTOTIC_MIN_X: f64 = 40.0;
const INTEGRAL_MIN_ORDER: f64 = -0.4;
const SQRT_PI: f64 = 1.772_453_850_905_516_1;

/// (x/2)^p / Γ(g) as an extended-range value; Γ(g) may be non-positive.
fn pow_over_gamma(h: f64, p: f64, g: f64) -> ScaledReal {
    let pow = ScaledReal::exp(p * h.ln());
    if g > 0.0 {
        pow / gamma_scaled(g)
    } else {
        pow * rgamma(g)
    }
}

/// Ascending series for L_ν(x), x > 0; returns value and relative error.
fn l_series(nu: f64, x: f64) -> (ScaledReal, f64) {
    let h = 0.5 * x;
    let q = h * h;
    // terms with k + ν + 3/2 ≤ 0 have irregular signs; add them one by one
    let k0 = if nu + 1.5 > 0.0 { 0 } else { (-(nu + 1.5)).floor() as usize + 1 };
    let mut head = ScaledReal::ZERO;
    let mut head_abs = ScaledReal::ZERO;
    for k in 0..k0 {
        let kf = k as f64;
        let t = pow_over_gamma(h, 2.0 * kf + nu + 1.0, kf + 1.5) * rgamma(kf + nu + 1.5);
        head = head + t;
        head_abs = head_abs + t.abs();
    }
    let kf0 = k0 as f64;
    let pre = pow_over_gamma(h, 2.0 * kf0 + nu + 1.0, kf0 + 1.5) / gamma_scaled(kf0 + nu + 1.5);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut n = 0.0;
    loop {
        n += 1.0;
        let k = kf0 + n;
        term *= q / ((k + 0.5) * (k + nu + 0.5));
        sum += term;
        if term < 0.25 * EPS * sum {
            break;
        }
    }
    let tail = pre * sum;
    let v = head + tail;
    let abs = (head_abs + tail) * (EPS * (8.0 + n.sqrt() + (nu + 1.0).abs() * h.ln().abs()));
    (v, (abs / v.abs()).to_f64())
}

/// M_ν(x) by the integral representation; requires ν > −1/2.
fn m_integral(nu: f64, x: f64) -> (ScaledReal, f64) {
    let a = nu - 0.5;
    let (j, jerr) = tanh_sinh_unit(|t, _, ln_1mt| -x * t + a * (ln_1mt + t.ln_1p()), 1e-15);
    let h = 0.5 * x;
    let pre = pow_over_gamma(h, nu, nu + 0.5) * (2.0 / SQRT_PI);
    let rel = jerr / j + EPS * (16.0 + (nu * h.ln()).abs());
    (-(pre * j), rel)
}

/// M_ν(x) by the large-x expansion, if it reaches full precision.
fn m_asymptotic(nu: f64, x: f64) -> Option<(ScaledReal, f64)> {
    let h = 0.5 * x;
    let t0 = -pow_over_gamma(h, nu - 1.0, nu + 0.5) / SQRT_PI;
    let r = 4.0 / (x * x);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut last = 1.0;
    for k in 0..1000 {
        let kf = k as f64;
        let next = -term * (kf + 0.5) * (nu - 0.5 - kf) * r;
        if next == 0.0 {
            last = 0.0;
            break;
        }
        if next.abs() >= term.abs() {
            last = term.abs();
            break;
        }
        term = next;
        sum += term;
        last = term.abs();
        if last < 0.25 * EPS * sum.abs() {
            break;
        }
    }
    let rel_trunc = last / sum.abs();
    if rel_trunc > 1e-14 {
        return None;
    }
    let s = t0 * sum;
    let kterm = k_value(nu, x) * (2.0 / PI * sin_pi(nu));
    let v = s + kterm;
    let abs = s.abs() * (rel_trunc + 8.0 * EPS) + kterm.abs() * (1e-13);
    Some((v, (abs / v.abs()).to_f64()))
}

/// M_ν(x) = L_ν(x) − I_ν(x) for x > 0; value and relative error estimate.
pub(crate) fn m_with_err(nu: f64, x: f64) -> (ScaledReal, f64) {
    if x >= ASYMPTOTIC_MIN_X {
        if let Some(r) = m_asymptotic(nu, x) {
            return r;
        }
    }
    if nu > INTEGRAL_MIN_ORDER {
        return m_integral(nu, x);
    }
    let mu = nu + 1.0;
    let (m2, e2) = m_with_err(nu + 2.0, x);
    let (m1, e1) = m_with_err(mu, x);
    let a = m1 * (2.0 * mu / x);
    let b = pow_over_gamma(0.5 * x, mu, mu + 1.5) / SQRT_PI;
    let v = m2 + a + b;
    let abs = m2.abs() * e2 + a.abs() * (e1 + EPS) + b.abs() * (8.0 * EPS);
    (v, (abs / v.abs()).to_f64() + 4.0 * EPS)
}

/// L_ν(x), unvalidated, with a relative error estimate.
pub(crate) fn l_with_err(nu: f64, x: f64) -> (ScaledReal, f64) {
    if x <= SERIES_MAX_X {
        return l_series(nu, x);
    }
    let (i, ie) = i_with_err(nu, x);
    let (m, me) = m_with_err(nu, x);
    let v = i + m;
    let abs = i.abs() * ie + m.abs() * me;
    (v, (abs / v.abs()).to_f64())
}

fn check_struve(nu: f64, x: f64) -> Result<()> {
    check_order(nu)?;
    if !(0.0..=STRUVE_X_MAX).contains(&x) {
        return domain(format!("Struve functions require 0 <= x <= {STRUVE_X_MAX}, got {x}"));
    }
    Ok(())
}

/// Modified Struve function L_ν(x), or e^{−x} L_ν(x) when `scaled`.
pub fn struve_l(nu: f64, x: f64, scaled: bool) -> Result<EvalResult> {
    check_struve(nu, x)?;
    if x == 0.0 {
        if nu > -1.0 {
            return Ok(EvalResult::ok(ScaledReal::ZERO, 0.0));
        }
        if nu == -1.0 {
            return Ok(EvalResult::ok(ScaledReal::from_f64(2.0 / PI), 0.0));
        }
        return domain(format!("L_nu(0) is unbounded for nu = {nu}"));
    }
    let (mut v, rel) = l_with_err(nu, x);
    if scaled {
        v = v * ScaledReal::exp(-x);
    }
    Ok(EvalResult::with_tol(v, v.abs() * rel, 1e-10))
}

/// The difference L_ν(x) − I_ν(x), which stays of algebraic size as x → ∞.
pub fn struve_l_minus_i(nu: f64, x: f64) -> Result<EvalResult> {
    check_struve(nu, x)?;
    if x == 0.0 {
        return domain("L_nu - I_nu is evaluated for x > 0 only");
    }
    let (v, rel) = m_with_err(nu, x);
    Ok(EvalResult::with_tol(v, v.abs() * rel, 1e-10))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel::i_value;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn half_order_closed_form() {
        for &x in &[1e-3, 0.5, 1.0, 10.0, 29.0, 31.0, 45.0, 300.0] {
            // cosh x − 1 = 2 sinh²(x/2), without cancellation
            let want = (2.0 / (PI * x)).sqrt() * 2.0 * (0.5 * x).sinh().powi(2);
            let got = struve_l(0.5, x, false).unwrap().to_f64();
            assert!(rel(got, want) < 1e-12, "x={x}: {got} vs {want}");
            // M_{1/2} = √(2/(πx)) (e^{−x} − 1)
            let m = m_with_err(0.5, x).0.to_f64();
            let mw = (2.0 / (PI * x)).sqrt() * (-x).exp_m1();
            assert!(rel(m, mw) < 1e-12, "x={x}: {m} vs {mw}");
        }
    }

    #[test]
    fn minus_half_order_closed_form() {
        // L_{−1/2} = √(2/(πx)) sinh x
        for &x in &[0.2, 3.0, 25.0] {
            let want = (2.0 / (PI * x)).sqrt() * x.sinh();
            assert!(rel(struve_l(-0.5, x, false).unwrap().to_f64(), want) < 1e-12);
        }
    }

    #[test]
    fn branches_agree_in_overlap() {
        for &nu in &[-1.45, -1.25, -0.3, 0.0, 0.6, 1.0, 2.5, 5.0, 10.0] {
            for &x in &[20.0, 25.0, 30.0] {
                let (s, _) = l_series(nu, x);
                let m = m_with_err(nu, x).0;
                let via_m = i_value(nu, x) + m;
                assert!(s.rel_diff(via_m).abs() < 1e-11, "nu={nu} x={x}");
            }
        }
    }

    #[test]
    fn recurrence_matches_integral() {
        for &nu in &[-0.35, -0.2, 0.1] {
            for &x in &[0.1, 2.0, 15.0] {
                let direct = m_integral(nu, x).0;
                let (m2, _) = m_with_err(nu + 2.0, x);
                let (m1, _) = m_with_err(nu + 1.0, x);
                let b = pow_over_gamma(0.5 * x, nu + 1.0, nu + 2.5) / SQRT_PI;
                let rec = m2 + m1 * (2.0 * (nu + 1.0) / x) + b;
                assert!(direct.rel_diff(rec).abs() < 1e-12, "nu={nu} x={x}");
            }
        }
    }

    #[test]
    fn asymptotic_matches_integral_near_switch() {
        for &nu in &[0.0, 0.6, 2.0, 4.5] {
            let a = m_asymptotic(nu, 40.0).expect("converged").0;
            let b = m_integral(nu, 40.0).0;
            assert!(a.rel_diff(b).abs() < 1e-12, "nu={nu}");
        }
    }

    #[test]
    fn zero_argument() {
        assert_eq!(struve_l(0.5, 0.0, false).unwrap().to_f64(), 0.0);
        assert!(struve_l(-1.5, 0.0, false).is_err());
    }
}
