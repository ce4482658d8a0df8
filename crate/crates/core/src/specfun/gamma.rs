//! Gamma function via the Lanczos approximation (g = 607/128, n = 15).

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::scaled::ScaledReal;
use crate::EvalResult;

const LANCZOS_G: f64 = 607.0 / 128.0;

// Godfrey's coefficients for g = 607/128.
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_78;

/// Lanczos series sum A_g(z) for the shifted argument z = x - 1.
fn lanczos_sum(z: f64) -> f64 {
    let mut s = LANCZOS[0];
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (z + k as f64);
    }
    s
}

/// Γ(x) in extended range for x ≥ 0.5.
fn gamma_scaled_ge_half(x: f64) -> ScaledReal {
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    // sqrt(2π) t^{z+1/2} e^{-t} A(z), with the power split to avoid overflow
    let ln_pow = (z + 0.5) * t.ln() - t;
    ScaledReal::exp(ln_pow) * ((2.0 * PI).sqrt() * lanczos_sum(z))
}

/// Γ(x) for positive x as an extended-range value.
pub fn gamma_scaled(x: f64) -> ScaledReal {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        return gamma_scaled_ge_half(x + 1.0) / x;
    }
    gamma_scaled_ge_half(x)
}

/// Γ(x), x ∈ (0, 180).
pub fn gamma(x: f64) -> Result<EvalResult> {
    if !(x > 0.0 && x < 180.0) {
        return domain(format!("gamma requires 0 < x < 180, got {x}"));
    }
    let v = gamma_scaled(x);
    Ok(EvalResult::from_rel(v, 2e-15))
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        return ln_gamma(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}

/// 1/Γ(x) for any real x (zero at the poles).
pub fn rgamma(x: f64) -> f64 {
    if x > 0.0 {
        if x > 171.0 {
            return (-ln_gamma(x)).exp();
        }
        return 1.0 / gamma_scaled(x).to_f64();
    }
    if x == x.floor() {
        return 0.0;
    }
    // reflection: 1/Γ(x) = Γ(1-x) sin(πx) / π
    gamma_scaled(1.0 - x).to_f64() * sin_pi(x) / PI
}

/// sin(πx), relatively accurate near the integers (where it vanishes exactly).
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    // exact for |x| < 2^52
    let r = x - n;
    let s = if r.abs() == 0.5 { r.signum() } else { (PI * r).sin() };
    if n.rem_euclid(2.0) == 1.0 {
        -s
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn known_values() {
        assert!(rel(gamma(1.0).unwrap().to_f64(), 1.0) < 1e-14);
        assert!(rel(gamma(0.5).unwrap().to_f64(), PI.sqrt()) < 1e-14);
        assert!(rel(gamma(5.0).unwrap().to_f64(), 24.0) < 1e-14);
        assert!(rel(gamma(0.1).unwrap().to_f64(), 9.513_507_698_668_732) < 1e-14);
    }

    #[test]
    fn product_recursion_half_integers() {
        // Γ(n + 1/2) = (n - 1/2)(n - 3/2)...(1/2) √π
        let mut expect = PI.sqrt();
        for n in 1..60 {
            expect *= n as f64 - 0.5;
            let g = gamma(n as f64 + 0.5).unwrap().to_f64();
            assert!(rel(g, expect) < 1e-13, "n={n}: {g} vs {expect}");
        }
    }

    #[test]
    fn large_argument_in_extended_range() {
        let g = gamma(179.5).unwrap();
        assert!(g.value.to_f64().is_infinite());
        assert!(rel(g.value.ln_abs(), ln_gamma(179.5)) < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(gamma(0.0).is_err());
        assert!(gamma(-1.5).is_err());
        assert!(gamma(180.0).is_err());
    }

    #[test]
    fn reciprocal_at_negative_arguments() {
        assert_eq!(rgamma(-2.0), 0.0);
        // Γ(-1/2) = -2√π
        assert!(rel(rgamma(-0.5), -1.0 / (2.0 * PI.sqrt())) < 1e-14);
    }
}
