//! Quadrature against closed forms, additivity, and domain handling.

use bessel_bounds::integrals::{
    closed_form_struve, i_nu_beta, int_lower_i, int_upper_k, lower_i_between, IntegralSpec, StruveForm,
};
use bessel_bounds::registry::{log_space, GridSpec};
use bessel_bounds::specfun::{bessel_i, bessel_k};
use bessel_bounds::{Error, ScaledReal, Status};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn lower_p_eq_nu_plus_one_is_closed_form() {
    let g = GridSpec::default();
    for &nu in &g.nu {
        for &x in &g.x {
            let q = int_lower_i(nu, 0.0, nu + 1.0, x).unwrap();
            let want = bessel_i(nu + 1.0, x, false).unwrap().value * x.powf(nu + 1.0);
            assert!(q.value.rel_diff(want).abs() <= 1e-7, "nu={nu} x={x}");
            assert_eq!(q.status, Status::Ok);
        }
    }
}

#[test]
fn upper_p_eq_nu_plus_one_is_closed_form() {
    let g = GridSpec::default();
    for &nu in &g.nu {
        for &x in &g.x {
            let q = int_upper_k(nu, 0.0, nu + 1.0, x).unwrap();
            let want = bessel_k(nu + 1.0, x, false).unwrap().value * x.powf(nu + 1.0);
            assert!(q.value.rel_diff(want).abs() <= 1e-7, "nu={nu} x={x}");
        }
    }
}

#[test]
fn struve_closed_forms_match_quadrature() {
    for nu in [0.6, 1.0, 2.5, 5.0] {
        for x in log_space(0.1, 50.0, 15) {
            let lo = closed_form_struve(StruveForm::LowerIPEqNu, nu, x).unwrap().value;
            let lq = int_lower_i(nu, 0.0, nu, x).unwrap().value;
            assert!(lo.rel_diff(lq).abs() <= 1e-7, "lower nu={nu} x={x}: {lo} vs {lq}");
            let up = closed_form_struve(StruveForm::UpperKPEqNu, nu, x).unwrap().value;
            let uq = int_upper_k(nu, 0.0, nu, x).unwrap().value;
            assert!(up.rel_diff(uq).abs() <= 1e-7, "upper nu={nu} x={x}: {up} vs {uq}");
        }
    }
    // lower form also holds for −1/2 < ν ≤ 1/2
    for nu in [-0.25, 0.0, 0.5] {
        let lo = closed_form_struve(StruveForm::LowerIPEqNu, nu, 1.0).unwrap().value;
        let lq = int_lower_i(nu, 0.0, nu, 1.0).unwrap().value;
        assert!(lo.rel_diff(lq).abs() <= 1e-7, "nu={nu}");
    }
}

#[test]
fn struve_limits() {
    // ∫ₓ^∞ t K_1 → 0 and the bracket 1 − x(K L + K L) → 0 as x grows
    let v = closed_form_struve(StruveForm::UpperKPEqNu, 1.0, 60.0).unwrap().to_f64();
    assert!(v > 0.0 && v < 1e-20);
    let v = closed_form_struve(StruveForm::LowerIPEqNu, 0.5, 1e-6).unwrap().to_f64();
    assert!(v > 0.0 && v < 1e-11);
    assert!(closed_form_struve(StruveForm::UpperKPEqNu, 0.5, 1.0).is_err());
    assert!(closed_form_struve(StruveForm::LowerIPEqNu, -0.5, 1.0).is_err());
}

#[test]
fn documented_examples() {
    assert!(rel(int_lower_i(0.5, 0.0, 1.5, 1.0).unwrap().to_f64(), 0.293_525_326_347_479_6) < 1e-10);
    assert_eq!(int_lower_i(0.5, 0.0, 1.5, 0.0).unwrap().to_f64(), 0.0);
    assert!(rel(int_upper_k(0.5, 0.0, 1.5, 1.0).unwrap().to_f64(), 0.922_137_008_895_789) < 1e-10);

    // between the two published bounds at γ = 1/2
    let (nu, g, x) = (0.0, 0.5, 2.0f64);
    let v = int_lower_i(nu, -g, nu, x).unwrap().to_f64();
    let base = (-g * x).exp() * x.powf(nu) * bessel_i(nu + 1.0, x, false).unwrap().to_f64();
    assert!(base < v && v < 2.0 * (nu + 1.0) / ((2.0 * nu + 1.0) * (1.0 - g) - g) * base);

    // equality at ν = 1/2: ∫ₓ^∞ e^{βt} t^{1/2} K_{1/2} = e^{βx} x^{1/2} K_{1/2}(x)/(1−β)
    let (b, x) = (0.3, 1.0f64);
    let lhs = int_upper_k(0.5, b, 0.5, x).unwrap().to_f64();
    let rhs = (b * x).exp() * x.sqrt() * bessel_k(0.5, x, false).unwrap().to_f64() / (1.0 - b);
    assert!(rel(lhs, rhs) < 1e-10);

    // leading large-x behaviour √(π/2) e^{−x} x^{p−1/2}; the first corrections
    // (4ν²−1)/(8x) + (p−1/2)/x still contribute ~7% at x = 50
    let lead = |x: f64| ScaledReal::exp(-x) * ((std::f64::consts::PI / 2.0).sqrt() * x.powf(1.5));
    let ratio = |x: f64| (int_upper_k(2.0, 0.0, 2.0, x).unwrap().value / lead(x)).to_f64();
    assert!(rel(ratio(50.0), 1.068_491_036_946_658_5) < 1e-9);
    assert!(rel(ratio(1000.0), 1.003_377_506_253_629) < 1e-9);
    assert!(ratio(50.0) > ratio(200.0) && ratio(200.0) > ratio(1000.0) && ratio(1000.0) > 1.0);

    // √(π/2) at ν = 1/2, β = 0
    assert!(rel(i_nu_beta(0.5, 0.0).unwrap().to_f64(), (std::f64::consts::PI / 2.0).sqrt()) < 1e-12);
    assert!(rel(i_nu_beta(0.0, 0.0).unwrap().to_f64(), std::f64::consts::FRAC_PI_2) < 1e-12);
    let v = i_nu_beta(0.5, 0.5).unwrap().to_f64();
    assert!((1.6711..3.3422).contains(&v));
}

#[test]
fn domain_errors() {
    let bad = [
        IntegralSpec::upper_k(0.5, 1.0, 0.5, 1.0),
        IntegralSpec::upper_k(2.0, 0.0, 0.5, 0.0),
        IntegralSpec::lower_i(0.0, 0.0, -1.0, 1.0),
        IntegralSpec::lower_i(0.5, 0.0, 0.5, -1.0),
        IntegralSpec::lower_i(0.5, 0.0, 0.5, 2e3),
        IntegralSpec::full_line_k(-0.5, 0.0),
        IntegralSpec::full_line_k(0.5, 1.0),
    ];
    for s in bad {
        assert!(matches!(s.evaluate(), Err(Error::OutOfDomain(_))), "{s:?}");
    }
    assert!(i_nu_beta(0.5, -1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lower_integral_is_additive(
        nu in -0.45f64..6.0,
        beta in -0.9f64..0.9,
        p_shift in 0.0f64..2.0,
        a in 0.0f64..1.0,
        b in 0.0f64..1.0,
    ) {
        let (x1, x2) = (100.0 * a.min(b).max(1e-3), 100.0 * a.max(b).max(2e-3));
        prop_assume!(x2 > x1 * (1.0 + 1e-9));
        let p = nu + p_shift;
        let whole = int_lower_i(nu, beta, p, x2).unwrap().value;
        let parts = int_lower_i(nu, beta, p, x1).unwrap().value + lower_i_between(nu, beta, p, x1, x2).unwrap().value;
        prop_assert!(whole.rel_diff(parts).abs() <= 1e-9, "{whole} vs {parts}");
    }

    #[test]
    fn upper_integral_decreases_in_x(nu in -1.5f64..8.0, beta in -0.9f64..0.9, x in 0.01f64..200.0) {
        let a = int_upper_k(nu, beta, nu, x).unwrap().value;
        let b = int_upper_k(nu, beta, nu, x * 1.01).unwrap().value;
        prop_assert!(b < a);
    }
}
