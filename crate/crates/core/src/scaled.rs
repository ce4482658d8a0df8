//! Extended-range real numbers.
//!
//! Products such as `e^{-x} K(x) * ∫ e^{t} ...` pair exponentially small and
//! exponentially large factors. [`ScaledReal`] stores a value as
//! `mantissa * 2^exp2` with a 64-bit exponent so that intermediate quantities
//! like `e^{1000}` stay finite, and exposes the offset in natural-log units.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

// Cody-Waite split of ln 2; the high part has 21 trailing zero bits so
// `k * LN2_HI` is exact for |k| < 2^21.
const LN2_HI: f64 = 6.931_471_803_691_238_164_90e-1;
const LN2_LO: f64 = 1.908_214_929_270_587_700_02e-10;

/// A finite real number `mantissa * e^{log_offset}`.
///
/// The mantissa is kept in `[1, 2)` in magnitude (or is exactly zero), which
/// lies inside the `[0.1, 10)` band; the offset is always an integer multiple
/// of `ln 2`, so conversion back to `f64` is exact whenever the result is
/// representable.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledReal {
    mantissa: f64,
    exp2: i64,
}

impl ScaledReal {
    pub const ZERO: ScaledReal = ScaledReal { mantissa: 0.0, exp2: 0 };
    pub const ONE: ScaledReal = ScaledReal { mantissa: 1.0, exp2: 0 };

    /// Builds from an ordinary float. Panics on NaN or infinity.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "ScaledReal::from_f64 on non-finite value {v}");
        Self::from_parts(v, 0)
    }

    /// `v * 2^e2`, normalised.
    pub fn from_parts(v: f64, e2: i64) -> Self {
        if v == 0.0 {
            return Self::ZERO;
        }
        let (m, e) = frexp(v);
        ScaledReal { mantissa: m, exp2: e2 + e }
    }

    /// `e^x`, accurate to a few ulps for |x| up to about 10^6.
    pub fn exp(x: f64) -> Self {
        assert!(x.is_finite(), "ScaledReal::exp on non-finite argument");
        let k = (x / std::f64::consts::LN_2).round();
        let r = (x - k * LN2_HI) - k * LN2_LO;
        Self::from_parts(r.exp(), k as i64)
    }

    /// `sign * e^{ln_abs}`; `ln_abs = -inf` yields zero.
    pub fn from_ln(ln_abs: f64, negative: bool) -> Self {
        if ln_abs == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let v = Self::exp(ln_abs);
        if negative {
            -v
        } else {
            v
        }
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    /// Offset in natural-log units: the value is `mantissa() * exp(log_offset())`.
    pub fn log_offset(&self) -> f64 {
        self.exp2 as f64 * std::f64::consts::LN_2
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa < 0.0
    }

    pub fn abs(self) -> Self {
        ScaledReal { mantissa: self.mantissa.abs(), ..self }
    }

    /// `ln |self|`; `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.mantissa.abs().ln() + self.exp2 as f64 * std::f64::consts::LN_2
    }

    /// Nearest `f64`, saturating to ±inf or flushing to (signed) zero.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        if self.exp2 > 1024 {
            return self.mantissa.signum() * f64::INFINITY;
        }
        if self.exp2 < -1080 {
            return self.mantissa.signum() * 0.0;
        }
        ldexp(self.mantissa, self.exp2 as i32)
    }

    /// `self * e^{y}`.
    pub fn mul_exp(self, y: f64) -> Self {
        self * Self::exp(y)
    }

    /// `self^p` for positive `self`.
    pub fn powf(self, p: f64) -> Self {
        assert!(!self.is_negative(), "powf of negative ScaledReal");
        if self.is_zero() {
            return if p > 0.0 { Self::ZERO } else { Self::from_f64(f64::MAX) };
        }
        Self::exp(p * self.ln_abs())
    }

    /// Relative difference `(self - other) / max(|self|, |other|)`, computed
    /// without leaving extended range.
    pub fn rel_diff(self, other: Self) -> f64 {
        let denom = if self.abs() >= other.abs() { self.abs() } else { other.abs() };
        if denom.is_zero() {
            return 0.0;
        }
        ((self - other) / denom).to_f64()
    }
}

/// Splits `v` into `m * 2^e` with `|m|` in `[1, 2)`.
fn frexp(v: f64) -> (f64, i64) {
    let bits = v.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    if raw_exp == 0 {
        // subnormal: rescale into the normal range first
        let (m, e) = frexp(v * 2f64.powi(64));
        return (m, e - 64);
    }
    let e = raw_exp - 1023;
    let m_bits = (bits & !(0x7ffu64 << 52)) | (1023u64 << 52);
    (f64::from_bits(m_bits), e)
}

/// `m * 2^e` with exact power-of-two scaling (two steps so the factor itself
/// never overflows or underflows).
fn ldexp(m: f64, e: i32) -> f64 {
    let half = e / 2;
    m * pow2(half) * pow2(e - half)
}

fn pow2(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

impl From<f64> for ScaledReal {
    fn from(v: f64) -> Self {
        Self::from_f64(v)
    }
}

impl Neg for ScaledReal {
    type Output = Self;
    fn neg(self) -> Self {
        ScaledReal { mantissa: -self.mantissa, ..self }
    }
}

impl Mul for ScaledReal {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_parts(self.mantissa * rhs.mantissa, self.exp2 + rhs.exp2)
    }
}

impl Mul<f64> for ScaledReal {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self * Self::from_f64(rhs)
    }
}

impl Div for ScaledReal {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "ScaledReal division by zero");
        Self::from_parts(self.mantissa / rhs.mantissa, self.exp2 - rhs.exp2)
    }
}

impl Div<f64> for ScaledReal {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self / Self::from_f64(rhs)
    }
}

impl Add for ScaledReal {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exp2 >= rhs.exp2 { (self, rhs) } else { (rhs, self) };
        let shift = big.exp2 - small.exp2;
        if shift > 60 {
            return big;
        }
        Self::from_parts(big.mantissa + ldexp(small.mantissa, -(shift as i32)), big.exp2)
    }
}

impl Sub for ScaledReal {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl PartialOrd for ScaledReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let d = *self - *other;
        d.mantissa.partial_cmp(&0.0)
    }
}

impl std::iter::Sum for ScaledReal {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for ScaledReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScaledReal({} * 2^{})", self.mantissa, self.exp2)
    }
}

impl fmt::Display for ScaledReal {
    /// Plain decimal when representable, otherwise `m e±N` with a decimal exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_f64();
        if v.is_finite() && (v == 0.0) == self.is_zero() {
            return fmt::Display::fmt(&v, f);
        }
        let log10 = self.ln_abs() / std::f64::consts::LN_10;
        let e10 = log10.floor();
        let m = self.mantissa.signum() * 10f64.powf(log10 - e10);
        write!(f, "{m:.15}e{e10}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exp_matches_std_in_range() {
        for &x in &[-700.0, -20.5, -1.0, 0.0, 0.3, 1.0, 10.0, 300.0, 709.0] {
            let a = ScaledReal::exp(x).to_f64();
            let b = f64::exp(x);
            assert!(((a - b) / b).abs() < 4e-16, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn extended_range_survives_overflow() {
        let big = ScaledReal::exp(1000.0);
        let small = ScaledReal::exp(-990.0);
        let prod = (big * small).to_f64();
        assert!((prod - 10f64.exp()).abs() < 1e-11 * 10f64.exp());
        assert_eq!(big.to_f64(), f64::INFINITY);
        assert!((big.ln_abs() - 1000.0).abs() < 1e-12);
    }

    #[test]
    fn mantissa_band_and_zero() {
        let z = ScaledReal::from_f64(0.0);
        assert!(z.is_zero());
        assert_eq!(z.log_offset(), 0.0);
        let v = ScaledReal::from_f64(-1234.5);
        assert!(v.mantissa().abs() >= 1.0 && v.mantissa().abs() < 2.0);
    }

    #[test]
    fn subnormal_round_trip() {
        let v = 3.0e-310;
        assert_eq!(ScaledReal::from_f64(v).to_f64(), v);
    }

    #[test]
    fn add_with_cancellation() {
        let x = 1.0 + 1e-10;
        let d = (ScaledReal::from_f64(x) - ScaledReal::from_f64(1.0)).to_f64();
        assert_eq!(d, x - 1.0);
    }

    proptest! {
        #[test]
        fn round_trip_is_exact(v in prop::num::f64::NORMAL) {
            prop_assume!(v.abs() < 1e86 && v.abs() > 1e-86);
            let s = ScaledReal::from_f64(v);
            prop_assert!(s.log_offset().abs() < 200.0);
            prop_assert_eq!(s.to_f64(), v);
        }

        #[test]
        fn product_matches_log_sum(a in -500.0f64..500.0, b in -500.0f64..500.0) {
            let p = ScaledReal::exp(a) * ScaledReal::exp(b);
            prop_assert!((p.ln_abs() - (a + b)).abs() < 1e-12 * (1.0 + (a + b).abs()));
        }
    }
}
