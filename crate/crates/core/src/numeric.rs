//! Small numeric helpers shared across engines.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `num / den` rounded to the nearest `f64`, valid for operands far beyond
/// the `f64` range.
pub fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    assert!(!den.is_zero(), "division by zero");
    if num.is_zero() {
        return 0.0;
    }
    // Scale so the integer quotient carries 66+ significant bits.
    let shift = 66 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let mantissa = q.to_f64().expect("quotient fits in f64");
    scale_by_power_of_two(mantissa, -shift)
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    let num = x.numer().abs().to_biguint().expect("absolute value");
    let den = x.denom().abs().to_biguint().expect("absolute value");
    let v = ratio_to_f64(&num, &den);
    if x.is_negative() {
        -v
    } else {
        v
    }
}

fn scale_by_power_of_two(x: f64, exp: i64) -> f64 {
    let mut x = x;
    let mut e = exp;
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

pub fn biguint_to_rational(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}
