//! Conversions between arbitrary-precision floats, exact rationals, and big
//! integers, plus deterministic decimal rendering. Thin plumbing over
//! `astro-float`.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub const ROUNDING: RoundingMode = RoundingMode::ToEven;

/// Binary precision needed to carry `digits` significant decimal digits,
/// with guard bits for intermediate rounding.
pub fn bits_for_digits(digits: u32) -> usize {
    // log2(10) ≈ 3.3219281
    (digits as usize) * 10 / 3 + 64
}

/// Exact conversion of a big integer into a float at the given precision.
pub fn float_from_bigint(value: &BigInt, precision: usize, consts: &mut Consts) -> BigFloat {
    let rendered = value.to_string();
    BigFloat::parse(&rendered, Radix::Dec, precision, ROUNDING, consts)
}

/// Conversion of an exact rational into a float at the given precision.
pub fn float_from_rational(value: &BigRational, precision: usize, consts: &mut Consts) -> BigFloat {
    let numer = float_from_bigint(value.numer(), precision, consts);
    let denom = float_from_bigint(value.denom(), precision, consts);
    numer.div(&denom, precision, ROUNDING)
}

/// Nearest integer to `x * 10^scale` (round half away from zero).
/// `scale = 0` rounds to the nearest integer.
pub fn to_scaled_integer(x: &BigFloat, scale: i64, consts: &mut Consts) -> BigInt {
    if x.is_zero() {
        return BigInt::zero();
    }
    let (sign, digits, exponent) = x
        .convert_to_radix(Radix::Dec, ROUNDING, consts)
        .expect("finite float converts to decimal digits");
    // the value is 0.d0 d1 d2 ... × 10^exponent
    let int_len = exponent as i64 + scale;
    if int_len < 0 {
        return BigInt::zero();
    }
    let int_len = int_len as usize;
    let mut value = BigInt::zero();
    for i in 0..int_len {
        value = value * 10 + digits.get(i).copied().unwrap_or(0);
    }
    if digits.get(int_len).copied().unwrap_or(0) >= 5 {
        value += 1;
    }
    if sign == Sign::Neg {
        value = -value;
    }
    value
}

/// Nearest integer to `x`.
pub fn to_nearest_integer(x: &BigFloat, consts: &mut Consts) -> BigInt {
    to_scaled_integer(x, 0, consts)
}

/// Fixed-point decimal rendering with exactly `frac_digits` digits after the
/// point, e.g. `-87.555`. Deterministic; no locale, no separators.
pub fn format_fixed(x: &BigFloat, frac_digits: u32, consts: &mut Consts) -> String {
    let scaled = to_scaled_integer(x, frac_digits as i64, consts);
    let negative = scaled.is_negative();
    let mut body = scaled.abs().to_string();
    let frac = frac_digits as usize;
    if body.len() <= frac {
        body = format!("{}{}", "0".repeat(frac + 1 - body.len()), body);
    }
    let split = body.len() - frac;
    let sign = if negative { "-" } else { "" };
    if frac == 0 {
        format!("{sign}{body}")
    } else {
        format!("{sign}{}.{}", &body[..split], &body[split..])
    }
}

/// True when `|x| < 10^exponent` (used for residue checks).
pub fn magnitude_below(x: &BigFloat, exponent: i64, consts: &mut Consts) -> bool {
    to_scaled_integer(&x.abs(), -exponent, consts).is_zero()
}
