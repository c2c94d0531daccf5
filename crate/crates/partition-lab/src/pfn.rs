//! High-precision evaluation of the convergent series for `p(n)` (Dedekind
//! sums, the Kloosterman-like sums `A_k(n)`, term-by-term traces) and a
//! scanner for partition congruence families.
//!
//! The root of unity attached to each `(h, k)` is realized as
//! `exp(pi*i*s(h,k))` with `s` the Dedekind sum; the rounding agreement with
//! the exact `p(n)` routes pins this convention end to end.

use astro_float::{BigFloat, Consts};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::real::{
    bits_for_digits, float_from_rational, format_fixed, magnitude_below, to_nearest_integer,
    ROUNDING,
};
use crate::series::p_exact;

/// Default working precision in significant decimal digits.
pub const DEFAULT_DIGITS: u32 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PfnError {
    #[error("h = {h} and k = {k} are not coprime")]
    NotCoprime { h: u64, k: u64 },
    #[error("h = {h} out of range for k = {k} (need 1 <= h < k)")]
    OutOfRange { h: u64, k: u64 },
    #[error("imaginary residue of A_{k}({n}) is not negligible at {digits} digits")]
    ImaginaryResidueTooLarge { n: u64, k: u64, digits: u32 },
    #[error(
        "cannot certify rounding of p({n}): distance to nearest integer plus tail estimate \
         reaches 0.5 (raise the digit count or the number of terms)"
    )]
    PrecisionExhausted { n: u64 },
}

/// Dedekind sum `s(h, k) = sum_{mu=1}^{k-1} ((mu/k)) ((h*mu/k))`, with
/// `((x))` the sawtooth `x - floor(x) - 1/2` away from integers and `0` at
/// them. Exact rational; `k = 1` gives the empty sum `0`.
pub fn dedekind_sum(h: u64, k: u64) -> Result<BigRational, PfnError> {
    if k == 1 {
        return Ok(BigRational::zero());
    }
    if h == 0 || h >= k {
        return Err(PfnError::OutOfRange { h, k });
    }
    if h.gcd(&k) != 1 {
        return Err(PfnError::NotCoprime { h, k });
    }
    // ((a/k)) for 0 < a < k is (2a - k) / (2k); a = 0 contributes nothing
    let saw = |a: u64| -> Option<BigRational> {
        let r = a % k;
        if r == 0 {
            None
        } else {
            Some(BigRational::new(
                BigInt::from(2 * r as i128 - k as i128),
                BigInt::from(2 * k as i128),
            ))
        }
    };
    let mut sum = BigRational::zero();
    for mu in 1..k {
        if let (Some(a), Some(b)) = (saw(mu), saw((h as u128 * mu as u128 % k as u128) as u64)) {
            sum += a * b;
        }
    }
    Ok(sum)
}

/// `A_k(n) = sum_{h mod k, gcd(h,k)=1} exp(pi*i*s(h,k)) exp(-2*pi*i*n*h/k)`,
/// evaluated at `digits` decimal digits of working precision. The sum is
/// real; its imaginary residue is checked against `10^-(digits-10)` and
/// discarded. `h = 0` participates only for `k = 1`, so `A_1(n) = 1`.
pub fn kloosterman_like_sum(n: u64, k: u64, digits: u32) -> Result<BigFloat, PfnError> {
    let mut consts = Consts::new().expect("constants cache");
    kloosterman_like_sum_with(n, k, digits, &mut consts)
}

fn kloosterman_like_sum_with(
    n: u64,
    k: u64,
    digits: u32,
    consts: &mut Consts,
) -> Result<BigFloat, PfnError> {
    assert!(k >= 1, "k must be positive");
    let precision = bits_for_digits(digits);
    let pi = consts.pi(precision, ROUNDING);
    let mut real_part = BigFloat::from_u64(0, precision);
    let mut imag_part = BigFloat::from_u64(0, precision);
    let two = BigRational::from_integer(BigInt::from(2));
    for h in 0..k {
        // gcd(0, k) = k, so h = 0 survives only for k = 1
        if h.gcd(&k) != 1 {
            continue;
        }
        let s = if k == 1 {
            BigRational::zero()
        } else {
            dedekind_sum(h, k)?
        };
        // angle/pi = s(h,k) - 2nh/k, reduced mod 2 exactly before any float
        let mut ratio = s - BigRational::new(
            BigInt::from(2) * BigInt::from(n) * BigInt::from(h),
            BigInt::from(k),
        );
        ratio = &ratio - (&ratio / &two).floor() * &two;
        let angle = float_from_rational(&ratio, precision, consts).mul(&pi, precision, ROUNDING);
        let cos = angle.cos(precision, ROUNDING, consts);
        let sin = angle.sin(precision, ROUNDING, consts);
        real_part = real_part.add(&cos, precision, ROUNDING);
        imag_part = imag_part.add(&sin, precision, ROUNDING);
    }
    if !magnitude_below(&imag_part, -((digits as i64) - 10), consts) {
        return Err(PfnError::ImaginaryResidueTooLarge { n, k, digits });
    }
    Ok(real_part)
}

/// The k-th term of the series for `p(n)`:
/// `(1/(pi*sqrt(2))) * A_k(n) * sqrt(k) * D(n)` where, with `u = n - 1/24`
/// and `c = (pi/k) * sqrt(2/3)`,
/// `D(n) = c*cosh(c*sqrt(u))/(2u) - sinh(c*sqrt(u))/(2*u^{3/2})`
/// (the closed-form derivative of `sinh(c*sqrt(x - 1/24))/sqrt(x - 1/24)`
/// at `x = n`).
pub fn rademacher_term(n: u64, k: u64, digits: u32) -> Result<BigFloat, PfnError> {
    let mut consts = Consts::new().expect("constants cache");
    rademacher_term_with(n, k, digits, &mut consts)
}

fn rademacher_term_with(
    n: u64,
    k: u64,
    digits: u32,
    consts: &mut Consts,
) -> Result<BigFloat, PfnError> {
    assert!(n >= 1, "the series evaluates p(n) for n >= 1");
    let p = bits_for_digits(digits);
    let a_k = kloosterman_like_sum_with(n, k, digits, consts)?;

    let pi = consts.pi(p, ROUNDING);
    let u_exact = BigRational::new(BigInt::from(24 * n as i128 - 1), BigInt::from(24));
    let u = float_from_rational(&u_exact, p, consts);
    let sqrt_u = u.sqrt(p, ROUNDING);
    let two_thirds = BigFloat::from_u64(2, p).div(&BigFloat::from_u64(3, p), p, ROUNDING);
    let c = pi
        .mul(&two_thirds.sqrt(p, ROUNDING), p, ROUNDING)
        .div(&BigFloat::from_u64(k, p), p, ROUNDING);
    let arg = c.mul(&sqrt_u, p, ROUNDING);
    let cosh = arg.cosh(p, ROUNDING, consts);
    let sinh = arg.sinh(p, ROUNDING, consts);
    let two_u = u.mul(&BigFloat::from_u64(2, p), p, ROUNDING);
    let term_a = c.mul(&cosh, p, ROUNDING).div(&two_u, p, ROUNDING);
    let term_b = sinh.div(&two_u.mul(&sqrt_u, p, ROUNDING), p, ROUNDING);
    let derivative = term_a.sub(&term_b, p, ROUNDING);

    let sqrt_k = BigFloat::from_u64(k, p).sqrt(p, ROUNDING);
    let sqrt_2 = BigFloat::from_u64(2, p).sqrt(p, ROUNDING);
    let prefactor = BigFloat::from_u64(1, p).div(&pi.mul(&sqrt_2, p, ROUNDING), p, ROUNDING);
    Ok(prefactor
        .mul(&a_k, p, ROUNDING)
        .mul(&sqrt_k, p, ROUNDING)
        .mul(&derivative, p, ROUNDING))
}

/// One evaluated term of a [`RademacherResult`].
#[derive(Debug, Clone)]
pub struct RademacherTerm {
    pub k: u64,
    pub value: BigFloat,
}

/// The term-by-term evaluation of the series for `p(n)`: every term at full
/// working precision, their sum, and the certified rounding.
#[derive(Debug, Clone)]
pub struct RademacherResult {
    pub n: u64,
    pub terms: Vec<RademacherTerm>,
    pub partial_sum: BigFloat,
    /// Nearest integer to the partial sum.
    pub rounded: BigInt,
    /// `|partial_sum - rounded|`, always below one half.
    pub distance: BigFloat,
    pub k_used: usize,
    pub digits: u32,
}

impl RademacherResult {
    /// The term values rendered with a fixed number of decimals (no sign
    /// padding, no separators).
    pub fn term_strings(&self, frac_digits: u32) -> Vec<String> {
        let mut consts = Consts::new().expect("constants cache");
        self.terms
            .iter()
            .map(|term| format_fixed(&term.value, frac_digits, &mut consts))
            .collect()
    }
}

/// Hard ceiling on the automatically chosen number of terms.
const TERM_CAP: usize = 10_000;

/// Sums series terms for `k = 1..=K`. With `k_max` given, exactly that many
/// terms are used (the paper-table reproduction mode); otherwise terms are
/// added until `K >= 5` and `|term_K| < 0.1`.
///
/// The rounding is certified by requiring the distance to the nearest
/// integer plus the magnitude of the last term to stay below one half;
/// otherwise `PrecisionExhausted` is returned.
pub fn rademacher_p(
    n: u64,
    k_max: Option<usize>,
    digits: u32,
) -> Result<RademacherResult, PfnError> {
    assert!(n >= 1, "the series evaluates p(n) for n >= 1");
    let mut consts = Consts::new().expect("constants cache");
    let p = bits_for_digits(digits);
    let tenth = BigFloat::from_f64(0.1, p);
    let mut terms = Vec::new();
    let mut partial_sum = BigFloat::from_u64(0, p);
    let mut k = 1u64;
    loop {
        let value = rademacher_term_with(n, k, digits, &mut consts)?;
        partial_sum = partial_sum.add(&value, p, ROUNDING);
        let small = value.abs().cmp(&tenth) == Some(-1);
        terms.push(RademacherTerm { k, value });
        match k_max {
            Some(limit) => {
                if terms.len() >= limit {
                    break;
                }
            }
            None => {
                if terms.len() >= 5 && small {
                    break;
                }
                if terms.len() >= TERM_CAP {
                    return Err(PfnError::PrecisionExhausted { n });
                }
            }
        }
        k += 1;
    }

    let rounded = to_nearest_integer(&partial_sum, &mut consts);
    let rounded_float = crate::real::float_from_bigint(&rounded, p, &mut consts);
    let distance = partial_sum.sub(&rounded_float, p, ROUNDING).abs();
    let tail_estimate = terms.last().expect("at least one term").value.abs();
    // distance + tail must stay below 1/2 for the rounding to be trusted
    let budget = distance.add(&tail_estimate, p, ROUNDING);
    let half = BigFloat::from_f64(0.5, p);
    if budget.cmp(&half) != Some(-1) {
        return Err(PfnError::PrecisionExhausted { n });
    }
    Ok(RademacherResult {
        n,
        k_used: terms.len(),
        terms,
        partial_sum,
        rounded,
        distance,
        digits,
    })
}

/// An arithmetic progression of congruence claims:
/// `p(offset + m*step) ≡ 0 (mod modulus)` for `m = 0, 1, 2, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceFamily {
    pub modulus: u64,
    pub offset: u64,
    pub step: u64,
    pub description: String,
}

impl CongruenceFamily {
    pub fn new(modulus: u64, offset: u64, step: u64, description: impl Into<String>) -> Self {
        CongruenceFamily {
            modulus,
            offset,
            step,
            description: description.into(),
        }
    }
}

/// Residues of the first `count` members of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub family: CongruenceFamily,
    /// `(n, p(n) mod modulus)` per checked member.
    pub entries: Vec<(u64, u64)>,
    pub all_zero: bool,
}

/// Evaluates `p(offset + m*step) mod modulus` for `m = 0..count` via the
/// exact series route.
pub fn scan_congruences(family: &CongruenceFamily, count: u64) -> CongruenceReport {
    let modulus = BigInt::from(family.modulus);
    let mut entries = Vec::with_capacity(count as usize);
    for m in 0..count {
        let n = family.offset + m * family.step;
        let residue = p_exact(n).mod_floor(&modulus).to_u64().expect("residue fits");
        entries.push((n, residue));
    }
    let all_zero = entries.iter().all(|&(_, residue)| residue == 0);
    CongruenceReport {
        family: family.clone(),
        entries,
        all_zero,
    }
}

/// The ten classical divisibility lists, each as a family plus the number of
/// entries written out explicitly (the `...` tails are not asserted).
pub fn classical_list_families() -> Vec<(CongruenceFamily, u64)> {
    vec![
        (CongruenceFamily::new(5, 4, 5, "p(4), p(9), p(14), p(19), ... ≡ 0 (mod 5)"), 4),
        (CongruenceFamily::new(7, 5, 7, "p(5), p(12), p(19), p(26), ... ≡ 0 (mod 7)"), 4),
        (CongruenceFamily::new(11, 6, 11, "p(6), p(17), p(28), p(39), ... ≡ 0 (mod 11)"), 4),
        (CongruenceFamily::new(25, 24, 25, "p(24), p(49), p(74), p(99), ... ≡ 0 (mod 25)"), 4),
        (CongruenceFamily::new(35, 19, 35, "p(19), p(54), p(89), p(124), ... ≡ 0 (mod 35)"), 4),
        (CongruenceFamily::new(49, 47, 49, "p(47), p(96), p(145), p(194), ... ≡ 0 (mod 49)"), 4),
        (CongruenceFamily::new(55, 39, 55, "p(39), p(94), p(149), ... ≡ 0 (mod 55)"), 3),
        (CongruenceFamily::new(77, 61, 77, "p(61), p(138), ... ≡ 0 (mod 77)"), 2),
        (CongruenceFamily::new(121, 116, 121, "p(116), ... ≡ 0 (mod 121)"), 1),
        (CongruenceFamily::new(125, 99, 125, "p(99), ... ≡ 0 (mod 125)"), 1),
    ]
}

/// The four congruence families with classical proofs.
pub fn proved_families() -> Vec<CongruenceFamily> {
    vec![
        CongruenceFamily::new(5, 4, 5, "p(5n+4) ≡ 0 (mod 5)"),
        CongruenceFamily::new(7, 5, 7, "p(7n+5) ≡ 0 (mod 7)"),
        CongruenceFamily::new(25, 24, 25, "p(25n+24) ≡ 0 (mod 25)"),
        CongruenceFamily::new(49, 47, 49, "p(49n+47) ≡ 0 (mod 49)"),
    ]
}

/// Step sizes for the desk-scale checks of the prime-power congruence
/// theorem.
pub const DESK_SCALE_DELTAS: [u64; 9] = [5, 7, 25, 49, 35, 55, 77, 121, 125];

/// Builds the congruence family for `delta = 5^a 7^b 11^c`: the offset is
/// the solution of `24*lambda ≡ 1 (mod delta)` and the asserted modulus is
/// `5^a 7^e 11^c` with `e = floor((b+2)/2)` capped by the proved range
/// (`e = 0` when `b = 0`). Returns `None` when `delta` has other prime
/// factors.
pub fn prime_power_family(delta: u64) -> Option<CongruenceFamily> {
    let mut rest = delta;
    let mut exponents = [0u32; 3];
    for (slot, prime) in [(0usize, 5u64), (1, 7), (2, 11)] {
        while rest.is_multiple_of(prime) {
            rest /= prime;
            exponents[slot] += 1;
        }
    }
    if rest != 1 {
        return None;
    }
    let [a, b, c] = exponents;
    let seven_exponent = if b == 0 { 0 } else { (b + 2) / 2 };
    let modulus = 5u64.pow(a) * 7u64.pow(seven_exponent) * 11u64.pow(c);
    let offset = modular_inverse(24 % delta, delta)?;
    Some(CongruenceFamily::new(
        modulus,
        offset,
        delta,
        format!("24λ ≡ 1 (mod {delta}) ⇒ p(λ + m·{delta}) ≡ 0 (mod {modulus})"),
    ))
}

/// Inverse of `a` modulo `m` (extended Euclid); `None` when not coprime.
fn modular_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
