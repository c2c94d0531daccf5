//! Truncated formal power series over arbitrary-precision integers, the
//! generating-function products for restricted partition counts, and exact
//! `p(n)` by two independent routes (product expansion and the pentagonal
//! recurrence).

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A formal power series truncated at `order`: coefficients are tracked for
/// exponents `0..=order` and arithmetic never touches anything beyond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    /// Wraps explicit coefficients `c_0, c_1, ...`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        TruncatedSeries { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Truncated product, schoolbook; the result keeps the smaller order.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplies in place by the geometric series `1 + q^v + q^{2v} + ...`,
    /// the expansion of `(1 - q^v)^{-1}`.
    pub fn mul_geometric(&mut self, v: u64) {
        let v = v as usize;
        if v == 0 || v > self.order() {
            return;
        }
        for i in v..self.coeffs.len() {
            let prev = self.coeffs[i - v].clone();
            self.coeffs[i] += prev;
        }
    }

    /// Multiplies in place by the two-term factor `1 - q^v`.
    pub fn mul_one_minus(&mut self, v: u64) {
        let v = v as usize;
        if v == 0 || v > self.order() {
            return;
        }
        for i in (v..self.coeffs.len()).rev() {
            let prev = self.coeffs[i - v].clone();
            self.coeffs[i] -= prev;
        }
    }
}

/// A set of admissible part values: all positive integers, the odds, or an
/// explicit finite list (kept sorted and duplicate-free).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PartSet {
    AllPositive,
    Odds,
    Explicit(Vec<u64>),
}

impl PartSet {
    /// Builds an explicit set, sorting, deduplicating, and dropping zeros.
    pub fn explicit(values: Vec<u64>) -> Self {
        let mut values: Vec<u64> = values.into_iter().filter(|&v| v > 0).collect();
        values.sort_unstable();
        values.dedup();
        PartSet::Explicit(values)
    }

    pub fn contains(&self, value: u64) -> bool {
        match self {
            PartSet::AllPositive => value >= 1,
            PartSet::Odds => value % 2 == 1,
            PartSet::Explicit(values) => values.binary_search(&value).is_ok(),
        }
    }

    /// Members up to and including `bound`, ascending.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        match self {
            PartSet::AllPositive => (1..=bound).collect(),
            PartSet::Odds => (1..=bound).step_by(2).collect(),
            PartSet::Explicit(values) => values.iter().copied().take_while(|&v| v <= bound).collect(),
        }
    }
}

#[derive(PartialEq, Eq, Hash)]
struct CacheKey {
    set: PartSet,
    max_multiplicity: Option<u64>,
    order: usize,
}

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<TruncatedSeries>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<TruncatedSeries>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached_or_insert(key: CacheKey, build: impl FnOnce() -> TruncatedSeries) -> Arc<TruncatedSeries> {
    if let Some(found) = cache().read().unwrap().get(&key) {
        return Arc::clone(found);
    }
    let built = Arc::new(build());
    let mut guard = cache().write().unwrap();
    Arc::clone(guard.entry(key).or_insert(built))
}

/// The product `prod_{v in H} (1 - q^v)^{-1}` to the given order: the
/// coefficient of `q^n` counts partitions of `n` with all parts in `H`.
/// Results are memoized per `(set, order)`.
pub fn series_product_unrestricted(set: &PartSet, order: usize) -> TruncatedSeries {
    let arc = unrestricted_arc(set, order);
    (*arc).clone()
}

fn unrestricted_arc(set: &PartSet, order: usize) -> Arc<TruncatedSeries> {
    let key = CacheKey {
        set: set.clone(),
        max_multiplicity: None,
        order,
    };
    cached_or_insert(key, || {
        let mut series = TruncatedSeries::one(order);
        for v in set.members_up_to(order as u64) {
            series.mul_geometric(v);
        }
        series
    })
}

/// The bounded-multiplicity product: the coefficient of `q^n` counts
/// partitions of `n` with parts in `H`, none repeated more than `d` times.
///
/// Computed both as the direct product of finite geometric factors
/// `1 + q^v + ... + q^{dv}` and as `prod (1 - q^{(d+1)v}) (1 - q^v)^{-1}`;
/// the two must agree coefficientwise, and disagreement panics (it would
/// mean the arithmetic itself is broken).
pub fn series_product_bounded(set: &PartSet, d: u64, order: usize) -> TruncatedSeries {
    assert!(d >= 1, "multiplicity bound must be positive");
    let key = CacheKey {
        set: set.clone(),
        max_multiplicity: Some(d),
        order,
    };
    let arc = cached_or_insert(key, || {
        let members = set.members_up_to(order as u64);

        let mut direct = TruncatedSeries::one(order);
        for &v in &members {
            let mut factor = vec![BigInt::zero(); order + 1];
            let mut exponent = 0u64;
            let mut multiplicity = 0u64;
            while exponent <= order as u64 && multiplicity <= d {
                factor[exponent as usize] = BigInt::one();
                exponent += v;
                multiplicity += 1;
            }
            direct = direct.mul(&TruncatedSeries::from_coeffs(factor));
        }

        let mut folded = TruncatedSeries::one(order);
        for &v in &members {
            folded.mul_one_minus((d + 1) * v);
            folded.mul_geometric(v);
        }

        assert_eq!(
            direct, folded,
            "bounded-product forms disagree: implementation bug"
        );
        direct
    });
    (*arc).clone()
}

/// Bucketed truncation order for the shared `p(n)` series, so nearby queries
/// reuse one cache entry.
fn p_series_order(n: u64) -> usize {
    let n = n as usize;
    n.next_power_of_two().max(128)
}

/// Exact `p(n)` via the unrestricted product over all positive parts.
/// The underlying series is memoized, so scans over many `n` amortize.
pub fn p_exact(n: u64) -> BigInt {
    let order = p_series_order(n);
    let series = unrestricted_arc(&PartSet::AllPositive, order);
    series.coeff(n as usize).clone()
}

/// Exact `p(n)` by Euler's pentagonal-number recurrence
/// `p(n) = sum_k (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`,
/// a route independent of series multiplication.
pub fn p_exact_recurrence(n: u64) -> BigInt {
    let n = n as usize;
    let mut table: Vec<BigInt> = Vec::with_capacity(n + 1);
    table.push(BigInt::one());
    for i in 1..=n {
        let mut sum = BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut contribution = table[i - g1].clone();
            if g2 <= i {
                contribution += &table[i - g2];
            }
            if k % 2 == 1 {
                sum += contribution;
            } else {
                sum -= contribution;
            }
            k += 1;
        }
        table.push(sum);
    }
    table.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn unrestricted_all_positive_prefix() {
        let series = series_product_unrestricted(&PartSet::AllPositive, 7);
        let expected: Vec<BigInt> = [1, 1, 2, 3, 5, 7, 11, 15].into_iter().map(big).collect();
        assert_eq!(series.coeffs(), &expected[..]);
    }

    #[test]
    fn odd_parts_count_at_seven() {
        let series = series_product_unrestricted(&PartSet::Odds, 7);
        assert_eq!(series.coeff(7), &big(5));
    }

    #[test]
    fn empty_explicit_set_gives_constant_one() {
        let series = series_product_unrestricted(&PartSet::explicit(vec![]), 9);
        assert_eq!(series.coeff(0), &big(1));
        for n in 1..=9 {
            assert_eq!(series.coeff(n), &big(0), "coefficient {n}");
        }
    }

    #[test]
    fn distinct_parts_counts() {
        let series = series_product_bounded(&PartSet::AllPositive, 1, 7);
        assert_eq!(series.coeff(7), &big(5));
        assert_eq!(series.coeff(6), &big(4));
    }

    #[test]
    fn huge_multiplicity_bound_matches_unrestricted() {
        let bounded = series_product_bounded(&PartSet::AllPositive, 12, 12);
        let unrestricted = series_product_unrestricted(&PartSet::AllPositive, 12);
        assert_eq!(bounded, unrestricted);
    }

    #[test]
    fn p_exact_table_values() {
        assert_eq!(p_exact(0), big(1));
        assert_eq!(p_exact(50), big(204226));
        assert_eq!(p_exact(100), big(190569292));
        assert_eq!(p_exact(243), BigInt::parse_bytes(b"133978259344888", 10).unwrap());
    }

    #[test]
    fn recurrence_values() {
        assert_eq!(p_exact_recurrence(1), big(1));
        assert_eq!(p_exact_recurrence(10), big(42));
        assert_eq!(p_exact_recurrence(20), big(627));
    }

    #[test]
    fn two_routes_agree_up_to_sixty() {
        for n in 0..=60 {
            assert_eq!(p_exact(n), p_exact_recurrence(n), "p({n})");
        }
    }

    #[test]
    fn product_times_euler_factors_is_one() {
        let order = 40;
        let mut series = series_product_unrestricted(&PartSet::AllPositive, order);
        for v in 1..=order as u64 {
            series.mul_one_minus(v);
        }
        assert_eq!(series, TruncatedSeries::one(order));
    }

    #[test]
    fn concurrent_readers_share_the_memo() {
        let handles: Vec<_> = (0..8)
            .map(|i| {
                std::thread::spawn(move || {
                    let series = series_product_unrestricted(&PartSet::AllPositive, 150);
                    (series.coeff(100 + i).clone(), p_exact(100 + i as u64))
                })
            })
            .collect();
        for handle in handles {
            let (from_series, from_p) = handle.join().unwrap();
            assert_eq!(from_series, from_p);
        }
    }

    #[test]
    fn explicit_set_normalizes() {
        let set = PartSet::explicit(vec![4, 2, 2, 0, 9]);
        assert_eq!(set, PartSet::Explicit(vec![2, 4, 9]));
        assert!(set.contains(4));
        assert!(!set.contains(3));
        assert_eq!(set.members_up_to(5), vec![2, 4]);
    }
}
