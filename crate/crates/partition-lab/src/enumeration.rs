//! Exhaustive partition generators: all partitions of `n`, partitions of a
//! fixed dimension, and their self-conjugate filtrations. These are the
//! brute-force oracles the rest of the crate is validated against.
//!
//! Every stream yields in decreasing lexicographic order of the part
//! sequences, with no duplicates.

use thiserror::Error;

use crate::partition::Partition;

/// Largest `n` accepted by [`count_restricted`]; beyond this, counting by
/// exhaustion stops being sensible and the series module takes over.
pub const EXHAUSTION_LIMIT: u64 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the exhaustion guard ({max}); use the series module instead")]
    TooLargeForExhaustion { n: u64, max: u64 },
}

/// Part filters for [`count_restricted`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    None,
    OddPartsOnly,
    DistinctParts,
}

impl Restriction {
    fn admits(&self, partition: &Partition) -> bool {
        match self {
            Restriction::None => true,
            Restriction::OddPartsOnly => partition.parts().iter().all(|&p| p % 2 == 1),
            Restriction::DistinctParts => partition.parts().windows(2).all(|w| w[0] > w[1]),
        }
    }
}

enum Cursor {
    /// All partitions of a fixed size; holds the next part sequence to emit.
    Size(Option<Vec<u64>>),
    /// Partitions `[d, tail...]` with `d` parts; holds `d` and the next tail.
    Dimension { d: u64, tail: Option<Vec<u64>> },
}

/// Single-consumer iterator over a family of partitions, decreasing-lex.
pub struct PartitionStream {
    cursor: Cursor,
    self_conjugate_only: bool,
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let parts = match &mut self.cursor {
                Cursor::Size(state) => {
                    let parts = state.take()?;
                    *state = next_size_lex(&parts);
                    parts
                }
                Cursor::Dimension { d, tail } => {
                    let t = tail.take()?;
                    *tail = next_tail_lex(&t);
                    let mut parts = Vec::with_capacity(t.len() + 1);
                    parts.push(*d);
                    parts.extend_from_slice(&t);
                    parts
                }
            };
            let partition =
                Partition::from_parts(parts).expect("generators emit non-increasing parts");
            if !self.self_conjugate_only || partition.is_self_conjugate_oracle() {
                return Some(partition);
            }
        }
    }
}

/// Decreasing-lex successor among partitions of the same size: decrement the
/// last part above 1 and re-spread everything after it as greedily as the
/// new cap allows.
fn next_size_lex(parts: &[u64]) -> Option<Vec<u64>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let trailing_ones = (parts.len() - pivot - 1) as u64;
    let cap = parts[pivot] - 1;
    let mut rest = parts[pivot] + trailing_ones;
    let mut next = parts[..pivot].to_vec();
    while rest >= cap {
        next.push(cap);
        rest -= cap;
    }
    if rest > 0 {
        next.push(rest);
    }
    Some(next)
}

/// Decreasing-lex successor among non-increasing tails over `1..=d`:
/// decrement the last entry above 1 and level everything after it.
fn next_tail_lex(tail: &[u64]) -> Option<Vec<u64>> {
    let pivot = tail.iter().rposition(|&p| p > 1)?;
    let mut next = tail.to_vec();
    let value = next[pivot] - 1;
    for entry in &mut next[pivot..] {
        *entry = value;
    }
    Some(next)
}

/// All partitions of `n`, decreasing-lex. `n = 0` yields only the empty
/// partition, so the stream length is exactly `p(n)`.
pub fn partitions_of(n: u64) -> PartitionStream {
    let start = if n == 0 { Vec::new() } else { vec![n] };
    PartitionStream {
        cursor: Cursor::Size(Some(start)),
        self_conjugate_only: false,
    }
}

/// All partitions whose first part and number of parts both equal `d`.
/// Only the `d - 1` trailing parts are free (each in `1..=d`), so sizes
/// range over `[2d - 1, d^2]` without scanning other partitions.
pub fn partitions_of_dimension(d: u64) -> PartitionStream {
    assert!(d >= 1, "dimension must be positive");
    let tail = Some(vec![d; (d - 1) as usize]);
    PartitionStream {
        cursor: Cursor::Dimension { d, tail },
        self_conjugate_only: false,
    }
}

/// The self-conjugate partitions of dimension `d`, filtered by the
/// conjugate-and-compare oracle; there are exactly `2^(d-1)` of them.
pub fn self_conjugate_of_dimension(d: u64) -> PartitionStream {
    let mut stream = partitions_of_dimension(d);
    stream.self_conjugate_only = true;
    stream
}

/// Counts partitions of `n` passing the restriction, by exhaustion.
/// Guarded to `n <= 60`.
pub fn count_restricted(n: u64, restriction: Restriction) -> Result<u64, EnumerationError> {
    if n > EXHAUSTION_LIMIT {
        return Err(EnumerationError::TooLargeForExhaustion {
            n,
            max: EXHAUSTION_LIMIT,
        });
    }
    Ok(partitions_of(n)
        .filter(|partition| restriction.admits(partition))
        .count() as u64)
}
