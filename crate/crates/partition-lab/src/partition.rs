//! The partition value type and its elementary operations: conjugation,
//! addition, contiguous splitting, multiplicity form, and text diagrams.

use std::fmt;

use thiserror::Error;

/// Errors raised by partition constructors and slicing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    /// A part was zero (parts must be positive integers).
    #[error("part at index {index} is not positive")]
    NonPositivePart { index: usize },
    /// The input sequence was not sorted largest-first.
    #[error("parts must be non-increasing: parts[{index}] = {value} follows {previous}")]
    NotNonIncreasing {
        index: usize,
        value: u64,
        previous: u64,
    },
    /// The operation requires at least one part.
    #[error("operation is undefined for the empty partition")]
    EmptyPartition,
    /// A split position fell outside `1..=len-1`.
    #[error("cut position {position} outside valid range 1..={max}")]
    CutOutOfRange { position: usize, max: usize },
    /// A multiplicity run list violated the strictly-decreasing-values contract.
    #[error("multiplicity runs must have strictly decreasing positive values and positive counts (run {index})")]
    InvalidRun { index: usize },
}

/// An integer partition: a finite non-increasing sequence of positive parts.
///
/// The empty sequence is a valid partition (the additive identity `E`).
/// Values are immutable after construction, so a `Partition` can be shared
/// freely across threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// The empty partition `E` (size 0, length 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts that must already be non-increasing.
    ///
    /// Rejects zeros and order violations instead of fixing them; use
    /// [`Partition::from_unordered`] when the caller wants sorting.
    pub fn from_parts(parts: Vec<u64>) -> Result<Self, PartitionError> {
        for (index, &value) in parts.iter().enumerate() {
            if value == 0 {
                return Err(PartitionError::NonPositivePart { index });
            }
            if index > 0 && value > parts[index - 1] {
                return Err(PartitionError::NotNonIncreasing {
                    index,
                    value,
                    previous: parts[index - 1],
                });
            }
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, sorting them largest-first.
    pub fn from_unordered(mut parts: Vec<u64>) -> Result<Self, PartitionError> {
        if let Some(index) = parts.iter().position(|&v| v == 0) {
            return Err(PartitionError::NonPositivePart { index });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or `None` for the empty partition.
    pub fn first_part(&self) -> Option<u64> {
        self.parts.first().copied()
    }

    /// The conjugate partition: part `k` of the result counts how many parts
    /// of `self` are `>= k` (transposing the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let Some(&width) = self.parts.first() else {
            return Partition::empty();
        };
        let mut cols = Vec::with_capacity(width as usize);
        for k in 1..=width {
            // parts are sorted, so the count of parts >= k is a prefix length
            let count = self.parts.iter().take_while(|&&p| p >= k).count() as u64;
            cols.push(count);
        }
        Partition { parts: cols }
    }

    /// Ground-truth self-conjugacy test: conjugate and compare part-for-part.
    pub fn is_self_conjugate_oracle(&self) -> bool {
        self.conjugate() == *self
    }

    /// Returns `Some(d)` when the first part and the number of parts both
    /// equal `d`; `None` for other non-empty partitions.
    pub fn dimension(&self) -> Result<Option<u64>, PartitionError> {
        let first = self.first_part().ok_or(PartitionError::EmptyPartition)?;
        if first == self.parts.len() as u64 {
            Ok(Some(first))
        } else {
            Ok(None)
        }
    }

    /// Run-length encoding of the parts as (distinct value, multiplicity)
    /// pairs, values strictly decreasing.
    pub fn to_multiplicities(&self) -> MultiplicityForm {
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for &part in &self.parts {
            match runs.last_mut() {
                Some((value, count)) if *value == part => *count += 1,
                _ => runs.push((part, 1)),
            }
        }
        MultiplicityForm { runs }
    }

    /// Partition addition: multiset union of the parts, kept non-increasing.
    ///
    /// Commutative and associative; `E` is the identity.
    pub fn add(&self, other: &Partition) -> Partition {
        let mut merged = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        merged.push(x);
                        a.next();
                    } else {
                        merged.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    merged.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    merged.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Partition { parts: merged }
    }

    /// Splits into contiguous slices at the given positions (strictly
    /// increasing, each in `1..=len-1`). Adding the slices back together
    /// reproduces `self`.
    pub fn split_contiguous(&self, cuts: &[usize]) -> Result<Vec<Partition>, PartitionError> {
        let max = self.parts.len().saturating_sub(1);
        let mut previous = 0usize;
        for &position in cuts {
            if position < 1 || position > max || (previous > 0 && position <= previous) {
                return Err(PartitionError::CutOutOfRange { position, max });
            }
            previous = position;
        }
        let mut pieces = Vec::with_capacity(cuts.len() + 1);
        let mut start = 0usize;
        for &position in cuts {
            pieces.push(Partition {
                parts: self.parts[start..position].to_vec(),
            });
            start = position;
        }
        pieces.push(Partition {
            parts: self.parts[start..].to_vec(),
        });
        Ok(pieces)
    }

    /// Young diagram: one row of `#` per part, newline-terminated rows,
    /// largest part on top. The empty partition renders as the empty string.
    pub fn render_young(&self) -> String {
        let mut out = String::new();
        for &part in &self.parts {
            for _ in 0..part {
                out.push('#');
            }
            out.push('\n');
        }
        out
    }

    /// Ferrers diagram: like [`render_young`](Self::render_young) but each
    /// cell is `*` and cells within a row are separated by single spaces.
    pub fn render_ferrers(&self) -> String {
        let mut out = String::new();
        for &part in &self.parts {
            for column in 0..part {
                if column > 0 {
                    out.push(' ');
                }
                out.push('*');
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// Ordered run-length form of a partition: (distinct part, multiplicity)
/// pairs with strictly decreasing part values. Bijective with [`Partition`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityForm {
    runs: Vec<(u64, u64)>,
}

impl MultiplicityForm {
    /// Validates and wraps explicit runs: values strictly decreasing and
    /// positive, multiplicities at least 1.
    pub fn new(runs: Vec<(u64, u64)>) -> Result<Self, PartitionError> {
        for (index, &(value, count)) in runs.iter().enumerate() {
            if value == 0 || count == 0 {
                return Err(PartitionError::InvalidRun { index });
            }
            if index > 0 && value >= runs[index - 1].0 {
                return Err(PartitionError::InvalidRun { index });
            }
        }
        Ok(MultiplicityForm { runs })
    }

    /// The runs, by strictly decreasing part value.
    pub fn runs(&self) -> &[(u64, u64)] {
        &self.runs
    }

    /// Total number of parts in the expanded partition.
    pub fn part_count(&self) -> u64 {
        self.runs.iter().map(|&(_, count)| count).sum()
    }

    /// Expands the runs back into the unique partition they encode.
    pub fn expand(&self) -> Partition {
        let mut parts = Vec::new();
        for &(value, count) in &self.runs {
            for _ in 0..count {
                parts.push(value);
            }
        }
        Partition { parts }
    }
}

impl fmt::Display for MultiplicityForm {
    /// Exponent notation, e.g. `[5^2,3,2^2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &(value, count)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if count == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value}^{count}")?;
            }
        }
        write!(f, "]")
    }
}
