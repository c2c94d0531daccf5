//! Support for the command-line front end: the exponent-notation partition
//! literal, display merging of unit frames into wider Ls, and number
//! grouping for the human-readable term trace.

use thiserror::Error;

use crate::partition::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("empty literal; expected terms like \"5^2,3,2^2\"")]
    Empty,
    #[error("term {index} ({term:?}) is not INT or INT^INT")]
    BadTerm { index: usize, term: String },
    #[error("term {index} ({term:?}) has zero multiplicity")]
    ZeroMultiplicity { index: usize, term: String },
    #[error("literal does not form a partition: {source}")]
    NotAPartition {
        #[from]
        source: PartitionError,
    },
}

/// Parses the literal grammar `TERM (',' TERM)*` with `TERM ::= INT |
/// INT '^' INT` (value `^` multiplicity), so `"2^3,1^2"` and `"2,2,2,1,1"`
/// denote the same partition. Parts must come out non-increasing.
pub fn parse_literal(text: &str) -> Result<Partition, LiteralError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(LiteralError::Empty);
    }
    let mut parts = Vec::new();
    for (index, raw_term) in trimmed.split(',').enumerate() {
        let term = raw_term.trim();
        let bad = || LiteralError::BadTerm {
            index: index + 1,
            term: term.to_string(),
        };
        let (value_text, count_text) = match term.split_once('^') {
            Some((v, c)) => (v.trim(), Some(c.trim())),
            None => (term, None),
        };
        let value: u64 = value_text.parse().map_err(|_| bad())?;
        let count: u64 = match count_text {
            Some(c) => c.parse().map_err(|_| bad())?,
            None => 1,
        };
        if count == 0 {
            return Err(LiteralError::ZeroMultiplicity {
                index: index + 1,
                term: term.to_string(),
            });
        }
        for _ in 0..count {
            parts.push(value);
        }
    }
    Ok(Partition::from_parts(parts)?)
}

/// A run of unit frames displayed as one fancy L of `width` layers whose
/// outermost arm is `outer_arm`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameGroup {
    pub width: u64,
    pub outer_arm: u64,
}

/// Merges adjacent unit frames into wider Ls for display: consecutive arms
/// that step down by exactly 1 sit flush against each other and fuse into a
/// single L of larger width; a gap of 2 or more starts a new group.
pub fn merge_frames(frames: &[u64]) -> Vec<FrameGroup> {
    let mut groups: Vec<FrameGroup> = Vec::new();
    let mut previous: Option<u64> = None;
    for &arm in frames {
        match (previous, groups.last_mut()) {
            (Some(prev), Some(group)) if prev == arm + 1 => group.width += 1,
            _ => groups.push(FrameGroup {
                width: 1,
                outer_arm: arm,
            }),
        }
        previous = Some(arm);
    }
    groups
}

/// Inserts `,` thousands separators into the integer part of a plain
/// decimal string (possibly signed, possibly with a fraction).
pub fn group_thousands(rendered: &str) -> String {
    let (sign, rest) = match rendered.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", rendered),
    };
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (rest, None),
    };
    let mut grouped = String::new();
    for (i, ch) in int_part.chars().enumerate() {
        if i > 0 && (int_part.len() - i) % 3 == 0 {
            grouped.push(',');
        }
        grouped.push(ch);
    }
    match frac_part {
        Some(f) => format!("{sign}{grouped}.{f}"),
        None => format!("{sign}{grouped}"),
    }
}
