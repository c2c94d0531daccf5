//! Self-conjugacy from part multiplicities, special-shape classification,
//! nest-and-egg decomposition, and the diagonal area balance.
//!
//! The multiplicity test is the heart of the crate: a partition with distinct
//! part values `v_0 > v_1 > ... > v_m` and multiplicities `x_0, ..., x_m` is
//! self-conjugate exactly when every `v_j` equals `x_0 + x_1 + ... + x_{m-j}`,
//! so the verdict needs no Young diagram at all.

use num_rational::Rational64;
use thiserror::Error;

use crate::partition::{MultiplicityForm, Partition, PartitionError};

/// Errors from frame peeling and recomposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NestError {
    /// Asked to remove more rows/columns than the partition has.
    #[error("frame of width {width} does not fit (needs first part and length >= {width})")]
    FrameTooWide { width: u64 },
    /// A frame arm is too short to wrap around what is inside it.
    #[error("frame arm {arm} cannot wrap content of extent {extent} (needs arm > extent)")]
    InconsistentFrames { arm: u64, extent: u64 },
    /// The decomposition carries a residual, so there is nothing to rebuild.
    #[error("decomposition has a residual; the input was not self-conjugate")]
    ResidualPresent,
}

/// One line of the multiplicity test: does the distinct part `value` equal
/// the sum of the multiplicities `terms`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    /// Distinct part value being checked (j-th largest).
    pub value: u64,
    /// The multiplicities whose sum must equal `value`.
    pub terms: Vec<u64>,
    /// Sum of `terms`.
    pub sum: u64,
    pub holds: bool,
}

/// The per-part checks behind [`is_self_conjugate_theorem`], in the order the
/// verdict is formed: the largest distinct part against the sum of all
/// multiplicities, then each next part against one fewer multiplicity.
/// Stops after the first failing check.
pub fn theorem_checks(form: &MultiplicityForm) -> Vec<TheoremCheck> {
    let runs = form.runs();
    let count = runs.len();
    // prefix[t] = sum of the multiplicities of the t largest distinct parts
    let mut prefix = Vec::with_capacity(count + 1);
    prefix.push(0u64);
    for &(_, mult) in runs {
        prefix.push(prefix.last().unwrap() + mult);
    }
    let mut checks = Vec::with_capacity(count);
    for (j, &(value, _)) in runs.iter().enumerate() {
        let take = count - j;
        let sum = prefix[take];
        let terms = runs[..take].iter().map(|&(_, mult)| mult).collect();
        let holds = value == sum;
        checks.push(TheoremCheck {
            value,
            terms,
            sum,
            holds,
        });
        if !holds {
            break;
        }
    }
    checks
}

/// Multiplicity criterion for self-conjugacy. Agrees with
/// [`Partition::is_self_conjugate_oracle`] on every partition; the empty
/// form is self-conjugate.
pub fn is_self_conjugate_theorem(form: &MultiplicityForm) -> bool {
    theorem_checks(form).iter().all(|check| check.holds)
}

/// Necessary condition: the first part equals the number of parts.
/// A `false` here already rules out self-conjugacy.
pub fn check_size_equality(partition: &Partition) -> Result<bool, PartitionError> {
    let first = partition
        .first_part()
        .ok_or(PartitionError::EmptyPartition)?;
    Ok(first == partition.len() as u64)
}

/// The special shapes that are self-conjugate by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    Empty,
    /// `d` parts all equal to `d`: a square Young diagram.
    PureDurfeeSquare(u64),
    /// The staircase `[d, d-1, ..., 1]`.
    FancyTriangle(u64),
    /// `[d, 1, 1, ..., 1]` with `d` parts, `d >= 2`: one full row and column.
    FancyL(u64),
    Other,
}

/// Classifies a partition against the special shapes. Overlaps resolve in
/// the order square, triangle, L: `[1]` is a square, `[2,1]` a triangle.
pub fn classify_shape(partition: &Partition) -> ShapeClass {
    let parts = partition.parts();
    let Some(&first) = parts.first() else {
        return ShapeClass::Empty;
    };
    let len = parts.len() as u64;
    if first == len && parts.iter().all(|&p| p == first) {
        return ShapeClass::PureDurfeeSquare(first);
    }
    if first == len && parts.iter().enumerate().all(|(i, &p)| p == first - i as u64) {
        return ShapeClass::FancyTriangle(first);
    }
    if first == len && first >= 2 && parts[1..].iter().all(|&p| p == 1) {
        return ShapeClass::FancyL(first);
    }
    ShapeClass::Other
}

/// Removes the outer `width` rows and columns: drops the first `width`
/// parts, subtracts `width` from the rest, and discards parts that reach
/// zero.
pub fn remove_outer_frame(partition: &Partition, width: u64) -> Result<Partition, NestError> {
    let first = partition.first_part().unwrap_or(0);
    if (partition.len() as u64) < width || first < width {
        return Err(NestError::FrameTooWide { width });
    }
    let remaining: Vec<u64> = partition.parts()[width as usize..]
        .iter()
        .filter(|&&p| p > width)
        .map(|&p| p - width)
        .collect();
    Ok(Partition::from_parts(remaining).expect("slice of a partition stays non-increasing"))
}

/// The terminal core of a nest-and-egg decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EggShape {
    Empty,
    DurfeeSquare(u64),
    FancyTriangle(u64),
}

impl EggShape {
    /// Side length of the square bounding the egg's diagram.
    pub fn extent(&self) -> u64 {
        match *self {
            EggShape::Empty => 0,
            EggShape::DurfeeSquare(d) | EggShape::FancyTriangle(d) => d,
        }
    }

    pub fn to_partition(&self) -> Partition {
        let parts = match *self {
            EggShape::Empty => Vec::new(),
            EggShape::DurfeeSquare(d) => vec![d; d as usize],
            EggShape::FancyTriangle(d) => (1..=d).rev().collect(),
        };
        Partition::from_parts(parts).expect("egg shapes are valid partitions")
    }
}

/// A symmetric partition peeled into concentric unit-width L frames (the
/// nest, recorded outermost first by arm length) around a terminal egg.
/// `residual` holds the first non-symmetric state when the input was not
/// self-conjugate; the frames and egg are meaningful only when it is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestEggDecomposition {
    pub frames: Vec<u64>,
    pub egg: EggShape,
    pub residual: Option<Partition>,
}

impl NestEggDecomposition {
    /// Assembles a decomposition by hand (no residual), for recomposition.
    pub fn new(frames: Vec<u64>, egg: EggShape) -> Self {
        NestEggDecomposition {
            frames,
            egg,
            residual: None,
        }
    }

    /// Rebuilds the partition by wrapping the egg in the frames from the
    /// innermost out. Inverse of [`decompose_nest_egg`] on self-conjugate
    /// inputs.
    pub fn recompose(&self) -> Result<Partition, NestError> {
        if self.residual.is_some() {
            return Err(NestError::ResidualPresent);
        }
        let mut current = self.egg.to_partition();
        let mut extent = self.egg.extent();
        for &arm in self.frames.iter().rev() {
            if arm <= extent {
                return Err(NestError::InconsistentFrames { arm, extent });
            }
            current = wrap_in_frame(&current, arm);
            extent = arm;
        }
        Ok(current)
    }
}

/// Wraps `inner` in a unit L frame with the given arm: new first part `arm`,
/// every inner part grows by one, and short columns are padded with 1s so
/// the result has `arm` parts. Requires `arm > extent(inner)`.
fn wrap_in_frame(inner: &Partition, arm: u64) -> Partition {
    let mut parts = Vec::with_capacity(arm as usize);
    parts.push(arm);
    for &p in inner.parts() {
        parts.push(p + 1);
    }
    while parts.len() < arm as usize {
        parts.push(1);
    }
    Partition::from_parts(parts).expect("wrapping preserves non-increasing order")
}

/// Peels unit frames off a self-conjugate partition until a terminal egg
/// (empty, square, or triangle) remains, recording each frame's arm length
/// (the first part at the moment it is peeled).
///
/// A state that fails the multiplicity test stops the peel and is reported
/// in `residual`; since peeling a symmetric frame preserves symmetry, this
/// happens exactly when the input itself was not self-conjugate.
pub fn decompose_nest_egg(partition: &Partition) -> NestEggDecomposition {
    let mut frames = Vec::new();
    let mut current = partition.clone();
    loop {
        match classify_shape(&current) {
            ShapeClass::Empty => {
                return NestEggDecomposition {
                    frames,
                    egg: EggShape::Empty,
                    residual: None,
                }
            }
            ShapeClass::PureDurfeeSquare(d) => {
                return NestEggDecomposition {
                    frames,
                    egg: EggShape::DurfeeSquare(d),
                    residual: None,
                }
            }
            ShapeClass::FancyTriangle(d) => {
                return NestEggDecomposition {
                    frames,
                    egg: EggShape::FancyTriangle(d),
                    residual: None,
                }
            }
            ShapeClass::FancyL(_) | ShapeClass::Other => {}
        }
        if !is_self_conjugate_theorem(&current.to_multiplicities()) {
            return NestEggDecomposition {
                frames,
                egg: EggShape::Empty,
                residual: Some(current),
            };
        }
        let arm = current.first_part().expect("non-empty: empty is terminal");
        frames.push(arm);
        current = remove_outer_frame(&current, 1)
            .expect("a self-conjugate non-terminal partition has a unit frame");
    }
}

/// Exact areas on the two sides of the diagonal `g(x) = x` under the step
/// function of the partition (part `i` on `[i, i+1)`), in half-integer
/// rationals: `below` is the area bounded by the step function, the
/// diagonal, and the x-axis; `above` the area bounded with the y-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AreaBalance {
    pub below: Rational64,
    pub above: Rational64,
}

impl AreaBalance {
    pub fn is_balanced(&self) -> bool {
        self.below == self.above
    }
}

/// Integrates `min(f(x), x)` and `max(f(x) - x, 0)` over `[0, len]` exactly.
/// Every self-conjugate partition balances; the converse fails (e.g.
/// `[3,3,1,1]` balances without being self-conjugate).
pub fn area_balance(partition: &Partition) -> Result<AreaBalance, PartitionError> {
    if partition.is_empty() {
        return Err(PartitionError::EmptyPartition);
    }
    let mut below = Rational64::new(0, 1);
    let mut above = Rational64::new(0, 1);
    for (i, &part) in partition.parts().iter().enumerate() {
        let left = i as i64;
        let part = part as i64;
        // parts and interval ends are integers, so f is entirely on one
        // side of the diagonal within each unit interval
        if part <= left {
            below += Rational64::from_integer(part);
        } else {
            below += Rational64::new(2 * left + 1, 2);
            above += Rational64::new(2 * (part - left) - 1, 2);
        }
    }
    Ok(AreaBalance { below, above })
}
