//! Integer partitions and their symmetries.
//!
//! The centerpiece is a purely arithmetic test for self-conjugacy: a
//! partition is equal to its conjugate exactly when each distinct part value
//! matches a prefix sum of the part multiplicities, so the verdict never
//! needs a Young diagram. Around that sit:
//!
//! - [`partition`]: the partition value type, conjugation, addition,
//!   sub-partitioning, multiplicity form, and text diagrams;
//! - [`selfconjugate`]: the multiplicity test, special-shape classification,
//!   nest-and-egg decomposition, and the exact diagonal area balance;
//! - [`enumeration`]: exhaustive generators used as oracles everywhere else;
//! - [`series`]: truncated power series with exact integer coefficients,
//!   generating-function products, and `p(n)` by two independent routes;
//! - [`pfn`]: the convergent high-precision series for `p(n)` with a
//!   term-by-term trace, plus a congruence scanner;
//! - [`cli`]: parsing and formatting support for the `partition-lab` binary.
//!
//! ```
//! use partition_lab::{Partition, is_self_conjugate_theorem};
//!
//! let p = Partition::from_parts(vec![5, 5, 3, 2, 2])?;
//! assert!(is_self_conjugate_theorem(&p.to_multiplicities()));
//! assert!(p.is_self_conjugate_oracle());
//! # Ok::<(), partition_lab::PartitionError>(())
//! ```

pub mod cli;
pub mod enumeration;
pub mod guide;
pub mod partition;
pub mod pfn;
pub mod real;
pub mod selfconjugate;
pub mod series;

pub use partition::{MultiplicityForm, Partition, PartitionError};
pub use selfconjugate::{
    area_balance, check_size_equality, classify_shape, decompose_nest_egg,
    is_self_conjugate_theorem, theorem_checks, AreaBalance, EggShape, NestEggDecomposition,
    NestError, ShapeClass,
};
