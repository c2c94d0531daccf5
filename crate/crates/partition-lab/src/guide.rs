//! The guide chapters from `book/`, included here so `cargo test --doc`
//! compiles and runs every code block in the book. mdbook renders the same
//! files, so the book and the crate cannot drift apart.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/multiplicity-test.md")]
pub mod multiplicity_test {}

#[doc = include_str!("../../../book/src/shapes-and-nesting.md")]
pub mod shapes_and_nesting {}

#[doc = include_str!("../../../book/src/area-balance.md")]
pub mod area_balance {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/generating-functions.md")]
pub mod generating_functions {}

#[doc = include_str!("../../../book/src/exact-series.md")]
pub mod exact_series {}

#[doc = include_str!("../../../book/src/congruences.md")]
pub mod congruences {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli_guide {}
