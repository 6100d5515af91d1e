//! The guide's code blocks, compiled and run as doc-tests.
//!
//! mdBook renders `book/` but does not execute the Rust snippets inside it,
//! so each chapter is also included here as the documentation of an empty
//! module. `cargo test -p graphvar-book --doc` then runs every code block,
//! which keeps the book and the library in sync: a snippet that stops
//! compiling or asserting fails the workspace tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/components.md")]
pub mod components {}

#[doc = include_str!("../../../book/src/mcd.md")]
pub mod mcd {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
