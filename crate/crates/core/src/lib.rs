//! Finite combinatorics of free dimension.
//!
//! This crate realizes, on finite ground sets, the objects used to bound the
//! growth of joint refinements of covers: atoms of generated Boolean
//! subalgebras, Boolean independence and the classes `I(d)`, Sauer–Shelah
//! witnesses, interval and initial chain algebras, free products, and a cover
//! refinement calculus with the counting argument that separates products of
//! nonmetrizable factors.
//!
//! Everything here is a finite shadow. Stone spaces, metrizability and
//! topological cofinality have no finite counterpart; a check that passes on
//! finite data is evidence, never a certificate about an infinite space.
//!
//! The guide in `book/` walks through each module; its Rust snippets are
//! compiled and run as doc-tests of this crate.

pub mod algebras;
pub mod bitset;
pub mod coverlab;
mod error;
pub mod setsys;

pub use bitset::PointSet;
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/atoms.md")]
    mod atoms {}
    #[doc = include_str!("../../../book/src/independence.md")]
    mod independence {}
    #[doc = include_str!("../../../book/src/chains.md")]
    mod chains {}
    #[doc = include_str!("../../../book/src/products.md")]
    mod products {}
    #[doc = include_str!("../../../book/src/covers.md")]
    mod covers {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
