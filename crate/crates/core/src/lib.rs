//! Ordinal arithmetic, finite posets and hyperspace calculations for
//! scattered Priestley spaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`ordinal`]: Cantor normal forms below ε₀ with ordinary and natural
//!   (Hessenberg) operations.
//! - [`poset`]: finite posets as bitsets, downsets, widths and rank
//!   computations on the downset lattice.
//! - [`hyperspace`]: the join-semilattice of nonempty downsets of a finite
//!   poset, selectors, the universal extension and a one-point
//!   compactification model.
//! - [`space`]: symbolic scattered spaces and height/rank bounds for their
//!   hyperspaces.
//! - [`clopen`]: clopen subsets of ordinal spaces `[0, α]` and tree-like
//!   neighbourhood selectors.
//! - [`mrowka`]: eventually periodic almost disjoint families and the
//!   associated Mrówka-type join-semilattice.
//! - [`cli`] and [`selftest`]: the command line front end.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod clopen;
pub mod gen;
pub mod hyperspace;
pub mod mrowka;
pub mod ordinal;
pub mod poset;
pub mod report;
pub mod selftest;
pub mod space;

pub use ordinal::{NatOrOmega, Ordinal};
pub use poset::Poset;
