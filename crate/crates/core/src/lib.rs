//! Exact continued-fraction machinery for two-bridge knots.
//!
//! The crate computes the two-bridge equivariant crossing number `c₂(K)` of a
//! two-bridge knot `K(p, q)`: the smallest crossing sum of a continued
//! fraction of Type A or Type B (the two shapes that draw as diagrams
//! symmetric under a half-rotation about an in-plane axis) that represents
//! the knot.
//!
//! Modules, bottom-up:
//!
//! - [`contfrac`]: rationals, continuant evaluation, positive / even /
//!   semi-even expansions, Type A/B classification.
//! - [`twobridge`]: knot canonical forms, the four slopes, `c(K)`.
//! - [`solver`]: the staged `c₂` algorithm and an independent global
//!   enumeration used to cross-check it.
//! - [`table`]: census of all two-bridge knots of a crossing number.
//! - [`render`]: SVG drawings of symmetric diagrams.
//!
//! Everything is `no_std` with `alloc`; IO lives in the `c2knot` crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod contfrac;
pub mod error;
pub mod render;
pub mod solver;
pub mod table;
pub mod twobridge;

pub use contfrac::{ContinuedFraction, ExpansionClass, Rational, Value};
pub use error::{Error, Result};
pub use solver::{c2, C2Result, Method};
pub use table::TableRow;
pub use twobridge::TwoBridgeKnot;

/// Bumped whenever a change could alter computed `c₂` values or witnesses.
/// Cached tables are keyed on it.
pub const ALGORITHM_VERSION: u32 = 1;
