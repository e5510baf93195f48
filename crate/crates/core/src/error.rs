use alloc::string::String;

use crate::twobridge::TwoBridgeKnot;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("{num}/{den} is not in lowest terms")]
    NotReduced { num: i64, den: i64 },

    #[error("continued fraction must have at least one entry")]
    EmptyExpansion,

    #[error("continued fraction entry {index} is zero")]
    ZeroEntry { index: usize },

    #[error("invalid slope {num}/{den}: {reason}")]
    InvalidSlope {
        num: i64,
        den: i64,
        reason: &'static str,
    },

    #[error("{p}/{q} is a two-bridge link, not a knot (even numerator)")]
    Link { p: i64, q: i64 },

    #[error("{p}/{q} is the unknot")]
    Unknot { p: i64, q: i64 },

    #[error("{q} has no inverse modulo {p}")]
    NotInvertible { q: i64, p: i64 },

    #[error("not a canonical positive expansion: {0}")]
    NotCanonical(String),

    #[error("expansion {cf} is neither Type A nor Type B: {reason}")]
    NotSymmetric { cf: String, reason: &'static str },

    #[error("positive expansions of {knot} disagree on crossing sum ({sums:?})")]
    CrossingSumMismatch { knot: TwoBridgeKnot, sums: [u64; 4] },

    #[error("semi-even bound {m} for {knot} does not exceed c(K) = {c} although Step 1 failed")]
    SemiEvenBoundTooSmall { knot: TwoBridgeKnot, m: u64, c: u64 },

    #[error("{knot} was enumerated at {expected} crossings but has c(K) = {actual}")]
    CrossingNumberMismatch {
        knot: TwoBridgeKnot,
        expected: u64,
        actual: u64,
    },

    #[error("global enumeration never reached {knot} by {bound} crossings")]
    OracleIncomplete { knot: TwoBridgeKnot, bound: u64 },

    #[error("cross-check failed for {knot}: staged c2 = {staged}, global enumeration = {global}")]
    CrossCheck {
        knot: TwoBridgeKnot,
        staged: u64,
        global: u64,
    },

    #[error("invalid crossing range {min}..={max}")]
    InvalidRange { min: u64, max: u64 },
}
