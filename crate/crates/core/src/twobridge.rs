//! Two-bridge knots up to homeomorphism (mirror images identified).
//!
//! `K(p, q)` and `K(p', q')` are the same knot iff `p = p'` and
//! `q ≡ q'^{±1} (mod p)`; with mirrors identified `q` and `p − q` also agree.
//! A knot therefore has four slopes `p/q, p/(p−q), p/q', p/(p−q')` with
//! `qq' ≡ 1 (mod p)`, and the canonical representative uses the smallest even
//! denominator among them.

use core::fmt;

use crate::contfrac::{gcd, positive_expansion, Rational, Value};
use crate::error::{Error, Result};

/// Canonical two-bridge knot: `p` odd ≥ 3, `q` even in `(0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TwoBridgeKnot {
    p: i64,
    q: i64,
}

impl TwoBridgeKnot {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The inverse of `q` modulo `p`.
    pub fn q_inverse(&self) -> i64 {
        mod_inverse(self.q, self.p).expect("canonical knots have coprime p, q")
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.p, self.q).expect("canonical knots are reduced")
    }

    /// `[p/q, p/(p−q), p/q', p/(p−q')]`, possibly with repeats.
    pub fn slope_family(&self) -> [Rational; 4] {
        let qi = self.q_inverse();
        [self.q, self.p - self.q, qi, self.p - qi]
            .map(|d| Rational::new(self.p, d).expect("slopes are reduced"))
    }

    /// The two distinct slopes with even denominator, `p/q` and `p/q''`
    /// where `q''` is whichever of `q', p − q'` is even.
    pub fn even_denominator_slopes(&self) -> [Rational; 2] {
        let qi = self.q_inverse();
        let other = if qi % 2 == 0 { qi } else { self.p - qi };
        [self.slope(), Rational::new(self.p, other).expect("slopes are reduced")]
    }

    /// Whether `d` (taken mod `p`) is a denominator of one of the four slopes.
    pub fn has_denominator(&self, d: i64) -> bool {
        let d = d.rem_euclid(self.p);
        if d == self.q || d == self.p - self.q {
            return true;
        }
        let qi = self.q_inverse();
        d == qi || d == self.p - qi
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.p, self.q)
    }
}

/// `q'` in `(0, p)` with `q·q' ≡ 1 (mod p)`, via the extended Euclidean
/// algorithm. `q` may lie outside `(0, p)`; it is reduced first.
pub fn mod_inverse(q: i64, p: i64) -> Result<i64> {
    if p < 2 {
        return Err(Error::NotInvertible { q, p });
    }
    let (mut r0, mut r1) = (p, q.rem_euclid(p));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (s0, s1) = (s1, s0 - quot * s1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible { q, p });
    }
    Ok(s0.rem_euclid(p))
}

/// Canonical representative of `K(p, q)`. Negative `q` denotes the mirror
/// image and is accepted.
pub fn canonicalize(p: i64, q: i64) -> Result<TwoBridgeKnot> {
    if p <= 1 {
        return Err(if p.abs() <= 1 {
            Error::Unknot { p, q }
        } else {
            Error::InvalidSlope {
                num: p,
                den: q,
                reason: "numerator must be positive",
            }
        });
    }
    if p % 2 == 0 {
        return Err(Error::Link { p, q });
    }
    if q == 0 || q.abs() >= p {
        return Err(Error::InvalidSlope {
            num: p,
            den: q,
            reason: "need 0 < |q| < p",
        });
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotReduced { num: p, den: q });
    }
    let q = q.rem_euclid(p);
    let qi = mod_inverse(q, p)?;
    let pick_even = |d: i64| if d % 2 == 0 { d } else { p - d };
    let q = pick_even(q).min(pick_even(qi));
    Ok(TwoBridgeKnot { p, q })
}

/// Maps the value of a (signed) continued fraction to the knot it denotes,
/// or `None` for `∞`, the unknot and two-bridge links.
pub fn fraction_to_knot(v: Value) -> Option<TwoBridgeKnot> {
    let r = v.finite()?;
    let p = r.num().checked_abs()?;
    if p <= 1 || p % 2 == 0 {
        return None;
    }
    // the denominator is coprime to p, so it is nonzero mod p
    canonicalize(p, r.den().rem_euclid(p)).ok()
}

/// `c(K)`: the crossing sum of the positive expansions, which give reduced
/// alternating diagrams. All four slopes must agree.
pub fn crossing_number(k: &TwoBridgeKnot) -> Result<u64> {
    let mut sums = [0u64; 4];
    for (sum, slope) in sums.iter_mut().zip(k.slope_family()) {
        *sum = positive_expansion(slope)?.crossing_sum();
    }
    if sums.iter().any(|&s| s != sums[0]) {
        return Err(Error::CrossingSumMismatch { knot: *k, sums });
    }
    Ok(sums[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: i64, q: i64) -> TwoBridgeKnot {
        canonicalize(p, q).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(5, 13).unwrap(), 8);
        assert_eq!(mod_inverse(1, 7).unwrap(), 1);
        assert_eq!(mod_inverse(4, 15).unwrap(), 4);
        assert!(mod_inverse(3, 15).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(k(13, 5), TwoBridgeKnot { p: 13, q: 8 });
        assert_eq!(k(3, 2), TwoBridgeKnot { p: 3, q: 2 });
        assert_eq!(k(15, 11), TwoBridgeKnot { p: 15, q: 4 });
        assert_eq!(k(13, -5), k(13, 8));
    }

    #[test]
    fn canonicalize_rejects() {
        assert_eq!(canonicalize(4, 3), Err(Error::Link { p: 4, q: 3 }));
        assert_eq!(canonicalize(1, 1), Err(Error::Unknot { p: 1, q: 1 }));
        assert!(matches!(canonicalize(15, 5), Err(Error::NotReduced { .. })));
        assert!(matches!(canonicalize(7, 7), Err(Error::InvalidSlope { .. })));
        assert!(matches!(canonicalize(7, 0), Err(Error::InvalidSlope { .. })));
    }

    #[test]
    fn slope_family_examples() {
        assert_eq!(k(13, 8).slope_family(), [r(13, 8), r(13, 5), r(13, 5), r(13, 8)]);
        assert_eq!(k(3, 2).slope_family(), [r(3, 2), r(3, 1), r(3, 2), r(3, 1)]);
        assert_eq!(k(15, 4).slope_family(), [r(15, 4), r(15, 11), r(15, 4), r(15, 11)]);
    }

    #[test]
    fn fraction_to_knot_examples() {
        assert_eq!(fraction_to_knot(Value::Finite(r(13, 8))), Some(k(13, 8)));
        assert_eq!(fraction_to_knot(Value::Finite(r(-13, 8))), Some(k(13, 8)));
        assert_eq!(fraction_to_knot(Value::Finite(r(-1, 2))), None);
        assert_eq!(fraction_to_knot(Value::Finite(r(8, 3))), None);
        assert_eq!(fraction_to_knot(Value::Infinite), None);
        // denominators beyond p reduce mod p
        assert_eq!(fraction_to_knot(Value::Finite(r(13, 21))), Some(k(13, 8)));
    }

    #[test]
    fn crossing_number_examples() {
        assert_eq!(crossing_number(&k(13, 8)).unwrap(), 6);
        assert_eq!(crossing_number(&k(3, 2)).unwrap(), 3);
        assert_eq!(crossing_number(&k(15, 4)).unwrap(), 7);
    }

    #[test]
    fn denominator_membership() {
        let knot = k(13, 8);
        for d in [8, 5, 21, -5] {
            assert!(knot.has_denominator(d));
        }
        assert!(!knot.has_denominator(2));
    }
}
