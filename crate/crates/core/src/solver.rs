//! Computing `c₂(K)`, the smallest crossing sum of a Type A or Type B
//! continued fraction representing a two-bridge knot.
//!
//! The staged algorithm ([`c2`]):
//!
//! 1. Test both positive expansions of all four slopes. A Type A/B hit means
//!    `c₂ = c(K)`.
//! 2. Otherwise take the semi-even expansions of the two even-denominator
//!    slopes; the smallest crossing sum `m` bounds `c₂` from above. If
//!    `m = c(K) + 1` we are done.
//! 3. Otherwise enumerate every signed Type A/B sequence with crossing sum
//!    `t = c(K)+1, …, m−1` and stop at the first one representing the knot.
//!    If none does, `c₂ = m`.
//!
//! [`global_c2_map`] is an independent route to the same numbers: it sweeps
//! all Type A/B sequences by increasing crossing sum and records where each
//! knot first shows up.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::contfrac::{
    classify_entries, eval_entries, positive_expansion, positive_expansion_variant,
    semi_even_expansion, ContinuedFraction, ExpansionClass, Value,
};
use crate::error::{Error, Result};
use crate::table::enumerate_knots;
use crate::twobridge::{crossing_number, fraction_to_knot, TwoBridgeKnot};

/// Which stage of the algorithm fixed the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Method {
    Step1,
    Step2,
    Search,
    ExhaustedToBound,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Step1 => "Step1",
            Method::Step2 => "Step2",
            Method::Search => "Search",
            Method::ExhaustedToBound => "ExhaustedToBound",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C2Result {
    pub knot: TwoBridgeKnot,
    /// `c₂(K)`.
    pub value: u64,
    pub witness: ContinuedFraction,
    pub witness_class: ExpansionClass,
    pub method: Method,
    /// Smallest semi-even crossing sum over the even-denominator slopes.
    pub semi_even_bound: u64,
    /// `c(K)`.
    pub base_crossing: u64,
}

impl C2Result {
    /// `c₂(K) − c(K)`.
    pub fn offset(&self) -> u64 {
        self.value - self.base_crossing
    }
}

/// Whether the slice evaluates to a slope of `k`.
fn represents(entries: &[i64], k: &TwoBridgeKnot) -> Result<bool> {
    Ok(match eval_entries(entries)? {
        Value::Finite(r) => r.num().abs() == k.p() && k.has_denominator(r.den()),
        Value::Infinite => false,
    })
}

fn semi_even_witness(k: &TwoBridgeKnot) -> Result<ContinuedFraction> {
    let [a, b] = k.even_denominator_slopes();
    let a = semi_even_expansion(a)?;
    let b = semi_even_expansion(b)?;
    // ties go to the canonical slope
    Ok(if b.crossing_sum() < a.crossing_sum() { b } else { a })
}

/// Step 1: both positive expansions of every slope, in slope-family order.
pub fn step1_check(k: &TwoBridgeKnot) -> Result<Option<C2Result>> {
    let c = crossing_number(k)?;
    for slope in k.slope_family() {
        let canonical = positive_expansion(slope)?;
        let variant = positive_expansion_variant(&canonical)?;
        for cf in [canonical, variant] {
            let class = cf.classify();
            if class != ExpansionClass::Neither {
                return Ok(Some(C2Result {
                    knot: *k,
                    value: c,
                    witness: cf,
                    witness_class: class,
                    method: Method::Step1,
                    semi_even_bound: semi_even_witness(k)?.crossing_sum(),
                    base_crossing: c,
                }));
            }
        }
    }
    Ok(None)
}

/// Step 2: `m`, the semi-even upper bound. Only meaningful once Step 1 has
/// failed, which forces `m > c(K)`.
pub fn step2_bound(k: &TwoBridgeKnot) -> Result<u64> {
    let m = semi_even_witness(k)?.crossing_sum();
    let c = crossing_number(k)?;
    if m <= c {
        return Err(Error::SemiEvenBoundTooSmall { knot: *k, m, c });
    }
    Ok(m)
}

/// Visits every signed Type A/B sequence with crossing sum `t` exactly once.
///
/// Order: by length; within a length by magnitudes (lexicographic); within
/// magnitudes by sign pattern, read as a binary number with the first free
/// entry most significant and `1` meaning negative. Type A sequences sign each
/// entry independently, Type B sequences mirror the signs of their first half
/// so they stay palindromes. The slice passed to `f` is only valid for the
/// duration of the call.
pub fn for_each_type_ab<B>(t: u64, mut f: impl FnMut(&[i64]) -> ControlFlow<B>) -> Option<B> {
    let t = t as i64;
    let mut mags: Vec<i64> = Vec::with_capacity(t as usize);
    let mut signed: Vec<i64> = Vec::with_capacity(t as usize);
    for n in 1..=t as usize {
        mags.clear();
        let flow = if n % 2 == 0 {
            type_a_magnitudes(n, t, &mut mags, &mut |m| {
                visit_signs(m, m.len(), false, &mut signed, &mut f)
            })
        } else {
            let free = n / 2 + 1;
            // 2·Σ(first half) + centre = t, so the centre has t's parity
            if t % 2 == 0 {
                continue;
            }
            type_b_half(free, t, &mut mags, &mut |m| {
                visit_signs(m, free, true, &mut signed, &mut f)
            })
        };
        if let ControlFlow::Break(b) = flow {
            return Some(b);
        }
    }
    None
}

/// Magnitudes `m₁ … mₙ` with `Σ = t`, `mᵢ ≥ 1`, even `mᵢ ≥ 2` at even
/// (1-based) positions.
fn type_a_magnitudes<B>(
    n: usize,
    remaining: i64,
    mags: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let pos = mags.len();
    let even_pos = pos % 2 == 1;
    let left = n - pos - 1;
    if left == 0 {
        if remaining >= 1 && (!even_pos || remaining % 2 == 0) {
            mags.push(remaining);
            let flow = f(mags);
            mags.pop();
            return flow;
        }
        return ControlFlow::Continue(());
    }
    // cheapest completion of the positions after this one
    let after_even = (pos + 1..n).filter(|i| i % 2 == 1).count();
    let min_rest = (left + after_even) as i64;
    let step = if even_pos { 2 } else { 1 };
    let mut v = step;
    while v + min_rest <= remaining {
        mags.push(v);
        type_a_magnitudes(n, remaining - v, mags, f)?;
        mags.pop();
        v += step;
    }
    ControlFlow::Continue(())
}

/// First half `h₁ … h_k` plus odd centre `c` with `2·Σh + c = t`, pushed as
/// `[h₁, …, h_k, c]`.
fn type_b_half<B>(
    free: usize,
    remaining: i64,
    mags: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let pos = mags.len();
    if pos + 1 == free {
        if remaining >= 1 && remaining % 2 == 1 {
            mags.push(remaining);
            let flow = f(mags);
            mags.pop();
            return flow;
        }
        return ControlFlow::Continue(());
    }
    // remaining halves ≥ 1 each (counted twice), centre ≥ 1
    let min_rest = 2 * (free - pos - 2) as i64 + 1;
    let mut v = 1;
    while 2 * v + min_rest <= remaining {
        mags.push(v);
        type_b_half(free, remaining - 2 * v, mags, f)?;
        mags.pop();
        v += 1;
    }
    ControlFlow::Continue(())
}

fn visit_signs<B>(
    mags: &[i64],
    free: usize,
    palindrome: bool,
    signed: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    for mask in 0u64..(1u64 << free) {
        signed.clear();
        signed.extend(mags.iter().enumerate().map(|(i, &m)| {
            if mask >> (free - 1 - i) & 1 == 1 {
                -m
            } else {
                m
            }
        }));
        if palindrome {
            for i in (0..free - 1).rev() {
                signed.push(signed[i]);
            }
        }
        f(signed)?;
    }
    ControlFlow::Continue(())
}

/// All Type A/B sequences of crossing sum `t` in enumeration order. Small `t`
/// only; the search itself streams through [`for_each_type_ab`].
pub fn enumerate_type_ab(t: u64) -> Vec<ContinuedFraction> {
    let mut out = Vec::new();
    for_each_type_ab::<()>(t, |s| {
        out.push(ContinuedFraction::from_slice(s).expect("enumerated entries are nonzero"));
        ControlFlow::Continue(())
    });
    out
}

/// First Type A/B sequence with crossing sum `t` representing `k`.
pub fn search_at(k: &TwoBridgeKnot, t: u64) -> Result<Option<ContinuedFraction>> {
    let hit = for_each_type_ab(t, |s| match represents(s, k) {
        Ok(true) => ControlFlow::Break(Ok(ContinuedFraction::from_slice(s))),
        Ok(false) => ControlFlow::Continue(()),
        Err(e) => ControlFlow::Break(Err(e)),
    });
    match hit {
        None => Ok(None),
        Some(r) => Ok(Some(r??)),
    }
}

/// `c₂(K)` with a witness expansion and the stage that decided it.
pub fn c2(k: &TwoBridgeKnot) -> Result<C2Result> {
    if let Some(done) = step1_check(k)? {
        return Ok(done);
    }
    let c = crossing_number(k)?;
    let m = step2_bound(k)?;
    let result = |value, witness: ContinuedFraction, method| C2Result {
        knot: *k,
        value,
        witness_class: witness.classify(),
        witness,
        method,
        semi_even_bound: m,
        base_crossing: c,
    };
    if m == c + 1 {
        return Ok(result(m, semi_even_witness(k)?, Method::Step2));
    }
    for t in c + 1..m {
        if let Some(w) = search_at(k, t)? {
            return Ok(result(t, w, Method::Search));
        }
    }
    Ok(result(m, semi_even_witness(k)?, Method::ExhaustedToBound))
}

/// Independent oracle: the crossing sum at which each knot with
/// `c(K) ≤ max_crossing` first appears among all Type A/B sequences, with the
/// first such sequence.
pub fn global_c2_map(max_crossing: u64) -> Result<BTreeMap<TwoBridgeKnot, (u64, ContinuedFraction)>> {
    let mut pending = BTreeSet::new();
    let mut bound = 0;
    for c in 3..=max_crossing {
        for k in enumerate_knots(c)? {
            bound = bound.max(semi_even_witness(&k)?.crossing_sum());
            pending.insert(k);
        }
    }
    let mut found = BTreeMap::new();
    let mut t = 1;
    while !pending.is_empty() && t <= bound {
        let err = for_each_type_ab(t, |s| {
            let v = match eval_entries(s) {
                Ok(v) => v,
                Err(e) => return ControlFlow::Break(e),
            };
            if let Some(k) = fraction_to_knot(v) {
                if pending.remove(&k) {
                    found.insert(
                        k,
                        (t, ContinuedFraction::from_slice(s).expect("enumerated entries are nonzero")),
                    );
                }
            }
            ControlFlow::Continue(())
        });
        if let Some(e) = err {
            return Err(e);
        }
        t += 1;
    }
    if let Some(&knot) = pending.first() {
        return Err(Error::OracleIncomplete { knot, bound });
    }
    Ok(found)
}

/// Brute-force list of every signed sequence with crossing sum `t` that
/// classifies as Type A or B, built from all compositions and sign patterns.
/// Exponential; for cross-checking the enumeration on small `t`.
pub fn brute_force_type_ab(t: u64) -> Vec<Vec<i64>> {
    let t = t as usize;
    let mut out = Vec::new();
    // compositions of t ↔ subsets of the t−1 cut points
    for cuts in 0u64..(1u64 << (t - 1)) {
        let mut parts = vec![];
        let mut run = 1i64;
        for i in 0..t - 1 {
            if cuts >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        for signs in 0u64..(1u64 << parts.len()) {
            let s: Vec<i64> = parts
                .iter()
                .enumerate()
                .map(|(i, &a)| if signs >> i & 1 == 1 { -a } else { a })
                .collect();
            if classify_entries(&s) != ExpansionClass::Neither {
                out.push(s);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twobridge::{canonicalize, mod_inverse};

    fn k(p: i64, q: i64) -> TwoBridgeKnot {
        canonicalize(p, q).unwrap()
    }

    fn cf(v: &[i64]) -> ContinuedFraction {
        ContinuedFraction::from_slice(v).unwrap()
    }

    #[test]
    fn step1_examples() {
        let r = step1_check(&k(3, 2)).unwrap().unwrap();
        assert_eq!((r.value, r.witness_class), (3, ExpansionClass::TypeA));
        assert_eq!(r.witness, cf(&[1, 2]));
        assert!(step1_check(&k(13, 8)).unwrap().is_none());
        let r = step1_check(&k(15, 4)).unwrap().unwrap();
        assert_eq!(r.value, 7);
        assert_eq!(r.witness, cf(&[3, 1, 3]));
        assert_eq!(r.witness_class, ExpansionClass::TypeB);
    }

    #[test]
    fn step1_sees_trailing_one_palindromes() {
        // 15/11 = [1,2,1,3] = [1,2,1,2,1]
        let r = step1_check(&k(15, 11)).unwrap().unwrap();
        assert_eq!(r.method, Method::Step1);
    }

    #[test]
    fn step2_examples() {
        assert_eq!(step2_bound(&k(13, 8)).unwrap(), 7);
        // Step 1 decides 5/2 = [2,2]; the bound check then trips
        assert!(step1_check(&k(5, 2)).unwrap().is_some());
        assert!(matches!(
            step2_bound(&k(5, 2)),
            Err(Error::SemiEvenBoundTooSmall { .. })
        ));
    }

    #[test]
    fn k_17_12_is_decided_by_step1() {
        let knot = k(17, 12);
        assert_eq!(knot, k(17, 10));
        assert_eq!(mod_inverse(12, 17).unwrap(), 10);
        // 17/12 = [1,2,2,2] is already Type A
        let r = step1_check(&knot).unwrap().unwrap();
        assert_eq!(r.value, 7);
        assert_eq!(semi_even_expansion(crate::Rational::new(17, 12).unwrap()).unwrap(), cf(&[1, 2, 2, 2]));
        assert!(step2_bound(&knot).is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_type_ab(1), [cf(&[1]), cf(&[-1])]);
        let three = enumerate_type_ab(3);
        for s in [
            &[1, 2][..],
            &[-1, 2],
            &[1, -2],
            &[-1, -2],
            &[3],
            &[-3],
            &[1, 1, 1],
            &[-1, 1, -1],
            &[1, -1, 1],
            &[-1, -1, -1],
        ] {
            assert!(three.contains(&cf(s)), "missing {s:?}");
        }
        assert_eq!(three.len(), 10);
        // no Type B at even crossing sums
        assert!(enumerate_type_ab(4).iter().all(|c| c.len() % 2 == 0));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for t in 1..=8 {
            let mut fast: Vec<Vec<i64>> =
                enumerate_type_ab(t).iter().map(|c| c.entries().to_vec()).collect();
            let n = fast.len();
            fast.sort();
            fast.dedup();
            assert_eq!(fast.len(), n, "duplicates at t = {t}");
            let mut slow = brute_force_type_ab(t);
            slow.sort();
            assert_eq!(fast, slow, "t = {t}");
            assert!(fast.iter().all(|s| crate::contfrac::crossing_sum(s) == t));
        }
    }

    #[test]
    fn search_examples() {
        let w = search_at(&k(13, 8), 7).unwrap().unwrap();
        assert_eq!(w.crossing_sum(), 7);
        assert_ne!(w.classify(), ExpansionClass::Neither);
        assert_eq!(fraction_to_knot(w.eval().unwrap()), Some(k(13, 8)));
        assert_eq!(search_at(&k(13, 8), 6).unwrap(), None);
        // [3] = 3/1 precedes [1,2] in enumeration order
        assert_eq!(search_at(&k(3, 2), 3).unwrap(), Some(cf(&[3])));
    }

    #[test]
    fn c2_examples() {
        let r = c2(&k(13, 5)).unwrap();
        assert_eq!((r.value, r.base_crossing, r.semi_even_bound), (7, 6, 7));
        assert_eq!(r.method, Method::Step2);
        assert_eq!(r.witness, cf(&[1, 2, -2, -2]));
        let r = c2(&k(3, 2)).unwrap();
        assert_eq!((r.value, r.method), (3, Method::Step1));
    }

    #[test]
    fn oracle_small() {
        let map = global_c2_map(6).unwrap();
        assert_eq!(map.len(), 1 + 1 + 2 + 3);
        assert_eq!(map[&k(13, 8)].0, 7);
        for (knot, (value, _)) in &map {
            assert_eq!(c2(knot).unwrap().value, *value, "{knot}");
        }
    }
}
