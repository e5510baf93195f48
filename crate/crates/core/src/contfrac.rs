//! Exact continued fractions over `i64`.
//!
//! All arithmetic is checked; any overflow surfaces as [`Error::Overflow`]
//! instead of wrapping. The continuants for knots up to a few dozen crossings
//! stay far below `i64::MAX`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn checked_mul_add(a: i64, b: i64, c: i64) -> Result<i64> {
    a.checked_mul(b)
        .and_then(|ab| ab.checked_add(c))
        .ok_or(Error::Overflow)
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    /// Strict constructor: `num/den` must already be in lowest terms with
    /// `den ≥ 1`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        if den < 0 || gcd(num, den) != 1 {
            return Err(Error::NotReduced { num, den });
        }
        Ok(Rational { num, den })
    }

    /// Reduces `num/den` and moves the sign to the numerator.
    pub fn reduced(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(Error::Overflow)?;
            den = den.checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(Rational { num, den })
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Result of evaluating a signed continued fraction: intermediate tails of a
/// signed sequence can vanish, which makes the whole value `∞` (`1/0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Finite(Rational),
    Infinite,
}

impl Value {
    pub fn finite(self) -> Option<Rational> {
        match self {
            Value::Finite(r) => Some(r),
            Value::Infinite => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(r) => r.fmt(f),
            Value::Infinite => f.write_str("1/0"),
        }
    }
}

/// A finite continued fraction `[a₁, …, aₙ]` with nonzero integer entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct ContinuedFraction {
    entries: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyExpansion);
        }
        if let Some(index) = entries.iter().position(|&a| a == 0) {
            return Err(Error::ZeroEntry { index });
        }
        Ok(ContinuedFraction { entries })
    }

    pub fn from_slice(entries: &[i64]) -> Result<Self> {
        Self::new(entries.to_vec())
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always `false`: expansions have at least one entry.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ |aᵢ|`, the number of crossings of the associated diagram.
    pub fn crossing_sum(&self) -> u64 {
        crossing_sum(&self.entries)
    }

    pub fn eval(&self) -> Result<Value> {
        eval_entries(&self.entries)
    }

    pub fn classify(&self) -> ExpansionClass {
        classify_entries(&self.entries)
    }

    /// Every entry negated: the expansion of the mirror slope.
    pub fn negated(&self) -> Self {
        ContinuedFraction {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn to_bracket_string(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn crossing_sum(entries: &[i64]) -> u64 {
    entries.iter().map(|a| a.unsigned_abs()).sum()
}

/// Evaluates `[a₁, …, aₙ]` with the continuant recursion
/// `pᵢ = aᵢ·pᵢ₋₁ + pᵢ₋₂`, `qᵢ = aᵢ·qᵢ₋₁ + qᵢ₋₂`; no division ever happens, so
/// vanishing tails are harmless. The result is reduced because consecutive
/// continuants satisfy `pᵢqᵢ₋₁ − pᵢ₋₁qᵢ = ±1`.
///
/// Callers guarantee a nonempty slice of nonzero entries.
pub(crate) fn eval_entries(entries: &[i64]) -> Result<Value> {
    debug_assert!(!entries.is_empty());
    let (mut p_prev, mut p) = (1i64, entries[0]);
    let (mut q_prev, mut q) = (0i64, 1i64);
    for &a in &entries[1..] {
        let p_next = checked_mul_add(a, p, p_prev)?;
        let q_next = checked_mul_add(a, q, q_prev)?;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
    if q == 0 {
        return Ok(Value::Infinite);
    }
    if q < 0 {
        p = p.checked_neg().ok_or(Error::Overflow)?;
        q = -q;
    }
    Ok(Value::Finite(Rational { num: p, den: q }))
}

/// Exact value of a continued fraction.
pub fn eval_cf(cf: &ContinuedFraction) -> Result<Value> {
    cf.eval()
}

/// The ordinary expansion of `r ≥ 1` with all entries positive; the last entry
/// is at least 2 unless `r = 1`.
pub fn positive_expansion(r: Rational) -> Result<ContinuedFraction> {
    let (mut p, mut q) = (r.num, r.den);
    if p < q {
        return Err(Error::InvalidSlope {
            num: p,
            den: q,
            reason: "positive expansion needs numerator ≥ denominator ≥ 1",
        });
    }
    let mut entries = Vec::new();
    while q != 0 {
        entries.push(p / q);
        let r = p % q;
        p = q;
        q = r;
    }
    ContinuedFraction::new(entries)
}

/// `[a₁, …, aₙ]` ↦ `[a₁, …, aₙ − 1, 1]`, the other positive expansion of the
/// same value.
pub fn positive_expansion_variant(cf: &ContinuedFraction) -> Result<ContinuedFraction> {
    let entries = cf.entries();
    if entries.iter().any(|&a| a < 1) {
        return Err(Error::NotCanonical(alloc::format!(
            "{cf} has a non-positive entry"
        )));
    }
    let last = entries[entries.len() - 1];
    if last < 2 {
        return Err(Error::NotCanonical(alloc::format!(
            "{cf} already ends in 1"
        )));
    }
    let mut out = entries.to_vec();
    *out.last_mut().unwrap() = last - 1;
    out.push(1);
    ContinuedFraction::new(out)
}

/// The even integer `a` with `|x − a| < 1`, `x = num/den`, `den > 0`.
/// `None` when `x` is an odd integer (two candidates at distance 1).
fn nearest_even(num: i64, den: i64) -> Option<i64> {
    let floor = num.div_euclid(den);
    if num.rem_euclid(den) == 0 {
        return (floor % 2 == 0).then_some(floor);
    }
    Some(if floor % 2 == 0 { floor } else { floor + 1 })
}

fn require_slope(r: Rational, what: &'static str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSlope {
            num: r.num,
            den: r.den,
            reason: what,
        })
    }
}

/// The unique expansion of an odd/even slope `p/q`, `0 < q < p`, into even
/// entries. Its length is always even.
pub fn even_expansion(r: Rational) -> Result<ContinuedFraction> {
    let (p, q) = (r.num, r.den);
    require_slope(
        r,
        "even expansion needs odd p, even q and 0 < q < p",
        p % 2 != 0 && q % 2 == 0 && 0 < q && q < p,
    )?;
    let mut entries = Vec::new();
    let (mut num, mut den) = (p, q);
    loop {
        let a = nearest_even(num, den).ok_or(Error::InvalidSlope {
            num: p,
            den: q,
            reason: "reached an odd integer during even expansion",
        })?;
        entries.push(a);
        let rem = num - a * den;
        if rem == 0 {
            break;
        }
        // x − a = rem/den, so the next value is den/rem with |den/rem| > 1
        (num, den) = if rem > 0 { (den, rem) } else { (-den, -rem) };
    }
    ContinuedFraction::new(entries)
}

/// Greedy expansion with even entries at every even position.
///
/// At a step with current value `P/Q` the position is constrained exactly when
/// `P` is even: constrained positions take the even integer nearest to `P/Q`
/// (strictly within distance 1), unconstrained ones truncate toward zero. For
/// an odd/even input the result has even length; even/odd inputs give odd
/// length with even entries at odd positions.
pub fn semi_even_expansion(r: Rational) -> Result<ContinuedFraction> {
    let (p, q) = (r.num, r.den);
    require_slope(
        r,
        "semi-even expansion needs p > q ≥ 1 with exactly one of p, q even",
        p > q && q >= 1 && (p % 2 == 0) != (q % 2 == 0),
    )?;
    let mut entries = Vec::new();
    let (mut num, mut den) = (p, q);
    loop {
        let a = if num % 2 == 0 {
            // num even, gcd 1 ⇒ x is never an odd integer here
            nearest_even(num, den).expect("even numerator cannot give an odd integer")
        } else {
            num / den
        };
        entries.push(a);
        let rem = num - a * den;
        if rem == 0 {
            break;
        }
        (num, den) = if rem > 0 { (den, rem) } else { (-den, -rem) };
    }
    ContinuedFraction::new(entries)
}

/// The two symmetric diagram shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ExpansionClass {
    /// Even length, every even position (1-based) even.
    TypeA,
    /// Odd length, signed palindrome, odd central entry.
    TypeB,
    Neither,
}

impl ExpansionClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ExpansionClass::TypeA => "TypeA",
            ExpansionClass::TypeB => "TypeB",
            ExpansionClass::Neither => "Neither",
        }
    }
}

impl fmt::Display for ExpansionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn is_type_a(entries: &[i64]) -> bool {
    entries.len().is_multiple_of(2) && entries.iter().skip(1).step_by(2).all(|a| a % 2 == 0)
}

pub(crate) fn is_type_b(entries: &[i64]) -> bool {
    let n = entries.len();
    n % 2 == 1
        && entries[n / 2] % 2 != 0
        && entries.iter().eq(entries.iter().rev())
}

pub(crate) fn classify_entries(entries: &[i64]) -> ExpansionClass {
    if is_type_a(entries) {
        ExpansionClass::TypeA
    } else if is_type_b(entries) {
        ExpansionClass::TypeB
    } else {
        ExpansionClass::Neither
    }
}

pub fn classify_type(cf: &ContinuedFraction) -> ExpansionClass {
    cf.classify()
}
