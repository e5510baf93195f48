//! Census of two-bridge knots by crossing number and `c₂ − c` offset.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::contfrac::{eval_entries, ContinuedFraction};
use crate::error::{Error, Result};
use crate::solver::{c2, global_c2_map, C2Result};
use crate::twobridge::{crossing_number, fraction_to_knot, TwoBridgeKnot};

/// One row of the census: how many knots with `c(K) = c` have
/// `c₂(K) = c + j`, for each `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TableRow {
    pub c: u64,
    pub two_bridge_count: u64,
    pub offsets: BTreeMap<u64, u64>,
}

impl TableRow {
    pub fn tally(c: u64, offsets: impl IntoIterator<Item = u64>) -> Self {
        let mut row = TableRow {
            c,
            two_bridge_count: 0,
            offsets: BTreeMap::from([(0, 0)]),
        };
        for j in offsets {
            *row.offsets.entry(j).or_default() += 1;
            row.two_bridge_count += 1;
        }
        row
    }

    pub fn count_at(&self, j: u64) -> u64 {
        self.offsets.get(&j).copied().unwrap_or(0)
    }

    pub fn max_offset(&self) -> u64 {
        self.offsets.keys().next_back().copied().unwrap_or(0)
    }
}

/// Every composition of `c` (positive parts, last part ≥ 2), in lexicographic
/// order.
fn for_each_composition(c: u64, mut f: impl FnMut(&[i64])) {
    fn rec(remaining: i64, parts: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if remaining >= 2 {
            parts.push(remaining);
            f(parts);
            parts.pop();
        }
        for v in 1..remaining {
            parts.push(v);
            rec(remaining - v, parts, f);
            parts.pop();
        }
    }
    rec(c as i64, &mut Vec::new(), &mut f);
}

/// All two-bridge knots with crossing number `c`, deduplicated, ordered by
/// `(p, q)`.
pub fn enumerate_knots(c: u64) -> Result<BTreeSet<TwoBridgeKnot>> {
    let mut knots = BTreeSet::new();
    let mut err = None;
    for_each_composition(c, |parts| {
        match eval_entries(parts) {
            Ok(v) => {
                if let Some(k) = fraction_to_knot(v) {
                    knots.insert(k);
                }
            }
            Err(e) => {
                err.get_or_insert(e);
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    for k in &knots {
        let actual = crossing_number(k)?;
        if actual != c {
            return Err(Error::CrossingNumberMismatch {
                knot: *k,
                expected: c,
                actual,
            });
        }
    }
    Ok(knots)
}

/// Positive expansions realizing `c(K) = c`, used by tests that need the raw
/// compositions.
pub fn compositions(c: u64) -> Vec<ContinuedFraction> {
    let mut out = Vec::new();
    for_each_composition(c, |parts| {
        out.push(ContinuedFraction::from_slice(parts).expect("parts are positive"));
    });
    out
}

/// `c₂` for every knot of crossing number `c`.
pub fn c2_all(c: u64) -> Result<Vec<C2Result>> {
    enumerate_knots(c)?.iter().map(c2).collect()
}

pub fn table_row(c: u64) -> Result<TableRow> {
    let results = c2_all(c)?;
    Ok(TableRow::tally(c, results.iter().map(C2Result::offset)))
}

/// Checks staged results against the global enumeration. `results` must cover
/// every knot up to the largest crossing number present.
pub fn cross_check<'a>(results: impl IntoIterator<Item = &'a C2Result>) -> Result<()> {
    let results: Vec<&C2Result> = results.into_iter().collect();
    let max = results.iter().map(|r| r.base_crossing).max().unwrap_or(0);
    if max < 3 {
        return Ok(());
    }
    let oracle = global_c2_map(max)?;
    for r in results {
        let global = oracle
            .get(&r.knot)
            .map(|(v, _)| *v)
            .ok_or(Error::OracleIncomplete {
                knot: r.knot,
                bound: max,
            })?;
        if global != r.value {
            return Err(Error::CrossCheck {
                knot: r.knot,
                staged: r.value,
                global,
            });
        }
    }
    Ok(())
}

/// Rows `c_min..=c_max`. With `cross_check`, every knot of every row is
/// compared against [`global_c2_map`] before anything is returned.
pub fn build_table(c_min: u64, c_max: u64, cross_check_results: bool) -> Result<Vec<TableRow>> {
    if c_min < 3 || c_min > c_max {
        return Err(Error::InvalidRange {
            min: c_min,
            max: c_max,
        });
    }
    let mut rows = Vec::new();
    let mut all = Vec::new();
    for c in c_min..=c_max {
        let results = c2_all(c)?;
        rows.push(TableRow::tally(c, results.iter().map(C2Result::offset)));
        if cross_check_results {
            all.extend(results);
        }
    }
    if cross_check_results {
        cross_check(&all)?;
    }
    Ok(rows)
}
