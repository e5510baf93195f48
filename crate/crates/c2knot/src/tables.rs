//! Table computation with per-knot parallelism and optional caching.

use c2knot_core::table::{cross_check, enumerate_knots};
use c2knot_core::{c2, C2Result, TableRow};
use rayon::prelude::*;

use crate::cache::TableCache;
use crate::{CliError, Result};

/// `c₂` for every knot of crossing number `c`, in `(p, q)` order.
pub fn results_for(c: u64) -> Result<Vec<C2Result>> {
    let knots: Vec<_> = enumerate_knots(c)?.into_iter().collect();
    let results = knots
        .par_iter()
        .map(c2)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(results)
}

pub fn row_for(c: u64) -> Result<TableRow> {
    let results = results_for(c)?;
    Ok(TableRow::tally(c, results.iter().map(C2Result::offset)))
}

/// Rows `min..=max`. Cached rows are reused unless `check` asks for the
/// per-knot comparison with the global enumeration, which needs every result.
pub fn build(min: u64, max: u64, check: bool, cache: Option<&TableCache>) -> Result<Vec<TableRow>> {
    if min < 3 || min > max {
        return Err(CliError::Invalid(format!(
            "need 3 ≤ --min ≤ --max, got {min}..={max}"
        )));
    }
    let mut rows = Vec::new();
    let mut all = Vec::new();
    for c in min..=max {
        if !check {
            if let Some(row) = cache.and_then(|cache| cache.load(c)) {
                rows.push(row);
                continue;
            }
        }
        let results = results_for(c)?;
        let row = TableRow::tally(c, results.iter().map(C2Result::offset));
        if let Some(cache) = cache {
            cache.store(&row)?;
        }
        rows.push(row);
        if check {
            all.extend(results);
        }
    }
    if check {
        cross_check(&all).map_err(|e| match e {
            c2knot_core::Error::CrossCheck {
                knot,
                staged,
                global,
            } => CliError::CrossCheck {
                knot,
                staged,
                global,
            },
            other => CliError::Core(other),
        })?;
    }
    Ok(rows)
}
