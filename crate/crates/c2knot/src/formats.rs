//! CSV and JSON shapes written by the CLI. Field order in every JSON object is
//! the declaration order below.

use std::io::Write;

use c2knot_core::{C2Result, ContinuedFraction, TableRow};
use serde::Serialize;

use crate::Result;

#[derive(Debug, Serialize)]
pub struct ExpansionJson<'a> {
    pub entries: &'a [i64],
    pub crossing_sum: u64,
    pub class: &'static str,
}

impl<'a> From<&'a ContinuedFraction> for ExpansionJson<'a> {
    fn from(cf: &'a ContinuedFraction) -> Self {
        ExpansionJson {
            entries: cf.entries(),
            crossing_sum: cf.crossing_sum(),
            class: cf.classify().as_str(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct C2Json<'a> {
    pub p: i64,
    pub q_canonical: i64,
    pub c: u64,
    pub c2: u64,
    pub m: u64,
    pub method: &'static str,
    pub witness: &'a [i64],
    pub witness_class: &'static str,
}

impl<'a> From<&'a C2Result> for C2Json<'a> {
    fn from(r: &'a C2Result) -> Self {
        C2Json {
            p: r.knot.p(),
            q_canonical: r.knot.q(),
            c: r.base_crossing,
            c2: r.value,
            m: r.semi_even_bound,
            method: r.method.as_str(),
            witness: r.witness.entries(),
            witness_class: r.witness_class.as_str(),
        }
    }
}

/// One line per expansion: `[a1,a2,…] sum=N`.
pub fn expansion_line(cf: &ContinuedFraction) -> String {
    format!("{cf} sum={}", cf.crossing_sum())
}

pub fn c2_line(r: &C2Result) -> String {
    format!(
        "{} c={} c2={} m={} method={} witness={} class={}",
        r.knot, r.base_crossing, r.value, r.semi_even_bound, r.method, r.witness, r.witness_class
    )
}

/// Offset columns shown: at least `plus0..plus3`, more if any row needs them.
fn offset_columns(rows: &[TableRow]) -> u64 {
    rows.iter().map(TableRow::max_offset).max().unwrap_or(0).max(3)
}

/// `c,count,plus0,plus1,…` with one record per row.
pub fn write_table_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let cols = offset_columns(rows);
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["c".to_string(), "count".to_string()];
    header.extend((0..=cols).map(|j| format!("plus{j}")));
    w.write_record(&header)?;
    for row in rows {
        let mut rec = vec![row.c.to_string(), row.two_bridge_count.to_string()];
        rec.extend((0..=cols).map(|j| row.count_at(j).to_string()));
        w.write_record(&rec)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn table_json(rows: &[TableRow]) -> Result<String> {
    Ok(serde_json::to_string_pretty(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_pads_offset_columns() {
        let rows = [TableRow::tally(10, [0, 1, 2]), TableRow::tally(3, [0])];
        let mut buf = Vec::new();
        write_table_csv(&rows, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "c,count,plus0,plus1,plus2,plus3\n10,3,1,1,1,0\n3,1,1,0,0,0\n"
        );
    }

    #[test]
    fn csv_widens_for_large_offsets() {
        let rows = [TableRow::tally(20, [5])];
        let mut buf = Vec::new();
        write_table_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("c,count,plus0,plus1,plus2,plus3,plus4,plus5\n"));
        assert!(text.ends_with("20,1,0,0,0,0,0,1\n"));
    }

    #[test]
    fn table_json_shape() {
        let json = table_json(&[TableRow::tally(6, [0, 0, 1])]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v[0]["c"], 6);
        assert_eq!(v[0]["two_bridge_count"], 3);
        assert_eq!(v[0]["offsets"]["0"], 2);
        assert_eq!(v[0]["offsets"]["1"], 1);
    }
}
