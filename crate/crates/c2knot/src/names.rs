//! Knot names (`6_3`, `10_12`, …) mapped to slopes, read from a `name,p,q`
//! CSV file such as an export of a knot table.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use c2knot_core::twobridge::canonicalize;
use c2knot_core::TwoBridgeKnot;

use crate::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NameRecord {
    pub name: String,
    pub p: i64,
    pub q: i64,
}

impl NameRecord {
    pub fn knot(&self) -> TwoBridgeKnot {
        canonicalize(self.p, self.q).expect("records are validated on load")
    }
}

/// Validated records in file order, indexed by name.
#[derive(Debug, Clone, Default)]
pub struct NameRegistry {
    records: Vec<NameRecord>,
    index: BTreeMap<String, usize>,
}

impl NameRegistry {
    pub fn from_path(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| CliError::io(path, e))?;
        Self::from_reader(file)
    }

    pub fn from_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let header = rdr.headers()?.clone();
        if header.iter().collect::<Vec<_>>() != ["name", "p", "q"] {
            return Err(CliError::Invalid(format!(
                "line 1: expected header name,p,q, found {}",
                header.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut reg = NameRegistry::default();
        for rec in rdr.records() {
            let rec = rec.map_err(|e| {
                let line = e.position().map_or(0, |p| p.line());
                CliError::Invalid(format!("line {line}: {e}"))
            })?;
            let line = rec.position().map_or(0, |p| p.line());
            let bad = |msg: String| CliError::Invalid(format!("line {line}: {msg}"));
            let int = |i: usize| {
                rec[i]
                    .parse::<i64>()
                    .map_err(|_| bad(format!("{:?} is not an integer", &rec[i])))
            };
            let (name, p, q) = (rec[0].to_string(), int(1)?, int(2)?);
            if name.is_empty() {
                return Err(bad("empty name".into()));
            }
            canonicalize(p, q).map_err(|e| bad(e.to_string()))?;
            if reg.index.contains_key(&name) {
                return Err(bad(format!("duplicate name {name:?}")));
            }
            reg.index.insert(name.clone(), reg.records.len());
            reg.records.push(NameRecord { name, p, q });
        }
        Ok(reg)
    }

    pub fn lookup(&self, name: &str) -> Result<&NameRecord> {
        self.index
            .get(name)
            .map(|&i| &self.records[i])
            .ok_or_else(|| CliError::UnknownName(name.to_string()))
    }

    pub fn records(&self) -> &[NameRecord] {
        &self.records
    }
}
