//! On-disk cache of computed table rows.
//!
//! One JSON file per crossing number, named after the algorithm version so a
//! version bump invalidates every entry: `table-v{version}-c{c}.json`.

use std::fs;
use std::path::{Path, PathBuf};

use c2knot_core::{TableRow, ALGORITHM_VERSION};

use crate::{CliError, Result};

/// Overrides `--cache-dir` when set.
pub const CACHE_DIR_ENV: &str = "C2KNOT_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// The cache selected by the environment, falling back to `flag`.
    pub fn resolve(flag: Option<&Path>) -> Option<Self> {
        std::env::var_os(CACHE_DIR_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
            .or_else(|| flag.map(Path::to_path_buf))
            .map(TableCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, c: u64) -> PathBuf {
        self.dir
            .join(format!("table-v{ALGORITHM_VERSION}-c{c}.json"))
    }

    /// A cached row, or `None` if absent or unreadable.
    pub fn load(&self, c: u64) -> Option<TableRow> {
        let text = fs::read_to_string(self.path_for(c)).ok()?;
        let row: TableRow = serde_json::from_str(&text).ok()?;
        (row.c == c).then_some(row)
    }

    pub fn store(&self, row: &TableRow) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let path = self.path_for(row.c);
        let tmp = path.with_extension("json.tmp");
        let text = serde_json::to_string_pretty(row)?;
        fs::write(&tmp, text).map_err(|e| CliError::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| CliError::io(&path, e))
    }
}
