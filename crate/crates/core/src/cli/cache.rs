//! On-disk cache of the coefficient table.
//!
//! A single JSON document `coeffs.json` holding
//! `{"schema_version": 1, "k_max": K, "A": [...], "B": [...]}` with values as
//! decimal strings. The first five entries are recomputed and compared on
//! every load; a file that fails this check is discarded and rewritten.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::closed_form::{CoeffTable, TableMethod};

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_FILE: &str = "coeffs.json";
const TRUSTED_PREFIX: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheDoc {
    pub schema_version: u32,
    pub k_max: usize,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
}

impl CacheDoc {
    pub fn from_table(table: &CoeffTable) -> Self {
        CacheDoc {
            schema_version: SCHEMA_VERSION,
            k_max: table.k_max(),
            a: table.a().iter().map(ToString::to_string).collect(),
            b: table.b().iter().map(ToString::to_string).collect(),
        }
    }

    fn into_table(self) -> Result<CoeffTable, String> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema_version {}", self.schema_version));
        }
        if self.a.len() != self.k_max + 1 || self.b.len() != self.k_max + 1 {
            return Err("list lengths do not match k_max".into());
        }
        let parse = |v: &[String]| -> Result<Vec<BigInt>, String> {
            v.iter()
                .map(|s| s.parse::<BigInt>().map_err(|e| format!("bad value {s:?}: {e}")))
                .collect()
        };
        let table = CoeffTable::from_parts(parse(&self.a)?, parse(&self.b)?, TableMethod::Cache)
            .map_err(|e| e.to_string())?;
        let reference = CoeffTable::recursion(TRUSTED_PREFIX - 1);
        let n = TRUSTED_PREFIX.min(table.k_max() + 1);
        if table.a()[..n] != reference.a()[..n] || table.b()[..n] != reference.b()[..n] {
            return Err("leading entries do not match the recursion".into());
        }
        Ok(table)
    }
}

pub fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

/// What happened when the table was requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheOutcome {
    Disabled,
    Hit,
    /// Cache was missing, too short or rejected; it has been rewritten.
    Refreshed { reason: String },
}

/// Returns a table holding at least `k_max`, going through the cache in
/// `dir` if one is given.
pub fn load_table(dir: Option<&Path>, k_max: usize) -> io::Result<(CoeffTable, CacheOutcome)> {
    let Some(dir) = dir else {
        return Ok((CoeffTable::recursion(k_max), CacheOutcome::Disabled));
    };
    let path = cache_path(dir);
    let cached = match fs::read_to_string(&path) {
        Ok(text) => serde_json::from_str::<CacheDoc>(&text)
            .map_err(|e| format!("unreadable cache: {e}"))
            .and_then(CacheDoc::into_table),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Err("no cache file".to_string()),
        Err(e) => return Err(e),
    };
    let (mut table, reason) = match cached {
        Ok(t) if t.k_max() >= k_max => return Ok((truncate(&t, k_max), CacheOutcome::Hit)),
        Ok(t) => (t, format!("cache holds k <= {k_max} only partially")),
        Err(reason) => (CoeffTable::recursion(0), reason),
    };
    table.extend_to(k_max);
    store(dir, &table)?;
    Ok((table, CacheOutcome::Refreshed { reason }))
}

fn truncate(table: &CoeffTable, k_max: usize) -> CoeffTable {
    CoeffTable::from_parts(
        table.a()[..=k_max].to_vec(),
        table.b()[..=k_max].to_vec(),
        table.method(),
    )
    .expect("nonempty prefix")
}

pub fn store(dir: &Path, table: &CoeffTable) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut text = serde_json::to_string_pretty(&CacheDoc::from_table(table))
        .map_err(io::Error::other)?;
    text.push('\n');
    let tmp = dir.join(format!("{CACHE_FILE}.tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(tmp, cache_path(dir))
}
