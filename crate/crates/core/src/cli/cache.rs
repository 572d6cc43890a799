//! Append-only JSON-lines store of rendered invariant values.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Lookup key; the braid is in canonical text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub family: String,
    pub d: u32,
    #[serde(rename = "D")]
    pub subset: Vec<u32>,
    pub braid: String,
    /// Specialized `z`, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: CacheKey,
    /// The JSON record exactly as it is rendered.
    pub value: serde_json::Value,
    #[serde(rename = "toolVersion")]
    pub tool_version: String,
}

impl CacheRecord {
    pub fn new(key: CacheKey, value: serde_json::Value) -> Self {
        CacheRecord { key, value, tool_version: TOOL_VERSION.to_owned() }
    }
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl AsRef<Path>) -> Self {
        Cache { path: path.as_ref().to_owned() }
    }

    /// Last record with this key and the current tool version. A missing
    /// file is an empty cache; malformed lines are skipped.
    pub fn get(&self, key: &CacheKey) -> Result<Option<CacheRecord>> {
        let f = match std::fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut hit = None;
        for line in BufReader::new(f).lines() {
            let line = line?;
            if let Ok(r) = serde_json::from_str::<CacheRecord>(&line) {
                if r.key == *key && r.tool_version == TOOL_VERSION {
                    hit = Some(r);
                }
            }
        }
        Ok(hit)
    }

    pub fn put(&self, rec: &CacheRecord) -> Result<()> {
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let line = serde_json::to_string(rec).expect("serializable");
        writeln!(f, "{line}")?;
        Ok(())
    }
}
