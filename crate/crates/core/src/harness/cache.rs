//! JSON-lines store of invariants keyed by a hash of the canonical diagram.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{Budget, Invariants};
use crate::diagram::Diagram;

const KEY_VERSION: &str = "bracketforge-invariants/1";

/// SHA-256 over the canonical PD text and which evaluators fit the budget.
pub fn cache_key(d: &Diagram, budget: &Budget) -> String {
    let c = d.crossing_count();
    let mut h = Sha256::new();
    h.update(KEY_VERSION.as_bytes());
    h.update(b"\n");
    h.update(d.canonical().to_pd_string().as_bytes());
    h.update(format!("\noracle={} skein={}", c <= budget.oracle_limit, c <= budget.skein_limit).as_bytes());
    hex::encode(h.finalize())
}

#[derive(Serialize, Deserialize)]
struct Line {
    key: String,
    invariants: Invariants,
}

#[derive(Debug, Default)]
pub struct ResultCache {
    path: Option<PathBuf>,
    entries: HashMap<String, Invariants>,
    pending: Vec<String>,
}

impl ResultCache {
    /// In-memory cache that is never written.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path` if it exists; later entries win.
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        match File::open(&path) {
            Ok(f) => {
                for (i, line) in BufReader::new(f).lines().enumerate() {
                    let line = line?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    let rec: Line = serde_json::from_str(&line).map_err(|e| {
                        io::Error::new(io::ErrorKind::InvalidData, format!("{}:{}: {e}", path.display(), i + 1))
                    })?;
                    entries.insert(rec.key, rec.invariants);
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        Ok(ResultCache { path: Some(path), entries, pending: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&Invariants> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, inv: Invariants) {
        if self.entries.insert(key.clone(), inv).is_none() {
            self.pending.push(key);
        }
    }

    /// Appends entries added since the last flush.
    pub fn flush(&mut self) -> io::Result<()> {
        let Some(path) = &self.path else {
            self.pending.clear();
            return Ok(());
        };
        if self.pending.is_empty() {
            return Ok(());
        }
        let mut w = BufWriter::new(OpenOptions::new().create(true).append(true).open(path)?);
        for key in self.pending.drain(..) {
            let line = Line { key: key.clone(), invariants: self.entries[&key].clone() };
            serde_json::to_writer(&mut w, &line)?;
            w.write_all(b"\n")?;
        }
        w.flush()
    }
}
