//! Append-only JSON-lines store of resolved sweep records.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use log::warn;
use sha2::{Digest, Sha256};

use super::sweep::{SweepRecord, SCHEMA_VERSION};
use crate::cover::{is_cover, Cover, CoverCertificate};
use crate::error::Result;
use crate::graph::PetersenGraph;

/// SHA-256 over a canonical rendering of a certificate's vertex lists.
pub fn witness_digest(cert: &CoverCertificate) -> String {
    let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let text = format!("P({},{});u={};v={}", cert.n, cert.k, join(&cert.selected_u), join(&cert.selected_v));
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Checks a stored record before reuse: schema, digest, and that the
/// witness is a cover of the recorded size.
pub fn validate_record(record: &SweepRecord) -> std::result::Result<(), String> {
    if record.schema != SCHEMA_VERSION {
        return Err(format!("schema {} (expected {SCHEMA_VERSION})", record.schema));
    }
    let (Some(beta), Some(cert), Some(digest)) = (record.beta, &record.witness, &record.witness_digest) else {
        return Err("record is not resolved".into());
    };
    if (cert.n, cert.k) != (record.n, record.k) {
        return Err("witness belongs to another graph".into());
    }
    if &witness_digest(cert) != digest {
        return Err("witness digest mismatch".into());
    }
    let cover = Cover::from_certificate(cert).map_err(|e| e.to_string())?;
    let g = PetersenGraph::from_params(cover.params());
    if !is_cover(&g, &cover) {
        return Err("stored witness is not a cover".into());
    }
    if cover.size() != beta {
        return Err(format!("witness has size {} but beta is {beta}", cover.size()));
    }
    Ok(())
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct LoadReport {
    pub loaded: usize,
    pub rejected: usize,
}

#[derive(Debug)]
pub struct ResultsCache {
    path: Option<PathBuf>,
    records: BTreeMap<(usize, usize), SweepRecord>,
    writer: Option<Mutex<File>>,
}

impl ResultsCache {
    pub fn in_memory() -> Self {
        Self { path: None, records: BTreeMap::new(), writer: None }
    }

    /// Open (creating if needed) a cache file, keeping every line that
    /// parses and validates. Truncated or corrupt lines are skipped.
    pub fn open(path: impl AsRef<Path>) -> Result<(Self, LoadReport)> {
        let path = path.as_ref().to_path_buf();
        let mut records = BTreeMap::new();
        let mut report = LoadReport::default();
        let mut needs_newline = false;
        if path.exists() {
            let file = File::open(&path)?;
            let mut reader = BufReader::new(file);
            let mut line = String::new();
            while reader.read_line(&mut line)? > 0 {
                needs_newline = !line.ends_with('\n');
                let text = line.trim();
                if !text.is_empty() {
                    match serde_json::from_str::<SweepRecord>(text) {
                        Ok(record) => match validate_record(&record) {
                            Ok(()) => {
                                records.insert((record.n, record.k), record);
                                report.loaded += 1;
                            }
                            Err(why) => {
                                warn!("dropping cached P({},{}): {why}", record.n, record.k);
                                report.rejected += 1;
                            }
                        },
                        Err(e) => {
                            warn!("skipping unreadable cache line: {e}");
                            report.rejected += 1;
                        }
                    }
                }
                line.clear();
            }
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&path)?;
        if needs_newline {
            file.write_all(b"\n")?;
        }
        Ok((Self { path: Some(path), records, writer: Some(Mutex::new(file)) }, report))
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&SweepRecord> {
        self.records.get(&(n, k))
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Persist one resolved record. Safe to call from parallel workers;
    /// lines are written whole under a single lock.
    pub fn append(&self, record: &SweepRecord) -> Result<()> {
        if record.beta.is_none() {
            return Ok(());
        }
        if let Some(writer) = &self.writer {
            let mut line = serde_json::to_string(record)?;
            line.push('\n');
            let mut file = writer.lock().expect("cache writer poisoned");
            file.write_all(line.as_bytes())?;
            file.flush()?;
        }
        Ok(())
    }
}
