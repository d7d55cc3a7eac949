//! Disk cache for enumerated class lists, keyed by (method, crossing
//! count). A sweep's records are written to `<method>_n<k>.jsonl` through a
//! temporary file, and a `.done` marker is created only after the data file
//! is fully written — a cache entry without its marker is treated as absent
//! and rebuilt, so interrupted runs can never serve a truncated listing.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use immersions_core::census::Method;

use crate::catalog::RawClassRecord;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Result<Cache> {
        fs::create_dir_all(dir)
            .with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn data_path(&self, method: Method, n: usize) -> PathBuf {
        self.dir.join(format!("{}_n{}.jsonl", method.as_str(), n))
    }

    fn done_path(&self, method: Method, n: usize) -> PathBuf {
        self.dir.join(format!("{}_n{}.done", method.as_str(), n))
    }

    /// Loads a complete cache entry; `None` when the entry is missing,
    /// unfinished, or unreadable (callers then recompute and overwrite).
    pub fn load(&self, method: Method, n: usize) -> Option<Vec<RawClassRecord>> {
        if !self.done_path(method, n).exists() {
            return None;
        }
        let file = fs::File::open(self.data_path(method, n)).ok()?;
        let mut records = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line.ok()?;
            if line.is_empty() {
                continue;
            }
            records.push(serde_json::from_str(&line).ok()?);
        }
        Some(records)
    }

    /// Writes a cache entry and its completion marker.
    pub fn store(&self, method: Method, n: usize, records: &[RawClassRecord]) -> Result<()> {
        let data = self.data_path(method, n);
        let tmp = data.with_extension("jsonl.tmp");
        {
            let file = fs::File::create(&tmp)
                .with_context(|| format!("creating {}", tmp.display()))?;
            let mut w = BufWriter::new(file);
            for r in records {
                serde_json::to_writer(&mut w, r)?;
                w.write_all(b"\n")?;
            }
            w.flush()?;
        }
        // The marker is only valid for the file it was written after, so
        // clear any stale one before swapping the data in.
        let done = self.done_path(method, n);
        let _ = fs::remove_file(&done);
        fs::rename(&tmp, &data)
            .with_context(|| format!("moving cache entry into {}", data.display()))?;
        fs::write(&done, b"")
            .with_context(|| format!("writing marker {}", done.display()))?;
        Ok(())
    }
}
