//! Spectrum cache keyed by a SHA-256 of everything that determines the
//! counts.

use std::fs;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use surgroup::homcount::HomSpectrum;
use surgroup::knot::KnotJson;
use surgroup::target::TargetSpec;

pub const CACHE_SCHEMA: u32 = 1;

/// Inputs hashed into a cache key.
#[derive(Serialize)]
pub struct CacheKey<'a> {
    pub schema_version: u32,
    pub tool_version: &'a str,
    pub construction: &'a str,
    pub knot: &'a KnotJson,
    pub p: i64,
    pub q: i64,
    pub suite: &'a [TargetSpec],
    pub budget: usize,
}

impl CacheKey<'_> {
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("cache key serializes");
        hex::encode(Sha256::digest(bytes))
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    schema_version: u32,
    targets: Vec<String>,
    // decimal strings keep u128 exact in any JSON reader
    counts: Vec<String>,
}

pub struct Cache {
    dir: Option<PathBuf>,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir, hits: AtomicUsize::new(0), misses: AtomicUsize::new(0) }
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn spectrum(&self, key: &CacheKey, compute: impl FnOnce() -> HomSpectrum) -> HomSpectrum {
        let Some(dir) = &self.dir else {
            self.misses.fetch_add(1, Ordering::Relaxed);
            return compute();
        };
        let path = dir.join(format!("{}.json", key.digest()));
        if let Some(s) = read_entry(&path) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return s;
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let s = compute();
        let entry = Entry {
            schema_version: CACHE_SCHEMA,
            targets: s.counts.iter().map(|(n, _)| n.clone()).collect(),
            counts: s.counts.iter().map(|(_, c)| c.to_string()).collect(),
        };
        // a failed write only costs a recomputation later
        if fs::create_dir_all(dir).is_ok() {
            let tmp = path.with_extension(format!("tmp{}", std::process::id()));
            if fs::write(&tmp, serde_json::to_vec(&entry).expect("entry serializes")).is_ok() {
                let _ = fs::rename(&tmp, &path);
            }
        }
        s
    }
}

fn read_entry(path: &PathBuf) -> Option<HomSpectrum> {
    let text = fs::read_to_string(path).ok()?;
    let e: Entry = serde_json::from_str(&text).ok()?;
    if e.schema_version != CACHE_SCHEMA || e.targets.len() != e.counts.len() {
        return None;
    }
    let counts = e
        .targets
        .into_iter()
        .zip(e.counts)
        .map(|(t, c)| c.parse::<u128>().ok().map(|c| (t, c)))
        .collect::<Option<Vec<_>>>()?;
    Some(HomSpectrum { counts })
}
