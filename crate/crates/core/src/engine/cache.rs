//! Isomorphism-keyed polynomial cache with optional append-only file backing.
//!
//! File records are `base64(canonical graph6) TAB polynomial` lines. The file
//! is read on first use and each new entry is appended with a single write.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::CanonicalKey;
use crate::poly::Poly;

#[derive(Debug, Default)]
pub struct PolyCache {
    map: RwLock<HashMap<CanonicalKey, Poly>>,
    hits: AtomicU64,
    misses: AtomicU64,
    file: Option<Backing>,
}

#[derive(Debug)]
struct Backing {
    path: PathBuf,
    loaded: OnceLock<()>,
    writer: Mutex<Option<File>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub entries: usize,
    pub hits: u64,
    pub misses: u64,
}

impl PolyCache {
    pub fn new() -> PolyCache {
        PolyCache::default()
    }

    /// A cache persisted at `path`. Nothing is read until the first lookup.
    pub fn with_file(path: impl Into<PathBuf>) -> PolyCache {
        PolyCache {
            file: Some(Backing {
                path: path.into(),
                loaded: OnceLock::new(),
                writer: Mutex::new(None),
            }),
            ..PolyCache::default()
        }
    }

    pub fn path(&self) -> Option<&Path> {
        self.file.as_ref().map(|b| b.path.as_path())
    }

    /// Read the backing file now, reporting malformed records.
    pub fn load(&self) -> Result<usize> {
        let Some(b) = &self.file else { return Ok(0) };
        let mut result = Ok(0);
        b.loaded.get_or_init(|| result = self.read_file(&b.path));
        result
    }

    fn ensure_loaded(&self) {
        if let Some(b) = &self.file {
            // a corrupt file only costs recomputation
            b.loaded.get_or_init(|| {
                let _ = self.read_file(&b.path);
            });
        }
    }

    fn read_file(&self, path: &Path) -> Result<usize> {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let mut map = self.map.write().unwrap();
        let mut count = 0;
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (key, poly) = parse_record(line).ok_or_else(|| {
                Error::Parse(format!("cache line {}: malformed record", lineno + 1))
            })?;
            map.insert(key, poly);
            count += 1;
        }
        Ok(count)
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<Poly> {
        self.ensure_loaded();
        let found = self.map.read().unwrap().get(key).cloned();
        if found.is_some() {
            self.hits.fetch_add(1, Ordering::Relaxed);
        } else {
            self.misses.fetch_add(1, Ordering::Relaxed);
        }
        found
    }

    pub fn insert(&self, key: CanonicalKey, poly: Poly) {
        self.ensure_loaded();
        let line = format!("{}\t{}\n", key.to_base64(), poly);
        let fresh = self.map.write().unwrap().insert(key, poly).is_none();
        if fresh {
            if let Some(b) = &self.file {
                // persistence is best effort
                let _ = append(b, &line);
            }
        }
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            entries: self.map.read().unwrap().len(),
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
        }
    }

    pub fn len(&self) -> usize {
        self.ensure_loaded();
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All entries sorted by key.
    pub fn entries(&self) -> Vec<(CanonicalKey, Poly)> {
        self.ensure_loaded();
        let mut v: Vec<_> = self
            .map
            .read()
            .unwrap()
            .iter()
            .map(|(k, p)| (k.clone(), p.clone()))
            .collect();
        v.sort();
        v
    }

    /// Rewrite the backing file with one sorted record per key.
    pub fn compact(&self) -> Result<usize> {
        let Some(b) = &self.file else { return Ok(0) };
        self.load()?;
        let entries = self.entries();
        let mut guard = b.writer.lock().unwrap();
        *guard = None;
        let tmp = b.path.with_extension("tmp");
        {
            let mut f = File::create(&tmp)?;
            for (k, p) in &entries {
                writeln!(f, "{}\t{}", k.to_base64(), p)?;
            }
            f.sync_all()?;
        }
        std::fs::rename(&tmp, &b.path)?;
        Ok(entries.len())
    }
}

fn append(b: &Backing, line: &str) -> Result<()> {
    let mut guard = b.writer.lock().unwrap();
    if guard.is_none() {
        *guard = Some(OpenOptions::new().create(true).append(true).open(&b.path)?);
    }
    guard.as_mut().unwrap().write_all(line.as_bytes())?;
    Ok(())
}

fn parse_record(line: &str) -> Option<(CanonicalKey, Poly)> {
    let (k, p) = line.split_once('\t')?;
    Some((CanonicalKey::from_base64(k)?, p.trim().parse().ok()?))
}

static GLOBAL: OnceLock<PolyCache> = OnceLock::new();

/// The cache used by [`indpoly`](super::indpoly); in-memory unless
/// [`init_global_cache`] ran first.
pub fn global_cache() -> &'static PolyCache {
    GLOBAL.get_or_init(PolyCache::new)
}

/// Install the process-wide cache. Returns false if one is already in use.
pub fn init_global_cache(cache: PolyCache) -> bool {
    GLOBAL.set(cache).is_ok()
}
