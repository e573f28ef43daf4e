//! On-disk cache of Jack and shifted Jack polynomials.
//!
//! One file per entry, named by a hash of its key. Each file records a
//! schema version and a SHA-256 of its payload; entries that fail either
//! check are ignored and recomputed.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::json::SymPolyJson;
use crate::memo::{self, Family, Key};
use crate::partition::Partition;
use crate::rational::{format_rational, parse_rational};
use crate::sympoly::SymPoly;

pub const SCHEMA_VERSION: u32 = 1;
pub const ENV_VAR: &str = "JACKBERN_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub r: usize,
    pub d: String,
    pub family: Family,
    pub partition: Vec<u32>,
}

impl CacheKey {
    fn from_memo(k: &Key) -> Self {
        CacheKey {
            r: k.r,
            d: format_rational(&k.d),
            family: k.family,
            partition: k.partition.padded(k.r),
        }
    }

    fn to_memo(&self) -> Result<Key> {
        Ok(Key {
            family: self.family,
            r: self.r,
            d: parse_rational(&self.d)?,
            partition: Partition::new(self.partition.clone())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub key: CacheKey,
    pub payload: SymPolyJson,
    pub hash: String,
}

fn sha256_hex(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

fn payload_hash(p: &SymPolyJson) -> String {
    sha256_hex(&serde_json::to_string(p).expect("serializable"))
}

impl CacheEntry {
    pub fn new(key: &Key, poly: &SymPoly) -> Self {
        let payload = SymPolyJson::from_sympoly(poly, Some(key.family.as_str()));
        CacheEntry {
            schema_version: SCHEMA_VERSION,
            key: CacheKey::from_memo(key),
            hash: payload_hash(&payload),
            payload,
        }
    }

    /// The polynomial, if version, hash and payload all check out.
    pub fn validated(&self) -> Option<(Key, SymPoly)> {
        if self.schema_version != SCHEMA_VERSION || payload_hash(&self.payload) != self.hash {
            return None;
        }
        let key = self.key.to_memo().ok()?;
        let poly = self.payload.to_sympoly().ok()?;
        (poly.r() == key.r).then_some((key, poly))
    }
}

/// `(r, d, family)` for cache statistics.
pub type Slot = (usize, String, Family);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StoreSummary {
    pub written: usize,
    pub unchanged: usize,
}

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    /// `$JACKBERN_CACHE`, else `$XDG_CACHE_HOME/jackbern`, else
    /// `$HOME/.cache/jackbern`.
    pub fn default_dir() -> Option<PathBuf> {
        let var = |name: &str| std::env::var_os(name).filter(|v| !v.is_empty()).map(PathBuf::from);
        var(ENV_VAR)
            .or_else(|| var("XDG_CACHE_HOME").map(|p| p.join("jackbern")))
            .or_else(|| var("HOME").map(|p| p.join(".cache").join("jackbern")))
    }

    /// Opens (creating if needed) a cache directory and checks it is writable.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        let probe = dir.join(".write-probe");
        fs::write(&probe, b"").map_err(|e| Error::io(&probe, e))?;
        fs::remove_file(&probe).map_err(|e| Error::io(&probe, e))?;
        Ok(DiskCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &CacheKey) -> PathBuf {
        let name = sha256_hex(&serde_json::to_string(key).expect("serializable"));
        self.dir.join(format!("{}.json", &name[..32]))
    }

    fn read_entry(path: &Path) -> Option<CacheEntry> {
        let text = fs::read_to_string(path).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn load(&self, key: &Key) -> Option<SymPoly> {
        let ck = CacheKey::from_memo(key);
        let entry = Self::read_entry(&self.path_for(&ck))?;
        let (k, poly) = entry.validated()?;
        (&k == key).then_some(poly)
    }

    /// Writes `poly` unless an identical valid entry is already present.
    pub fn store(&self, key: &Key, poly: &SymPoly) -> Result<bool> {
        let entry = CacheEntry::new(key, poly);
        let path = self.path_for(&entry.key);
        if let Some(old) = Self::read_entry(&path) {
            if old.validated().is_some() && old.key == entry.key && old.hash == entry.hash {
                return Ok(false);
            }
        }
        let text = serde_json::to_string(&entry).expect("serializable");
        fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
        Ok(true)
    }

    fn entry_paths(&self) -> Result<Vec<PathBuf>> {
        let mut out = Vec::new();
        for item in fs::read_dir(&self.dir).map_err(|e| Error::io(&self.dir, e))? {
            let path = item.map_err(|e| Error::io(&self.dir, e))?.path();
            if path.extension().is_some_and(|x| x == "json") {
                out.push(path);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Loads every valid entry into the in-process table.
    pub fn load_into_memo(&self) -> Result<usize> {
        let mut n = 0;
        for path in self.entry_paths()? {
            if let Some((key, poly)) = Self::read_entry(&path).and_then(|e| e.validated()) {
                memo::insert(key, poly);
                n += 1;
            }
        }
        Ok(n)
    }

    /// Writes every entry of the in-process table.
    pub fn persist_memo(&self) -> Result<StoreSummary> {
        let mut s = StoreSummary::default();
        for (key, poly) in memo::all_entries() {
            if self.store(&key, &poly)? {
                s.written += 1;
            } else {
                s.unchanged += 1;
            }
        }
        Ok(s)
    }

    /// Valid entry counts per `(r, d, family)`; invalid files are counted
    /// under `None`.
    pub fn stats(&self) -> Result<BTreeMap<Option<Slot>, usize>> {
        let mut out = BTreeMap::new();
        for path in self.entry_paths()? {
            let slot = Self::read_entry(&path)
                .filter(|e| e.validated().is_some())
                .map(|e| (e.key.r, e.key.d, e.key.family));
            *out.entry(slot).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Removes every entry file; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let paths = self.entry_paths()?;
        for p in &paths {
            fs::remove_file(p).map_err(|e| Error::io(p, e))?;
        }
        Ok(paths.len())
    }
}
