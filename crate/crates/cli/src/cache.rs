//! On-disk store of computed J-function coefficients, one JSON file per key.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use flagj_core::serial::LaurentTermWire;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

/// Bumped whenever the engine's output for a key may change.
pub const ENGINE_VERSION: &str = concat!("flagj-", env!("CARGO_PKG_VERSION"), "+1");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub space: String,
    pub degree: Vec<i64>,
    pub method: String,
    pub version: String,
}

impl CacheKey {
    pub fn new(space: impl Into<String>, degree: &[i64], method: impl Into<String>) -> Self {
        CacheKey {
            space: space.into(),
            degree: degree.to_vec(),
            method: method.into(),
            version: ENGINE_VERSION.to_string(),
        }
    }

    pub fn file_name(&self) -> String {
        let json = serde_json::to_string(self).expect("key serializes");
        format!("{}.json", hex::encode(Sha256::digest(json.as_bytes())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub payload: Vec<LaurentTermWire>,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

/// Outcome of a lookup.
#[derive(Debug)]
pub enum Lookup {
    Hit(CacheEntry),
    Miss,
    /// The file exists but does not hold a valid entry for the key.
    Corrupt(String),
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    pub fn load(&self, key: &CacheKey) -> Lookup {
        let text = match fs::read_to_string(self.path(key)) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(e.to_string()),
        };
        match serde_json::from_str::<CacheEntry>(&text) {
            Ok(entry) if entry.key == *key => Lookup::Hit(entry),
            Ok(_) => Lookup::Corrupt("entry holds a different key".into()),
            Err(e) => Lookup::Corrupt(e.to_string()),
        }
    }

    /// Writes through a temporary file in the same directory, then renames.
    pub fn store(&self, entry: &CacheEntry) -> io::Result<()> {
        let mut tmp = NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, entry)?;
        tmp.flush()?;
        tmp.persist(self.path(&entry.key)).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn roundtrip(&self, entry: &CacheEntry) -> io::Result<CacheEntry> {
        self.store(entry)?;
        match self.load(&entry.key) {
            Lookup::Hit(e) => Ok(e),
            Lookup::Miss => Err(io::Error::new(io::ErrorKind::NotFound, "entry vanished after store")),
            Lookup::Corrupt(why) => Err(io::Error::new(io::ErrorKind::InvalidData, why)),
        }
    }
}
