//! Content-addressed cache of exported documents under `$SO5CG_CACHE`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENV: &str = "SO5CG_CACHE";

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    /// The document as serialized by the library, exact values included.
    pub payload: String,
    /// RFC 3339.
    pub created_at: String,
}

pub struct Cache {
    dir: PathBuf,
}

/// Hash of the engine version and the request.
pub fn key(kind: &str, request: &str) -> String {
    let mut h = Sha256::new();
    for part in ["so5cg/1", env!("CARGO_PKG_VERSION"), kind, request] {
        h.update(part.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

impl Cache {
    /// The cache named by the environment, unless disabled.
    pub fn from_env(disabled: bool) -> Option<Cache> {
        if disabled {
            return None;
        }
        std::env::var_os(ENV).filter(|v| !v.is_empty()).map(|d| Cache { dir: PathBuf::from(d) })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Cached document for `key`; unreadable or stale entries count as misses.
    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.key != key {
            return None;
        }
        serde_json::from_str(&entry.payload).ok()
    }

    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let created_at = time::OffsetDateTime::now_utc()
            .format(&time::format_description::well_known::Rfc3339)
            .map_err(io::Error::other)?;
        let entry = CacheEntry {
            key: key.to_string(),
            payload: serde_json::to_string(value).map_err(io::Error::other)?,
            created_at,
        };
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry).map_err(io::Error::other)?)?;
        fs::rename(&tmp, self.path(key))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

/// Looks `key` up, or computes and stores the document.
pub fn cached<T, E, F>(cache: Option<&Cache>, key: &str, compute: F) -> Result<T, crate::Failure>
where
    T: Serialize + DeserializeOwned,
    E: Into<crate::Failure>,
    F: FnOnce() -> Result<T, E>,
{
    if let Some(hit) = cache.and_then(|c| c.get(key)) {
        return Ok(hit);
    }
    let value = compute().map_err(Into::into)?;
    if let Some(c) = cache {
        c.put(key, &value)
            .map_err(|e| crate::Failure::Io(format!("cache {}: {e}", c.dir().display())))?;
    }
    Ok(value)
}
