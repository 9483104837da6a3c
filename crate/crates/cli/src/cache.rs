//! Versioned on-disk cache for deterministic results.
//!
//! Entries live in `<dir>/v<FORMAT>/<op>-<hash>.json`, where the hash covers
//! the crate version, the operation and its arguments. Each entry carries a
//! digest of its payload; an entry that fails to parse or to match its
//! digest is reported on stderr and recomputed.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

pub const CACHE_ENV: &str = "PENTAGON_CACHE_DIR";
const FORMAT: u32 = 1;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

fn sha_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$PENTAGON_CACHE_DIR`, else `$XDG_CACHE_HOME/pentagon`, else
    /// `$HOME/.cache/pentagon`.
    pub fn default_dir() -> Option<PathBuf> {
        if let Some(d) = std::env::var_os(CACHE_ENV) {
            return Some(d.into());
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return Some(Path::new(&d).join("pentagon"));
        }
        std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache").join("pentagon"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, op: &str, args: &Value) -> PathBuf {
        let key = json!({ "version": env!("CARGO_PKG_VERSION"), "op": op, "args": args });
        let hash = sha_hex(key.to_string().as_bytes());
        self.dir.join(format!("v{FORMAT}")).join(format!("{op}-{}.json", &hash[..16]))
    }

    fn load(&self, path: &Path) -> Option<std::result::Result<Value, String>> {
        let text = fs::read_to_string(path).ok()?;
        let parsed: Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => return Some(Err(format!("unreadable entry: {e}"))),
        };
        let payload = parsed.get("payload").cloned().unwrap_or(Value::Null);
        let digest = parsed.get("digest").and_then(Value::as_str).unwrap_or("");
        if digest != sha_hex(payload.to_string().as_bytes()) {
            return Some(Err("digest mismatch".into()));
        }
        Some(Ok(payload))
    }

    /// Cached value of `f()`. Write failures are reported and ignored.
    pub fn get_or_compute(&self, op: &str, args: &Value, f: impl FnOnce() -> Value) -> (Value, bool) {
        let path = self.path(op, args);
        match self.load(&path) {
            Some(Ok(v)) => return (v, true),
            Some(Err(why)) => eprintln!("warning: cache entry {} is corrupt ({why}); recomputing", path.display()),
            None => {}
        }
        let v = f();
        let entry = json!({
            "format": FORMAT,
            "op": op,
            "args": args,
            "digest": sha_hex(v.to_string().as_bytes()),
            "payload": v,
        });
        let write = path
            .parent()
            .map_or(Ok(()), fs::create_dir_all)
            .and_then(|_| fs::write(&path, entry.to_string()));
        if let Err(e) = write {
            eprintln!("warning: could not write cache entry {}: {e}", path.display());
        }
        (v, false)
    }
}
