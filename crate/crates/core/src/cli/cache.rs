//! On-disk payload cache. Entries are keyed by the SHA-256 of the
//! canonical JSON of their inputs, carry a format version and the crate
//! version, and are written atomically (temp file + rename). Anything
//! unreadable or stale is ignored and recomputed, never partially used.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::VERSION;

pub const CACHE_FORMAT: u32 = 1;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Cache { dir }
    }

    pub fn path(&self, kind: &str, key: &Value) -> PathBuf {
        let mut h = Sha256::new();
        h.update(kind.as_bytes());
        h.update([0]);
        h.update(key.to_string().as_bytes());
        self.dir.join(format!("{kind}-{}.json", hex::encode(h.finalize())))
    }

    pub fn get(&self, kind: &str, key: &Value) -> Option<Value> {
        let text = fs::read_to_string(self.path(kind, key)).ok()?;
        let entry: Value = serde_json::from_str(&text).ok()?;
        let fresh = entry["format"] == json!(CACHE_FORMAT)
            && entry["version"] == json!(VERSION)
            && entry["kind"] == json!(kind)
            && entry["key"] == *key;
        fresh.then(|| entry["payload"].clone())
    }

    pub fn put(&self, kind: &str, key: &Value, payload: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let target = self.path(kind, key);
        let entry = json!({
            "format": CACHE_FORMAT,
            "version": VERSION,
            "kind": kind,
            "key": key,
            "payload": payload,
        });
        let tmp = target.with_extension(format!("tmp.{}", std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(entry.to_string().as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, &target)
    }
}
