//! Stored stabilizer chains, one JSON file per group and seed.

use std::fs;
use std::path::PathBuf;

use fpf5::group::ChainData;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
    read: bool,
}

impl Cache {
    /// With `read` off, chains are always rebuilt but still stored.
    pub fn new(dir: impl Into<PathBuf>, read: bool) -> Self {
        Cache { dir: dir.into(), read }
    }

    fn path(&self, name: &str, seed: u64) -> PathBuf {
        self.dir.join(format!("{name}-seed{seed}.json"))
    }

    pub fn load(&self, name: &str, seed: u64) -> Option<ChainData> {
        if !self.read {
            return None;
        }
        let text = fs::read_to_string(self.path(name, seed)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store(&self, name: &str, seed: u64, data: &ChainData) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        if let Ok(text) = serde_json::to_string(data) {
            let _ = fs::write(self.path(name, seed), text);
        }
    }
}
