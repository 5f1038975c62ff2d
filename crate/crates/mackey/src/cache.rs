//! On-disk cache of Mackey algebra structure constants.
//!
//! Entries are keyed by the SHA-256 of the group's multiplication table and
//! the p-local prime. A missing, unreadable or inconsistent entry is
//! rebuilt and rewritten, so the cache never changes results.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use mackey_core::grp::Group;
use mackey_core::gset::Quad;
use mackey_core::mackey::MackeyAlgebra;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{AppError, Result};

pub const CACHE_ENV: &str = "MACKEY_CACHE_DIR";
const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    p_local: Option<usize>,
    basis: Vec<[u16; 4]>,
    constants: Vec<(u32, u32, u32, u32)>,
}

#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    /// The explicit directory if given, else `$MACKEY_CACHE_DIR`, else none.
    pub fn from_config(dir: Option<&Path>) -> Self {
        match dir {
            Some(d) => Cache::at(d),
            None => std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map_or(Cache::disabled(), Cache::at),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(group: &Group, p_local: Option<usize>) -> String {
        let mut h = Sha256::new();
        h.update(FORMAT_VERSION.to_le_bytes());
        h.update((group.order() as u64).to_le_bytes());
        for row in group.table.table_rows() {
            for x in row {
                h.update((x as u32).to_le_bytes());
            }
        }
        h.update(p_local.map_or(0u64, |p| p as u64).to_le_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, group: &Group, p_local: Option<usize>) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", Self::key(group, p_local))))
    }

    fn read(path: &Path, group: &Arc<Group>, p_local: Option<usize>) -> Option<MackeyAlgebra> {
        let text = std::fs::read(path).ok()?;
        let e: Entry = serde_json::from_slice(&text).ok()?;
        if e.version != FORMAT_VERSION || e.p_local != p_local {
            return None;
        }
        let basis = e.basis.iter().map(|q| Quad { h: q[0], k: q[1], x: q[2], l: q[3] }).collect();
        let constants: Vec<_> =
            e.constants.iter().map(|&(i, j, k, c)| (i as usize, j as usize, k as usize, c)).collect();
        MackeyAlgebra::from_structure_constants(group.clone(), p_local, basis, &constants).ok()
    }

    fn write(dir: &Path, path: &Path, mu: &MackeyAlgebra) -> Result<()> {
        let entry = Entry {
            version: FORMAT_VERSION,
            p_local: mu.p_local(),
            basis: mu.basis().iter().map(|q| [q.h, q.k, q.x, q.l]).collect(),
            constants: mu
                .structure_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i as u32, j as u32, k as u32, c))
                .collect(),
        };
        let wrap = |source| AppError::Write { path: path.to_path_buf(), source };
        std::fs::create_dir_all(dir).map_err(wrap)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(wrap)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.persist(path).map_err(|e| wrap(e.error))?;
        Ok(())
    }

    /// The Mackey algebra of `group`, from the cache when a valid entry
    /// exists; otherwise built and stored.
    pub fn mackey(&self, group: &Arc<Group>, p_local: Option<usize>) -> Result<MackeyAlgebra> {
        let Some(path) = self.path(group, p_local) else {
            return Ok(MackeyAlgebra::build(group.clone(), p_local)?);
        };
        if let Some(mu) = Self::read(&path, group, p_local) {
            return Ok(mu);
        }
        let mu = MackeyAlgebra::build(group.clone(), p_local)?;
        Self::write(self.dir.as_deref().expect("path implies dir"), &path, &mu)?;
        Ok(mu)
    }

    /// Whether an entry file exists for this key.
    pub fn contains(&self, group: &Group, p_local: Option<usize>) -> bool {
        self.path(group, p_local).is_some_and(|p| p.is_file())
    }
}
