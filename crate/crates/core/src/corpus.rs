//! Corpus directories: `*.knd` files plus an optional `index.toml` giving
//! each entry's status.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::KnotoidDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Code fixed by worked values it reproduces.
    Derived,
    /// Code chosen to agree with published values; its geometry is not
    /// confirmed.
    Reconstructed,
    /// No code available or no agreeing code found.
    Unverified,
    /// File present but not listed in the index.
    Unlisted,
}

impl Status {
    /// Whether the entry counts as validated.
    pub fn is_verified(self) -> bool {
        self == Status::Derived
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("bad index {path}: {source}")]
    Index { path: PathBuf, source: toml::de::Error },
}

#[derive(Debug, Deserialize)]
struct Index {
    #[serde(default)]
    entry: Vec<IndexEntry>,
}

#[derive(Debug, Deserialize)]
struct IndexEntry {
    name: String,
    file: Option<String>,
    status: Status,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub path: Option<PathBuf>,
    pub status: Status,
    /// Parse result; `None` when the entry has no file.
    pub diagram: Option<Result<KnotoidDiagram, String>>,
}

/// Entries sorted by name, with names compared as dotted numbers.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

/// Sort key for names such as `3.1.10`: numeric components compare
/// numerically.
pub fn name_key(name: &str) -> Vec<(u64, String)> {
    name.split('.').map(|p| (p.parse().unwrap_or(u64::MAX), p.to_string())).collect()
}

impl Corpus {
    pub fn load(dir: &Path) -> Result<Corpus, CorpusError> {
        fn io(path: &Path) -> impl FnOnce(std::io::Error) -> CorpusError + '_ {
            move |source| CorpusError::Io { path: path.to_path_buf(), source }
        }
        let mut by_name: BTreeMap<String, CorpusEntry> = BTreeMap::new();
        let index_path = dir.join("index.toml");
        if index_path.exists() {
            let text = std::fs::read_to_string(&index_path).map_err(io(&index_path))?;
            let index: Index = toml::from_str(&text).map_err(|source| CorpusError::Index { path: index_path.clone(), source })?;
            for e in index.entry {
                let path = e.file.map(|f| dir.join(f));
                by_name.insert(e.name.clone(), CorpusEntry { name: e.name, path, status: e.status, diagram: None });
            }
        }
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(io(dir))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "knd"))
            .collect();
        files.sort();
        for path in files {
            let listed = by_name.values().any(|e| e.path.as_deref() == Some(path.as_path()));
            if !listed {
                let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                by_name.insert(name.clone(), CorpusEntry { name, path: Some(path), status: Status::Unlisted, diagram: None });
            }
        }
        let mut entries: Vec<CorpusEntry> = by_name.into_values().collect();
        for e in &mut entries {
            if let Some(p) = &e.path {
                e.diagram = Some(match std::fs::read_to_string(p) {
                    Ok(text) => KnotoidDiagram::parse(&text).map_err(|err| err.to_string()),
                    Err(err) => Err(format!("cannot read {}: {err}", p.display())),
                });
            }
        }
        entries.sort_by_key(|e| name_key(&e.name));
        Ok(Corpus { entries })
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// The parsed diagram for `name`, if present and valid.
    pub fn diagram(&self, name: &str) -> Option<&KnotoidDiagram> {
        self.get(name)?.diagram.as_ref()?.as_ref().ok()
    }

    /// All entries that parsed.
    pub fn diagrams(&self) -> impl Iterator<Item = (&CorpusEntry, &KnotoidDiagram)> {
        self.entries.iter().filter_map(|e| match &e.diagram {
            Some(Ok(d)) => Some((e, d)),
            _ => None,
        })
    }
}
