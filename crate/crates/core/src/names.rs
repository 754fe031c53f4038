//! Name tables: plain UTF-8 files mapping 1-based indices to display names.
//!
//! ```text
//! # comment
//! 1 = Dhanishthā
//! 2 = Śatabhiṣaj
//! ```
//!
//! Blank lines and `#` comments are ignored; indices must be unique and
//! start at 1. Gaps are allowed and render as plain ordinals.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub const NAKSHATRA_TABLE: &str = include_str!("../data/nakshatra.txt");
pub const TITHI_TABLE: &str = include_str!("../data/tithi.txt");
pub const VARIANT_TABLE: &str = include_str!("../data/variants.txt");

/// File stems looked up in a `--names` directory.
pub const NAKSHATRA_FILE: &str = "nakshatra.txt";
pub const TITHI_FILE: &str = "tithi.txt";
pub const VARIANT_FILE: &str = "variants.txt";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NameTable {
    entries: BTreeMap<u32, String>,
}

impl NameTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::NameTable {
                line: line_no,
                message,
            };
            let (key, name) = line
                .split_once('=')
                .ok_or_else(|| err("expected `<index> = <name>`".into()))?;
            let index: u32 = key
                .trim()
                .parse()
                .map_err(|_| err(format!("bad index {:?}", key.trim())))?;
            if index == 0 {
                return Err(err("indices start at 1".into()));
            }
            let name = name.trim();
            if name.is_empty() {
                return Err(err("empty name".into()));
            }
            if entries.insert(index, name.to_string()).is_some() {
                return Err(err(format!("duplicate index {index}")));
            }
        }
        Ok(NameTable { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Loads `dir/file` if it exists.
    pub fn load_optional(dir: &Path, file: &str) -> Result<Option<Self>> {
        let path = dir.join(file);
        if path.is_file() {
            Self::load(&path).map(Some)
        } else {
            Ok(None)
        }
    }

    pub fn nakshatras() -> Self {
        Self::parse(NAKSHATRA_TABLE).expect("shipped nakshatra table parses")
    }

    pub fn tithis() -> Self {
        Self::parse(TITHI_TABLE).expect("shipped tithi table parses")
    }

    pub fn get(&self, index: u32) -> Option<&str> {
        self.entries.get(&index).map(String::as_str)
    }

    /// Name for `index`, or the index itself when the table has none.
    pub fn display(&self, index: u32) -> String {
        self.get(index)
            .map(str::to_string)
            .unwrap_or_else(|| index.to_string())
    }

    /// First index carrying `name`; comparison ignores case.
    pub fn index_of(&self, name: &str) -> Option<u32> {
        let wanted = name.trim().to_lowercase();
        self.entries
            .iter()
            .find(|(_, n)| n.to_lowercase() == wanted)
            .map(|(k, _)| *k)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &str)> {
        self.entries.iter().map(|(k, v)| (*k, v.as_str()))
    }
}
