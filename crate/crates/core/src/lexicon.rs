//! Word substitution dictionary.
//!
//! File format, one entry per line:
//!
//! ```text
//! # comment
//! http<TAB>hxxp
//! ```
//!
//! Key and replacement are separated by a single tab character. Empty lines and lines
//! starting with `#` are skipped. Keys are folded to lowercase on load.

use std::collections::HashMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: &'static str },
    #[error("dictionary is not valid UTF-8: {0}")]
    Decode(#[from] std::str::Utf8Error),
    #[error("failed to read dictionary: {0}")]
    Io(#[from] std::io::Error),
}

/// A later line redefined a key; the later replacement was kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateKey {
    pub key: String,
    pub first_line: usize,
    pub line: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubstitutionDictionary {
    entries: HashMap<String, String>,
    source: Option<PathBuf>,
    warnings: Vec<DuplicateKey>,
}

impl SubstitutionDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert an entry programmatically. The key is lowercased.
    ///
    /// Panics if the key or replacement is empty or contains whitespace.
    pub fn insert(&mut self, key: &str, replacement: &str) {
        assert!(valid_field(key), "invalid dictionary key {key:?}");
        assert!(valid_field(replacement), "invalid replacement {replacement:?}");
        self.entries.insert(key.to_lowercase(), replacement.to_owned());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn source(&self) -> Option<&Path> {
        self.source.as_deref()
    }

    pub fn warnings(&self) -> &[DuplicateKey] {
        &self.warnings
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

impl<'a> FromIterator<(&'a str, &'a str)> for SubstitutionDictionary {
    fn from_iter<I: IntoIterator<Item = (&'a str, &'a str)>>(iter: I) -> Self {
        let mut dict = SubstitutionDictionary::new();
        for (k, v) in iter {
            dict.insert(k, v);
        }
        dict
    }
}

fn valid_field(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(char::is_whitespace)
}

pub fn load_dictionary<R: Read>(mut source: R) -> Result<SubstitutionDictionary, LexiconError> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    parse_dictionary(std::str::from_utf8(&bytes)?)
}

pub fn load_dictionary_file(path: &Path) -> Result<SubstitutionDictionary, LexiconError> {
    let file = std::fs::File::open(path)?;
    let mut dict = load_dictionary(file)?;
    dict.source = Some(path.to_owned());
    Ok(dict)
}

pub fn parse_dictionary(text: &str) -> Result<SubstitutionDictionary, LexiconError> {
    let mut dict = SubstitutionDictionary::new();
    let mut defined_at: HashMap<String, usize> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason| LexiconError::Parse { line: line_no, reason };

        let (key, replacement) = line.split_once('\t').ok_or(err("missing tab separator"))?;
        if key.is_empty() {
            return Err(err("empty key"));
        }
        if replacement.is_empty() {
            return Err(err("empty replacement"));
        }
        if key.chars().any(char::is_whitespace) {
            return Err(err("whitespace in key"));
        }
        if replacement.chars().any(char::is_whitespace) {
            return Err(err("whitespace in replacement"));
        }

        let key = key.to_lowercase();
        if let Some(&first_line) = defined_at.get(&key) {
            dict.warnings.push(DuplicateKey { key: key.clone(), first_line, line: line_no });
        } else {
            defined_at.insert(key.clone(), line_no);
        }
        dict.entries.insert(key, replacement.to_owned());
    }
    Ok(dict)
}

/// Look up `word` case-insensitively. A hit is emitted verbatim and exempt
/// from scrambling.
pub fn substitute<'d>(word: &str, dict: &'d SubstitutionDictionary) -> Option<&'d str> {
    if dict.is_empty() {
        return None;
    }
    dict.get(&word.to_ascii_lowercase())
}
