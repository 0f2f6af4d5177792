//! Edit distances and word-by-word corpus comparison.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::tokenizer::words;

/// Unit-cost edit distance (insert, delete, substitute) over chars.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    levenshtein_chars(&a, &b)
}

fn levenshtein_chars(a: &[char], b: &[char]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for (i, &ca) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let best = (diag + usize::from(ca != cb)).min(row[j] + 1).min(row[j + 1] + 1);
            diag = row[j + 1];
            row[j + 1] = best;
        }
    }
    row[b.len()]
}

/// Optimal string alignment distance: Levenshtein plus transposition of
/// two adjacent characters at unit cost, where no substring is edited more
/// than once. Never exceeds [`levenshtein`].
pub fn damerau_levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    osa_chars(&a, &b)
}

fn osa_chars(a: &[char], b: &[char]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let width = b.len() + 1;
    let mut prev2 = vec![0usize; width];
    let mut prev: Vec<usize> = (0..width).collect();
    let mut cur = vec![0usize; width];

    for i in 1..=a.len() {
        cur[0] = i;
        for j in 1..width {
            let cost = usize::from(a[i - 1] != b[j - 1]);
            let mut best = (prev[j - 1] + cost).min(prev[j] + 1).min(cur[j - 1] + 1);
            if i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] {
                best = best.min(prev2[j - 2] + 1);
            }
            cur[j] = best;
        }
        std::mem::swap(&mut prev2, &mut prev);
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Common English digraphs with their frequency of occurrence in percent.
pub const COMMON_DIGRAPHS: [(&str, f64); 30] = [
    ("nt", 0.56),
    ("ha", 0.56),
    ("es", 0.56),
    ("st", 0.55),
    ("en", 0.55),
    ("ed", 0.53),
    ("to", 0.52),
    ("it", 0.5),
    ("ou", 0.5),
    ("ea", 0.47),
    ("hi", 0.46),
    ("is", 0.46),
    ("or", 0.43),
    ("ti", 0.34),
    ("as", 0.33),
    ("te", 0.27),
    ("et", 0.19),
    ("ng", 0.18),
    ("of", 0.16),
    ("al", 0.09),
    ("de", 0.09),
    ("se", 0.08),
    ("le", 0.08),
    ("sa", 0.06),
    ("si", 0.05),
    ("ar", 0.04),
    ("ve", 0.04),
    ("ra", 0.04),
    ("ld", 0.02),
    ("ur", 0.02),
];

#[derive(Debug, Clone, PartialEq)]
pub struct DigraphTable {
    entries: BTreeMap<[char; 2], f64>,
}

impl DigraphTable {
    pub fn english() -> Self {
        COMMON_DIGRAPHS.iter().map(|&(d, f)| (d, f)).collect()
    }

    pub fn frequency(&self, digraph: &str) -> Option<f64> {
        let mut it = digraph.chars();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => self.entries.get(&[a, b]).copied(),
            _ => None,
        }
    }

    pub fn contains_pair(&self, a: char, b: char) -> bool {
        self.entries.contains_key(&[a, b])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Default for DigraphTable {
    fn default() -> Self {
        Self::english()
    }
}

impl<'a> FromIterator<(&'a str, f64)> for DigraphTable {
    /// Entries that are not exactly two characters long are ignored.
    fn from_iter<I: IntoIterator<Item = (&'a str, f64)>>(iter: I) -> Self {
        let entries = iter
            .into_iter()
            .filter_map(|(d, f)| {
                let mut it = d.chars();
                match (it.next(), it.next(), it.next()) {
                    (Some(a), Some(b), None) => Some(([a, b], f)),
                    _ => None,
                }
            })
            .collect();
        DigraphTable { entries }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordPairDistance {
    pub plain: String,
    pub obfuscated: String,
    pub levenshtein: usize,
    pub damerau: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub word_count: usize,
    pub total_levenshtein: usize,
    pub per_word_levenshtein: f64,
    pub total_damerau: usize,
    pub per_word_damerau: f64,
    pub digraph_survival: f64,
    pub top_pairs: Vec<WordPairDistance>,
}

/// The two texts do not have the same words in the same order.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error(
    "word count mismatch: plain text has {plain_words} words, obfuscated text has \
     {obfuscated_words}; first divergence at word {first_divergence}"
)]
pub struct AlignmentError {
    pub plain_words: usize,
    pub obfuscated_words: usize,
    /// Index of the first word pair whose lengths differ, or the length of
    /// the shorter text when every common pair matches in length.
    pub first_divergence: usize,
    pub plain_word: Option<String>,
    pub obfuscated_word: Option<String>,
}

pub const DEFAULT_TOP_K: usize = 12;

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub top_k: usize,
    pub execution: Execution,
    pub digraphs: DigraphTable,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { top_k: DEFAULT_TOP_K, execution: Execution::default(), digraphs: DigraphTable::english() }
    }
}

struct AlignedWords {
    plain: Vec<String>,
    obfuscated: Vec<String>,
}

fn align(plain: &str, obfuscated: &str) -> Result<AlignedWords, AlignmentError> {
    let plain: Vec<String> = words(plain).map(str::to_lowercase).collect();
    let obfuscated: Vec<String> = words(obfuscated).map(str::to_lowercase).collect();
    if plain.len() == obfuscated.len() {
        return Ok(AlignedWords { plain, obfuscated });
    }
    let first_divergence = plain
        .iter()
        .zip(&obfuscated)
        .position(|(p, o)| p.chars().count() != o.chars().count())
        .unwrap_or(plain.len().min(obfuscated.len()));
    Err(AlignmentError {
        plain_words: plain.len(),
        obfuscated_words: obfuscated.len(),
        first_divergence,
        plain_word: plain.get(first_divergence).cloned(),
        obfuscated_word: obfuscated.get(first_divergence).cloned(),
    })
}

#[derive(Debug, Clone, Copy, Default)]
struct DigraphCount {
    seen: usize,
    survived: usize,
}

fn count_digraphs(plain: &[char], obfuscated: &[char], table: &DigraphTable) -> DigraphCount {
    let mut count = DigraphCount::default();
    for (k, w) in plain.windows(2).enumerate() {
        if table.contains_pair(w[0], w[1]) {
            count.seen += 1;
            if obfuscated.get(k..k + 2) == Some(w) {
                count.survived += 1;
            }
        }
    }
    count
}

fn survival_ratio(counts: impl Iterator<Item = DigraphCount>) -> f64 {
    let (seen, survived) = counts.fold((0, 0), |(s, v), c| (s + c.seen, v + c.survived));
    if seen == 0 {
        1.0
    } else {
        survived as f64 / seen as f64
    }
}

/// Fraction of listed digraph occurrences in the plain words that are still
/// present at the same position in the matching obfuscated words. Returns 1
/// when the plain text contains none.
pub fn digraph_survival(plain: &str, obfuscated: &str, table: &DigraphTable) -> Result<f64, AlignmentError> {
    let aligned = align(plain, obfuscated)?;
    Ok(survival_ratio(aligned.plain.iter().zip(&aligned.obfuscated).map(|(p, o)| {
        let p: Vec<char> = p.chars().collect();
        let o: Vec<char> = o.chars().collect();
        count_digraphs(&p, &o, table)
    })))
}

pub fn analyze_corpus(plain: &str, obfuscated: &str) -> Result<CorpusReport, AlignmentError> {
    analyze_corpus_with(plain, obfuscated, &AnalysisOptions::default())
}

/// Pair words positionally, ignoring case, and measure each pair.
pub fn analyze_corpus_with(
    plain: &str,
    obfuscated: &str,
    options: &AnalysisOptions,
) -> Result<CorpusReport, AlignmentError> {
    let aligned = align(plain, obfuscated)?;
    let indices: Vec<usize> = (0..aligned.plain.len()).collect();

    let measured = exec::map_slice(options.execution, &indices, |&i| {
        let p: Vec<char> = aligned.plain[i].chars().collect();
        let o: Vec<char> = aligned.obfuscated[i].chars().collect();
        (levenshtein_chars(&p, &o), osa_chars(&p, &o), count_digraphs(&p, &o, &options.digraphs))
    });

    let word_count = measured.len();
    let total_levenshtein: usize = measured.iter().map(|m| m.0).sum();
    let total_damerau: usize = measured.iter().map(|m| m.1).sum();
    let mean = |total: usize| if word_count == 0 { 0.0 } else { total as f64 / word_count as f64 };

    let mut ranked: Vec<usize> = indices.into_iter().filter(|&i| measured[i].0 > 0).collect();
    ranked.sort_by(|&a, &b| measured[b].0.cmp(&measured[a].0).then(a.cmp(&b)));
    let mut seen = HashSet::new();
    let top_pairs = ranked
        .into_iter()
        .filter(|&i| seen.insert((&aligned.plain[i], &aligned.obfuscated[i])))
        .take(options.top_k)
        .map(|i| WordPairDistance {
            plain: aligned.plain[i].clone(),
            obfuscated: aligned.obfuscated[i].clone(),
            levenshtein: measured[i].0,
            damerau: measured[i].1,
        })
        .collect();

    Ok(CorpusReport {
        word_count,
        total_levenshtein,
        per_word_levenshtein: mean(total_levenshtein),
        total_damerau,
        per_word_damerau: mean(total_damerau),
        digraph_survival: survival_ratio(measured.iter().map(|m| m.2)),
        top_pairs,
    })
}
