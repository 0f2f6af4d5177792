//! Per-word letter scrambling.
//!
//! A word runs through a fixed pipeline:
//!
//! 1. lowercase
//! 2. dictionary substitution (a hit ends the pipeline)
//! 3. pin the first and last letters
//! 4. swap adjacent vowel pairs and pin them
//! 5. shift some vowels one place past a neighbouring consonant
//! 6. swap one consonant pair in words longer than the threshold,
//!    preferring a riser/dangler pair
//! 7. optionally, move one free letter several places
//!
//! Pinned cells are never touched by a later step, and no step inserts or
//! deletes characters, so an unsubstituted word always comes out as an
//! anagram of its lowercased input with the same first and last letters.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::lexicon::{substitute, SubstitutionDictionary};
use crate::tokenizer::{tokenize, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharClass {
    Vowel,
    /// Letter with an ascender: b d f h k l t.
    RiserConsonant,
    /// Letter with a descender: g j p q y.
    DanglerConsonant,
    PlainConsonant,
    NonLetter,
}

impl CharClass {
    pub fn is_consonant(self) -> bool {
        matches!(self, CharClass::RiserConsonant | CharClass::DanglerConsonant | CharClass::PlainConsonant)
    }

    pub fn is_letter(self) -> bool {
        self != CharClass::NonLetter
    }
}

pub fn classify_char(c: char) -> CharClass {
    match c.to_ascii_lowercase() {
        'a' | 'e' | 'i' | 'o' | 'u' => CharClass::Vowel,
        'b' | 'd' | 'f' | 'h' | 'k' | 'l' | 't' => CharClass::RiserConsonant,
        'g' | 'j' | 'p' | 'q' | 'y' => CharClass::DanglerConsonant,
        'a'..='z' => CharClass::PlainConsonant,
        _ => CharClass::NonLetter,
    }
}

pub fn lowercase_word(word: &str) -> String {
    word.to_ascii_lowercase()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub ch: char,
    pub class: CharClass,
    pub pinned: bool,
}

/// Working buffer for one word: a character per cell plus its class and
/// whether an earlier step has frozen it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCells {
    cells: Vec<Cell>,
}

impl WordCells {
    pub fn new(word: &str) -> Self {
        let cells = word.chars().map(|ch| Cell { ch, class: classify_char(ch), pinned: false }).collect();
        WordCells { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn letter_count(&self) -> usize {
        self.cells.iter().filter(|c| c.class.is_letter()).count()
    }

    pub fn is_pinned(&self, i: usize) -> bool {
        self.cells[i].pinned
    }

    pub fn pin(&mut self, i: usize) {
        self.cells[i].pinned = true;
    }

    pub fn pinned_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.cells[i].pinned).collect()
    }

    /// Swap two unpinned cells.
    fn swap(&mut self, i: usize, j: usize) {
        debug_assert!(!self.cells[i].pinned && !self.cells[j].pinned);
        self.cells.swap(i, j);
    }

    fn free(&self, i: usize) -> bool {
        !self.cells[i].pinned
    }

    fn free_with(&self, i: usize, pred: impl Fn(CharClass) -> bool) -> bool {
        let c = &self.cells[i];
        !c.pinned && pred(c.class)
    }
}

impl fmt::Display for WordCells {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            write!(f, "{}", c.ch)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("vowel shift probability must be within [0, 1], got {0}")]
    ShiftProbability(f64),
    #[error("consonant swap length threshold must be at least 3, got {0}")]
    SwapThreshold(usize),
    #[error("extreme move distance must be at least 1, got {0}")]
    ExtremeMove(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObfuscationConfig {
    pub seed: u64,
    /// Only words with more letters than this get a consonant swap.
    pub consonant_swap_min_len: usize,
    pub vowel_shift_prob: f64,
    pub extreme: bool,
    pub extreme_max_move: usize,
}

impl Default for ObfuscationConfig {
    fn default() -> Self {
        ObfuscationConfig {
            seed: 0,
            consonant_swap_min_len: 5,
            vowel_shift_prob: 0.5,
            extreme: false,
            extreme_max_move: 3,
        }
    }
}

impl ObfuscationConfig {
    pub fn with_seed(seed: u64) -> Self {
        ObfuscationConfig { seed, ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(0.0..=1.0).contains(&self.vowel_shift_prob) {
            return Err(ConfigError::ShiftProbability(self.vowel_shift_prob));
        }
        if self.consonant_swap_min_len < 3 {
            return Err(ConfigError::SwapThreshold(self.consonant_swap_min_len));
        }
        if self.extreme_max_move < 1 {
            return Err(ConfigError::ExtremeMove(self.extreme_max_move));
        }
        Ok(())
    }
}

/// Random stream for one word.
///
/// ChaCha8 keyed by the document seed, with the token index selecting the
/// 64-bit stream id. Streams for different tokens are independent, so words
/// can be processed in any order or on any thread.
pub type WordRng = ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct RngFactory {
    base: ChaCha8Rng,
}

impl RngFactory {
    pub fn new(seed: u64) -> Self {
        RngFactory { base: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn for_token(&self, index: usize) -> WordRng {
        let mut rng = self.base.clone();
        rng.set_stream(index as u64);
        rng
    }
}

pub fn word_rng(seed: u64, index: usize) -> WordRng {
    RngFactory::new(seed).for_token(index)
}

pub fn pin_boundaries(cells: &mut WordCells) {
    let n = cells.len();
    if n == 0 {
        return;
    }
    if n <= 3 {
        (0..n).for_each(|i| cells.pin(i));
        return;
    }
    cells.pin(0);
    cells.pin(n - 1);
    for i in 0..n {
        if !cells.cells[i].class.is_letter() {
            cells.pin(i);
        }
    }
}

/// Swap each non-overlapping pair of adjacent free vowels, left to right,
/// and pin both.
pub fn swap_vowel_digraphs(cells: &mut WordCells) {
    let is_vowel = |c: CharClass| c == CharClass::Vowel;
    let mut i = 0;
    while i + 1 < cells.len() {
        if cells.free_with(i, is_vowel) && cells.free_with(i + 1, is_vowel) {
            cells.swap(i, i + 1);
            cells.pin(i);
            cells.pin(i + 1);
            i += 2;
        } else {
            i += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

fn neighbour(i: usize, dir: Direction, len: usize) -> Option<usize> {
    match dir {
        Direction::Left => i.checked_sub(1),
        Direction::Right => (i + 1 < len).then_some(i + 1),
    }
}

/// Move the free vowel at `i` one place past its free consonant neighbour
/// in `dir`. Returns false, leaving the word alone, if that is not possible.
pub fn shift_vowel(cells: &mut WordCells, i: usize, dir: Direction) -> bool {
    if !cells.free_with(i, |c| c == CharClass::Vowel) {
        return false;
    }
    match neighbour(i, dir, cells.len()) {
        Some(j) if cells.free_with(j, CharClass::is_consonant) => {
            cells.swap(i, j);
            true
        }
        _ => false,
    }
}

/// Each free vowel, with probability `vowel_shift_prob`, trades places with
/// a free consonant neighbour. A vowel moves at most once.
pub fn shift_vowels<R: Rng + ?Sized>(cells: &mut WordCells, rng: &mut R, config: &ObfuscationConfig) {
    if config.vowel_shift_prob <= 0.0 {
        return;
    }
    let n = cells.len();
    let mut i = 0;
    while i < n {
        if !cells.free_with(i, |c| c == CharClass::Vowel) || !rng.random_bool(config.vowel_shift_prob) {
            i += 1;
            continue;
        }
        let open = |dir| neighbour(i, dir, n).is_some_and(|j| cells.free_with(j, CharClass::is_consonant));
        let dir = match (open(Direction::Left), open(Direction::Right)) {
            (true, true) => {
                if rng.random_bool(0.5) {
                    Direction::Left
                } else {
                    Direction::Right
                }
            }
            (true, false) => Direction::Left,
            (false, true) => Direction::Right,
            (false, false) => {
                i += 1;
                continue;
            }
        };
        shift_vowel(cells, i, dir);
        // Skip past the vowel's new position so it is not shifted twice.
        i += if dir == Direction::Right { 2 } else { 1 };
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SwapTier {
    RiserDangler,
    AnyConsonants,
}

fn is_riser_dangler(a: CharClass, b: CharClass) -> bool {
    matches!(
        (a, b),
        (CharClass::RiserConsonant, CharClass::DanglerConsonant)
            | (CharClass::DanglerConsonant, CharClass::RiserConsonant)
    )
}

/// Adjacent free consonant pairs in the best available tier.
pub fn consonant_swap_candidates(cells: &WordCells) -> Option<(SwapTier, Vec<(usize, usize)>)> {
    let pairs: Vec<(usize, usize)> = (1..cells.len())
        .map(|j| (j - 1, j))
        .filter(|&(i, j)| cells.free_with(i, CharClass::is_consonant) && cells.free_with(j, CharClass::is_consonant))
        .collect();
    if pairs.is_empty() {
        return None;
    }
    let preferred: Vec<_> =
        pairs.iter().copied().filter(|&(i, j)| is_riser_dangler(cells.cells[i].class, cells.cells[j].class)).collect();
    if preferred.is_empty() {
        Some((SwapTier::AnyConsonants, pairs))
    } else {
        Some((SwapTier::RiserDangler, preferred))
    }
}

/// Swap one consonant pair in words with more than `consonant_swap_min_len`
/// letters. Returns the swapped positions.
pub fn swap_consonant_pair<R: Rng + ?Sized>(
    cells: &mut WordCells,
    rng: &mut R,
    config: &ObfuscationConfig,
) -> Option<(usize, usize)> {
    if cells.letter_count() <= config.consonant_swap_min_len {
        return None;
    }
    let (_, candidates) = consonant_swap_candidates(cells)?;
    let (i, j) = candidates[rng.random_range(0..candidates.len())];
    cells.swap(i, j);
    Some((i, j))
}

/// Move one free letter up to `extreme_max_move` places within its run of
/// free cells; the cells in between slide over by one. Returns `(from, to)`.
pub fn extreme_move<R: Rng + ?Sized>(
    cells: &mut WordCells,
    rng: &mut R,
    config: &ObfuscationConfig,
) -> Option<(usize, usize)> {
    if !config.extreme {
        return None;
    }
    let n = cells.len();
    if (0..n).filter(|&i| cells.free(i)).count() < 3 {
        return None;
    }

    // Free letters that have at least one free neighbour, with their run bounds.
    let mut movable = Vec::new();
    let mut start = 0;
    while start < n {
        if !cells.free(start) {
            start += 1;
            continue;
        }
        let mut end = start;
        while end < n && cells.free(end) {
            end += 1;
        }
        if end - start >= 2 {
            movable.extend((start..end).filter(|&i| cells.cells[i].class.is_letter()).map(|i| (i, start, end)));
        }
        start = end;
    }
    if movable.is_empty() {
        return None;
    }

    let (from, lo, hi) = movable[rng.random_range(0..movable.len())];
    let left_room = (from - lo).min(config.extreme_max_move);
    let right_room = (hi - 1 - from).min(config.extreme_max_move);
    // Pick a displacement uniformly from every reachable non-zero offset.
    let k = rng.random_range(0..left_room + right_room);
    let to = if k < left_room { from - (k + 1) } else { from + (k - left_room + 1) };

    if to < from {
        cells.cells[to..=from].rotate_right(1);
    } else {
        cells.cells[from..=to].rotate_left(1);
    }
    Some((from, to))
}

/// Run the full per-word pipeline.
pub fn obfuscate_word<R: Rng + ?Sized>(
    word: &str,
    dict: &SubstitutionDictionary,
    rng: &mut R,
    config: &ObfuscationConfig,
) -> String {
    let lowered = lowercase_word(word);
    if let Some(replacement) = substitute(&lowered, dict) {
        return replacement.to_owned();
    }
    let mut cells = WordCells::new(&lowered);
    pin_boundaries(&mut cells);
    swap_vowel_digraphs(&mut cells);
    shift_vowels(&mut cells, rng, config);
    swap_consonant_pair(&mut cells, rng, config);
    extreme_move(&mut cells, rng, config);
    cells.to_string()
}

pub fn obfuscate_text(text: &str, dict: &SubstitutionDictionary, config: &ObfuscationConfig) -> String {
    obfuscate_text_with(text, dict, config, Execution::default())
}

/// Obfuscate every word of `text`, leaving separators untouched. The output
/// is identical for every [`Execution`] mode.
pub fn obfuscate_text_with(
    text: &str,
    dict: &SubstitutionDictionary,
    config: &ObfuscationConfig,
    exec: Execution,
) -> String {
    let tokens = tokenize(text);
    let rngs = RngFactory::new(config.seed);
    let pieces = exec::map_slice(exec, &tokens, |token: &Token<'_>| {
        if token.is_word() {
            let mut rng = rngs.for_token(token.index);
            Some(obfuscate_word(token.text, dict, &mut rng, config))
        } else {
            None
        }
    });

    let mut out = String::with_capacity(text.len());
    for (token, piece) in tokens.iter().zip(&pieces) {
        out.push_str(piece.as_deref().unwrap_or(token.text));
    }
    out
}
