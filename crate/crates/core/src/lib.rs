//! Keyless text obfuscation that keeps prose readable to people while
//! defeating exact-match search and indexing.
//!
//! Words are lowercased, optionally replaced from a substitution dictionary,
//! and otherwise scrambled in place: first and last letters stay put,
//! adjacent vowels trade places, vowels drift past neighbouring consonants
//! and one consonant pair (ideally an ascender/descender pair such as
//! `dg -> gd`) is swapped in longer words. Everything that is not a word
//! passes through byte for byte.
//!
//! ```
//! use fauxcrypt::{obfuscate_text, ObfuscationConfig, SubstitutionDictionary};
//!
//! let out = obfuscate_text("MARLEY was dead:", &SubstitutionDictionary::new(), &ObfuscationConfig::with_seed(7));
//! assert!(out.ends_with(" was daed:"));
//! ```
//!
//! The [`metrics`] module measures how far an obfuscated text drifted from
//! its source with Levenshtein and optimal-string-alignment distances.

pub mod exec;
pub mod lexicon;
pub mod metrics;
pub mod scrambler;
pub mod tokenizer;

pub use exec::Execution;
pub use lexicon::{load_dictionary, load_dictionary_file, substitute, LexiconError, SubstitutionDictionary};
pub use metrics::{
    analyze_corpus, analyze_corpus_with, damerau_levenshtein, digraph_survival, levenshtein, AlignmentError,
    AnalysisOptions, CorpusReport, DigraphTable, WordPairDistance,
};
pub use scrambler::{
    classify_char, lowercase_word, obfuscate_text, obfuscate_text_with, obfuscate_word, word_rng, CharClass,
    ConfigError, ObfuscationConfig, WordCells,
};
pub use tokenizer::{detokenize, tokenize, Token, TokenKind};
