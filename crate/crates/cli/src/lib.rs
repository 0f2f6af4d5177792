//! `fauxcrypt` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad flags, dictionary or
//! misaligned inputs.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use fauxcrypt::{
    analyze_corpus_with, load_dictionary_file, obfuscate_text, AnalysisOptions, CorpusReport, LexiconError,
    ObfuscationConfig, SubstitutionDictionary,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "fauxcrypt", version, about = "Scramble text so people can read it and search engines can't")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Obfuscate a UTF-8 text file.
    Obfuscate(ObfuscateArgs),
    /// Compare a plain text with its obfuscated form word by word.
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Args)]
pub struct ObfuscateArgs {
    /// Input file; standard input when omitted or "-".
    pub input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Random seed. Drawn from system entropy and reported when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Substitution dictionary (`word<TAB>replacement` per line).
    #[arg(long)]
    pub dict: Option<PathBuf>,
    /// Also move one letter per word several places.
    #[arg(long)]
    pub extreme: bool,
    /// How far an extreme move may carry a letter.
    #[arg(long, default_value_t = 3)]
    pub extreme_max_move: usize,
    /// Words with more letters than this get a consonant swap.
    #[arg(long, default_value_t = 5)]
    pub min_swap_len: usize,
    /// Probability that each free vowel is shifted.
    #[arg(long, default_value_t = 0.5)]
    pub shift_prob: f64,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub plain: PathBuf,
    pub obfuscated: PathBuf,
    /// Emit the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Number of worst word pairs to list.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    pub top: u64,
    /// Write the report here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => EXIT_IO,
            Failure::Usage(_) => EXIT_USAGE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Usage(m) => m,
        }
    }
}

fn io_failure(path: &Path, err: impl std::fmt::Display) -> Failure {
    Failure::Io(format!("{}: {err}", path.display()))
}

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    let mut bytes = Vec::new();
    match path {
        None => io::stdin().read_to_end(&mut bytes).map(drop),
        Some(p) if p == Path::new("-") => io::stdin().read_to_end(&mut bytes).map(drop),
        Some(p) => fs::read(p).map(|b| bytes = b),
    }
    .map_err(|e| io_failure(path.unwrap_or(Path::new("<stdin>")), e))?;
    String::from_utf8(bytes).map_err(|e| io_failure(path.unwrap_or(Path::new("<stdin>")), e))
}

fn write_output(path: Option<&Path>, stdout: &mut dyn Write, contents: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, contents).map_err(|e| io_failure(p, e)),
        None => stdout
            .write_all(contents.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| Failure::Io(format!("<stdout>: {e}"))),
    }
}

fn load_dict(path: Option<&Path>, stderr: &mut dyn Write) -> Result<SubstitutionDictionary, Failure> {
    let Some(path) = path else {
        return Ok(SubstitutionDictionary::new());
    };
    let dict = load_dictionary_file(path).map_err(|e| match e {
        LexiconError::Io(e) => io_failure(path, e),
        other => Failure::Usage(format!("{}: {other}", path.display())),
    })?;
    for w in dict.warnings() {
        let _ = writeln!(
            stderr,
            "warning: {}: line {} redefines {:?} from line {}",
            path.display(),
            w.line,
            w.key,
            w.first_line
        );
    }
    Ok(dict)
}

fn finish(result: Result<(), Failure>, stderr: &mut dyn Write) -> u8 {
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "fauxcrypt: {}", f.message());
            f.code()
        }
    }
}

pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    match cli.command {
        Command::Obfuscate(args) => run_obfuscate(&args, stdout, stderr),
        Command::Analyze(args) => run_analyze(&args, stdout, stderr),
    }
}

pub fn run_obfuscate(args: &ObfuscateArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let result = (|| {
        let config = ObfuscationConfig {
            seed: args.seed.unwrap_or_else(rand::random),
            consonant_swap_min_len: args.min_swap_len,
            vowel_shift_prob: args.shift_prob,
            extreme: args.extreme,
            extreme_max_move: args.extreme_max_move,
        };
        config.validate().map_err(|e| Failure::Usage(e.to_string()))?;
        let dict = load_dict(args.dict.as_deref(), stderr)?;
        let text = read_text(args.input.as_deref())?;

        let _ = writeln!(stderr, "seed: {}", config.seed);
        let out = obfuscate_text(&text, &dict, &config);
        write_output(args.output.as_deref(), stdout, &out)
    })();
    finish(result, stderr)
}

pub fn run_analyze(args: &AnalyzeArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let result = (|| {
        let plain = read_text(Some(&args.plain))?;
        let obfuscated = read_text(Some(&args.obfuscated))?;
        let options = AnalysisOptions { top_k: args.top.try_into().unwrap_or(usize::MAX), ..Default::default() };
        let report = analyze_corpus_with(&plain, &obfuscated, &options).map_err(|e| {
            let mut msg = e.to_string();
            if let (Some(p), Some(o)) = (&e.plain_word, &e.obfuscated_word) {
                let _ = write!(msg, " ({p:?} vs {o:?})");
            }
            Failure::Usage(msg)
        })?;
        let rendered = if args.json {
            let mut s = serde_json::to_string_pretty(&report).map_err(|e| Failure::Io(e.to_string()))?;
            s.push('\n');
            s
        } else {
            render_text_report(&report)
        };
        write_output(args.output.as_deref(), stdout, &rendered)
    })();
    finish(result, stderr)
}

pub fn render_text_report(report: &CorpusReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "words                 {}", report.word_count);
    let _ = writeln!(s, "total levenshtein     {}", report.total_levenshtein);
    let _ = writeln!(s, "levenshtein per word  {:.3}", report.per_word_levenshtein);
    let _ = writeln!(s, "total damerau         {}", report.total_damerau);
    let _ = writeln!(s, "damerau per word      {:.3}", report.per_word_damerau);
    let _ = writeln!(s, "digraph survival      {:.3}", report.digraph_survival);
    if report.top_pairs.is_empty() {
        return s;
    }

    let plain_w = report.top_pairs.iter().map(|p| p.plain.chars().count()).max().unwrap_or(0).max(9);
    let _ = writeln!(s);
    let _ = writeln!(s, "LD  DL  {:<plain_w$}  obfuscated", "plaintext");
    for p in &report.top_pairs {
        let _ = writeln!(s, "{:>2}  {:>2}  {:<plain_w$}  {}", p.levenshtein, p.damerau, p.plain, p.obfuscated);
    }
    s
}
