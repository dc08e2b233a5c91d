//! The `isan` command line: line-oriented wrappers over the library.
//!
//! Exit codes: 0 clean, 1 findings, 2 usage or I/O error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use crate::g2p::dict::{build_dictionary, Dictionary};
use crate::g2p::{self, Pronunciation};
use crate::lexicon::{self, Lexicon, WordList, WordOrigin};
use crate::orthography::{self, check_orthographic_constraints, RuleSet, SpellingDecision, Speller};
use crate::script;
use crate::tonebox::{self, classify_dialect, read_cells, ToneBox};
use crate::transcript::{self, MarkerLexicon, TranscriptConfig};

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    /// Newline-delimited JSON records.
    #[value(alias = "structured")]
    #[serde(alias = "structured")]
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "isan", version, about = "Isan text tools: tones, spelling, transcripts, pronunciation dictionaries")]
struct Cli {
    /// TOML file naming data files to use instead of the bundled ones.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Treat warnings and unparseable input as failures.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ToneSystem {
    Isan,
    Thai,
}

#[derive(Debug, Args)]
struct Input {
    /// Items to process; read from --input or stdin when absent.
    items: Vec<String>,
    /// Read items from a file, one per line.
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tone of each syllable: token, class, kind, tone.
    Tone {
        #[arg(long, value_enum, default_value = "isan")]
        system: ToneSystem,
        #[command(flatten)]
        input: Input,
    },
    /// Citation pronunciation of each word.
    Phonemize {
        #[command(flatten)]
        input: Input,
    },
    /// Standard Isan spelling. Input lines: word[TAB origin[TAB pronunciation[TAB etymon]]].
    SuggestSpelling {
        /// Word origin for every item; classified per word when absent.
        #[arg(long)]
        origin: Option<WordOrigin>,
        #[arg(long)]
        pronunciation: Option<Pronunciation>,
        #[arg(long)]
        etymon: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    /// Check transcript files against the transcription convention.
    ValidateTranscript {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// SixTone or NotSixTone for an elicited tone box (row, column, label TSV).
    ClassifyDialect { file: PathBuf },
    /// Build or query a pronunciation dictionary.
    Dict {
        #[command(subcommand)]
        command: DictCommand,
    },
    /// Apply correspondence rules to Central Thai spellings. Input lines: word[TAB pronunciation].
    Correspond {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
enum DictCommand {
    /// Dictionary TSV for a word list.
    Build {
        #[command(flatten)]
        input: Input,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Ranked pronunciations of a headword.
    Lookup {
        word: String,
        #[arg(long)]
        context: Option<String>,
        /// Dictionary TSV; built from the lexicon when absent.
        #[arg(long)]
        dict: Option<PathBuf>,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    format: Option<Format>,
    strict: Option<bool>,
    #[serde(default)]
    data: DataPaths,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct DataPaths {
    tone_box: Option<PathBuf>,
    correspondence: Option<PathBuf>,
    lexicon: Option<PathBuf>,
    central_words: Option<PathBuf>,
    loan_exceptions: Option<PathBuf>,
    markers: Option<PathBuf>,
    abbreviations: Option<PathBuf>,
    protected_spans: Option<PathBuf>,
    latin_whitelist: Option<PathBuf>,
    foreign_terms: Option<PathBuf>,
}

/// Data files resolved and parsed at startup.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub format: Format,
    pub strict: bool,
    pub tone_box: ToneBox,
    pub lexicon: Lexicon,
    pub central: WordList,
    pub loan_exceptions: WordList,
    pub rules: RuleSet,
    pub transcript: TranscriptConfig,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            format: Format::Text,
            strict: false,
            tone_box: tonebox::isan6().clone(),
            lexicon: lexicon::bundled_lexicon().clone(),
            central: lexicon::central_words().clone(),
            loan_exceptions: orthography::bundled_loan_exceptions().clone(),
            rules: orthography::bundled_rules().clone(),
            transcript: TranscriptConfig::default(),
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn lines_of(text: &str) -> Vec<String> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(str::to_string).collect()
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<CliConfig, String> {
        let file: ConfigFile = toml::from_str(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        let resolve = |p: &Option<PathBuf>| -> Result<Option<(PathBuf, String)>, String> {
            match p {
                None => Ok(None),
                Some(p) => {
                    let full = base.join(p);
                    read(&full).map(|t| Some((full, t)))
                }
            }
        };
        let ctx = |p: &Path, e: &dyn std::fmt::Display| format!("{}: {e}", p.display());
        let d = &file.data;
        let mut cfg = CliConfig::default();
        if let Some(f) = file.format {
            cfg.format = f;
        }
        cfg.strict = file.strict.unwrap_or(false);
        if let Some((p, t)) = resolve(&d.tone_box)? {
            cfg.tone_box = ToneBox::from_tsv(&p.display().to_string(), &t).map_err(|e| ctx(&p, &e))?;
        }
        if let Some((p, t)) = resolve(&d.correspondence)? {
            cfg.rules = RuleSet::parse(&t).map_err(|e| ctx(&p, &e))?;
        }
        if let Some((p, t)) = resolve(&d.lexicon)? {
            cfg.lexicon = Lexicon::parse(&t).map_err(|e| ctx(&p, &e))?;
        }
        if let Some((_, t)) = resolve(&d.central_words)? {
            cfg.central = WordList::parse(&t);
        }
        if let Some((_, t)) = resolve(&d.loan_exceptions)? {
            cfg.loan_exceptions = WordList::parse(&t);
        }
        if let Some((p, t)) = resolve(&d.markers)? {
            cfg.transcript.markers = Some(MarkerLexicon::parse(&t).map_err(|e| ctx(&p, &e))?);
        }
        if let Some((_, t)) = resolve(&d.abbreviations)? {
            cfg.transcript.abbreviations = lines_of(&t);
        }
        if let Some((_, t)) = resolve(&d.protected_spans)? {
            cfg.transcript.protected_spans = lines_of(&t);
        }
        if let Some((_, t)) = resolve(&d.latin_whitelist)? {
            cfg.transcript.latin_whitelist = lines_of(&t).iter().map(|w| w.to_lowercase()).collect();
        }
        if let Some((_, t)) = resolve(&d.foreign_terms)? {
            cfg.transcript.foreign_terms = transcript::parse_foreign_terms(&t);
        }
        Ok(cfg)
    }

    fn speller(&self) -> Speller<'_> {
        Speller {
            lexicon: &self.lexicon,
            central: &self.central,
            rules: &self.rules,
            loan_exceptions: &self.loan_exceptions,
        }
    }
}

/// Command outcome before it becomes an exit code.
enum Failure {
    Usage(String),
}

type Outcome = Result<bool, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Ctx<'a> {
    cfg: &'a CliConfig,
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, text: String, record: serde_json::Value) -> Result<(), Failure> {
        let line = match self.cfg.format {
            Format::Text => text,
            Format::Json => record.to_string(),
        };
        writeln!(self.out, "{line}").map_err(|e| usage(format!("write failed: {e}")))
    }

    fn warn(&mut self, msg: &str) {
        let _ = writeln!(self.err, "{msg}");
    }

    /// Items from the command line, a file, or stdin, one per line.
    fn items(&mut self, input: &Input) -> Result<Vec<String>, Failure> {
        if !input.items.is_empty() {
            return Ok(input.items.clone());
        }
        let text = match &input.input {
            Some(p) if p.as_os_str() != "-" => read(p).map_err(usage)?,
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
                s
            }
        };
        Ok(text.lines().map(|l| l.trim_end_matches('\r').to_string()).filter(|l| !l.trim().is_empty()).collect())
    }

    /// A per-item failure: fatal under --strict, a finding otherwise.
    fn item_error(&mut self, item: &str, message: String) -> Result<(), Failure> {
        if self.cfg.strict {
            return Err(usage(format!("{item}: {message}")));
        }
        self.emit(format!("{item}\terror\t{message}"), json!({"input": item, "error": message}))
    }
}

fn cmd_tone(ctx: &mut Ctx<'_>, system: ToneSystem, input: &Input) -> Outcome {
    let mut findings = false;
    let tokens: Vec<String> =
        ctx.items(input)?.iter().flat_map(|l| l.split_whitespace().map(str::to_string).collect::<Vec<_>>()).collect();
    for tok in tokens {
        let result = script::parse_syllable(&tok).map_err(|e| e.to_string()).and_then(|s| {
            let tone = match system {
                ToneSystem::Isan => ctx.cfg.tone_box.tone_of(&s).cloned(),
                ToneSystem::Thai => tonebox::compute_thai_tone(&s),
            };
            tone.map(|t| (s, t)).map_err(|e| e.to_string())
        });
        match result {
            Ok((s, t)) => {
                let (class, kind) = (script::effective_class(&s), script::syllable_kind(&s));
                ctx.emit(
                    format!("{tok}\t{class}\t{kind}\t{t}"),
                    json!({"token": tok, "class": class.to_string(), "kind": kind.to_string(), "tone": t.to_string()}),
                )?;
            }
            Err(e) => {
                findings = true;
                ctx.item_error(&tok, e)?;
            }
        }
    }
    Ok(findings)
}

fn cmd_phonemize(ctx: &mut Ctx<'_>, input: &Input) -> Outcome {
    let mut findings = false;
    for word in ctx.items(input)? {
        let word = word.trim().to_string();
        match g2p::phonemize_word(&word, &ctx.cfg.lexicon) {
            Ok(p) => {
                let syllables: Vec<String> = p.syllables().iter().map(|s| s.to_string()).collect();
                ctx.emit(format!("{word}\t{p}"), json!({"word": word, "pronunciation": p.to_string(), "syllables": syllables}))?;
            }
            Err(e) => {
                findings = true;
                ctx.item_error(&word, e.to_string())?;
            }
        }
    }
    Ok(findings)
}

fn decision_record(d: &SpellingDecision) -> serde_json::Value {
    json!({
        "input": d.input,
        "origin": d.origin.id(),
        "spelling": d.spelling,
        "alternatives": d.alternatives,
        "trail": d.trail,
    })
}

fn cmd_suggest_spelling(
    ctx: &mut Ctx<'_>,
    origin: Option<WordOrigin>,
    pronunciation: Option<&Pronunciation>,
    etymon: Option<&str>,
    input: &Input,
) -> Outcome {
    let mut findings = false;
    let speller = ctx.cfg.speller();
    for line in ctx.items(input)? {
        let f: Vec<&str> = line.split('\t').map(str::trim).collect();
        let word = f[0];
        let parsed = (|| -> Result<SpellingDecision, String> {
            let line_origin = match f.get(1).filter(|o| !o.is_empty() && **o != "auto") {
                Some(o) => Some(o.parse::<WordOrigin>().map_err(|e| e.to_string())?),
                None => origin,
            };
            let line_pron = match f.get(2).filter(|p| !p.is_empty()) {
                Some(p) => Some(p.parse::<Pronunciation>().map_err(|e| e.to_string())?),
                None => pronunciation.cloned(),
            };
            let line_etymon = f.get(3).copied().filter(|e| !e.is_empty()).or(etymon);
            match line_origin {
                Some(o) => speller.spell(word, o, line_pron.as_ref(), line_etymon),
                None => speller.spell_auto(word, line_pron.as_ref(), line_etymon),
            }
            .map_err(|e| e.to_string())
        })();
        match parsed {
            Ok(d) => {
                let violations = check_orthographic_constraints(&d.spelling).unwrap_or_default();
                let mut record = decision_record(&d);
                record["violations"] = violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().into();
                if !violations.is_empty() {
                    findings = true;
                }
                let mut text = format!("{}\t{}\t{}\t{}", d.input, d.spelling, d.origin, d.trail.join(","));
                for v in &violations {
                    text.push_str(&format!("\n{}\tviolation\t{v}", d.input));
                }
                ctx.emit(text, record)?;
            }
            Err(e) => {
                findings = true;
                ctx.item_error(word, e)?;
            }
        }
    }
    Ok(findings)
}

fn cmd_validate_transcript(ctx: &mut Ctx<'_>, files: &[PathBuf]) -> Outcome {
    let mut totals: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
    let (mut errors, mut warnings) = (0, 0);
    for path in files {
        let report = transcript::validate_file(path, &ctx.cfg.transcript).map_err(|e| usage(e.to_string()))?;
        let rendered = match ctx.cfg.format {
            Format::Text => report.render_text(),
            Format::Json => report.render_json(),
        };
        ctx.out.write_all(rendered.as_bytes()).map_err(|e| usage(format!("write failed: {e}")))?;
        for (rule, c) in report.summary() {
            let t = totals.entry(rule).or_default();
            t.0 += c.errors;
            t.1 += c.warnings;
        }
        errors += report.error_count();
        warnings += report.warning_count();
    }
    for (rule, (e, w)) in &totals {
        ctx.warn(&format!("{rule}: {e} error(s), {w} warning(s)"));
    }
    Ok(errors > 0 || (ctx.cfg.strict && warnings > 0))
}

fn cmd_classify_dialect(ctx: &mut Ctx<'_>, file: &Path) -> Outcome {
    let cells = read_cells(&read(file).map_err(usage)?).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let labels: BTreeMap<_, String> = cells.into_iter().map(|(c, (label, _))| (c, label)).collect();
    let class = classify_dialect(&labels).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    ctx.emit(class.to_string(), json!({"file": file.display().to_string(), "class": class.to_string()}))?;
    Ok(false)
}

fn cmd_dict_build(ctx: &mut Ctx<'_>, input: &Input, output: Option<&Path>) -> Outcome {
    let words = ctx.items(input)?;
    let dict = build_dictionary(words.iter().map(String::as_str), &ctx.cfg.lexicon).map_err(|e| usage(e.to_string()))?;
    let text = dict.serialize();
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        None => ctx.out.write_all(text.as_bytes()).map_err(|e| usage(format!("write failed: {e}")))?,
    }
    Ok(false)
}

fn cmd_dict_lookup(ctx: &mut Ctx<'_>, word: &str, context: Option<&str>, dict: Option<&Path>) -> Outcome {
    let word = script::normalize(word.trim()).map_err(|e| usage(e.to_string()))?;
    let store = match dict {
        Some(p) => Dictionary::parse(&read(p).map_err(usage)?).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        None => match build_dictionary([word.as_str()], &ctx.cfg.lexicon) {
            Ok(d) => d,
            Err(e) => {
                ctx.item_error(&word, e.to_string())?;
                return Ok(true);
            }
        },
    };
    let found = match store.lookup(&word, context) {
        Ok(r) => r,
        Err(e) => {
            ctx.item_error(&word, e.to_string())?;
            return Ok(true);
        }
    };
    for e in &found.entries {
        for (rank, p) in e.ranked() {
            let ctx_tag = e.context.clone().unwrap_or_default();
            ctx.emit(
                format!("{}\t{}\t{}\t{}\t{}", e.headword, ctx_tag, rank, p, e.origin),
                json!({"headword": e.headword, "context": e.context, "rank": rank.to_string(), "pronunciation": p.to_string(), "origin": e.origin.id()}),
            )?;
        }
    }
    Ok(false)
}

fn cmd_correspond(ctx: &mut Ctx<'_>, input: &Input) -> Outcome {
    let mut findings = false;
    let speller = ctx.cfg.speller();
    for line in ctx.items(input)? {
        let (word, pron) = match line.split_once('\t') {
            Some((w, p)) => (w.trim().to_string(), Some(p.trim().to_string())),
            None => (line.trim().to_string(), None),
        };
        let pron = match pron.filter(|p| !p.is_empty()).map(|p| p.parse::<Pronunciation>()) {
            Some(Err(e)) => {
                findings = true;
                ctx.item_error(&word, e.to_string())?;
                continue;
            }
            Some(Ok(p)) => Some(p),
            None => None,
        };
        let (out, trail) = speller.correspond(&word, pron.as_ref());
        ctx.emit(format!("{word}\t{out}\t{}", trail.join(",")), json!({"input": word, "spelling": out, "trail": trail}))?;
    }
    Ok(findings)
}

fn dispatch(ctx: &mut Ctx<'_>, command: &Command) -> Outcome {
    match command {
        Command::Tone { system, input } => cmd_tone(ctx, *system, input),
        Command::Phonemize { input } => cmd_phonemize(ctx, input),
        Command::SuggestSpelling { origin, pronunciation, etymon, input } => {
            cmd_suggest_spelling(ctx, *origin, pronunciation.as_ref(), etymon.as_deref(), input)
        }
        Command::ValidateTranscript { files } => cmd_validate_transcript(ctx, files),
        Command::ClassifyDialect { file } => cmd_classify_dialect(ctx, file),
        Command::Dict { command: DictCommand::Build { input, output } } => cmd_dict_build(ctx, input, output.as_deref()),
        Command::Dict { command: DictCommand::Lookup { word, context, dict } } => {
            cmd_dict_lookup(ctx, word, context.as_deref(), dict.as_deref())
        }
        Command::Correspond { input } => cmd_correspond(ctx, input),
    }
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run_with<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_CLEAN };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut cfg = match &cli.config {
        Some(p) => match CliConfig::load(p) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "isan: {e}");
                return EXIT_ERROR;
            }
        },
        None => CliConfig::default(),
    };
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    cfg.strict |= cli.strict;
    let mut ctx = Ctx { cfg: &cfg, stdin, out, err };
    match dispatch(&mut ctx, &cli.command) {
        Ok(false) => EXIT_CLEAN,
        Ok(true) => EXIT_FINDINGS,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(ctx.err, "isan: {msg}");
            EXIT_ERROR
        }
    }
}

/// Runs the CLI on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let mut lock = stdin.lock();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = run_with(args, &mut lock, &mut out, &mut std::io::stderr());
    let _ = out.flush();
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("isan").chain(args.iter().copied());
        let code = run_with(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tone_rows() {
        let (code, out, _) = call(&["tone", "ม้า"], "");
        assert_eq!((code, out.as_str()), (0, "ม้า\tLow\tLive\tT6\n"));
        let (_, out, _) = call(&["tone"], "ขา ปลา งู\n");
        let tones: Vec<&str> = out.lines().map(|l| l.rsplit('\t').next().unwrap()).collect();
        assert_eq!(tones, ["T1", "T2", "T3"]);
        assert_eq!(call(&["tone"], ""), (0, String::new(), String::new()));
        assert_eq!(call(&["tone", "--system", "thai", "ขา"], "").1, "ขา\tHigh\tLive\tChattawa\n");
    }

    #[test]
    fn strictness() {
        assert_eq!(call(&["tone", "abc"], "").0, 1);
        assert_eq!(call(&["--strict", "tone", "abc"], "").0, 2);
    }

    #[test]
    fn usage_codes() {
        assert_eq!(call(&["--help"], "").0, 0);
        assert_eq!(call(&["tone", "--bogus"], "").0, 2);
        assert_eq!(call(&[], "").0, 2);
        assert_eq!(call(&["--config", "/nonexistent.toml", "tone"], "").0, 2);
    }

    #[test]
    fn dict_lookup_ranks() {
        let (code, out, _) = call(&["dict", "lookup", "รัก"], "");
        assert_eq!(code, 0);
        let ranks: Vec<&str> = out.lines().map(|l| l.split('\t').nth(2).unwrap()).collect();
        assert_eq!(ranks, ["primary", "variant"]);
        assert!(out.lines().next().unwrap().contains("h a k̚"));
    }

    #[test]
    fn json_records() {
        let (_, out, _) = call(&["--format", "json", "phonemize", "กา"], "");
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["pronunciation"], "k aː T2");
    }
}
