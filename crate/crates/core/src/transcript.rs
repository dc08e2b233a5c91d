//! Transcript convention checks: character set, spacing, abbreviations,
//! Latin script, and fixed written forms for discourse markers.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::script;

#[derive(Debug, Error)]
pub enum TranscriptError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}: not valid UTF-8")]
    Encoding { path: String, line: usize },
    #[error("marker lexicon line {line}: {message}")]
    MarkerFormat { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    PunctuationMark,
    MaiYamok,
    Digit,
    Spacing,
    AbbreviationSpacing,
    LatinScript,
    ScriptConsistency,
    Marker,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::PunctuationMark,
        Rule::MaiYamok,
        Rule::Digit,
        Rule::Spacing,
        Rule::AbbreviationSpacing,
        Rule::LatinScript,
        Rule::ScriptConsistency,
        Rule::Marker,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::PunctuationMark => "punctuation.mark",
            Rule::MaiYamok => "punctuation.mai-yamok",
            Rule::Digit => "punctuation.digit",
            Rule::Spacing => "spacing.single",
            Rule::AbbreviationSpacing => "spacing.abbreviation",
            Rule::LatinScript => "script.latin",
            Rule::ScriptConsistency => "script.consistency",
            Rule::Marker => "marker.canonical",
        }
    }

    /// The part of the id before the dot: punctuation, spacing, script or marker.
    pub fn family(self) -> &'static str {
        self.id().split('.').next().unwrap_or_default()
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Replace `span` of the line with `replacement`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fix {
    pub replacement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub rule: Rule,
    pub severity: Severity,
    /// Code point offsets, end exclusive.
    pub start: usize,
    pub end: usize,
    pub message: String,
    pub fix: Option<Fix>,
}

impl Diagnostic {
    fn new(rule: Rule, severity: Severity, start: usize, end: usize, message: impl Into<String>) -> Self {
        Diagnostic { rule, severity, start, end, message: message.into(), fix: None }
    }

    fn with_fix(mut self, replacement: impl Into<String>) -> Self {
        self.fix = Some(Fix { replacement: replacement.into() });
        self
    }
}

/// Applies every fix in `diags` (non-overlapping ones, left to right).
pub fn apply_fixes(text: &str, diags: &[Diagnostic]) -> String {
    let chars: Vec<char> = text.chars().collect();
    let mut fixes: Vec<&Diagnostic> = diags.iter().filter(|d| d.fix.is_some()).collect();
    fixes.sort_by_key(|d| (d.start, d.end));
    let mut out = String::new();
    let mut pos = 0;
    for d in fixes {
        if d.start < pos || d.end > chars.len() {
            continue;
        }
        out.extend(&chars[pos..d.start]);
        out.push_str(&d.fix.as_ref().map(|f| f.replacement.as_str()).unwrap_or_default());
        pos = d.end;
    }
    out.extend(&chars[pos..]);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptLine {
    pub text: String,
    pub number: usize,
    pub speaker: Option<String>,
}

impl TranscriptLine {
    pub fn new(text: impl Into<String>) -> Self {
        TranscriptLine { text: text.into(), number: 1, speaker: None }
    }

    /// One file record: `text` or `speaker<TAB>text`, NFC-normalized.
    pub fn from_record(number: usize, record: &str) -> Self {
        let record = record.trim_end_matches(['\r', '\n']);
        let (speaker, text) = match record.split_once('\t') {
            Some((s, t)) if !s.is_empty() && !s.contains(char::is_whitespace) => (Some(s.to_string()), t),
            _ => (None, record),
        };
        TranscriptLine { text: text.nfc().collect(), number, speaker }
    }
}

// ---------------------------------------------------------------------------
// Markers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MarkerCategory {
    FinalParticle,
    Interjection,
    Hesitation,
}

impl MarkerCategory {
    pub fn id(self) -> &'static str {
        match self {
            MarkerCategory::FinalParticle => "final-particle",
            MarkerCategory::Interjection => "interjection",
            MarkerCategory::Hesitation => "hesitation",
        }
    }
}

impl FromStr for MarkerCategory {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [MarkerCategory::FinalParticle, MarkerCategory::Interjection, MarkerCategory::Hesitation]
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| format!("unknown marker category {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerEntry {
    pub canonical: String,
    pub category: MarkerCategory,
    pub variants: Vec<String>,
    pub gloss: String,
}

pub const MARKERS_HEADER: &str = "#isan-markers v1";
pub const MARKERS_TSV: &str = include_str!("../data/markers.tsv");

#[derive(Debug, Clone, Default)]
pub struct MarkerLexicon {
    entries: Vec<MarkerEntry>,
    by_variant: HashMap<String, usize>,
}

impl MarkerLexicon {
    pub fn entries(&self) -> &[MarkerEntry] {
        &self.entries
    }

    pub fn canonical_of(&self, token: &str) -> Option<&MarkerEntry> {
        self.by_variant.get(token).map(|&i| &self.entries[i])
    }

    pub fn insert(&mut self, mut entry: MarkerEntry) -> Result<(), String> {
        if !entry.variants.contains(&entry.canonical) {
            entry.variants.insert(0, entry.canonical.clone());
        }
        for v in &entry.variants {
            if let Some(&other) = self.by_variant.get(v) {
                return Err(format!("{v} is already a variant of {}", self.entries[other].canonical));
            }
        }
        let idx = self.entries.len();
        for v in &entry.variants {
            self.by_variant.insert(v.clone(), idx);
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn parse(text: &str) -> Result<MarkerLexicon, TranscriptError> {
        let err = |line: usize, message: String| TranscriptError::MarkerFormat { line, message };
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim_end() == MARKERS_HEADER => {}
            _ => return Err(err(1, format!("missing header {MARKERS_HEADER:?}"))),
        }
        let mut lex = MarkerLexicon::default();
        for (i, raw) in lines {
            let row = raw.trim_end_matches('\r');
            if row.trim().is_empty() || row.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = row.split('\t').map(str::trim).collect();
            if f.len() != 4 {
                return Err(err(i + 1, format!("expected 4 fields, got {}", f.len())));
            }
            let entry = MarkerEntry {
                canonical: f[0].nfc().collect(),
                category: f[1].parse().map_err(|e| err(i + 1, e))?,
                variants: f[2].split(',').map(|v| v.trim().nfc().collect()).filter(|v: &String| !v.is_empty()).collect(),
                gloss: f[3].to_string(),
            };
            lex.insert(entry).map_err(|e| err(i + 1, e))?;
        }
        Ok(lex)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!("{MARKERS_HEADER}\n");
        for e in &self.entries {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", e.canonical, e.category.id(), e.variants.join(","), e.gloss));
        }
        out
    }
}

pub fn bundled_markers() -> &'static MarkerLexicon {
    static MARKERS: OnceLock<MarkerLexicon> = OnceLock::new();
    MARKERS.get_or_init(|| MarkerLexicon::parse(MARKERS_TSV).expect("bundled markers.tsv is valid"))
}

/// Replaces marker variants by their written form. Spans assume the tokens
/// are joined by single spaces.
pub fn canonicalize_markers(tokens: &[String], lexicon: &MarkerLexicon) -> (Vec<String>, Vec<Diagnostic>) {
    let mut out = Vec::with_capacity(tokens.len());
    let mut diags = Vec::new();
    let mut offset = 0;
    for tok in tokens {
        let len = tok.chars().count();
        match lexicon.canonical_of(tok) {
            Some(e) if e.canonical != *tok => {
                diags.push(
                    Diagnostic::new(
                        Rule::Marker,
                        Severity::Warning,
                        offset,
                        offset + len,
                        format!("{} {tok} is written {}", e.category.id(), e.canonical),
                    )
                    .with_fix(e.canonical.clone()),
                );
                out.push(e.canonical.clone());
            }
            _ => out.push(tok.clone()),
        }
        offset += len + 1;
    }
    (out, diags)
}

// ---------------------------------------------------------------------------
// Phenomena
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Phenomenon {
    SyllableDeletion,
    AssimilationSameCount,
    AssimilationCountChange,
    PitchRaise,
    Lengthening,
    Reduction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Resolution {
    AsHeard,
    CitationForm,
}

impl Phenomenon {
    pub const ALL: [Phenomenon; 6] = [
        Phenomenon::SyllableDeletion,
        Phenomenon::AssimilationSameCount,
        Phenomenon::AssimilationCountChange,
        Phenomenon::PitchRaise,
        Phenomenon::Lengthening,
        Phenomenon::Reduction,
    ];

    pub fn resolution(self) -> Resolution {
        match self {
            Phenomenon::SyllableDeletion | Phenomenon::AssimilationSameCount => Resolution::AsHeard,
            _ => Resolution::CitationForm,
        }
    }
}

pub fn resolve_phenomenon(heard: &str, canonical: &str, phenomenon: Phenomenon) -> String {
    match phenomenon.resolution() {
        Resolution::AsHeard => heard.to_string(),
        Resolution::CitationForm => canonical.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Line validation
// ---------------------------------------------------------------------------

pub const ABBREVIATIONS_TXT: &str = include_str!("../data/abbreviations.txt");
pub const PROTECTED_SPANS_TXT: &str = include_str!("../data/protected_spans.txt");
pub const LATIN_WHITELIST_TXT: &str = include_str!("../data/latin_whitelist.txt");
pub const FOREIGN_TERMS_TSV: &str = include_str!("../data/foreign_terms.tsv");

fn list_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.nfc().collect())
        .collect()
}

/// A foreign term that may be written in either script, but not both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForeignTerm {
    pub latin: String,
    pub thai: String,
}

pub fn parse_foreign_terms(text: &str) -> Vec<ForeignTerm> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .filter_map(|l| l.split_once('\t'))
        .map(|(a, b)| ForeignTerm { latin: a.trim().to_string(), thai: b.trim().nfc().collect() })
        .collect()
}

#[derive(Debug, Clone)]
pub struct TranscriptConfig {
    /// Proper names exempt from the character rules, such as 7-Eleven.
    pub protected_spans: Vec<String>,
    pub abbreviations: Vec<String>,
    /// Compared case-insensitively.
    pub latin_whitelist: HashSet<String>,
    pub foreign_terms: Vec<ForeignTerm>,
    /// When set, marker variants are reported with their written form.
    pub markers: Option<MarkerLexicon>,
}

impl Default for TranscriptConfig {
    fn default() -> Self {
        TranscriptConfig {
            protected_spans: list_lines(PROTECTED_SPANS_TXT),
            abbreviations: list_lines(ABBREVIATIONS_TXT),
            latin_whitelist: list_lines(LATIN_WHITELIST_TXT).iter().map(|w| w.to_lowercase()).collect(),
            foreign_terms: parse_foreign_terms(FOREIGN_TERMS_TSV),
            markers: Some(bundled_markers().clone()),
        }
    }
}

fn is_thai_text(c: char) -> bool {
    (('\u{0E01}'..='\u{0E3A}').contains(&c) && c != 'ฯ') || (('\u{0E40}'..='\u{0E4E}').contains(&c) && c != 'ๆ')
}

fn is_latin_letter(c: char) -> bool {
    c.is_ascii_alphabetic() || (('\u{00C0}'..='\u{024F}').contains(&c) && c.is_alphabetic())
}

/// Dotted initials such as ม.ค. or ป.ป.ช.
fn is_dotted_abbreviation(token: &str) -> bool {
    if !token.ends_with('.') {
        return false;
    }
    token[..token.len() - '.'.len_utf8()].split('.').all(|part| {
        let n = part.chars().count();
        (1..=3).contains(&n) && part.starts_with(script::is_consonant) && part.chars().all(is_thai_text)
    })
}

fn find_all(hay: &[char], needle: &[char]) -> Vec<usize> {
    if needle.is_empty() || needle.len() > hay.len() {
        return Vec::new();
    }
    (0..=hay.len() - needle.len()).filter(|&i| hay[i..i + needle.len()] == *needle).collect()
}

/// Whitespace-delimited tokens with their code point spans.
fn tokens(chars: &[char]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in chars.iter().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, i));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, chars.len()));
    }
    out
}

fn yamok_fix(chars: &[char], tok_start: usize, pos: usize) -> Option<String> {
    let prefix: String = chars[tok_start..pos].iter().collect();
    if prefix.is_empty() || prefix.contains('ๆ') || script::parse_syllable(&prefix).is_err() {
        return None;
    }
    Some(format!("{prefix}{prefix}"))
}

pub fn validate_line(line: &TranscriptLine, config: &TranscriptConfig) -> Vec<Diagnostic> {
    let chars: Vec<char> = line.text.chars().collect();
    let n = chars.len();
    let mut diags = Vec::new();
    // Characters the character-set rules skip.
    let mut exempt = vec![false; n];

    for span in &config.protected_spans {
        let needle: Vec<char> = span.chars().collect();
        for i in find_all(&chars, &needle) {
            exempt[i..i + needle.len()].iter_mut().for_each(|e| *e = true);
        }
    }

    let toks = tokens(&chars);
    for &(s, e) in &toks {
        let tok: String = chars[s..e].iter().collect();
        if config.abbreviations.contains(&tok) || is_dotted_abbreviation(&tok) {
            exempt[s..e].iter_mut().for_each(|x| *x = true);
            continue;
        }
        for abbr in config.abbreviations.iter().filter(|a| a.contains('.')) {
            let needle: Vec<char> = abbr.chars().collect();
            for i in find_all(&chars[s..e], &needle) {
                let (a, b) = (s + i, s + i + needle.len());
                if exempt[a] {
                    continue;
                }
                exempt[a..b].iter_mut().for_each(|x| *x = true);
                let before = if a > s { " " } else { "" };
                let after = if b < e { " " } else { "" };
                diags.push(
                    Diagnostic::new(Rule::AbbreviationSpacing, Severity::Error, a, b, format!("put a space before and after {abbr}"))
                        .with_fix(format!("{before}{abbr}{after}")),
                );
            }
        }
    }

    let token_start = |i: usize| toks.iter().find(|&&(s, e)| s <= i && i < e).map(|&(s, _)| s).unwrap_or(i);
    let mut i = 0;
    while i < n {
        let c = chars[i];
        if c.is_whitespace() {
            let mut j = i;
            while j < n && chars[j].is_whitespace() {
                j += 1;
            }
            let run = &chars[i..j];
            if i == 0 || j == n {
                diags.push(Diagnostic::new(Rule::Spacing, Severity::Error, i, j, "whitespace at the edge of the line").with_fix(""));
            } else if run.len() > 1 || run[0] != ' ' {
                diags.push(Diagnostic::new(Rule::Spacing, Severity::Error, i, j, "use exactly one space").with_fix(" "));
            }
            i = j;
            continue;
        }
        if exempt[i] {
            i += 1;
            continue;
        }
        if c == 'ๆ' {
            let mut d = Diagnostic::new(Rule::MaiYamok, Severity::Error, i, i + 1, "write the repeated word out instead of ๆ");
            if let Some(fix) = yamok_fix(&chars, token_start(i), i) {
                let s = token_start(i);
                d = Diagnostic { start: s, fix: Some(Fix { replacement: fix }), ..d };
            }
            diags.push(d);
            i += 1;
        } else if c.is_numeric() {
            let mut j = i;
            while j < n && chars[j].is_numeric() && !exempt[j] {
                j += 1;
            }
            diags.push(Diagnostic::new(Rule::Digit, Severity::Error, i, j, "spell numbers out as words"));
            i = j;
        } else if is_latin_letter(c) {
            let mut j = i;
            while j < n && is_latin_letter(chars[j]) && !exempt[j] {
                j += 1;
            }
            let word: String = chars[i..j].iter().collect();
            if !config.latin_whitelist.contains(&word.to_lowercase()) {
                diags.push(Diagnostic::new(Rule::LatinScript, Severity::Error, i, j, format!("{word} is not an allowed Latin-script word")));
            }
            i = j;
        } else if !is_thai_text(c) && !c.is_alphanumeric() {
            // A mark standing alone takes one neighbouring space with it.
            let alone = (i == 0 || chars[i - 1] == ' ') && (i + 1 == n || chars[i + 1] == ' ');
            let (s, e) = match (alone, i > 0, i + 1 < n) {
                (true, true, _) => (i - 1, i + 1),
                (true, false, true) => (i, i + 2),
                _ => (i, i + 1),
            };
            diags.push(Diagnostic::new(Rule::PunctuationMark, Severity::Error, s, e, format!("remove the punctuation mark {c:?}")).with_fix(""));
            i += 1;
        } else {
            i += 1;
        }
    }

    if let Some(markers) = &config.markers {
        for &(s, e) in &toks {
            let tok: String = chars[s..e].iter().collect();
            let (_, found) = canonicalize_markers(std::slice::from_ref(&tok), markers);
            diags.extend(found.into_iter().map(|d| Diagnostic { start: d.start + s, end: d.end + s, ..d }));
        }
    }

    diags.sort_by_key(|d| (d.start, d.rule));
    diags
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineDiagnostic {
    pub line: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub speaker: Option<String>,
    #[serde(flatten)]
    pub diagnostic: Diagnostic,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCount {
    pub errors: usize,
    pub warnings: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptReport {
    pub file: String,
    pub lines: usize,
    /// Ordered by line, then span start.
    pub diagnostics: Vec<LineDiagnostic>,
}

impl TranscriptReport {
    pub fn summary(&self) -> BTreeMap<&'static str, RuleCount> {
        let mut out: BTreeMap<&'static str, RuleCount> = BTreeMap::new();
        for d in &self.diagnostics {
            let c = out.entry(d.diagnostic.rule.id()).or_default();
            match d.diagnostic.severity {
                Severity::Error => c.errors += 1,
                Severity::Warning => c.warnings += 1,
            }
        }
        out
    }

    /// Counts grouped by rule family (punctuation, spacing, script, marker).
    pub fn family_summary(&self) -> BTreeMap<&'static str, RuleCount> {
        let mut out: BTreeMap<&'static str, RuleCount> = BTreeMap::new();
        for d in &self.diagnostics {
            let c = out.entry(d.diagnostic.rule.family()).or_default();
            match d.diagnostic.severity {
                Severity::Error => c.errors += 1,
                Severity::Warning => c.warnings += 1,
            }
        }
        out
    }

    pub fn error_count(&self) -> usize {
        self.diagnostics.iter().filter(|d| d.diagnostic.severity == Severity::Error).count()
    }

    pub fn warning_count(&self) -> usize {
        self.diagnostics.len() - self.error_count()
    }

    /// `file:line:start-end rule severity message`, one per line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for d in &self.diagnostics {
            let g = &d.diagnostic;
            out.push_str(&format!("{}:{}:{}-{} {} {} {}\n", self.file, d.line, g.start, g.end, g.rule, g.severity, g.message));
        }
        out
    }

    /// One JSON record per diagnostic.
    pub fn render_json(&self) -> String {
        let mut out = String::new();
        for d in &self.diagnostics {
            let mut v = serde_json::to_value(d).expect("diagnostics serialize");
            v["file"] = self.file.clone().into();
            v["rule"] = d.diagnostic.rule.id().into();
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

/// Corpus-level script choice: one casing per Latin word, one script per foreign term.
fn consistency(lines: &[TranscriptLine], config: &TranscriptConfig) -> Vec<LineDiagnostic> {
    let mut out = Vec::new();
    let mut casing: HashMap<String, String> = HashMap::new();
    let mut term_script: HashMap<usize, &'static str> = HashMap::new();
    for line in lines {
        let chars: Vec<char> = line.text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if !is_latin_letter(chars[i]) {
                i += 1;
                continue;
            }
            let mut j = i;
            while j < chars.len() && is_latin_letter(chars[j]) {
                j += 1;
            }
            let word: String = chars[i..j].iter().collect();
            let first = casing.entry(word.to_lowercase()).or_insert_with(|| word.clone());
            if *first != word {
                out.push(LineDiagnostic {
                    line: line.number,
                    speaker: line.speaker.clone(),
                    diagnostic: Diagnostic::new(Rule::ScriptConsistency, Severity::Warning, i, j, format!("{word} was written {first} earlier"))
                        .with_fix(first.clone()),
                });
            }
            i = j;
        }
        for (t, term) in config.foreign_terms.iter().enumerate() {
            for (form, script_name, other) in [(&term.latin, "latin", &term.thai), (&term.thai, "thai", &term.latin)] {
                let needle: Vec<char> = form.chars().collect();
                for at in find_all(&chars, &needle) {
                    let seen = *term_script.entry(t).or_insert(script_name);
                    if seen != script_name {
                        out.push(LineDiagnostic {
                            line: line.number,
                            speaker: line.speaker.clone(),
                            diagnostic: Diagnostic::new(
                                Rule::ScriptConsistency,
                                Severity::Warning,
                                at,
                                at + needle.len(),
                                format!("{form} was written {other} earlier"),
                            )
                            .with_fix(other.clone()),
                        });
                    }
                }
            }
        }
    }
    out
}

pub fn validate_text(file: &str, text: &str, config: &TranscriptConfig) -> TranscriptReport {
    let lines: Vec<TranscriptLine> =
        text.lines().enumerate().map(|(i, l)| TranscriptLine::from_record(i + 1, l)).collect();
    let mut diagnostics: Vec<LineDiagnostic> = lines
        .iter()
        .flat_map(|l| {
            validate_line(l, config)
                .into_iter()
                .map(|d| LineDiagnostic { line: l.number, speaker: l.speaker.clone(), diagnostic: d })
        })
        .collect();
    diagnostics.extend(consistency(&lines, config));
    diagnostics.sort_by_key(|d| (d.line, d.diagnostic.start, d.diagnostic.rule));
    TranscriptReport { file: file.to_string(), lines: lines.len(), diagnostics }
}

pub fn validate_file(path: &Path, config: &TranscriptConfig) -> Result<TranscriptReport, TranscriptError> {
    let name = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|source| TranscriptError::Io { path: name.clone(), source })?;
    let text = String::from_utf8(bytes).map_err(|e| {
        let good = &e.as_bytes()[..e.utf8_error().valid_up_to()];
        TranscriptError::Encoding { path: name.clone(), line: good.iter().filter(|&&b| b == b'\n').count() + 1 }
    })?;
    Ok(validate_text(&name, &text, config))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(text: &str) -> Vec<Rule> {
        validate_line(&TranscriptLine::new(text), &TranscriptConfig::default()).into_iter().map(|d| d.rule).collect()
    }

    #[test]
    fn convention_examples_are_clean() {
        for line in [
            "สส จำนวนสองร้อยคนเดินเข้าเข้าออกออกร้าน 7-Eleven",
            "สนใจติดต่อ ศูนย์แปดสี่ สามหกสอง สามหกสองสี่",
            "ตอนเดือน ม.ค. คนที่เข้ามาร่วมมาจาก มช. บัง มศว บัง ป.ป.ช. บัง",
            "โทรด่วนก่อนหมดเขต ศูนย์สองแปดสามหกเจ็ดเจ็ดเจ็ดเจ็ดเจ็ด",
        ] {
            assert!(rules(line).is_empty(), "{line}: {:?}", rules(line));
        }
    }

    #[test]
    fn violations() {
        assert_eq!(rules("ไปๆ มาๆ"), [Rule::MaiYamok, Rule::MaiYamok]);
        assert_eq!(rules("a  b"), [Rule::LatinScript, Rule::Spacing, Rule::LatinScript]);
        assert_eq!(rules("ไป  มา"), [Rule::Spacing]);
        assert_eq!(rules("ร้าน 7 สาขา"), [Rule::Digit]);
        assert_eq!(rules("ร้าน 711 สาขา"), [Rule::Digit]);
        assert_eq!(rules("ไปแล้ว!"), [Rule::PunctuationMark]);
        assert_eq!(rules("ตอนเดือนม.ค.คน"), [Rule::AbbreviationSpacing]);
        assert_eq!(rules("ไป เบาะ"), [Rule::Marker]);
    }

    #[test]
    fn fixes_clear_their_rule() {
        let cfg = TranscriptConfig::default();
        for text in ["ไปๆ มาๆ", "ไป  มา", "ไปแล้ว!", "ตอนเดือนม.ค.คน", " ไป", "ไป ห่วย"] {
            let diags = validate_line(&TranscriptLine::new(text), &cfg);
            for rule in Rule::ALL {
                let mine: Vec<Diagnostic> = diags.iter().filter(|d| d.rule == rule).cloned().collect();
                let fixed = apply_fixes(text, &mine);
                let after = validate_line(&TranscriptLine::new(fixed.clone()), &cfg);
                if mine.iter().any(|d| d.fix.is_some()) {
                    assert!(after.iter().all(|a| a.rule != rule), "{text} -> {fixed}: {after:?}");
                }
            }
        }
        assert_eq!(apply_fixes("ไปๆ มาๆ", &validate_line(&TranscriptLine::new("ไปๆ มาๆ"), &cfg)), "ไปไป มามา");
    }

    #[test]
    fn markers() {
        let lex = bundled_markers();
        let toks: Vec<String> = ["เบาะ", "ห่วย", "กิน"].iter().map(|s| s.to_string()).collect();
        let (once, diags) = canonicalize_markers(&toks, lex);
        assert_eq!(once, ["บ๋อ", "ฮ่วย", "กิน"]);
        assert_eq!(diags.len(), 2);
        assert_eq!((diags[1].start, diags[1].end), (5, 9));
        let (twice, again) = canonicalize_markers(&once, lex);
        assert_eq!(twice, once);
        assert!(again.is_empty());
        assert_eq!(MarkerLexicon::parse(&lex.to_tsv()).unwrap().entries(), lex.entries());
        let dup = format!("{MARKERS_HEADER}\nก\tinterjection\tก,ข\tx\nค\tinterjection\tข\ty\n");
        assert!(matches!(MarkerLexicon::parse(&dup), Err(TranscriptError::MarkerFormat { line: 3, .. })));
    }

    #[test]
    fn phenomena() {
        assert_eq!(resolve_phenomenon("ตำหุง", "ตำบักหุ่ง", Phenomenon::SyllableDeletion), "ตำหุง");
        assert_eq!(resolve_phenomenon("ยิบเอ็ด", "ยี่สิบเอ็ด", Phenomenon::AssimilationCountChange), "ยี่สิบเอ็ด");
        assert_eq!(resolve_phenomenon("ป่าว", "เปล่า", Phenomenon::Reduction), "เปล่า");
        for p in Phenomenon::ALL {
            let out = resolve_phenomenon("a", "b", p);
            assert_eq!(out == "a", p.resolution() == Resolution::AsHeard);
        }
    }

    #[test]
    fn file_report() {
        let cfg = TranscriptConfig::default();
        assert_eq!(validate_text("f", "", &cfg).diagnostics.len(), 0);
        let r = validate_text("f", "ไป มา\nไปๆ\n", &cfg);
        assert_eq!(r.error_count(), 1);
        assert_eq!(r.family_summary()["punctuation"].errors, 1);
        assert_eq!(r.render_text(), "f:2:0-3 punctuation.mai-yamok error write the repeated word out instead of ๆ\n");
        let r = validate_text("f", "QR Code\nQR code\nคิวอาร์โค้ด\n", &cfg);
        assert_eq!(r.error_count(), 0);
        assert_eq!(r.warning_count(), 2);
        let r = validate_text("f", "s1\tไป มา\n", &cfg);
        assert!(r.diagnostics.is_empty());
    }
}
