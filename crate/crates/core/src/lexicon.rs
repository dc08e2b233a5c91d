//! Annotated word lexicon shared by spelling and pronunciation tooling.
//!
//! ```text
//! #isan-lexicon v1
//! headword  origin  context  syllables  pronunciations  flags  etymon
//! ```
//! Tab-separated; empty fields are allowed everywhere except the headword.
//! `syllables` is a hyphen-separated syllabification, `pronunciations` is a
//! `" | "`-separated list with optional `@count` speaker tallies, and
//! `flags` is a comma-separated list (see [`LexiconFlags`]).

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::phoneme::{IsanTone, Pronunciation};
use crate::script::{self, ClusterKind};

pub const LEXICON_HEADER: &str = "#isan-lexicon v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lexicon line {line}: {message}")]
pub struct LexiconError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordOrigin {
    ProperName,
    Loanword,
    ThaiCognate,
    IsanNative,
}

impl WordOrigin {
    pub const ALL: [WordOrigin; 4] =
        [WordOrigin::ProperName, WordOrigin::Loanword, WordOrigin::ThaiCognate, WordOrigin::IsanNative];

    pub fn id(self) -> &'static str {
        match self {
            WordOrigin::ProperName => "proper-name",
            WordOrigin::Loanword => "loanword",
            WordOrigin::ThaiCognate => "thai-cognate",
            WordOrigin::IsanNative => "isan-native",
        }
    }
}

impl fmt::Display for WordOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for WordOrigin {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WordOrigin::ALL.into_iter().find(|o| o.id() == s).ok_or_else(|| format!("unknown origin {s:?}"))
    }
}

/// How written ร is pronounced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash, Serialize, Deserialize)]
pub enum RHint {
    /// /h/ primary, /l/ variant.
    #[default]
    HThenL,
    /// /l/ primary, /h/ variant.
    LThenH,
    OnlyH,
    OnlyL,
}

impl RHint {
    fn flag(self) -> Option<&'static str> {
        match self {
            RHint::HThenL => None,
            RHint::LThenH => Some("r:l>h"),
            RHint::OnlyH => Some("r:h"),
            RHint::OnlyL => Some("r:l"),
        }
    }
}

/// Per-entry pronunciation and spelling hints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash, Serialize, Deserialize)]
pub struct LexiconFlags {
    /// Listed in the Central Thai reference dictionary with this spelling.
    pub dictionary_attested: bool,
    /// Keep the /kʰw/ onset cluster.
    pub kw_cluster: bool,
    pub r: RHint,
    /// ช ฉ ฌ stay /tɕʰ/ instead of becoming /s/.
    pub keep_affricate: bool,
    /// Tone override for words whose tone the box does not predict.
    pub tone: Option<IsanTone>,
}

impl LexiconFlags {
    fn parse(text: &str) -> Result<LexiconFlags, String> {
        let mut flags = LexiconFlags::default();
        for raw in text.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            match raw {
                "dictionary_attested" => flags.dictionary_attested = true,
                "kw_cluster" => flags.kw_cluster = true,
                "keep-affricate" => flags.keep_affricate = true,
                "r:h" => flags.r = RHint::OnlyH,
                "r:l" => flags.r = RHint::OnlyL,
                "r:l>h" => flags.r = RHint::LThenH,
                "r:h>l" => flags.r = RHint::HThenL,
                other => match other.strip_prefix("tone=") {
                    Some(t) => flags.tone = Some(t.parse()?),
                    None => return Err(format!("unknown flag {other:?}")),
                },
            }
        }
        Ok(flags)
    }

    fn render(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        if self.dictionary_attested {
            out.push("dictionary_attested".into());
        }
        if self.kw_cluster {
            out.push("kw_cluster".into());
        }
        if let Some(f) = self.r.flag() {
            out.push(f.into());
        }
        if self.keep_affricate {
            out.push("keep-affricate".into());
        }
        if let Some(t) = self.tone {
            out.push(format!("tone={t}"));
        }
        out.join(",")
    }
}

/// A transcribed pronunciation with the number of speakers who used it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Attested {
    pub pronunciation: Pronunciation,
    pub count: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub headword: String,
    pub origin: Option<WordOrigin>,
    /// Sense tag separating homographs.
    pub context: Option<String>,
    /// Explicit syllabification, in pronounceable spelling.
    pub syllables: Option<Vec<String>>,
    pub pronunciations: Vec<Attested>,
    pub flags: LexiconFlags,
    pub etymon: Option<String>,
}

impl LexiconEntry {
    pub fn new(headword: &str) -> LexiconEntry {
        LexiconEntry {
            headword: headword.to_string(),
            origin: None,
            context: None,
            syllables: None,
            pronunciations: Vec::new(),
            flags: LexiconFlags::default(),
            etymon: None,
        }
    }

    /// Transcribed pronunciations, majority first; ties keep file order.
    pub fn ranked_pronunciations(&self) -> Vec<&Pronunciation> {
        let mut ranked: Vec<(usize, &Attested)> = self.pronunciations.iter().enumerate().collect();
        ranked.sort_by_key(|(i, a)| (std::cmp::Reverse(a.count.unwrap_or(0)), *i));
        ranked.into_iter().map(|(_, a)| &a.pronunciation).collect()
    }
}

fn opt(field: &str) -> Option<String> {
    let f = field.trim();
    (!f.is_empty()).then(|| f.to_string())
}

impl LexiconEntry {
    fn parse_line(line: usize, text: &str) -> Result<LexiconEntry, LexiconError> {
        let err = |message: String| LexiconError { line, message };
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.is_empty() || fields.len() > 7 {
            return Err(err(format!("expected up to 7 fields, got {}", fields.len())));
        }
        let field = |i: usize| fields.get(i).copied().unwrap_or("");
        let headword = field(0).trim();
        if headword.is_empty() {
            return Err(err("empty headword".into()));
        }
        let origin = opt(field(1)).map(|o| o.parse()).transpose().map_err(err)?;
        let syllables = opt(field(3)).map(|s| s.split('-').map(|p| p.trim().to_string()).collect());
        let mut pronunciations = Vec::new();
        if let Some(list) = opt(field(4)) {
            for item in list.split('|').map(str::trim) {
                let (text, count) = match item.rsplit_once('@') {
                    Some((p, n)) => (p.trim(), Some(n.trim().parse::<u32>().map_err(|e| err(format!("count {n:?}: {e}")))?)),
                    None => (item, None),
                };
                let pronunciation = text.parse().map_err(|e| err(format!("{e}")))?;
                pronunciations.push(Attested { pronunciation, count });
            }
        }
        Ok(LexiconEntry {
            headword: headword.to_string(),
            origin,
            context: opt(field(2)),
            syllables,
            pronunciations,
            flags: LexiconFlags::parse(field(5)).map_err(err)?,
            etymon: opt(field(6)),
        })
    }

    fn to_line(&self) -> String {
        let prons: Vec<String> = self
            .pronunciations
            .iter()
            .map(|a| match a.count {
                Some(n) => format!("{}@{n}", a.pronunciation),
                None => a.pronunciation.to_string(),
            })
            .collect();
        [
            self.headword.clone(),
            self.origin.map(|o| o.id().to_string()).unwrap_or_default(),
            self.context.clone().unwrap_or_default(),
            self.syllables.as_ref().map(|s| s.join("-")).unwrap_or_default(),
            prons.join(" | "),
            self.flags.render(),
            self.etymon.clone().unwrap_or_default(),
        ]
        .join("\t")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    index: BTreeMap<String, Vec<usize>>,
}

impl Lexicon {
    pub fn new() -> Lexicon {
        Lexicon::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = LexiconEntry>) -> Lexicon {
        let mut lex = Lexicon::new();
        for e in entries {
            lex.insert(e);
        }
        lex
    }

    pub fn insert(&mut self, entry: LexiconEntry) {
        self.index.entry(entry.headword.clone()).or_default().push(self.entries.len());
        self.entries.push(entry);
    }

    pub fn parse(text: &str) -> Result<Lexicon, LexiconError> {
        let mut lex = Lexicon::new();
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim_end() == LEXICON_HEADER => {}
            _ => return Err(LexiconError { line: 1, message: format!("missing header {LEXICON_HEADER:?}") }),
        }
        for (i, raw) in lines {
            let text = raw.trim_end_matches('\r');
            if text.trim().is_empty() || text.starts_with('#') {
                continue;
            }
            lex.insert(LexiconEntry::parse_line(i + 1, text)?);
        }
        Ok(lex)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!("{LEXICON_HEADER}\n");
        for e in &self.entries {
            out.push_str(&e.to_line());
            out.push('\n');
        }
        out
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All senses of a headword, in file order.
    pub fn senses(&self, headword: &str) -> Vec<&LexiconEntry> {
        self.index.get(headword).map(|ix| ix.iter().map(|&i| &self.entries[i]).collect()).unwrap_or_default()
    }

    pub fn get(&self, headword: &str, context: Option<&str>) -> Option<&LexiconEntry> {
        self.senses(headword).into_iter().find(|e| e.context.as_deref() == context)
    }

    pub fn contains(&self, headword: &str) -> bool {
        self.index.contains_key(headword)
    }

    /// First origin annotation among the headword's senses.
    pub fn origin_of(&self, headword: &str) -> Option<WordOrigin> {
        self.senses(headword).into_iter().find_map(|e| e.origin)
    }
}

/// A plain word list, one word per line, `#` comments allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordList(HashSet<String>);

impl WordList {
    pub fn parse(text: &str) -> WordList {
        WordList(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(str::to_string)
                .collect(),
        )
    }

    pub fn contains(&self, word: &str) -> bool {
        self.0.contains(word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<String> for WordList {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        WordList(iter.into_iter().collect())
    }
}

pub const LEXICON_TSV: &str = include_str!("../data/lexicon.tsv");
pub const CENTRAL_WORDS_TXT: &str = include_str!("../data/central_words.txt");
pub const KW_WHITELIST_TXT: &str = include_str!("../data/kw_whitelist.txt");

pub fn bundled_lexicon() -> &'static Lexicon {
    static LEX: OnceLock<Lexicon> = OnceLock::new();
    LEX.get_or_init(|| Lexicon::parse(LEXICON_TSV).expect("bundled lexicon.tsv is valid"))
}

/// Central Thai words used for homograph-collision checks.
pub fn central_words() -> &'static WordList {
    static WORDS: OnceLock<WordList> = OnceLock::new();
    WORDS.get_or_init(|| WordList::parse(CENTRAL_WORDS_TXT))
}

/// Words that keep the /kʰw/ onset cluster.
pub fn kw_whitelist() -> &'static WordList {
    static WORDS: OnceLock<WordList> = OnceLock::new();
    WORDS.get_or_init(|| WordList::parse(KW_WHITELIST_TXT))
}

/// Letters that only occur in Pali, Sanskrit or Khmer borrowings.
const LOAN_LETTERS: &[char] = &['ฆ', 'ฌ', 'ฎ', 'ฏ', 'ฐ', 'ฑ', 'ฒ', 'ณ', 'ภ', 'ศ', 'ษ', 'ฤ', 'ฦ', 'ฬ'];
const REGULAR_FINALS: &[char] = &['ก', 'ง', 'ด', 'น', 'บ', 'ม', 'ย', 'ว'];

/// Spelling traits typical of borrowed words: garan, loan-only letters,
/// รร, a false-cluster onset, or a final letter outside the native set.
pub fn has_loan_spelling(word: &str) -> bool {
    let chars: Vec<char> = word.chars().collect();
    if chars.contains(&'\u{0E4C}') || chars.iter().any(|c| LOAN_LETTERS.contains(c)) || word.contains("รร") {
        return true;
    }
    if let [a, b, ..] = chars[..] {
        if script::cluster_kind(a, b) == Some(ClusterKind::False) {
            return true;
        }
    }
    let Some(&last) = chars.last() else { return false };
    if !script::is_coda_letter(last) || REGULAR_FINALS.contains(&last) {
        return false;
    }
    match script::parse_syllable(word) {
        Ok(s) => s.coda == Some(last),
        Err(_) => true,
    }
}

/// Origin from spelling and word lists alone. Callers should treat the
/// answer as a guess; lexicon annotations take precedence.
pub fn guess_origin(word: &str, lexicon: &Lexicon, central: &WordList) -> WordOrigin {
    if has_loan_spelling(word) {
        WordOrigin::Loanword
    } else if lexicon.contains(word) && !central.contains(word) {
        WordOrigin::IsanNative
    } else {
        WordOrigin::ThaiCognate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_lexicon_loads() {
        let lex = bundled_lexicon();
        assert_eq!(lex.senses("ย่าง").len(), 2);
        assert_eq!(lex.origin_of("เว้า"), Some(WordOrigin::IsanNative));
        assert_eq!(lex.get("ศาสนา", None).unwrap().syllables.as_ref().unwrap().len(), 3);
        assert!(kw_whitelist().contains("ขวิด"));
        assert!(central_words().contains("ค่อย"));
    }

    #[test]
    fn round_trip() {
        let lex = bundled_lexicon();
        let again = Lexicon::parse(&lex.to_tsv()).unwrap();
        assert_eq!(&again, lex);
        assert_eq!(Lexicon::parse(&again.to_tsv()).unwrap().to_tsv(), again.to_tsv());
    }

    #[test]
    fn majority_ranking() {
        let text = format!("{LEXICON_HEADER}\nรวย\t\t\t\th ua j T3@2 | l ua j T3@5\t\t\n");
        let lex = Lexicon::parse(&text).unwrap();
        let ranked = lex.get("รวย", None).unwrap().ranked_pronunciations();
        assert_eq!(ranked[0].to_string(), "l ua j T3");
    }

    #[test]
    fn loan_spellings() {
        for w in ["สามารถ", "กาล", "กอล์ฟ", "ครรภ์", "จริง", "ศาสนา", "รส"] {
            assert!(has_loan_spelling(w), "{w}");
        }
        for w in ["กราบ", "ไหล", "เว้า", "รัก", "กิน"] {
            assert!(!has_loan_spelling(w), "{w}");
        }
        let lex = bundled_lexicon();
        assert_eq!(guess_origin("เว้า", lex, central_words()), WordOrigin::IsanNative);
        assert_eq!(guess_origin("กราบ", lex, central_words()), WordOrigin::ThaiCognate);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(Lexicon::parse("x").unwrap_err().line, 1);
        let bad = format!("{LEXICON_HEADER}\n# c\nกา\tmartian\n");
        assert_eq!(Lexicon::parse(&bad).unwrap_err().line, 3);
        let bad = format!("{LEXICON_HEADER}\nกา\t\t\t\t\tshiny\n");
        assert!(Lexicon::parse(&bad).unwrap_err().message.contains("shiny"));
    }
}
