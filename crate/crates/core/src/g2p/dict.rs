//! Pronunciation dictionary: one entry per (headword, context) with a single
//! primary pronunciation and ranked variants.
//!
//! ```text
//! #isan-dict v1
//! headword  context  rank(P|V)  pronunciation  origin
//! ```
//! Canonical files list entries sorted by (headword, context), the primary
//! row first and variants in rank order.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{entry_pronunciations, validate_pronunciation, G2pError, Pronunciation};
use crate::lexicon::{central_words, guess_origin, Lexicon, LexiconEntry, WordOrigin};
use crate::script;

pub const DICT_HEADER: &str = "#isan-dict v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DictError {
    #[error("{headword}{}: more than one primary pronunciation", ctx(.context))]
    DuplicatePrimary { headword: String, context: Option<String> },
    #[error("{headword}: /{pronunciation}/ is not a valid Isan pronunciation: {reason}")]
    InvalidPronunciation { headword: String, pronunciation: String, reason: String },
    #[error("{headword}: senses {first:?} and {second:?} share the pronunciation /{pronunciation}/")]
    IndistinctHomographs { headword: String, first: String, second: String, pronunciation: String },
    #[error("{0} is not in the dictionary")]
    NotFound(String),
    #[error("dictionary line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    G2p(#[from] G2pError),
}

fn ctx(c: &Option<String>) -> String {
    c.as_ref().map(|c| format!(" ({c})")).unwrap_or_default()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rank {
    Primary,
    Variant,
}

impl Rank {
    pub fn code(self) -> char {
        match self {
            Rank::Primary => 'P',
            Rank::Variant => 'V',
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rank::Primary => "primary",
            Rank::Variant => "variant",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DictEntry {
    pub headword: String,
    pub context: Option<String>,
    pub primary: Pronunciation,
    pub variants: Vec<Pronunciation>,
    pub origin: WordOrigin,
}

impl DictEntry {
    pub fn ranked(&self) -> Vec<(Rank, &Pronunciation)> {
        std::iter::once((Rank::Primary, &self.primary))
            .chain(self.variants.iter().map(|v| (Rank::Variant, v)))
            .collect()
    }

    fn key(&self) -> (String, String) {
        (self.headword.clone(), self.context.clone().unwrap_or_default())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dictionary {
    entries: BTreeMap<(String, String), DictEntry>,
}

/// Result of a lookup: the matching entries and whether they are homographs
/// the caller still has to choose between.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LookupResult<'a> {
    pub entries: Vec<&'a DictEntry>,
    pub ambiguous: bool,
}

impl Dictionary {
    pub fn new() -> Dictionary {
        Dictionary::default()
    }

    pub fn insert(&mut self, entry: DictEntry) -> Result<(), DictError> {
        let key = entry.key();
        if self.entries.contains_key(&key) {
            return Err(DictError::DuplicatePrimary { headword: entry.headword, context: entry.context });
        }
        self.entries.insert(key, entry);
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = &DictEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, headword: &str, context: Option<&str>) -> Result<LookupResult<'_>, DictError> {
        let entries: Vec<&DictEntry> = match context {
            Some(c) => self.entries.get(&(headword.to_string(), c.to_string())).into_iter().collect(),
            None => self
                .entries
                .range((headword.to_string(), String::new())..)
                .take_while(|((h, _), _)| h == headword)
                .map(|(_, e)| e)
                .collect(),
        };
        if entries.is_empty() {
            return Err(DictError::NotFound(match context {
                Some(c) => format!("{headword} ({c})"),
                None => headword.to_string(),
            }));
        }
        Ok(LookupResult { ambiguous: entries.len() > 1, entries })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{DICT_HEADER}\n");
        for e in self.entries.values() {
            for (rank, p) in e.ranked() {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    e.headword,
                    e.context.as_deref().unwrap_or(""),
                    rank.code(),
                    p,
                    e.origin
                ));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Dictionary, DictError> {
        let fmt_err = |line: usize, message: String| DictError::Format { line, message };
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim_end() == DICT_HEADER => {}
            _ => return Err(fmt_err(1, format!("missing header {DICT_HEADER:?}"))),
        }
        struct Partial {
            first_line: usize,
            primary: Option<Pronunciation>,
            variants: Vec<Pronunciation>,
            origin: WordOrigin,
        }
        let mut partial: BTreeMap<(String, String), Partial> = BTreeMap::new();
        for (i, raw) in lines {
            let line = i + 1;
            let row = raw.trim_end_matches('\r');
            if row.trim().is_empty() || row.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = row.split('\t').collect();
            if f.len() != 5 {
                return Err(fmt_err(line, format!("expected 5 fields, got {}", f.len())));
            }
            let headword = f[0].trim();
            if headword.is_empty() {
                return Err(fmt_err(line, "empty headword".into()));
            }
            let pron: Pronunciation = f[3].parse().map_err(|e| fmt_err(line, format!("{e}")))?;
            if let Some((_, v)) = validate_pronunciation(&pron).first() {
                return Err(fmt_err(line, format!("/{pron}/: {v}")));
            }
            let origin: WordOrigin = f[4].trim().parse().map_err(|e| fmt_err(line, e))?;
            let key = (headword.to_string(), f[1].trim().to_string());
            let p = partial.entry(key).or_insert(Partial { first_line: line, primary: None, variants: Vec::new(), origin });
            if p.origin != origin {
                return Err(fmt_err(line, format!("origin {origin} conflicts with {} on line {}", p.origin, p.first_line)));
            }
            match f[2].trim() {
                "P" if p.primary.is_some() => return Err(fmt_err(line, format!("second primary for {headword}"))),
                "P" => p.primary = Some(pron),
                "V" => p.variants.push(pron),
                other => return Err(fmt_err(line, format!("rank must be P or V, got {other:?}"))),
            }
        }
        let mut dict = Dictionary::new();
        for ((headword, context), p) in partial {
            let primary = p.primary.ok_or_else(|| fmt_err(p.first_line, format!("{headword} has no primary row")))?;
            let context = (!context.is_empty()).then_some(context);
            dict.insert(DictEntry { headword, context, primary, variants: p.variants, origin: p.origin })?;
        }
        Ok(dict)
    }
}

fn entry_for(sense: &LexiconEntry, lexicon: &Lexicon) -> Result<DictEntry, DictError> {
    let mut prons = entry_pronunciations(sense)?.into_iter();
    let primary = prons.next().expect("at least one pronunciation");
    let variants: Vec<Pronunciation> = prons.collect();
    for p in std::iter::once(&primary).chain(&variants) {
        if let Some((_, v)) = validate_pronunciation(p).first() {
            return Err(DictError::InvalidPronunciation {
                headword: sense.headword.clone(),
                pronunciation: p.to_string(),
                reason: v.to_string(),
            });
        }
    }
    let origin = sense.origin.unwrap_or_else(|| guess_origin(&sense.headword, lexicon, central_words()));
    Ok(DictEntry { headword: sense.headword.clone(), context: sense.context.clone(), primary, variants, origin })
}

/// Builds entries for each listed word. Lexicon senses supply contexts,
/// transcriptions and hints; unlisted words are phonemized from spelling.
pub fn build_dictionary<'a>(
    words: impl IntoIterator<Item = &'a str>,
    lexicon: &Lexicon,
) -> Result<Dictionary, DictError> {
    let mut dict = Dictionary::new();
    for raw in words {
        let word = script::normalize(raw.trim()).map_err(G2pError::from)?;
        if word.is_empty() || dict.lookup(&word, None).is_ok() {
            continue;
        }
        let senses = lexicon.senses(&word);
        let built: Vec<DictEntry> = if senses.is_empty() {
            vec![entry_for(&LexiconEntry::new(&word), lexicon)?]
        } else {
            senses.into_iter().map(|s| entry_for(s, lexicon)).collect::<Result<_, _>>()?
        };
        for (i, a) in built.iter().enumerate() {
            for b in &built[i + 1..] {
                if a.primary == b.primary {
                    return Err(DictError::IndistinctHomographs {
                        headword: word.clone(),
                        first: a.context.clone().unwrap_or_default(),
                        second: b.context.clone().unwrap_or_default(),
                        pronunciation: a.primary.to_string(),
                    });
                }
            }
        }
        for e in built {
            dict.insert(e)?;
        }
    }
    Ok(dict)
}

pub fn parse_dictionary(text: &str) -> Result<Dictionary, DictError> {
    Dictionary::parse(text)
}

pub fn serialize_dictionary(dict: &Dictionary) -> String {
    dict.serialize()
}

pub fn lookup<'a>(dict: &'a Dictionary, headword: &str, context: Option<&str>) -> Result<LookupResult<'a>, DictError> {
    dict.lookup(headword, context)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{bundled_lexicon, LexiconFlags, LEXICON_HEADER};

    fn build(words: &[&str]) -> Dictionary {
        build_dictionary(words.iter().copied(), bundled_lexicon()).unwrap()
    }

    #[test]
    fn variants_and_homographs() {
        let d = build(&["รัก", "ย่าง", "เสือ", "กา"]);
        let rak = d.lookup("รัก", None).unwrap();
        assert!(!rak.ambiguous);
        let ranked: Vec<String> = rak.entries[0].ranked().iter().map(|(r, p)| format!("{} {p}", r.code())).collect();
        assert_eq!(ranked, ["P h a k̚ T4", "V l a k̚ T4"]);

        let yang = d.lookup("ย่าง", None).unwrap();
        assert!(yang.ambiguous);
        assert_eq!(yang.entries.len(), 2);
        let grill = d.lookup("ย่าง", Some("grill")).unwrap();
        assert_eq!(grill.entries[0].primary.to_string(), "j aː ŋ T6");
        assert_eq!(d.lookup("ย่าง", Some("walk")).unwrap().entries[0].primary.to_string(), "ɲ aː ŋ T4");
        assert!(matches!(d.lookup("ม้า", None), Err(DictError::NotFound(_))));
    }

    #[test]
    fn round_trip() {
        let d = build(&["รัก", "ย่าง", "เสือ", "กา", "รำ", "ศาสนา"]);
        let text = d.serialize();
        assert_eq!(Dictionary::parse(&text).unwrap(), d);
        assert_eq!(Dictionary::parse(&text).unwrap().serialize(), text);
        let empty = Dictionary::new().serialize();
        assert_eq!(empty, format!("{DICT_HEADER}\n"));
        assert!(Dictionary::parse(&empty).unwrap().is_empty());
    }

    #[test]
    fn format_errors() {
        let bad = |body: &str| Dictionary::parse(&format!("{DICT_HEADER}\n{body}")).unwrap_err();
        assert!(matches!(bad("กา\t\tP\tk aː T2\n"), DictError::Format { line: 2, .. }));
        assert!(matches!(bad("กา\t\tV\tk aː T2\tthai-cognate\n"), DictError::Format { line: 2, .. }));
        assert!(matches!(
            bad("กา\t\tP\tk aː T2\tthai-cognate\nกา\t\tP\tk aː T3\tthai-cognate\n"),
            DictError::Format { line: 3, .. }
        ));
        assert!(matches!(bad("กา\t\tP\tr aː T2\tthai-cognate\n"), DictError::Format { line: 2, .. }));
        assert!(matches!(Dictionary::parse("กา"), Err(DictError::Format { line: 1, .. })));
    }

    #[test]
    fn build_errors() {
        let lex = Lexicon::parse(&format!("{LEXICON_HEADER}\nกา\t\t\t\tk aː T2\t\t\nกา\t\t\t\tk aː T3\t\t\n")).unwrap();
        assert!(matches!(build_dictionary(["กา"], &lex), Err(DictError::DuplicatePrimary { .. })));
        let lex = Lexicon::parse(&format!("{LEXICON_HEADER}\nกา\t\t\t\tk aː ʔ T2\t\t\n")).unwrap();
        assert!(matches!(build_dictionary(["กา"], &lex), Err(DictError::InvalidPronunciation { .. })));
        let mut e = LexiconEntry::new("กา");
        e.flags = LexiconFlags::default();
        e.context = Some("a".into());
        let mut f = e.clone();
        f.context = Some("b".into());
        let lex = Lexicon::from_entries([e, f]);
        assert!(matches!(build_dictionary(["กา"], &lex), Err(DictError::IndistinctHomographs { .. })));
    }
}
