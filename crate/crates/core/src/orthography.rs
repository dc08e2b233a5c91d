//! Isan spelling standard: route a simple word by origin, rewrite Thai
//! cognates through correspondence rules, derive spellings for native words
//! from the inverse tone box, and check the Central Thai conventions a
//! spelling must not break.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::g2p::{self, phonemize_syllable, G2pError, Hints};
use crate::lexicon::{bundled_lexicon, central_words, guess_origin, Lexicon, WordList};
use crate::phoneme::{Consonant, Diphthong, IsanTone, Nucleus, PhoneticSyllable, Pronunciation, Quality};
use crate::script::{self, ConsonantClass, OrthoSyllable, ScriptError, ToneMark, VowelId};
use crate::tonebox::{candidate_spellings, Rime, ToneError};

pub use crate::lexicon::WordOrigin;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthographyError {
    #[error("empty word")]
    EmptyInput,
    #[error("{0}: a pronunciation is needed to spell this word")]
    MissingPronunciation(String),
    #[error("no spelling for /{pronunciation}/: {reason}")]
    NoCandidate { pronunciation: String, reason: String },
    #[error("correspondence rules line {line}: {message}")]
    RuleFormat { line: usize, message: String },
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error(transparent)]
    G2p(#[from] G2pError),
}

// ---------------------------------------------------------------------------
// Correspondence rules
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Policy {
    /// Write what Isan speakers say.
    SpellBySound,
    /// Keep the Central Thai spelling.
    SpellCentral,
}

impl Policy {
    pub fn id(self) -> &'static str {
        match self {
            Policy::SpellBySound => "spell-by-sound",
            Policy::SpellCentral => "spell-central",
        }
    }
}

impl FromStr for Policy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "spell-by-sound" => Ok(Policy::SpellBySound),
            "spell-central" => Ok(Policy::SpellCentral),
            _ => Err(format!("unknown policy {s:?}")),
        }
    }
}

/// One slot of an orthographic syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlotPattern {
    /// `onset:ร`
    Onset(char),
    /// `vowel:อึ`, only on syllables without a ว cluster.
    Vowel(VowelId),
    /// `cw:อา`: a ว onset cluster followed by the vowel.
    ClusterW(VowelId),
}

impl SlotPattern {
    /// Longer patterns are tried first.
    fn weight(self) -> usize {
        match self {
            SlotPattern::Onset(_) => 1,
            SlotPattern::Vowel(v) => v.name().chars().count(),
            SlotPattern::ClusterW(v) => v.name().chars().count() + 1,
        }
    }

    fn matches(self, s: &OrthoSyllable) -> bool {
        match self {
            SlotPattern::Onset(c) => s.onset == c,
            SlotPattern::Vowel(v) => s.vowel == v && s.cluster != Some('ว'),
            SlotPattern::ClusterW(v) => s.vowel == v && s.cluster == Some('ว'),
        }
    }

    fn touches_onset(self) -> bool {
        !matches!(self, SlotPattern::Vowel(_))
    }

    fn touches_vowel(self) -> bool {
        !matches!(self, SlotPattern::Onset(_))
    }
}

impl fmt::Display for SlotPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlotPattern::Onset(c) => write!(f, "onset:{c}"),
            SlotPattern::Vowel(v) => write!(f, "vowel:{v}"),
            SlotPattern::ClusterW(v) => write!(f, "cw:{v}"),
        }
    }
}

impl FromStr for SlotPattern {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (slot, value) = s.split_once(':').ok_or_else(|| format!("pattern {s:?} has no slot"))?;
        match slot {
            "onset" => {
                let mut chars = value.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) if script::is_consonant(c) => Ok(SlotPattern::Onset(c)),
                    _ => Err(format!("onset {value:?} is not one consonant")),
                }
            }
            "vowel" => value.parse().map(SlotPattern::Vowel),
            "cw" => value.parse().map(SlotPattern::ClusterW),
            other => Err(format!("unknown slot {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceRule {
    pub id: String,
    pub source: SlotPattern,
    pub target: SlotPattern,
    pub policy: Policy,
    pub example: Option<String>,
}

impl CorrespondenceRule {
    /// The syllable with this rule's rewrite applied, if it can be written.
    fn rewrite(&self, s: &OrthoSyllable) -> Option<OrthoSyllable> {
        let (mut onset, mut cluster, mut vowel) = (s.onset, s.cluster, s.vowel);
        match self.target {
            SlotPattern::Onset(c) => onset = c,
            SlotPattern::Vowel(v) | SlotPattern::ClusterW(v) => vowel = v,
        }
        if matches!(self.source, SlotPattern::ClusterW(_)) && !matches!(self.target, SlotPattern::ClusterW(_)) {
            cluster = None;
        }
        OrthoSyllable::build(onset, cluster, s.leading_ho, vowel, s.coda, s.tone_mark).ok()
    }
}

pub const CORRESPONDENCE_HEADER: &str = "#isan-correspondence v1";
pub const CORRESPONDENCE_TSV: &str = include_str!("../data/correspondence.tsv");

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<CorrespondenceRule>,
}

impl RuleSet {
    pub fn new(rules: Vec<CorrespondenceRule>) -> RuleSet {
        RuleSet { rules }
    }

    pub fn rules(&self) -> &[CorrespondenceRule] {
        &self.rules
    }

    pub fn parse(text: &str) -> Result<RuleSet, OrthographyError> {
        let err = |line: usize, message: String| OrthographyError::RuleFormat { line, message };
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim_end() == CORRESPONDENCE_HEADER => {}
            _ => return Err(err(1, format!("missing header {CORRESPONDENCE_HEADER:?}"))),
        }
        let mut rules = Vec::new();
        for (i, raw) in lines {
            let line = i + 1;
            let row = raw.trim_end_matches('\r');
            if row.trim().is_empty() || row.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = row.split('\t').map(str::trim).collect();
            if !(4..=5).contains(&f.len()) {
                return Err(err(line, format!("expected 4 or 5 fields, got {}", f.len())));
            }
            let source: SlotPattern = f[1].parse().map_err(|e| err(line, e))?;
            let target: SlotPattern = f[2].parse().map_err(|e| err(line, e))?;
            if matches!(target, SlotPattern::Onset(_)) != matches!(source, SlotPattern::Onset(_)) {
                return Err(err(line, format!("{source} cannot be rewritten as {target}")));
            }
            rules.push(CorrespondenceRule {
                id: f[0].to_string(),
                source,
                target,
                policy: f[3].parse().map_err(|e| err(line, e))?,
                example: f.get(4).filter(|e| !e.is_empty()).map(|e| e.to_string()),
            });
        }
        Ok(RuleSet { rules })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!("{CORRESPONDENCE_HEADER}\n");
        for r in &self.rules {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                r.id,
                r.source,
                r.target,
                r.policy.id(),
                r.example.as_deref().unwrap_or("")
            ));
        }
        out
    }

    /// Rules in matching order: longest source pattern first, then file order.
    fn ordered(&self) -> Vec<&CorrespondenceRule> {
        let mut v: Vec<&CorrespondenceRule> = self.rules.iter().collect();
        v.sort_by_key(|r| std::cmp::Reverse(r.source.weight()));
        v
    }
}

pub fn bundled_rules() -> &'static RuleSet {
    static RULES: OnceLock<RuleSet> = OnceLock::new();
    RULES.get_or_init(|| RuleSet::parse(CORRESPONDENCE_TSV).expect("bundled correspondence.tsv is valid"))
}

pub const LOAN_EXCEPTIONS_TXT: &str = include_str!("../data/loan_exceptions.txt");

pub fn bundled_loan_exceptions() -> &'static WordList {
    static WORDS: OnceLock<WordList> = OnceLock::new();
    WORDS.get_or_init(|| WordList::parse(LOAN_EXCEPTIONS_TXT))
}

/// Whether the rewritten slot sounds like the pronunciation (tone ignored).
fn realized(rule: &CorrespondenceRule, rewritten: &OrthoSyllable, heard: &PhoneticSyllable) -> bool {
    let Ok(said) = phonemize_syllable(rewritten, &Hints::default()) else {
        return false;
    };
    (!rule.source.touches_onset() || said.onset == heard.onset)
        && (!rule.source.touches_vowel() || said.nucleus == heard.nucleus)
}

/// Correspondence outcome for one syllable: its spelling and the rule trail.
fn correspond_syllable(s: &OrthoSyllable, heard: &PhoneticSyllable, rules: &RuleSet, trail: &mut Vec<String>) -> String {
    let (mut onset_taken, mut vowel_taken) = (false, false);
    let (mut onset, mut cluster, mut vowel) = (s.onset, s.cluster, s.vowel);
    for rule in rules.ordered() {
        let src = rule.source;
        if !src.matches(s) || (src.touches_onset() && onset_taken) || (src.touches_vowel() && vowel_taken) {
            continue;
        }
        let Some(rewritten) = rule.rewrite(s) else { continue };
        if !realized(rule, &rewritten, heard) {
            continue;
        }
        onset_taken |= src.touches_onset();
        vowel_taken |= src.touches_vowel();
        match rule.policy {
            Policy::SpellCentral => trail.push(format!("correspondence:{}:kept", rule.id)),
            Policy::SpellBySound => {
                trail.push(format!("correspondence:{}", rule.id));
                onset = rewritten.onset;
                vowel = rewritten.vowel;
                if matches!(src, SlotPattern::ClusterW(_)) {
                    cluster = rewritten.cluster;
                }
            }
        }
    }
    OrthoSyllable::build(onset, cluster, s.leading_ho, vowel, s.coda, s.tone_mark)
        .map(|o| o.source_text)
        .unwrap_or_else(|_| s.source_text.clone())
}

fn split_syllables(word: &str) -> Vec<&str> {
    word.split(|c: char| c == '-' || c.is_whitespace()).filter(|p| !p.is_empty()).collect()
}

// ---------------------------------------------------------------------------
// Decisions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpellingDecision {
    pub input: String,
    pub origin: WordOrigin,
    pub spelling: String,
    pub alternatives: Vec<String>,
    /// Steps taken, starting with the origin route.
    pub trail: Vec<String>,
}

/// Inputs for deriving a native word's spelling from its sound.
#[derive(Debug, Clone, Copy)]
pub struct DeriveRequest<'a> {
    pub pronunciation: &'a PhoneticSyllable,
    pub etymon: Option<&'a str>,
    /// Speakers waver between a short and a long vowel.
    pub length_ambiguous: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Constraint {
    TaikhuWithMark,
    UnreducedVowel,
    /// Mai tri and mai chattawa belong to mid-class onsets only.
    RestrictedMark,
}

impl Constraint {
    pub fn id(self) -> &'static str {
        match self {
            Constraint::TaikhuWithMark => "taikhu-with-mark",
            Constraint::UnreducedVowel => "unreduced-vowel",
            Constraint::RestrictedMark => "restricted-mark",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintViolation {
    pub syllable: String,
    pub constraint: Constraint,
    pub message: String,
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.syllable, self.message, self.constraint.id())
    }
}

pub fn check_orthographic_constraints(spelling: &str) -> Result<Vec<ConstraintViolation>, ScriptError> {
    let mut out = Vec::new();
    for part in split_syllables(spelling) {
        let s = script::parse_syllable(part)?;
        let mut push = |constraint, message: String| {
            out.push(ConstraintViolation { syllable: s.source_text.clone(), constraint, message })
        };
        if s.irregular.taikhu_with_mark {
            push(Constraint::TaikhuWithMark, "mai taikhu written together with a tone mark".into());
        }
        if s.irregular.unreduced_vowel {
            push(Constraint::UnreducedVowel, format!("{} keeps mai han-akat before a coda", s.vowel));
        }
        let class = script::effective_class(&s);
        if matches!(s.tone_mark, ToneMark::MaiTri | ToneMark::MaiChattawa) && class != ConsonantClass::Mid {
            push(Constraint::RestrictedMark, format!("{} on a {class:?}-class onset", s.tone_mark));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Inverse box
// ---------------------------------------------------------------------------

fn vowel(name: &str) -> VowelId {
    VowelId::by_name(name).unwrap_or_else(|| panic!("vowel table lacks {name}"))
}

fn coda_letter(c: Consonant) -> Option<char> {
    Some(match c {
        Consonant::P => 'บ',
        Consonant::T => 'ด',
        Consonant::K => 'ก',
        Consonant::M => 'ม',
        Consonant::N => 'น',
        Consonant::Ng => 'ง',
        Consonant::W => 'ว',
        Consonant::J => 'ย',
        _ => return None,
    })
}

fn quality_vowels(q: Quality) -> (&'static str, &'static str) {
    match q {
        Quality::A => ("อะ", "อา"),
        Quality::I => ("อิ", "อี"),
        Quality::Ue => ("อึ", "อือ"),
        Quality::U => ("อุ", "อู"),
        Quality::E => ("เอะ", "เอ"),
        Quality::Ae => ("แอะ", "แอ"),
        Quality::O => ("โอะ", "โอ"),
        Quality::Or => ("เอาะ", "ออ"),
        Quality::Oe => ("เออะ", "เออ"),
    }
}

fn diphthong_vowels(d: Diphthong) -> (&'static str, &'static str) {
    match d {
        Diphthong::Ia => ("เอียะ", "เอีย"),
        Diphthong::Uea => ("เอือะ", "เอือ"),
        Diphthong::Ua => ("อัวะ", "อัว"),
    }
}

/// Written rime for a nucleus and coda; the second value lists the
/// opposite-length alternative used when length is ambiguous.
fn rimes_for(p: &PhoneticSyllable) -> Result<(Rime, Option<Rime>), String> {
    let glottal = p.coda == Some(Consonant::Glottal);
    let letter = match p.coda {
        None | Some(Consonant::Glottal) => None,
        Some(c) => Some(coda_letter(c).ok_or_else(|| format!("/{}/ is not an Isan coda", c.symbol()))?),
    };
    let primary = match p.nucleus {
        Nucleus::Mono { quality: Quality::A, long: false } if matches!(p.coda, Some(Consonant::M | Consonant::J | Consonant::W)) => {
            let name = match p.coda {
                Some(Consonant::M) => "อำ",
                Some(Consonant::J) => "ไอ",
                _ => "เอา",
            };
            return Ok((Rime { vowel: vowel(name), coda: None }, None));
        }
        Nucleus::Mono { quality, long } => {
            let (short, long_name) = quality_vowels(quality);
            match (long, glottal, p.coda) {
                (false, true, _) => Rime { vowel: vowel(short), coda: None },
                (false, _, None) => return Err("short vowel without a coda".into()),
                (true, true, _) => return Err("glottal coda after a long vowel".into()),
                (false, false, _) => Rime { vowel: vowel(short), coda: letter },
                (true, false, _) => Rime { vowel: vowel(long_name), coda: letter },
            }
        }
        Nucleus::Diph(d) => {
            let (short, long_name) = diphthong_vowels(d);
            Rime { vowel: vowel(if glottal { short } else { long_name }), coda: letter }
        }
    };
    let other = primary.vowel.length_counterpart().map(|v| Rime { vowel: v, coda: primary.coda });
    Ok((primary, other))
}

/// Longest common subsequence of code points.
fn lcs(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut row = vec![0usize; b.len() + 1];
    for &x in &a {
        let mut prev = 0;
        for (j, &y) in b.iter().enumerate() {
            let cur = row[j + 1];
            row[j + 1] = if x == y { prev + 1 } else { row[j + 1].max(row[j]) };
            prev = cur;
        }
    }
    row[b.len()]
}

/// High letter, then silent ห, then mid, then low.
fn class_rank(s: &OrthoSyllable) -> u8 {
    match (s.leading_ho, script::effective_class(s)) {
        (false, ConsonantClass::High) => 0,
        (true, _) => 1,
        (false, ConsonantClass::Mid) => 2,
        (false, ConsonantClass::Low) => 3,
    }
}

/// Keeps the candidates that minimise `key`, recording `step` if that narrowed the set.
fn narrow<K: Ord>(cands: &mut Vec<OrthoSyllable>, trail: &mut Vec<String>, step: &str, key: impl Fn(&OrthoSyllable) -> K) {
    let Some(best) = cands.iter().map(&key).min() else { return };
    let before = cands.len();
    cands.retain(|c| key(c) == best);
    if cands.len() < before {
        trail.push(step.to_string());
    }
}

// ---------------------------------------------------------------------------
// Speller
// ---------------------------------------------------------------------------

/// The data a spelling decision depends on.
#[derive(Debug, Clone, Copy)]
pub struct Speller<'a> {
    pub lexicon: &'a Lexicon,
    pub central: &'a WordList,
    pub rules: &'a RuleSet,
    /// Loanwords treated like Thai cognates.
    pub loan_exceptions: &'a WordList,
}

impl Default for Speller<'static> {
    fn default() -> Self {
        Speller::bundled()
    }
}

impl Speller<'static> {
    pub fn bundled() -> Speller<'static> {
        Speller {
            lexicon: bundled_lexicon(),
            central: central_words(),
            rules: bundled_rules(),
            loan_exceptions: bundled_loan_exceptions(),
        }
    }
}

impl<'a> Speller<'a> {
    /// Origin and whether it came from the heuristic rather than the lexicon.
    pub fn classify_origin_detailed(&self, word: &str) -> Result<(WordOrigin, bool), OrthographyError> {
        let word = word.trim();
        if word.is_empty() {
            return Err(OrthographyError::EmptyInput);
        }
        let word = script::normalize(word)?;
        Ok(match self.lexicon.origin_of(&word) {
            Some(o) => (o, false),
            None => (guess_origin(&word, self.lexicon, self.central), true),
        })
    }

    pub fn classify_origin(&self, word: &str) -> Result<WordOrigin, OrthographyError> {
        self.classify_origin_detailed(word).map(|(o, _)| o)
    }

    fn default_pronunciation(&self, word: &str) -> Option<Pronunciation> {
        let joined: String = split_syllables(word).concat();
        match g2p::phonemize_word(&joined, self.lexicon) {
            Ok(p) => Some(p),
            Err(_) => g2p::phonemize_word(word, &Lexicon::new()).ok(),
        }
    }

    /// Correspondence rewrite with the rule trail.
    pub fn correspond(&self, central: &str, pronunciation: Option<&Pronunciation>) -> (String, Vec<String>) {
        let mut trail = Vec::new();
        let parts = split_syllables(central);
        let parsed: Result<Vec<OrthoSyllable>, _> = parts.iter().map(|p| script::parse_syllable(p)).collect();
        let unchanged = parts.concat();
        let Ok(parsed) = parsed else {
            trail.push("correspondence:unparsed".into());
            return (unchanged, trail);
        };
        let heard = match pronunciation {
            Some(p) => Some(p.clone()),
            None => self.default_pronunciation(central),
        };
        let Some(heard) = heard.filter(|h| h.syllables().len() == parsed.len()) else {
            trail.push("correspondence:no-pronunciation".into());
            return (unchanged, trail);
        };
        let out: String = parsed
            .iter()
            .zip(heard.syllables())
            .map(|(s, h)| correspond_syllable(s, h, self.rules, &mut trail))
            .collect();
        if trail.is_empty() {
            trail.push("correspondence:none".into());
        }
        (out, trail)
    }

    pub fn apply_correspondence(&self, central: &str, pronunciation: Option<&Pronunciation>) -> String {
        self.correspond(central, pronunciation).0
    }

    pub fn derive_spelling(&self, req: DeriveRequest<'_>) -> Result<SpellingDecision, OrthographyError> {
        let p = req.pronunciation;
        let no_candidate = |reason: String| OrthographyError::NoCandidate { pronunciation: p.to_string(), reason };
        let tone = match p.tone {
            Some(t) if !t.is_borrowed() => t,
            Some(t) => return Err(no_candidate(format!("{t} has no cell in the tone box"))),
            None => return Err(no_candidate("no tone".into())),
        };
        let (primary, other) = rimes_for(p).map_err(no_candidate)?;
        let mut rimes = vec![primary];
        if req.length_ambiguous {
            rimes.extend(other);
        }
        let mut cands: Vec<OrthoSyllable> = Vec::new();
        for rime in rimes {
            let found = candidate_spellings(&p.onset, rime, tone).map_err(|e: ToneError| no_candidate(e.to_string()))?;
            for c in found {
                if !cands.iter().any(|x| x.source_text == c.source_text) {
                    cands.push(c);
                }
            }
        }
        if cands.is_empty() {
            return Err(no_candidate(format!("the tone box has no spelling for {tone}")));
        }
        let alternatives: Vec<String> = cands.iter().map(|c| c.source_text.clone()).collect();
        let mut trail = vec!["inverse-box".to_string()];
        let etymon = req.etymon.filter(|e| !e.is_empty());
        // (a) avoid writing an existing Central Thai word with another meaning
        narrow(&mut cands, &mut trail, "tiebreak:collision", |c| {
            self.central.contains(&c.source_text) && Some(c.source_text.as_str()) != etymon
        });
        // (b) stay visually close to the source word
        if let Some(e) = etymon {
            narrow(&mut cands, &mut trail, "tiebreak:etymon", |c| std::cmp::Reverse(lcs(&c.source_text, e)));
        }
        // (c) high-class letter, then silent ห
        narrow(&mut cands, &mut trail, "tiebreak:class", class_rank);
        // (d) the vowel length actually heard
        narrow(&mut cands, &mut trail, "tiebreak:length", |c| c.vowel != primary.vowel);
        let chosen = cands.remove(0);
        Ok(SpellingDecision {
            input: p.to_string(),
            origin: WordOrigin::IsanNative,
            spelling: chosen.source_text,
            alternatives,
            trail,
        })
    }

    fn spell_native(
        &self,
        word: &str,
        pronunciation: Option<&Pronunciation>,
        etymon: Option<&str>,
    ) -> Result<(String, Vec<String>, Vec<String>), OrthographyError> {
        if self.lexicon.origin_of(word) == Some(WordOrigin::IsanNative) {
            return Ok((word.to_string(), vec!["lexicon:listed".into()], Vec::new()));
        }
        let pron = pronunciation.ok_or_else(|| OrthographyError::MissingPronunciation(word.to_string()))?;
        for e in self.lexicon.entries() {
            if e.origin != Some(WordOrigin::IsanNative) {
                continue;
            }
            if g2p::entry_pronunciations(e).map(|ps| ps.first() == Some(pron)).unwrap_or(false) {
                return Ok((e.headword.clone(), vec!["lexicon:by-pronunciation".into()], Vec::new()));
            }
        }
        let etymon = etymon.or_else(|| self.lexicon.senses(word).iter().find_map(|e| e.etymon.as_deref()));
        let mut spelling = String::new();
        let mut trail = Vec::new();
        let mut alternatives = Vec::new();
        for syl in pron.syllables() {
            let d = self.derive_spelling(DeriveRequest { pronunciation: syl, etymon, length_ambiguous: false })?;
            spelling.push_str(&d.spelling);
            trail.extend(d.trail);
            alternatives = d.alternatives;
        }
        if pron.syllables().len() > 1 {
            alternatives.clear();
        }
        Ok((spelling, trail, alternatives))
    }

    pub fn spell(
        &self,
        word: &str,
        origin: WordOrigin,
        pronunciation: Option<&Pronunciation>,
        etymon: Option<&str>,
    ) -> Result<SpellingDecision, OrthographyError> {
        if word.trim().is_empty() {
            return Err(OrthographyError::EmptyInput);
        }
        let word = split_syllables(word)
            .into_iter()
            .map(script::normalize)
            .collect::<Result<Vec<_>, _>>()?
            .join("-");
        let plain: String = split_syllables(&word).concat();
        let mut trail = vec![format!("route:{origin}")];
        let (spelling, alternatives) = match origin {
            WordOrigin::ProperName => {
                trail.push("keep:central-spelling".into());
                (plain.clone(), Vec::new())
            }
            WordOrigin::Loanword if !self.loan_exceptions.contains(&plain) => {
                trail.push("keep:central-spelling".into());
                (plain.clone(), Vec::new())
            }
            WordOrigin::Loanword | WordOrigin::ThaiCognate => {
                if origin == WordOrigin::Loanword {
                    trail.push("loan-exception".into());
                }
                let (out, steps) = self.correspond(&word, pronunciation);
                trail.extend(steps);
                (out, Vec::new())
            }
            WordOrigin::IsanNative => {
                let (out, steps, alts) = self.spell_native(&plain, pronunciation, etymon)?;
                trail.extend(steps);
                (out, alts)
            }
        };
        Ok(SpellingDecision { input: plain, origin, spelling, alternatives, trail })
    }

    /// Like [`Speller::spell`] with the origin classified first. The trail
    /// starts with `origin:lexicon` or, for a heuristic guess, `origin:heuristic`.
    pub fn spell_auto(
        &self,
        word: &str,
        pronunciation: Option<&Pronunciation>,
        etymon: Option<&str>,
    ) -> Result<SpellingDecision, OrthographyError> {
        let (origin, guessed) = self.classify_origin_detailed(&split_syllables(word).concat())?;
        let mut d = self.spell(word, origin, pronunciation, etymon)?;
        d.trail.insert(0, if guessed { "origin:heuristic" } else { "origin:lexicon" }.to_string());
        Ok(d)
    }
}

pub fn classify_origin(word: &str, lexicon: &Lexicon) -> Result<WordOrigin, OrthographyError> {
    Speller { lexicon, ..Speller::bundled() }.classify_origin(word)
}

pub fn spell(
    word: &str,
    origin: WordOrigin,
    pronunciation: Option<&Pronunciation>,
    etymon: Option<&str>,
) -> Result<SpellingDecision, OrthographyError> {
    Speller::bundled().spell(word, origin, pronunciation, etymon)
}

pub fn apply_correspondence(central: &str, pronunciation: Option<&Pronunciation>, rules: &RuleSet) -> String {
    Speller { rules, ..Speller::bundled() }.apply_correspondence(central, pronunciation)
}

pub fn derive_spelling(pronunciation: &PhoneticSyllable, etymon: Option<&str>) -> Result<SpellingDecision, OrthographyError> {
    Speller::bundled().derive_spelling(DeriveRequest { pronunciation, etymon, length_ambiguous: false })
}

/// Tone a spelling would be read with, for checking derived spellings.
pub fn spelled_tone(spelling: &str) -> Result<IsanTone, OrthographyError> {
    let s = script::parse_syllable(spelling)?;
    crate::tonebox::compute_isan_tone(&s).map_err(|e| OrthographyError::NoCandidate {
        pronunciation: spelling.to_string(),
        reason: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pron(s: &str) -> Pronunciation {
        s.parse().unwrap()
    }

    fn derive(p: &str, etymon: Option<&str>) -> String {
        derive_spelling(&p.parse().unwrap(), etymon).unwrap().spelling
    }

    #[test]
    fn origins() {
        let lex = bundled_lexicon();
        assert_eq!(classify_origin("สามารถ", lex).unwrap(), WordOrigin::Loanword);
        assert_eq!(classify_origin("เว้า", lex).unwrap(), WordOrigin::IsanNative);
        assert_eq!(classify_origin("กราบ", lex).unwrap(), WordOrigin::ThaiCognate);
        assert_eq!(classify_origin(" ", lex), Err(OrthographyError::EmptyInput));
        let s = Speller::bundled();
        assert_eq!(s.classify_origin_detailed("กราบ").unwrap(), (WordOrigin::ThaiCognate, true));
        assert_eq!(s.classify_origin_detailed("เว้า").unwrap(), (WordOrigin::IsanNative, false));
    }

    #[test]
    fn correspondences() {
        let r = bundled_rules();
        let c = |w: &str| apply_correspondence(w, None, r);
        assert_eq!(c("รัก"), "ฮัก");
        assert_eq!(c("โรง"), "โฮง");
        assert_eq!(c("ช้าง"), "ซ้าง");
        assert_eq!(c("ฉีก"), "ฉีก");
        assert_eq!(c("รวย"), "รวย");
        assert_eq!(c("ลึก"), "เลิก");
        assert_eq!(c("ขาม"), "ขวม");
        assert_eq!(c("ความ"), "ความ");
        assert_eq!(c("กวาด"), "กวาด");
        assert_eq!(c("กิน"), "กิน");
        assert_eq!(c("เสื่อ"), "เสื่อ");
        // The heard form decides: /l/ keeps the Central spelling.
        assert_eq!(apply_correspondence("รัก", Some(&pron("l a k̚ T4")), r), "รัก");
        assert_eq!(apply_correspondence("เรือ", Some(&pron("h ia T3")), r), "เฮือ");
    }

    #[test]
    fn rules_file() {
        let r = bundled_rules();
        assert_eq!(RuleSet::parse(&r.to_tsv()).unwrap(), *r);
        let bad = format!("{CORRESPONDENCE_HEADER}\nx\tonset:ร\tvowel:อา\tspell-by-sound\n");
        assert!(matches!(RuleSet::parse(&bad), Err(OrthographyError::RuleFormat { line: 2, .. })));
    }

    #[test]
    fn inverse_box_tiebreaks() {
        assert_eq!(derive("kʰ ɔː j T5", None), "ข้อย");
        assert_eq!(derive("kʰ ɔː j T4", None), "ข่อย");
        assert_eq!(derive("m aː T1", Some("หมัก")), "หมา");
        assert_eq!(derive("s ua n T6", None), "ซ้วน");
        assert_eq!(derive("l aː T4", None), "หล่า");
        assert_eq!(derive("s i ŋ T4", None), "ซิ่ง");
        assert_eq!(derive("s ɔː n T4", Some("ซ่อน")), "ซ่อน");
        assert!(matches!(
            derive_spelling(&"kʰ ɔː j T2".parse().unwrap(), None),
            Err(OrthographyError::NoCandidate { .. })
        ));
        let d = Speller::bundled()
            .derive_spelling(DeriveRequest {
                pronunciation: &"s ua n T6".parse().unwrap(),
                etymon: None,
                length_ambiguous: true,
            })
            .unwrap();
        assert_eq!(d.spelling, "ซ้วน");
    }

    #[test]
    fn constraints() {
        let kinds = |w: &str| -> Vec<Constraint> {
            check_orthographic_constraints(w).unwrap().into_iter().map(|v| v.constraint).collect()
        };
        assert_eq!(kinds("ซั้วน"), [Constraint::UnreducedVowel]);
        assert!(kinds("ข้อย").is_empty());
        assert_eq!(kinds("ค๊า"), [Constraint::RestrictedMark]);
        assert!(kinds("ตู๊").is_empty());
    }

    #[test]
    fn routing() {
        let s = Speller::bundled();
        let d = s.spell("ชาติชาย", WordOrigin::ProperName, None, None).unwrap();
        assert_eq!(d.spelling, "ชาติชาย");
        assert_eq!(d.trail[0], "route:proper-name");
        assert_eq!(s.spell("รัก", WordOrigin::ThaiCognate, None, None).unwrap().spelling, "ฮัก");
        assert_eq!(s.spell("รส", WordOrigin::Loanword, None, None).unwrap().spelling, "รส");
        let d = s.spell("ฉัน", WordOrigin::IsanNative, Some(&pron("kʰ ɔː j T5")), None).unwrap();
        assert_eq!(d.spelling, "ข้อย");
        assert_eq!(s.spell("แซ่บ", WordOrigin::IsanNative, None, None).unwrap().spelling, "แซ่บ");
        assert!(matches!(
            s.spell("ฉัน", WordOrigin::IsanNative, None, None),
            Err(OrthographyError::MissingPronunciation(_))
        ));
    }
}
