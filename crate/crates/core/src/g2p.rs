//! Orthographic syllables to Isan citation-form phonemes.

pub mod dict;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crate::phoneme::{
    Consonant, Diphthong, IsanTone, Nucleus, PhonemeInventory, PhoneticSyllable, Pronunciation, Quality,
};

use crate::lexicon::{kw_whitelist, Lexicon, LexiconEntry, LexiconFlags, RHint};
use crate::script::{self, OrthoSyllable, ScriptError, VowelId, VowelLength};
use crate::tonebox::{isan6, DeadMarkPolicy, ToneBox, ToneCategory, ToneError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum G2pError {
    #[error("{text}: no Isan phoneme for letter {letter}")]
    UnmappableLetter { letter: char, text: String },
    #[error("{text}: /{pronunciation}/ breaks phonotactics ({})", join(.violations))]
    PhonotacticViolation { text: String, pronunciation: String, violations: Vec<Violation> },
    #[error("{0}: mark syllable boundaries with '-' or add the word to the lexicon")]
    SegmentationRequired(String),
    #[error("{text}: {source}")]
    Tone { text: String, source: ToneError },
    #[error(transparent)]
    Script(#[from] ScriptError),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// A broken phonotactic constraint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Violation {
    /// /r/ is not an Isan phoneme.
    RPhoneme,
    OnsetCount(usize),
    ClusterNotAllowed(Vec<Consonant>),
    /// A short vowel must be closed, by /ʔ/ if nothing else.
    OpenShortVowel,
    CodaNotAllowed(Consonant),
    GlottalAfterLongVowel,
    MissingTone,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RPhoneme => f.write_str("/r/ is not an Isan phoneme"),
            Violation::OnsetCount(n) => write!(f, "onset has {n} consonants"),
            Violation::ClusterNotAllowed(c) => {
                let s: Vec<&str> = c.iter().map(|c| c.symbol()).collect();
                write!(f, "onset cluster /{}/ is not allowed", s.join(""))
            }
            Violation::OpenShortVowel => f.write_str("short vowel without a coda"),
            Violation::CodaNotAllowed(c) => write!(f, "/{}/ is not an Isan coda", c.symbol()),
            Violation::GlottalAfterLongVowel => f.write_str("glottal coda after a long vowel"),
            Violation::MissingTone => f.write_str("no tone"),
        }
    }
}

pub fn validate_phonotactics(p: &PhoneticSyllable) -> Vec<Violation> {
    let inv = inventory();
    let mut out = Vec::new();
    if p.onset.contains(&Consonant::R) || p.coda == Some(Consonant::R) {
        out.push(Violation::RPhoneme);
    }
    match p.onset.as_slice() {
        [_] => {}
        [a, b] => {
            if !inv.clusters.contains(&[*a, *b]) {
                out.push(Violation::ClusterNotAllowed(p.onset.clone()));
            }
        }
        other => out.push(Violation::OnsetCount(other.len())),
    }
    match p.coda {
        None if p.nucleus.is_short_mono() => out.push(Violation::OpenShortVowel),
        None | Some(Consonant::R) => {}
        Some(c) if !inv.codas.contains(&c) => out.push(Violation::CodaNotAllowed(c)),
        Some(Consonant::Glottal) if p.nucleus.is_long_mono() => out.push(Violation::GlottalAfterLongVowel),
        Some(_) => {}
    }
    if p.tone.is_none() {
        out.push(Violation::MissingTone);
    }
    out
}

/// Violations of every syllable, tagged with the syllable index.
pub fn validate_pronunciation(p: &Pronunciation) -> Vec<(usize, Violation)> {
    p.syllables()
        .iter()
        .enumerate()
        .flat_map(|(i, s)| validate_phonotactics(s).into_iter().map(move |v| (i, v)))
        .collect()
}

fn inventory() -> &'static PhonemeInventory {
    static INV: OnceLock<PhonemeInventory> = OnceLock::new();
    INV.get_or_init(PhonemeInventory::isan)
}

/// Per-word choices the spelling alone does not decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Hints {
    /// Read onset ร as /l/ rather than /h/.
    pub r_as_l: bool,
    pub keep_affricate: bool,
    pub kw_cluster: bool,
    pub tone: Option<IsanTone>,
}

impl Hints {
    /// Hints for the primary reading of a lexicon entry.
    pub fn from_flags(flags: &LexiconFlags) -> Hints {
        Hints {
            r_as_l: matches!(flags.r, RHint::LThenH | RHint::OnlyL),
            keep_affricate: flags.keep_affricate,
            kw_cluster: flags.kw_cluster,
            tone: flags.tone,
        }
    }
}

fn onset_phoneme(letter: char, hints: &Hints) -> Option<Consonant> {
    use Consonant::*;
    Some(match letter {
        'ก' => K,
        'ข' | 'ฃ' | 'ค' | 'ฅ' | 'ฆ' => Kh,
        'ง' => Ng,
        'จ' => Tc,
        'ฉ' | 'ช' | 'ฌ' if hints.keep_affricate => Tch,
        'ฉ' | 'ช' | 'ฌ' => S,
        'ซ' | 'ศ' | 'ษ' | 'ส' => S,
        'ญ' => Ny,
        'ฎ' | 'ด' => D,
        'ฏ' | 'ต' => T,
        'ฐ' | 'ฑ' | 'ฒ' | 'ถ' | 'ท' | 'ธ' => Th,
        'ณ' | 'น' => N,
        'บ' => B,
        'ป' => P,
        'ผ' | 'พ' | 'ภ' => Ph,
        'ฝ' | 'ฟ' => F,
        'ม' => M,
        'ย' => J,
        'ร' if hints.r_as_l => L,
        'ร' => H,
        'ล' | 'ฬ' => L,
        'ว' => W,
        'ห' | 'ฮ' => H,
        'อ' => Glottal,
        _ => return None,
    })
}

/// Coda letters collapse onto the eight Isan final consonants.
pub fn coda_phoneme(letter: char) -> Option<Consonant> {
    use Consonant::*;
    Some(match letter {
        'ก' | 'ข' | 'ค' | 'ฆ' => K,
        'จ' | 'ช' | 'ซ' | 'ฌ' | 'ฎ' | 'ฏ' | 'ฐ' | 'ฑ' | 'ฒ' | 'ด' | 'ต' | 'ถ' | 'ท' | 'ธ' | 'ศ' | 'ษ' | 'ส' => T,
        'บ' | 'ป' | 'พ' | 'ฟ' | 'ภ' => P,
        'ม' => M,
        'ญ' | 'ณ' | 'น' | 'ร' | 'ล' | 'ฬ' => N,
        'ง' => Ng,
        'ว' => W,
        'ย' => J,
        _ => return None,
    })
}

/// Nucleus of a vowel pattern, plus the coda built into อำ ไอ ใอ เอา.
pub fn vowel_phonemes(vowel: VowelId) -> (Nucleus, Option<Consonant>) {
    use Quality::*;
    let mono = |q| match vowel.length() {
        VowelLength::Short => Nucleus::short(q),
        VowelLength::Long => Nucleus::long(q),
    };
    match vowel.name() {
        "อะ" | "อา" => (mono(A), None),
        "อิ" | "อี" => (mono(I), None),
        "อึ" | "อือ" => (mono(Ue), None),
        "อุ" | "อู" => (mono(U), None),
        "เอะ" | "เอ" => (mono(E), None),
        "แอะ" | "แอ" => (mono(Ae), None),
        "โอะ" | "โอ" => (mono(O), None),
        "เอาะ" | "ออ" => (mono(Or), None),
        "เออะ" | "เออ" => (mono(Oe), None),
        "เอียะ" | "เอีย" => (Nucleus::Diph(Diphthong::Ia), None),
        "เอือะ" | "เอือ" => (Nucleus::Diph(Diphthong::Uea), None),
        "อัวะ" | "อัว" => (Nucleus::Diph(Diphthong::Ua), None),
        "อำ" => (Nucleus::short(A), Some(Consonant::M)),
        "ไอ" | "ใอ" => (Nucleus::short(A), Some(Consonant::J)),
        "เอา" => (Nucleus::short(A), Some(Consonant::W)),
        other => unreachable!("vowel table entry {other} has no phoneme mapping"),
    }
}

/// The Isan box, but a tone mark on a dead syllable selects its mark column
/// (ค่ะ is read like a live syllable with mai ek).
fn citation_box() -> &'static ToneBox {
    static BOX: OnceLock<ToneBox> = OnceLock::new();
    BOX.get_or_init(|| isan6().clone().with_dead_marks(DeadMarkPolicy::MarkColumn))
}

fn citation_tone(s: &OrthoSyllable) -> Result<IsanTone, G2pError> {
    match citation_box().tone_of(s) {
        Ok(ToneCategory::Isan(t)) => Ok(*t),
        Ok(other) => unreachable!("isan6 holds only T1..T6, found {other}"),
        Err(source) => Err(G2pError::Tone { text: s.source_text.clone(), source }),
    }
}

pub fn phonemize_syllable(s: &OrthoSyllable, hints: &Hints) -> Result<PhoneticSyllable, G2pError> {
    let unmappable = |letter| G2pError::UnmappableLetter { letter, text: s.source_text.clone() };
    let first = onset_phoneme(s.onset, hints).ok_or_else(|| unmappable(s.onset))?;
    let (mut nucleus, inherent_coda) = vowel_phonemes(s.vowel);
    let mut onset = vec![first];
    match s.cluster {
        Some(_) if s.false_cluster => {
            if s.onset == 'ท' {
                onset = vec![Consonant::S];
            }
        }
        Some('ว') => {
            let keep = hints.kw_cluster || kw_whitelist().contains(&s.source_text);
            if keep && first == Consonant::Kh {
                onset.push(Consonant::W);
            } else if matches!(s.vowel.name(), "อา" | "อะ") {
                // ความ, กวาด: the glide merges into the vowel.
                nucleus = Nucleus::Diph(Diphthong::Ua);
            }
        }
        // True ร/ล clusters keep only the first consonant.
        _ => {}
    }
    let coda = match (inherent_coda, s.coda) {
        (Some(c), _) => Some(c),
        (None, Some(letter)) => Some(coda_phoneme(letter).ok_or_else(|| unmappable(letter))?),
        (None, None) if s.vowel_length == VowelLength::Short => Some(Consonant::Glottal),
        (None, None) => None,
    };
    let tone = match hints.tone {
        Some(t) => t,
        None => citation_tone(s)?,
    };
    let out = PhoneticSyllable { onset, nucleus, coda, tone: Some(tone) };
    let violations = validate_phonotactics(&out);
    if !violations.is_empty() {
        return Err(G2pError::PhonotacticViolation {
            text: s.source_text.clone(),
            pronunciation: out.to_string(),
            violations,
        });
    }
    Ok(out)
}

/// Splits a word on `-` or spaces; an undelimited word must be one syllable.
fn syllables_of(word: &str) -> Result<Vec<OrthoSyllable>, G2pError> {
    let parts: Vec<&str> = word.split(|c: char| c == '-' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
    if parts.is_empty() {
        return Err(ScriptError::NotASyllable(word.to_string()).into());
    }
    parts
        .iter()
        .map(|p| match script::parse_syllable(p) {
            Err(ScriptError::MultiSyllable(_)) => Err(G2pError::SegmentationRequired(word.to_string())),
            other => other.map_err(G2pError::from),
        })
        .collect()
}

fn phonemize_spelling(word: &str, hints: &Hints) -> Result<Pronunciation, G2pError> {
    let mut hints = *hints;
    if kw_whitelist().contains(word) {
        hints.kw_cluster = true;
    }
    let syllables = syllables_of(word)?;
    // A tone override names the tone of a one-syllable word only.
    if syllables.len() > 1 {
        hints.tone = None;
    }
    syllables.iter().map(|s| phonemize_syllable(s, &hints)).collect::<Result<Vec<_>, _>>().map(Pronunciation)
}

fn entry_spelling(entry: &LexiconEntry) -> String {
    entry.syllables.as_ref().map(|s| s.join("-")).unwrap_or_else(|| entry.headword.clone())
}

/// Ranked pronunciations of a lexicon entry: transcribed ones if present,
/// otherwise the computed reading plus the other reading of ร.
pub fn entry_pronunciations(entry: &LexiconEntry) -> Result<Vec<Pronunciation>, G2pError> {
    if !entry.pronunciations.is_empty() {
        return Ok(entry.ranked_pronunciations().into_iter().cloned().collect());
    }
    let spelling = entry_spelling(entry);
    let primary_hints = Hints::from_flags(&entry.flags);
    let mut out = vec![phonemize_spelling(&spelling, &primary_hints)?];
    if matches!(entry.flags.r, RHint::HThenL | RHint::LThenH) {
        let alt = phonemize_spelling(&spelling, &Hints { r_as_l: !primary_hints.r_as_l, ..primary_hints })?;
        if !out.contains(&alt) {
            out.push(alt);
        }
    }
    Ok(out)
}

/// NFC-normalises each syllable of a possibly delimited word.
fn normalize_word(word: &str) -> Result<String, G2pError> {
    let parts = word
        .split(|c: char| c == '-' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(script::normalize)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(parts.join("-"))
}

/// Citation form of a word: the lexicon's primary reading when the word is
/// listed, else syllable-by-syllable conversion of a delimited spelling.
pub fn phonemize_word(word: &str, lexicon: &Lexicon) -> Result<Pronunciation, G2pError> {
    let word = normalize_word(word)?;
    let senses = lexicon.senses(&word);
    let entry = senses.iter().find(|e| e.context.is_none()).or(senses.first());
    match entry {
        Some(e) => Ok(entry_pronunciations(e)?.remove(0)),
        None => phonemize_spelling(&word, &Hints::default()),
    }
}

/// Phonemizes with explicit hints, bypassing the lexicon.
pub fn phonemize_with(word: &str, hints: &Hints) -> Result<Pronunciation, G2pError> {
    phonemize_spelling(&normalize_word(word)?, hints)
}
