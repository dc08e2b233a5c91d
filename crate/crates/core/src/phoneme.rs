//! Phonemic syllables in the C(C)V(V)C(T) shape and their text form.
//!
//! Text form: one token per phoneme separated by spaces, tone last, and
//! syllables joined by `" . "`, e.g. `s aː t̚ T5 . s a ʔ T1 . n aː T1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad pronunciation {text:?}: {reason}")]
pub struct PhonemeParseError {
    pub text: String,
    pub reason: String,
}

fn perr(text: &str, reason: impl Into<String>) -> PhonemeParseError {
    PhonemeParseError { text: text.to_string(), reason: reason.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Consonant {
    P,
    Ph,
    B,
    T,
    Th,
    D,
    Tc,
    Tch,
    K,
    Kh,
    Glottal,
    M,
    N,
    Ny,
    Ng,
    F,
    S,
    H,
    L,
    W,
    J,
    /// Not part of the Isan inventory; representable so validators can reject it.
    R,
}

impl Consonant {
    pub const ALL: [Consonant; 22] = [
        Consonant::P,
        Consonant::Ph,
        Consonant::B,
        Consonant::T,
        Consonant::Th,
        Consonant::D,
        Consonant::Tc,
        Consonant::Tch,
        Consonant::K,
        Consonant::Kh,
        Consonant::Glottal,
        Consonant::M,
        Consonant::N,
        Consonant::Ny,
        Consonant::Ng,
        Consonant::F,
        Consonant::S,
        Consonant::H,
        Consonant::L,
        Consonant::W,
        Consonant::J,
        Consonant::R,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Consonant::P => "p",
            Consonant::Ph => "pʰ",
            Consonant::B => "b",
            Consonant::T => "t",
            Consonant::Th => "tʰ",
            Consonant::D => "d",
            Consonant::Tc => "tɕ",
            Consonant::Tch => "tɕʰ",
            Consonant::K => "k",
            Consonant::Kh => "kʰ",
            Consonant::Glottal => "ʔ",
            Consonant::M => "m",
            Consonant::N => "n",
            Consonant::Ny => "ɲ",
            Consonant::Ng => "ŋ",
            Consonant::F => "f",
            Consonant::S => "s",
            Consonant::H => "h",
            Consonant::L => "l",
            Consonant::W => "w",
            Consonant::J => "j",
            Consonant::R => "r",
        }
    }

    /// Symbol in coda position: stops carry the no-audible-release mark.
    pub fn coda_symbol(self) -> String {
        match self {
            Consonant::P | Consonant::T | Consonant::K => format!("{}\u{031A}", self.symbol()),
            _ => self.symbol().to_string(),
        }
    }

    pub fn from_symbol(s: &str) -> Option<Consonant> {
        let s = s.trim_end_matches('\u{031A}');
        let s = match s {
            "ph" | "p^h" => "pʰ",
            "th" | "t^h" => "tʰ",
            "kh" | "k^h" => "kʰ",
            "tɕh" | "tɕ^h" => "tɕʰ",
            "?" => "ʔ",
            other => other,
        };
        Consonant::ALL.into_iter().find(|c| c.symbol() == s)
    }
}

impl fmt::Display for Consonant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quality {
    I,
    E,
    Ae,
    A,
    Or,
    O,
    U,
    Ue,
    Oe,
}

impl Quality {
    pub const ALL: [Quality; 9] =
        [Quality::I, Quality::E, Quality::Ae, Quality::A, Quality::Or, Quality::O, Quality::U, Quality::Ue, Quality::Oe];

    pub fn symbol(self) -> &'static str {
        match self {
            Quality::I => "i",
            Quality::E => "e",
            Quality::Ae => "ɛ",
            Quality::A => "a",
            Quality::Or => "ɔ",
            Quality::O => "o",
            Quality::U => "u",
            Quality::Ue => "ɯ",
            Quality::Oe => "ɤ",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Diphthong {
    Ia,
    Uea,
    Ua,
}

impl Diphthong {
    pub const ALL: [Diphthong; 3] = [Diphthong::Ia, Diphthong::Uea, Diphthong::Ua];

    pub fn symbol(self) -> &'static str {
        match self {
            Diphthong::Ia => "ia",
            Diphthong::Uea => "ɯa",
            Diphthong::Ua => "ua",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Nucleus {
    Mono { quality: Quality, long: bool },
    Diph(Diphthong),
}

impl Nucleus {
    pub fn short(quality: Quality) -> Nucleus {
        Nucleus::Mono { quality, long: false }
    }

    pub fn long(quality: Quality) -> Nucleus {
        Nucleus::Mono { quality, long: true }
    }

    /// Short monophthongs; diphthongs count as neither short nor long here.
    pub fn is_short_mono(self) -> bool {
        matches!(self, Nucleus::Mono { long: false, .. })
    }

    pub fn is_long_mono(self) -> bool {
        matches!(self, Nucleus::Mono { long: true, .. })
    }

    pub fn symbol(self) -> String {
        match self {
            Nucleus::Mono { quality, long: false } => quality.symbol().to_string(),
            Nucleus::Mono { quality, long: true } => format!("{}ː", quality.symbol()),
            Nucleus::Diph(d) => d.symbol().to_string(),
        }
    }

    pub fn from_symbol(s: &str) -> Option<Nucleus> {
        if let Some(d) = Diphthong::ALL.into_iter().find(|d| d.symbol() == s) {
            return Some(Nucleus::Diph(d));
        }
        let (base, long) = match s.strip_suffix('ː').or_else(|| s.strip_suffix(':')) {
            Some(b) => (b, true),
            None => (s, false),
        };
        Quality::ALL.into_iter().find(|q| q.symbol() == base).map(|quality| Nucleus::Mono { quality, long })
    }
}

impl fmt::Display for Nucleus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

/// Isan tone categories; `Tri` is the borrowed Central Thai high tone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IsanTone {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    Tri,
}

impl IsanTone {
    pub const NATIVE: [IsanTone; 6] = [IsanTone::T1, IsanTone::T2, IsanTone::T3, IsanTone::T4, IsanTone::T5, IsanTone::T6];

    pub fn is_borrowed(self) -> bool {
        self == IsanTone::Tri
    }
}

impl fmt::Display for IsanTone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsanTone::T1 => "T1",
            IsanTone::T2 => "T2",
            IsanTone::T3 => "T3",
            IsanTone::T4 => "T4",
            IsanTone::T5 => "T5",
            IsanTone::T6 => "T6",
            IsanTone::Tri => "TRI",
        })
    }
}

impl FromStr for IsanTone {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "T1" => IsanTone::T1,
            "T2" => IsanTone::T2,
            "T3" => IsanTone::T3,
            "T4" => IsanTone::T4,
            "T5" => IsanTone::T5,
            "T6" => IsanTone::T6,
            "TRI" => IsanTone::Tri,
            _ => return Err(format!("unknown Isan tone {s:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PhoneticSyllable {
    pub onset: Vec<Consonant>,
    pub nucleus: Nucleus,
    pub coda: Option<Consonant>,
    pub tone: Option<IsanTone>,
}

impl PhoneticSyllable {
    pub fn new(onset: &[Consonant], nucleus: Nucleus, coda: Option<Consonant>, tone: IsanTone) -> Self {
        PhoneticSyllable { onset: onset.to_vec(), nucleus, coda, tone: Some(tone) }
    }

    /// Same segments, ignoring tone.
    pub fn same_segments(&self, other: &PhoneticSyllable) -> bool {
        self.onset == other.onset && self.nucleus == other.nucleus && self.coda == other.coda
    }
}

impl fmt::Display for PhoneticSyllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.onset.iter().map(|c| c.symbol().to_string()).collect();
        parts.push(self.nucleus.symbol());
        if let Some(c) = self.coda {
            parts.push(c.coda_symbol());
        }
        if let Some(t) = self.tone {
            parts.push(t.to_string());
        }
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for PhoneticSyllable {
    type Err = PhonemeParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut tokens: Vec<&str> = text.split_whitespace().collect();
        let tone = match tokens.last() {
            Some(t) if t.parse::<IsanTone>().is_ok() => {
                let tone = t.parse().ok();
                tokens.pop();
                tone
            }
            _ => None,
        };
        let vowel_at = tokens
            .iter()
            .position(|t| Nucleus::from_symbol(t).is_some())
            .ok_or_else(|| perr(text, "no vowel"))?;
        let onset = tokens[..vowel_at]
            .iter()
            .map(|t| Consonant::from_symbol(t).ok_or_else(|| perr(text, format!("unknown consonant {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let nucleus = Nucleus::from_symbol(tokens[vowel_at]).expect("checked above");
        let coda = match &tokens[vowel_at + 1..] {
            [] => None,
            [c] => Some(Consonant::from_symbol(c).ok_or_else(|| perr(text, format!("unknown coda {c:?}")))?),
            _ => return Err(perr(text, "more than one coda")),
        };
        Ok(PhoneticSyllable { onset, nucleus, coda, tone })
    }
}

/// A word's pronunciation: one phonemic syllable per orthographic syllable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pronunciation(pub Vec<PhoneticSyllable>);

impl Pronunciation {
    pub fn syllables(&self) -> &[PhoneticSyllable] {
        &self.0
    }
}

impl From<PhoneticSyllable> for Pronunciation {
    fn from(s: PhoneticSyllable) -> Self {
        Pronunciation(vec![s])
    }
}

impl fmt::Display for Pronunciation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" . "))
    }
}

impl FromStr for Pronunciation {
    type Err = PhonemeParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.trim().is_empty() {
            return Err(perr(text, "empty"));
        }
        let syllables = text
            .split(" . ")
            .map(str::parse)
            .collect::<Result<Vec<PhoneticSyllable>, _>>()?;
        Ok(Pronunciation(syllables))
    }
}

/// The phoneme inventory a pronunciation must stay inside.
#[derive(Debug, Clone)]
pub struct PhonemeInventory {
    pub onsets: Vec<Consonant>,
    pub clusters: Vec<[Consonant; 2]>,
    pub vowels: Vec<Nucleus>,
    pub codas: Vec<Consonant>,
    pub tones: Vec<IsanTone>,
}

impl PhonemeInventory {
    pub fn isan() -> PhonemeInventory {
        let onsets = Consonant::ALL.into_iter().filter(|c| *c != Consonant::R).collect();
        let mut vowels = Vec::new();
        for q in Quality::ALL {
            vowels.push(Nucleus::short(q));
            vowels.push(Nucleus::long(q));
        }
        vowels.extend(Diphthong::ALL.map(Nucleus::Diph));
        PhonemeInventory {
            onsets,
            clusters: vec![[Consonant::Kh, Consonant::W]],
            vowels,
            codas: vec![
                Consonant::P,
                Consonant::T,
                Consonant::K,
                Consonant::M,
                Consonant::N,
                Consonant::Ng,
                Consonant::W,
                Consonant::J,
                Consonant::Glottal,
            ],
            tones: vec![
                IsanTone::T1,
                IsanTone::T2,
                IsanTone::T3,
                IsanTone::T4,
                IsanTone::T5,
                IsanTone::T6,
                IsanTone::Tri,
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inventory_shape() {
        let inv = PhonemeInventory::isan();
        assert!(!inv.onsets.contains(&Consonant::R));
        assert!(inv.onsets.contains(&Consonant::Ny));
        assert_eq!(inv.clusters, vec![[Consonant::Kh, Consonant::W]]);
        assert_eq!(inv.vowels.len(), 21);
        assert_eq!(inv.codas.len(), 9);
        assert_eq!(inv.tones.iter().filter(|t| t.is_borrowed()).count(), 1);
    }

    #[test]
    fn text_form() {
        let p: Pronunciation = "s aː t̚ T5 . s a ʔ T1 . n aː T1".parse().unwrap();
        assert_eq!(p.0.len(), 3);
        assert_eq!(p.0[0].coda, Some(Consonant::T));
        assert_eq!(p.to_string(), "s aː t̚ T5 . s a ʔ T1 . n aː T1");

        let s: PhoneticSyllable = "kʰ w i t̚ T1".parse().unwrap();
        assert_eq!(s.onset, vec![Consonant::Kh, Consonant::W]);
        let s: PhoneticSyllable = "k a: T2".parse().unwrap();
        assert_eq!(s.to_string(), "k aː T2");
        let s: PhoneticSyllable = "k aː".parse().unwrap();
        assert_eq!(s.tone, None);
        assert!("x aː T2".parse::<PhoneticSyllable>().is_err());
        assert!("k T2".parse::<PhoneticSyllable>().is_err());
        assert!("".parse::<Pronunciation>().is_err());
    }
}
