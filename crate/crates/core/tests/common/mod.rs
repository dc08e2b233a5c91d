#![allow(dead_code)]

use isan_text::g2p::dict::{DictEntry, Dictionary};
use isan_text::g2p::{validate_phonotactics, Consonant, IsanTone, Nucleus, PhoneticSyllable, Pronunciation};
use isan_text::lexicon::WordOrigin;
use isan_text::phoneme::PhonemeInventory;
use isan_text::script::{self, OrthoSyllable, ToneMark, VowelId};
use rand::seq::SliceRandom;
use rand::Rng;

pub const LETTERS: &str = "กขคฆงจฉชซฌญฎฏฐฑฒณดตถทธนบปผฝพฟภมยรลวศษสหฬอฮ";
pub const LOW_SONORANTS: &str = "งญนมยรลว";

pub fn letters() -> Vec<char> {
    LETTERS.chars().collect()
}

pub fn coda_letters() -> Vec<char> {
    LETTERS.chars().filter(|&c| script::is_coda_letter(c)).collect()
}

/// A random well-formed syllable spelling, or None when the draw cannot be written.
pub fn random_syllable<R: Rng>(rng: &mut R) -> Option<OrthoSyllable> {
    let letters = letters();
    let onset = *letters.choose(rng)?;
    let (cluster, leading_ho) = match rng.gen_range(0..6) {
        0 => (letters.iter().copied().find(|&c| rng.gen_bool(0.2) && script::cluster_kind(onset, c).is_some()), false),
        1 if LOW_SONORANTS.contains(onset) => (None, true),
        _ => (None, false),
    };
    let vowels: Vec<VowelId> = VowelId::all().collect();
    let vowel = *vowels.choose(rng)?;
    let coda = if rng.gen_bool(0.5) { coda_letters().choose(rng).copied() } else { None };
    let mark = *[ToneMark::None, ToneMark::None, ToneMark::MaiEk, ToneMark::MaiTho].choose(rng)?;
    OrthoSyllable::build(onset, cluster, leading_ho, vowel, coda, mark).ok()
}

/// A random hyphen-delimited word of one to three syllables.
pub fn random_word<R: Rng>(rng: &mut R) -> String {
    let n = rng.gen_range(1..=3);
    let mut parts = Vec::new();
    while parts.len() < n {
        if let Some(s) = random_syllable(rng) {
            parts.push(s.source_text);
        }
    }
    parts.join("-")
}

/// A random phonotactically valid syllable.
pub fn random_phonetic<R: Rng>(rng: &mut R) -> PhoneticSyllable {
    let inv = PhonemeInventory::isan();
    loop {
        let onset = if rng.gen_bool(0.1) { inv.clusters[0].to_vec() } else { vec![*inv.onsets.choose(rng).unwrap()] };
        let nucleus: Nucleus = *inv.vowels.choose(rng).unwrap();
        let coda = if rng.gen_bool(0.4) { None } else { inv.codas.choose(rng).copied() };
        let tone = *IsanTone::NATIVE.choose(rng).unwrap();
        let s = PhoneticSyllable::new(&onset, nucleus, coda, tone);
        if validate_phonotactics(&s).is_empty() {
            return s;
        }
    }
}

pub fn random_pronunciation<R: Rng>(rng: &mut R) -> Pronunciation {
    Pronunciation((0..rng.gen_range(1..=3)).map(|_| random_phonetic(rng)).collect())
}

/// A random store with variants and homograph contexts.
pub fn random_dictionary<R: Rng>(rng: &mut R) -> Dictionary {
    let mut dict = Dictionary::new();
    let contexts = ["", "food", "verb", "noun"];
    for _ in 0..rng.gen_range(0..12) {
        let headword = random_word(rng).replace('-', "");
        let origin = *WordOrigin::ALL.choose(rng).unwrap();
        for _ in 0..rng.gen_range(1..=2) {
            let context = contexts.choose(rng).unwrap();
            let entry = DictEntry {
                headword: headword.clone(),
                context: (!context.is_empty()).then(|| context.to_string()),
                primary: random_pronunciation(rng),
                variants: (0..rng.gen_range(0..3)).map(|_| random_pronunciation(rng)).collect(),
                origin,
            };
            let _ = dict.insert(entry);
        }
    }
    dict
}

pub fn consonants_without_r() -> Vec<Consonant> {
    PhonemeInventory::isan().onsets
}
