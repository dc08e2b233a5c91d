//! Thai-script orthographic syllables.
//!
//! A syllable is parsed into its onset block (optional silent ห, the onset
//! letter, an optional cluster letter), a vowel pattern from a static table,
//! an optional coda letter and at most one tone mark. [`render_syllable`]
//! goes the other way and only ever emits canonical spellings.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("not a syllable: {0:?}")]
    NotASyllable(String),
    #[error("more than one syllable: {0:?}")]
    MultiSyllable(String),
    #[error("non-Thai character {ch:?} in {text:?}")]
    NonThai { text: String, ch: char },
    #[error("cannot render syllable: {0}")]
    Unrenderable(String),
}

/// The three-way orthographic class of an initial consonant letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConsonantClass {
    High,
    Mid,
    Low,
}

impl fmt::Display for ConsonantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConsonantClass::High => "High",
            ConsonantClass::Mid => "Mid",
            ConsonantClass::Low => "Low",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub enum ToneMark {
    #[default]
    None,
    MaiEk,
    MaiTho,
    MaiTri,
    MaiChattawa,
}

impl ToneMark {
    pub const ALL: [ToneMark; 5] = [
        ToneMark::None,
        ToneMark::MaiEk,
        ToneMark::MaiTho,
        ToneMark::MaiTri,
        ToneMark::MaiChattawa,
    ];

    pub fn from_char(c: char) -> Option<ToneMark> {
        match c {
            '\u{0E48}' => Some(ToneMark::MaiEk),
            '\u{0E49}' => Some(ToneMark::MaiTho),
            '\u{0E4A}' => Some(ToneMark::MaiTri),
            '\u{0E4B}' => Some(ToneMark::MaiChattawa),
            _ => None,
        }
    }

    pub fn as_char(self) -> Option<char> {
        match self {
            ToneMark::None => None,
            ToneMark::MaiEk => Some('\u{0E48}'),
            ToneMark::MaiTho => Some('\u{0E49}'),
            ToneMark::MaiTri => Some('\u{0E4A}'),
            ToneMark::MaiChattawa => Some('\u{0E4B}'),
        }
    }
}

impl fmt::Display for ToneMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ToneMark::None => "None",
            ToneMark::MaiEk => "MaiEk",
            ToneMark::MaiTho => "MaiTho",
            ToneMark::MaiTri => "MaiTri",
            ToneMark::MaiChattawa => "MaiChattawa",
        })
    }
}

impl FromStr for ToneMark {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "None" | "" | "-" => ToneMark::None,
            "MaiEk" => ToneMark::MaiEk,
            "MaiTho" => ToneMark::MaiTho,
            "MaiTri" => ToneMark::MaiTri,
            "MaiChattawa" => ToneMark::MaiChattawa,
            _ => return Err(format!("unknown tone mark {s:?}")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SyllableKind {
    Live,
    DeadShort,
    DeadLong,
}

impl fmt::Display for SyllableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SyllableKind::Live => "Live",
            SyllableKind::DeadShort => "DeadShort",
            SyllableKind::DeadLong => "DeadLong",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VowelLength {
    Short,
    Long,
}

impl fmt::Display for VowelLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VowelLength::Short => "Short",
            VowelLength::Long => "Long",
        })
    }
}

// ---------------------------------------------------------------------------
// Consonant letters
// ---------------------------------------------------------------------------

const FIRST_LETTER: u32 = 0x0E01;
const LAST_LETTER: u32 = 0x0E2E;

// Indexed from U+0E01. ฤ and ฦ sit inside the block; they pattern with ร/ล.
const LETTER_CLASSES: [ConsonantClass; 46] = {
    use ConsonantClass::*;
    [
        Mid,  // ก
        High, // ข
        High, // ฃ
        Low,  // ค
        Low,  // ฅ
        Low,  // ฆ
        Low,  // ง
        Mid,  // จ
        High, // ฉ
        Low,  // ช
        Low,  // ซ
        Low,  // ฌ
        Low,  // ญ
        Mid,  // ฎ
        Mid,  // ฏ
        High, // ฐ
        Low,  // ฑ
        Low,  // ฒ
        Low,  // ณ
        Mid,  // ด
        Mid,  // ต
        High, // ถ
        Low,  // ท
        Low,  // ธ
        Low,  // น
        Mid,  // บ
        Mid,  // ป
        High, // ผ
        High, // ฝ
        Low,  // พ
        Low,  // ฟ
        Low,  // ภ
        Low,  // ม
        Low,  // ย
        Low,  // ร
        Low,  // ฤ
        Low,  // ล
        Low,  // ฦ
        Low,  // ว
        High, // ศ
        High, // ษ
        High, // ส
        High, // ห
        Low,  // ฬ
        Mid,  // อ
        Low,  // ฮ
    ]
};

/// Class of a consonant letter, `None` outside U+0E01..=U+0E2E.
pub fn consonant_class(letter: char) -> Option<ConsonantClass> {
    let cp = letter as u32;
    if (FIRST_LETTER..=LAST_LETTER).contains(&cp) {
        Some(LETTER_CLASSES[(cp - FIRST_LETTER) as usize])
    } else {
        None
    }
}

/// Consonant letters usable as onsets (the block minus the vowel letters ฤ, ฦ).
pub fn is_consonant(c: char) -> bool {
    consonant_class(c).is_some() && c != 'ฤ' && c != 'ฦ'
}

/// Low-class sonorants that take a silent ห to behave as high class.
pub fn is_low_sonorant(c: char) -> bool {
    matches!(c, 'ง' | 'ญ' | 'น' | 'ม' | 'ย' | 'ร' | 'ล' | 'ว')
}

/// Letters whose onset is a glottalised mid consonant (the lower mid row of the box).
pub fn is_glottal_mid(c: char) -> bool {
    matches!(c, 'บ' | 'ด' | 'อ' | 'ฎ')
}

/// Consonant letters that can close a syllable in writing.
pub fn is_coda_letter(c: char) -> bool {
    is_consonant(c) && !matches!(c, 'อ' | 'ห' | 'ฮ' | 'ฉ' | 'ผ' | 'ฝ' | 'ฃ' | 'ฅ')
}

/// Coda letters that close a syllable with an unreleased stop.
pub fn is_stop_coda(c: char) -> bool {
    matches!(
        c,
        'ก' | 'ข'
            | 'ค'
            | 'ฆ'
            | 'จ'
            | 'ช'
            | 'ซ'
            | 'ฌ'
            | 'ฎ'
            | 'ฏ'
            | 'ฐ'
            | 'ฑ'
            | 'ฒ'
            | 'ด'
            | 'ต'
            | 'ถ'
            | 'ท'
            | 'ธ'
            | 'ศ'
            | 'ษ'
            | 'ส'
            | 'บ'
            | 'ป'
            | 'พ'
            | 'ฟ'
            | 'ภ'
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClusterKind {
    True,
    False,
}

/// Kind of a two-letter onset cluster, `None` if the pair is not a cluster.
pub fn cluster_kind(first: char, second: char) -> Option<ClusterKind> {
    match (first, second) {
        ('ก' | 'ข' | 'ค' | 'ป' | 'พ', 'ร' | 'ล') => Some(ClusterKind::True),
        ('ก' | 'ข' | 'ค', 'ว') => Some(ClusterKind::True),
        ('ผ' | 'บ' | 'ฟ', 'ล') => Some(ClusterKind::True),
        ('ต' | 'บ' | 'ด' | 'ฟ', 'ร') => Some(ClusterKind::True),
        ('ท' | 'จ' | 'ซ' | 'ศ' | 'ส', 'ร') => Some(ClusterKind::False),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Vowel patterns
// ---------------------------------------------------------------------------

/// Placement of vowel signs around the onset block: `pre` before it, `mid`
/// directly after it (above/below signs), `post` after the tone mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Form {
    pub pre: &'static str,
    pub mid: &'static str,
    pub post: &'static str,
}

const fn form(pre: &'static str, mid: &'static str, post: &'static str) -> Form {
    Form { pre, mid, post }
}

#[derive(Debug)]
pub struct VowelPattern {
    /// Conventional name with อ as the onset placeholder, e.g. `"เอือ"`.
    pub name: &'static str,
    pub length: VowelLength,
    pub open: Option<Form>,
    pub closed: Option<Form>,
    /// The vowel sign itself ends in a sonorant (อำ, ไอ, ใอ, เอา).
    pub inherent_coda: bool,
}

/// Index into the vowel-pattern table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VowelId(u8);

impl Serialize for VowelId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for VowelId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        VowelId::by_name(&name).ok_or_else(|| serde::de::Error::custom(format!("unknown vowel {name}")))
    }
}

const SHORT: VowelLength = VowelLength::Short;
const LONG: VowelLength = VowelLength::Long;

static VOWELS: [VowelPattern; 28] = [
    VowelPattern { name: "อะ", length: SHORT, open: Some(form("", "", "ะ")), closed: Some(form("", "ั", "")), inherent_coda: false },
    VowelPattern { name: "อา", length: LONG, open: Some(form("", "", "า")), closed: Some(form("", "", "า")), inherent_coda: false },
    VowelPattern { name: "อิ", length: SHORT, open: Some(form("", "ิ", "")), closed: Some(form("", "ิ", "")), inherent_coda: false },
    VowelPattern { name: "อี", length: LONG, open: Some(form("", "ี", "")), closed: Some(form("", "ี", "")), inherent_coda: false },
    VowelPattern { name: "อึ", length: SHORT, open: Some(form("", "ึ", "")), closed: Some(form("", "ึ", "")), inherent_coda: false },
    VowelPattern { name: "อือ", length: LONG, open: Some(form("", "ื", "อ")), closed: Some(form("", "ื", "")), inherent_coda: false },
    VowelPattern { name: "อุ", length: SHORT, open: Some(form("", "ุ", "")), closed: Some(form("", "ุ", "")), inherent_coda: false },
    VowelPattern { name: "อู", length: LONG, open: Some(form("", "ู", "")), closed: Some(form("", "ู", "")), inherent_coda: false },
    VowelPattern { name: "เอะ", length: SHORT, open: Some(form("เ", "", "ะ")), closed: Some(form("เ", "็", "")), inherent_coda: false },
    VowelPattern { name: "เอ", length: LONG, open: Some(form("เ", "", "")), closed: Some(form("เ", "", "")), inherent_coda: false },
    VowelPattern { name: "แอะ", length: SHORT, open: Some(form("แ", "", "ะ")), closed: Some(form("แ", "็", "")), inherent_coda: false },
    VowelPattern { name: "แอ", length: LONG, open: Some(form("แ", "", "")), closed: Some(form("แ", "", "")), inherent_coda: false },
    VowelPattern { name: "โอะ", length: SHORT, open: Some(form("โ", "", "ะ")), closed: Some(form("", "", "")), inherent_coda: false },
    VowelPattern { name: "โอ", length: LONG, open: Some(form("โ", "", "")), closed: Some(form("โ", "", "")), inherent_coda: false },
    VowelPattern { name: "เอาะ", length: SHORT, open: Some(form("เ", "", "าะ")), closed: Some(form("", "็", "อ")), inherent_coda: false },
    VowelPattern { name: "ออ", length: LONG, open: Some(form("", "", "อ")), closed: Some(form("", "", "อ")), inherent_coda: false },
    VowelPattern { name: "เออะ", length: SHORT, open: Some(form("เ", "", "อะ")), closed: None, inherent_coda: false },
    VowelPattern { name: "เออ", length: LONG, open: Some(form("เ", "", "อ")), closed: Some(form("เ", "ิ", "")), inherent_coda: false },
    VowelPattern { name: "เอียะ", length: SHORT, open: Some(form("เ", "ี", "ยะ")), closed: None, inherent_coda: false },
    VowelPattern { name: "เอีย", length: LONG, open: Some(form("เ", "ี", "ย")), closed: Some(form("เ", "ี", "ย")), inherent_coda: false },
    VowelPattern { name: "เอือะ", length: SHORT, open: Some(form("เ", "ื", "อะ")), closed: None, inherent_coda: false },
    VowelPattern { name: "เอือ", length: LONG, open: Some(form("เ", "ื", "อ")), closed: Some(form("เ", "ื", "อ")), inherent_coda: false },
    VowelPattern { name: "อัวะ", length: SHORT, open: Some(form("", "ั", "วะ")), closed: None, inherent_coda: false },
    VowelPattern { name: "อัว", length: LONG, open: Some(form("", "ั", "ว")), closed: Some(form("", "", "ว")), inherent_coda: false },
    VowelPattern { name: "อำ", length: SHORT, open: Some(form("", "", "ำ")), closed: None, inherent_coda: true },
    VowelPattern { name: "ไอ", length: SHORT, open: Some(form("ไ", "", "")), closed: None, inherent_coda: true },
    VowelPattern { name: "ใอ", length: SHORT, open: Some(form("ใ", "", "")), closed: None, inherent_coda: true },
    VowelPattern { name: "เอา", length: SHORT, open: Some(form("เ", "", "า")), closed: None, inherent_coda: true },
];

// Closed form of เออ before ย drops the sara-i: เลย, เกย.
const OE_BEFORE_YO: Form = form("เ", "", "");
// The non-standard spelling of อัว before a coda that keeps mai han-akat.
const UNREDUCED_UA: Form = form("", "ั", "ว");

impl VowelId {
    pub fn all() -> impl Iterator<Item = VowelId> {
        (0..VOWELS.len() as u8).map(VowelId)
    }

    pub fn by_name(name: &str) -> Option<VowelId> {
        static INDEX: OnceLock<HashMap<&'static str, VowelId>> = OnceLock::new();
        INDEX
            .get_or_init(|| VowelId::all().map(|v| (v.name(), v)).collect())
            .get(name)
            .copied()
    }

    pub fn pattern(self) -> &'static VowelPattern {
        &VOWELS[self.0 as usize]
    }

    pub fn name(self) -> &'static str {
        self.pattern().name
    }

    pub fn length(self) -> VowelLength {
        self.pattern().length
    }

    /// The pattern with the same quality and the opposite length, if one exists.
    pub fn length_counterpart(self) -> Option<VowelId> {
        let partner = match self.name() {
            "อะ" => "อา",
            "อา" => "อะ",
            "อิ" => "อี",
            "อี" => "อิ",
            "อึ" => "อือ",
            "อือ" => "อึ",
            "อุ" => "อู",
            "อู" => "อุ",
            "เอะ" => "เอ",
            "เอ" => "เอะ",
            "แอะ" => "แอ",
            "แอ" => "แอะ",
            "โอะ" => "โอ",
            "โอ" => "โอะ",
            "เอาะ" => "ออ",
            "ออ" => "เอาะ",
            "เออะ" => "เออ",
            "เออ" => "เออะ",
            "เอียะ" => "เอีย",
            "เอีย" => "เอียะ",
            "เอือะ" => "เอือ",
            "เอือ" => "เอือะ",
            "อัวะ" => "อัว",
            "อัว" => "อัวะ",
            _ => return None,
        };
        VowelId::by_name(partner)
    }

    /// Spelling form used with the given coda letter (`None` = open syllable).
    pub fn form_for(self, coda: Option<char>) -> Option<Form> {
        let p = self.pattern();
        match coda {
            None => p.open,
            Some(c) => {
                // อะ before ว is always read as อัว; เอ before ย as เออ.
                if (p.name == "อะ" && c == 'ว') || (p.name == "เอ" && c == 'ย') {
                    return None;
                }
                if p.name == "เออ" && c == 'ย' {
                    return Some(OE_BEFORE_YO);
                }
                p.closed
            }
        }
    }
}

impl fmt::Display for VowelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VowelId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VowelId::by_name(s).ok_or_else(|| format!("unknown vowel pattern {s:?}"))
    }
}

// ---------------------------------------------------------------------------
// Syllables
// ---------------------------------------------------------------------------

/// Spellings that parse but break a Central Thai orthographic convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash, Serialize, Deserialize)]
pub struct Irregularities {
    /// Mai taikhu written together with a tone mark.
    pub taikhu_with_mark: bool,
    /// อัว written with mai han-akat before a coda.
    pub unreduced_vowel: bool,
}

impl Irregularities {
    pub fn any(&self) -> bool {
        self.taikhu_with_mark || self.unreduced_vowel
    }

    fn count(&self) -> usize {
        self.taikhu_with_mark as usize + self.unreduced_vowel as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrthoSyllable {
    pub onset: char,
    pub cluster: Option<char>,
    pub leading_ho: bool,
    pub vowel: VowelId,
    pub vowel_length: VowelLength,
    pub coda: Option<char>,
    pub tone_mark: ToneMark,
    /// Onset cluster whose second letter is not pronounced as written (ทร, สร, ...).
    pub false_cluster: bool,
    pub irregular: Irregularities,
    pub source_text: String,
}

impl OrthoSyllable {
    /// Builds a syllable from parts; `source_text` is filled by rendering.
    pub fn build(
        onset: char,
        cluster: Option<char>,
        leading_ho: bool,
        vowel: VowelId,
        coda: Option<char>,
        tone_mark: ToneMark,
    ) -> Result<OrthoSyllable, ScriptError> {
        let mut s = OrthoSyllable {
            onset,
            cluster,
            leading_ho,
            vowel,
            vowel_length: vowel.length(),
            coda,
            tone_mark,
            false_cluster: cluster
                .map(|c2| cluster_kind(onset, c2) == Some(ClusterKind::False))
                .unwrap_or(false),
            irregular: Irregularities::default(),
            source_text: String::new(),
        };
        s.source_text = render_syllable(&s)?;
        Ok(s)
    }

    pub fn class(&self) -> ConsonantClass {
        effective_class(self)
    }

    pub fn kind(&self) -> SyllableKind {
        syllable_kind(self)
    }
}

impl fmt::Display for OrthoSyllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source_text)
    }
}

pub fn effective_class(s: &OrthoSyllable) -> ConsonantClass {
    if s.leading_ho {
        ConsonantClass::High
    } else {
        consonant_class(s.onset).expect("onset is a Thai consonant")
    }
}

pub fn syllable_kind(s: &OrthoSyllable) -> SyllableKind {
    match s.coda {
        Some(c) if is_stop_coda(c) => match s.vowel_length {
            VowelLength::Short => SyllableKind::DeadShort,
            VowelLength::Long => SyllableKind::DeadLong,
        },
        Some(_) => SyllableKind::Live,
        None if s.vowel.pattern().inherent_coda => SyllableKind::Live,
        None => match s.vowel_length {
            VowelLength::Short => SyllableKind::DeadShort,
            VowelLength::Long => SyllableKind::Live,
        },
    }
}

/// NFC-normalises and checks that every character is in the Thai block.
pub fn normalize(text: &str) -> Result<String, ScriptError> {
    // NFC leaves sara am decomposed (nikhahit + sara aa); fold it explicitly.
    let s: String = text.trim().nfc().collect::<String>().replace("\u{0E4D}\u{0E32}", "\u{0E33}");
    if let Some(ch) = s.chars().find(|&c| !('\u{0E00}'..='\u{0E7F}').contains(&c)) {
        return Err(ScriptError::NonThai { text: s, ch });
    }
    Ok(s)
}

pub fn parse_syllable(text: &str) -> Result<OrthoSyllable, ScriptError> {
    let s = normalize(text)?;
    if let Some(best) = best_parse(&s) {
        return Ok(best);
    }
    if segmentable(&s) {
        Err(ScriptError::MultiSyllable(s))
    } else {
        Err(ScriptError::NotASyllable(s))
    }
}

fn best_parse(s: &str) -> Option<OrthoSyllable> {
    let chars: Vec<char> = s.chars().collect();
    let mut found = parse_candidates(&chars);
    // Fewest irregularities first, then table order; both are deterministic.
    found.sort_by_key(|(order, syl)| (syl.irregular.count(), *order));
    found.into_iter().next().map(|(_, mut syl)| {
        syl.source_text = s.to_string();
        syl
    })
}

fn segmentable(s: &str) -> bool {
    let chars: Vec<char> = s.chars().collect();
    let n = chars.len();
    // reachable[i]: chars[..i] splits into at least one whole syllable each
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    let mut pieces = vec![0usize; n + 1];
    for end in 1..=n {
        for start in 0..end {
            if reachable[start] && !parse_candidates(&chars[start..end]).is_empty() {
                reachable[end] = true;
                pieces[end] = pieces[end].max(pieces[start] + 1);
            }
        }
    }
    reachable[n] && pieces[n] >= 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FormKind {
    Open,
    Closed,
    BeforeYo,
    Unreduced,
}

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn eat_str(&mut self, s: &str) -> bool {
        let mut p = self.pos;
        for c in s.chars() {
            if self.chars.get(p) != Some(&c) {
                return false;
            }
            p += 1;
        }
        self.pos = p;
        true
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }
}

#[derive(Clone, Copy)]
struct OnsetBlock {
    onset: char,
    cluster: Option<char>,
    leading_ho: bool,
    len: usize,
}

fn onset_blocks(chars: &[char]) -> Vec<OnsetBlock> {
    let mut out = Vec::new();
    let Some(&first) = chars.first() else {
        return out;
    };
    if !is_consonant(first) {
        return out;
    }
    out.push(OnsetBlock { onset: first, cluster: None, leading_ho: false, len: 1 });
    if let Some(&second) = chars.get(1) {
        if first == 'ห' && is_low_sonorant(second) {
            out.push(OnsetBlock { onset: second, cluster: None, leading_ho: true, len: 2 });
        }
        if cluster_kind(first, second).is_some() {
            out.push(OnsetBlock { onset: first, cluster: Some(second), leading_ho: false, len: 2 });
        }
    }
    out
}

fn parse_candidates(chars: &[char]) -> Vec<(usize, OrthoSyllable)> {
    let mut out = Vec::new();
    for (order, vowel) in VowelId::all().enumerate() {
        let p = vowel.pattern();
        let mut forms: Vec<(Form, FormKind, Irregularities)> = Vec::new();
        if let Some(f) = p.open {
            forms.push((f, FormKind::Open, Irregularities::default()));
        }
        if let Some(f) = p.closed {
            forms.push((f, FormKind::Closed, Irregularities::default()));
        }
        if p.name == "เออ" {
            forms.push((OE_BEFORE_YO, FormKind::BeforeYo, Irregularities::default()));
        }
        if p.name == "อัว" {
            let irregular = Irregularities { unreduced_vowel: true, ..Default::default() };
            forms.push((UNREDUCED_UA, FormKind::Unreduced, irregular));
        }
        for (f, kind, irregular) in forms {
            let mut cur = Cursor { chars, pos: 0 };
            if !cur.eat_str(f.pre) {
                continue;
            }
            for block in onset_blocks(&chars[cur.pos..]) {
                if let Some(syl) = match_rest(chars, cur.pos + block.len, block, vowel, f, kind, irregular) {
                    out.push((order, syl));
                }
            }
        }
    }
    out
}

fn match_rest(
    chars: &[char],
    start: usize,
    block: OnsetBlock,
    vowel: VowelId,
    f: Form,
    kind: FormKind,
    mut irregular: Irregularities,
) -> Option<OrthoSyllable> {
    let mut cur = Cursor { chars, pos: start };
    if !cur.eat_str(f.mid) {
        return None;
    }
    let mut tone_mark = ToneMark::None;
    if let Some(m) = cur.peek().and_then(ToneMark::from_char) {
        tone_mark = m;
        cur.pos += 1;
    }
    if f.mid == "็" && tone_mark != ToneMark::None {
        irregular.taikhu_with_mark = true;
    }
    if !cur.eat_str(f.post) {
        return None;
    }
    let rest = &chars[cur.pos..];
    let coda = match (kind, rest) {
        (FormKind::Open, []) => None,
        (FormKind::Open, _) => return None,
        (_, [c]) if is_coda_letter(*c) => Some(*c),
        _ => return None,
    };
    match kind {
        FormKind::BeforeYo if coda != Some('ย') => return None,
        FormKind::Closed | FormKind::Open if vowel.form_for(coda) != Some(f) => return None,
        _ => {}
    }
    // The bare closed form after ว is อัว (กวน).
    if kind == FormKind::Closed && f == form("", "", "") && block.cluster == Some('ว') {
        return None;
    }
    let false_cluster = block
        .cluster
        .map(|c2| cluster_kind(block.onset, c2) == Some(ClusterKind::False))
        .unwrap_or(false);
    Some(OrthoSyllable {
        onset: block.onset,
        cluster: block.cluster,
        leading_ho: block.leading_ho,
        vowel,
        vowel_length: vowel.length(),
        coda,
        tone_mark,
        false_cluster,
        irregular,
        source_text: String::new(),
    })
}

/// Canonical spelling of a syllable. Irregular spellings are never produced.
pub fn render_syllable(s: &OrthoSyllable) -> Result<String, ScriptError> {
    let bad = |why: &str| ScriptError::Unrenderable(format!("{why} ({})", s.vowel));
    if s.irregular.any() {
        return Err(bad("irregular spelling"));
    }
    if !is_consonant(s.onset) {
        return Err(bad("onset is not a consonant letter"));
    }
    if s.leading_ho && (!is_low_sonorant(s.onset) || s.cluster.is_some()) {
        return Err(bad("silent ho needs a bare low sonorant"));
    }
    if let Some(c2) = s.cluster {
        if cluster_kind(s.onset, c2).is_none() {
            return Err(bad("not an onset cluster"));
        }
    }
    if s.vowel_length != s.vowel.length() {
        return Err(bad("vowel length disagrees with the pattern"));
    }
    if let Some(c) = s.coda {
        if !is_coda_letter(c) {
            return Err(bad("not a coda letter"));
        }
    }
    let f = s.vowel.form_for(s.coda).ok_or_else(|| bad("no spelling for this vowel and coda"))?;
    if f == form("", "", "") && s.cluster == Some('ว') {
        return Err(bad("ว cluster with the bare closed form reads as อัว"));
    }
    let mut out = String::new();
    out.push_str(f.pre);
    if s.leading_ho {
        out.push('ห');
    }
    out.push(s.onset);
    if let Some(c2) = s.cluster {
        out.push(c2);
    }
    // Mai taikhu gives way to a tone mark.
    if !(f.mid == "็" && s.tone_mark != ToneMark::None) {
        out.push_str(f.mid);
    }
    if let Some(m) = s.tone_mark.as_char() {
        out.push(m);
    }
    out.push_str(f.post);
    if let Some(c) = s.coda {
        out.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> OrthoSyllable {
        parse_syllable(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn table_examples() {
        let s = p("ขา");
        assert_eq!((s.onset, s.vowel.name(), s.coda, s.tone_mark), ('ข', "อา", None, ToneMark::None));
        assert_eq!(s.kind(), SyllableKind::Live);
        assert_eq!(s.class(), ConsonantClass::High);

        let s = p("มด");
        assert_eq!((s.vowel.name(), s.coda, s.vowel_length), ("โอะ", Some('ด'), VowelLength::Short));
        assert_eq!(s.kind(), SyllableKind::DeadShort);

        let s = p("หมา");
        assert!(s.leading_ho);
        assert_eq!(s.onset, 'ม');
        assert_eq!(s.class(), ConsonantClass::High);
    }

    #[test]
    fn classes_and_kinds() {
        assert_eq!(p("ปลา").class(), ConsonantClass::Mid);
        assert_eq!(p("หนา").class(), ConsonantClass::High);
        assert_eq!(p("งู").class(), ConsonantClass::Low);
        assert_eq!(p("หมาก").kind(), SyllableKind::DeadLong);
        assert_eq!(p("ผัก").kind(), SyllableKind::DeadShort);
        assert_eq!(p("ดาว").kind(), SyllableKind::Live);
        assert_eq!(p("เกาะ").kind(), SyllableKind::DeadShort);
        assert_eq!(p("ค้ำ").kind(), SyllableKind::Live);
    }

    #[test]
    fn reduced_and_cluster_readings() {
        let s = p("ซ้วน");
        assert_eq!((s.onset, s.cluster, s.vowel.name(), s.coda), ('ซ', None, "อัว", Some('น')));
        let s = p("ขวิด");
        assert_eq!((s.onset, s.cluster, s.vowel.name()), ('ข', Some('ว'), "อิ"));
        let s = p("ขวด");
        assert_eq!((s.cluster, s.vowel.name()), (None, "อัว"));
        let s = p("เลย");
        assert_eq!((s.vowel.name(), s.coda), ("เออ", Some('ย')));
        let s = p("งัว");
        assert_eq!((s.vowel.name(), s.coda), ("อัว", None));
        assert!(p("ทราย").false_cluster);
        assert!(!p("กราบ").false_cluster);
    }

    #[test]
    fn irregular_spellings_parse_but_do_not_render() {
        let s = p("ซั้วน");
        assert!(s.irregular.unreduced_vowel);
        assert!(render_syllable(&s).is_err());
        let s = p("เต็่ง");
        assert!(s.irregular.taikhu_with_mark);
        assert!(render_syllable(&s).is_err());
    }

    #[test]
    fn render_examples() {
        assert_eq!(render_syllable(&p("ข้อย")).unwrap(), "ข้อย");
        let ua = VowelId::by_name("อัว").unwrap();
        let s = OrthoSyllable::build('ซ', None, false, ua, Some('น'), ToneMark::MaiTho).unwrap();
        assert_eq!(s.source_text, "ซ้วน");
        let aa = VowelId::by_name("อา").unwrap();
        let s = OrthoSyllable::build('ม', None, true, aa, None, ToneMark::None).unwrap();
        assert_eq!(s.source_text, "หมา");
        let e = VowelId::by_name("เอะ").unwrap();
        let s = OrthoSyllable::build('ต', None, false, e, Some('ง'), ToneMark::MaiEk).unwrap();
        assert_eq!(s.source_text, "เต่ง");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_syllable("กาab"), Err(ScriptError::NonThai { ch: 'a', .. })));
        assert!(matches!(parse_syllable("สามารถ"), Err(ScriptError::MultiSyllable(_))));
        assert!(matches!(parse_syllable("ขาขา"), Err(ScriptError::MultiSyllable(_))));
        assert!(matches!(parse_syllable("ะา"), Err(ScriptError::NotASyllable(_))));
        assert!(matches!(parse_syllable(""), Err(ScriptError::NotASyllable(_))));
        let s = OrthoSyllable {
            leading_ho: true,
            ..p("กา")
        };
        assert!(matches!(render_syllable(&s), Err(ScriptError::Unrenderable(_))));
    }

    #[test]
    fn decomposed_input_is_normalized() {
        // sara am typed as nikhahit + sara aa
        assert_eq!(p("ค้\u{0E4D}\u{0E32}").source_text, "ค้ำ");
        assert_eq!(p(" ขา ").source_text, "ขา");
    }

    #[test]
    fn every_letter_in_block_has_a_class() {
        for cp in FIRST_LETTER..=LAST_LETTER {
            let c = char::from_u32(cp).unwrap();
            assert!(consonant_class(c).is_some(), "{c}");
        }
        assert_eq!(consonant_class('a'), None);
        assert_eq!(consonant_class('ะ'), None);
    }
}
