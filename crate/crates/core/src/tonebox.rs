//! Gedney tone boxes.
//!
//! A box maps each of the 20 cells (4 onset rows × 5 mark/syllable-type
//! columns) to a tone category. Boxes are plain data: the Central Thai and
//! Isan six-tone boxes ship as TSV and new dialect boxes load the same way.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::phoneme::{Consonant, IsanTone};
use crate::script::{
    self, is_glottal_mid, ConsonantClass, OrthoSyllable, ScriptError, SyllableKind, ToneMark, VowelId,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToneError {
    #[error("tone mark {0} on a dead syllable")]
    DeadWithMark(ToneMark),
    #[error("tone mark {0} has no column in this box")]
    MarkOutOfBox(ToneMark),
    #[error("{mark} is only written on mid-class onsets, not {class}")]
    IllegalMark { mark: ToneMark, class: ConsonantClass },
    #[error("no spelling for onset /{0}/")]
    UnknownOnset(String),
    #[error("tone box is missing {} cell(s): {}", .0.len(), .0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))]
    IncompleteBox(Vec<Cell>),
    #[error("tone box line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Script(#[from] ScriptError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Row {
    HighRow,
    MidPlainRow,
    MidGlottalRow,
    LowRow,
}

impl Row {
    pub const ALL: [Row; 4] = [Row::HighRow, Row::MidPlainRow, Row::MidGlottalRow, Row::LowRow];

    pub fn id(self) -> &'static str {
        match self {
            Row::HighRow => "high",
            Row::MidPlainRow => "mid-plain",
            Row::MidGlottalRow => "mid-glottal",
            Row::LowRow => "low",
        }
    }

    pub fn for_class(class: ConsonantClass) -> Row {
        match class {
            ConsonantClass::High => Row::HighRow,
            ConsonantClass::Mid => Row::MidPlainRow,
            ConsonantClass::Low => Row::LowRow,
        }
    }

    /// Row for a syllable; mid-class บ ด อ ฎ go to the glottalised mid row.
    pub fn for_syllable(s: &OrthoSyllable) -> Row {
        let class = script::effective_class(s);
        if class == ConsonantClass::Mid && is_glottal_mid(s.onset) {
            Row::MidGlottalRow
        } else {
            Row::for_class(class)
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for Row {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Row::ALL.into_iter().find(|r| r.id() == s).ok_or_else(|| format!("unknown row {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Column {
    NoMark,
    MaiEk,
    MaiTho,
    DeadLong,
    DeadShort,
}

impl Column {
    pub const ALL: [Column; 5] = [Column::NoMark, Column::MaiEk, Column::MaiTho, Column::DeadLong, Column::DeadShort];

    pub fn id(self) -> &'static str {
        match self {
            Column::NoMark => "none",
            Column::MaiEk => "mai-ek",
            Column::MaiTho => "mai-tho",
            Column::DeadLong => "dead-long",
            Column::DeadShort => "dead-short",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for Column {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Column::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| format!("unknown column {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: Row,
    pub column: Column,
}

impl Cell {
    pub fn all() -> impl Iterator<Item = Cell> {
        Row::ALL.into_iter().flat_map(|row| Column::ALL.into_iter().map(move |column| Cell { row, column }))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.row.id(), self.column.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ThaiTone {
    Saman,
    Ek,
    Tho,
    Tri,
    Chattawa,
}

impl ThaiTone {
    pub fn name(self) -> &'static str {
        match self {
            ThaiTone::Saman => "Saman",
            ThaiTone::Ek => "Ek",
            ThaiTone::Tho => "Tho",
            ThaiTone::Tri => "Tri",
            ThaiTone::Chattawa => "Chattawa",
        }
    }
}

/// The label in a tone-box cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ToneCategory {
    Isan(IsanTone),
    Thai(ThaiTone),
    Other(String),
}

impl fmt::Display for ToneCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToneCategory::Isan(t) => write!(f, "{t}"),
            ToneCategory::Thai(t) => f.write_str(t.name()),
            ToneCategory::Other(s) => f.write_str(s),
        }
    }
}

impl FromStr for ToneCategory {
    type Err = std::convert::Infallible;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(t) = s.parse::<IsanTone>() {
            return Ok(ToneCategory::Isan(t));
        }
        let thai = [ThaiTone::Saman, ThaiTone::Ek, ThaiTone::Tho, ThaiTone::Tri, ThaiTone::Chattawa];
        Ok(match thai.into_iter().find(|t| t.name() == s) {
            Some(t) => ToneCategory::Thai(t),
            None => ToneCategory::Other(s.to_string()),
        })
    }
}

impl From<IsanTone> for ToneCategory {
    fn from(t: IsanTone) -> Self {
        ToneCategory::Isan(t)
    }
}

/// What to do with a tone mark on a dead syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeadMarkPolicy {
    Reject,
    /// Look the mark up in its live column (Central Thai ค่ะ, จ๊ะ).
    MarkColumn,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToneBox {
    pub name: String,
    cells: [[ToneCategory; 5]; 4],
    contours: BTreeMap<ToneCategory, String>,
    pub dead_marks: DeadMarkPolicy,
}

/// Reads `row<TAB>column<TAB>label[<TAB>contour]` lines; `#` starts a comment.
pub fn read_cells(tsv: &str) -> Result<BTreeMap<Cell, (String, Option<String>)>, ToneError> {
    let mut out = BTreeMap::new();
    for (i, raw) in tsv.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim_end_matches('\r');
        if text.trim().is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.split('\t').collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(ToneError::Format { line, message: format!("expected 3 or 4 fields, got {}", fields.len()) });
        }
        let row = fields[0].trim().parse::<Row>().map_err(|message| ToneError::Format { line, message })?;
        let column = fields[1].trim().parse::<Column>().map_err(|message| ToneError::Format { line, message })?;
        let label = fields[2].trim();
        if label.is_empty() {
            return Err(ToneError::Format { line, message: "empty label".into() });
        }
        let contour = fields.get(3).map(|c| c.trim().to_string()).filter(|c| !c.is_empty());
        if out.insert(Cell { row, column }, (label.to_string(), contour)).is_some() {
            return Err(ToneError::Format { line, message: format!("duplicate cell {row:?}/{column:?}") });
        }
    }
    Ok(out)
}

impl ToneBox {
    pub fn from_tsv(name: &str, tsv: &str) -> Result<ToneBox, ToneError> {
        let cells = read_cells(tsv)?;
        let missing: Vec<Cell> = Cell::all().filter(|c| !cells.contains_key(c)).collect();
        if !missing.is_empty() {
            return Err(ToneError::IncompleteBox(missing));
        }
        let mut contours = BTreeMap::new();
        let grid: [[ToneCategory; 5]; 4] = Row::ALL.map(|row| {
            Column::ALL.map(|column| {
                let (label, contour) = &cells[&Cell { row, column }];
                let cat: ToneCategory = label.parse().unwrap();
                if let Some(c) = contour {
                    contours.insert(cat.clone(), c.clone());
                }
                cat
            })
        });
        Ok(ToneBox { name: name.to_string(), cells: grid, contours, dead_marks: DeadMarkPolicy::Reject })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for cell in Cell::all() {
            let cat = self.cell(cell);
            out.push_str(&format!("{}\t{}\t{}", cell.row.id(), cell.column.id(), cat));
            if let Some(c) = self.contours.get(cat) {
                out.push('\t');
                out.push_str(c);
            }
            out.push('\n');
        }
        out
    }

    pub fn with_dead_marks(mut self, policy: DeadMarkPolicy) -> ToneBox {
        self.dead_marks = policy;
        self
    }

    pub fn cell(&self, cell: Cell) -> &ToneCategory {
        &self.cells[cell.row.index()][cell.column.index()]
    }

    pub fn contour(&self, cat: &ToneCategory) -> Option<&str> {
        self.contours.get(cat).map(String::as_str)
    }

    /// Distinct labels in the box.
    pub fn categories(&self) -> Vec<&ToneCategory> {
        let mut seen: Vec<&ToneCategory> = Vec::new();
        for cell in Cell::all() {
            let c = self.cell(cell);
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        seen
    }

    pub fn cell_map(&self) -> BTreeMap<Cell, ToneCategory> {
        Cell::all().map(|c| (c, self.cell(c).clone())).collect()
    }

    fn column(&self, mark: ToneMark, kind: SyllableKind) -> Result<Column, ToneError> {
        let mark_column = |m: ToneMark| match m {
            ToneMark::None => Ok(Column::NoMark),
            ToneMark::MaiEk => Ok(Column::MaiEk),
            ToneMark::MaiTho => Ok(Column::MaiTho),
            other => Err(ToneError::MarkOutOfBox(other)),
        };
        match (kind, mark) {
            (SyllableKind::Live, m) => mark_column(m),
            (SyllableKind::DeadLong, ToneMark::None) => Ok(Column::DeadLong),
            (SyllableKind::DeadShort, ToneMark::None) => Ok(Column::DeadShort),
            (_, m) => match self.dead_marks {
                DeadMarkPolicy::Reject => Err(ToneError::DeadWithMark(m)),
                DeadMarkPolicy::MarkColumn => mark_column(m),
            },
        }
    }

    pub fn lookup(&self, row: Row, mark: ToneMark, kind: SyllableKind) -> Result<&ToneCategory, ToneError> {
        let column = self.column(mark, kind)?;
        Ok(self.cell(Cell { row, column }))
    }

    pub fn tone_of(&self, s: &OrthoSyllable) -> Result<&ToneCategory, ToneError> {
        self.lookup(Row::for_syllable(s), s.tone_mark, script::syllable_kind(s))
    }
}

static ISAN6: OnceLock<ToneBox> = OnceLock::new();
static THAI5: OnceLock<ToneBox> = OnceLock::new();

pub const ISAN6_TSV: &str = include_str!("../data/isan6.tsv");
pub const THAI5_TSV: &str = include_str!("../data/thai5.tsv");

/// The shipped Isan six-tone box.
pub fn isan6() -> &'static ToneBox {
    ISAN6.get_or_init(|| ToneBox::from_tsv("isan6", ISAN6_TSV).expect("bundled isan6.tsv is valid"))
}

/// The shipped Central Thai five-tone box.
pub fn thai5() -> &'static ToneBox {
    THAI5.get_or_init(|| {
        ToneBox::from_tsv("thai5", THAI5_TSV)
            .expect("bundled thai5.tsv is valid")
            .with_dead_marks(DeadMarkPolicy::MarkColumn)
    })
}

pub fn compute_tone(
    tone_box: &ToneBox,
    class: ConsonantClass,
    mark: ToneMark,
    kind: SyllableKind,
) -> Result<ToneCategory, ToneError> {
    tone_box.lookup(Row::for_class(class), mark, kind).cloned()
}

/// Central Thai tone; mai tri and mai chattawa are read directly on mid-class onsets.
pub fn compute_thai_tone(s: &OrthoSyllable) -> Result<ToneCategory, ToneError> {
    let class = script::effective_class(s);
    match s.tone_mark {
        ToneMark::MaiTri | ToneMark::MaiChattawa if class != ConsonantClass::Mid => {
            Err(ToneError::IllegalMark { mark: s.tone_mark, class })
        }
        ToneMark::MaiTri => Ok(ToneCategory::Thai(ThaiTone::Tri)),
        ToneMark::MaiChattawa => Ok(ToneCategory::Thai(ThaiTone::Chattawa)),
        _ => thai5().tone_of(s).cloned(),
    }
}

pub fn compute_isan_tone(s: &OrthoSyllable) -> Result<IsanTone, ToneError> {
    match isan6().tone_of(s)? {
        ToneCategory::Isan(t) => Ok(*t),
        other => unreachable!("isan6 box holds only T1..T6, found {other}"),
    }
}

// ---------------------------------------------------------------------------
// Inverse box
// ---------------------------------------------------------------------------

/// One way of writing an onset phoneme: the letter, a cluster letter, or a silent ห.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OnsetSpelling {
    pub letter: char,
    pub cluster: Option<char>,
    pub leading_ho: bool,
}

const fn letter(c: char) -> OnsetSpelling {
    OnsetSpelling { letter: c, cluster: None, leading_ho: false }
}

const fn with_ho(c: char) -> OnsetSpelling {
    OnsetSpelling { letter: c, cluster: None, leading_ho: true }
}

/// Representative spellings for an onset, high class first.
pub fn onset_spellings(onset: &[Consonant]) -> Result<Vec<OnsetSpelling>, ToneError> {
    use Consonant::*;
    let spellings = match onset {
        [P] => vec![letter('ป')],
        [Ph] => vec![letter('ผ'), letter('พ')],
        [B] => vec![letter('บ')],
        [T] => vec![letter('ต')],
        [Th] => vec![letter('ถ'), letter('ท')],
        [D] => vec![letter('ด')],
        [Tc] => vec![letter('จ')],
        [Tch] => vec![letter('ฉ'), letter('ช')],
        [K] => vec![letter('ก')],
        [Kh] => vec![letter('ข'), letter('ค')],
        [Glottal] => vec![letter('อ')],
        [M] => vec![with_ho('ม'), letter('ม')],
        [N] => vec![with_ho('น'), letter('น')],
        [Ny] => vec![with_ho('ญ'), letter('ญ')],
        [Ng] => vec![with_ho('ง'), letter('ง')],
        [F] => vec![letter('ฝ'), letter('ฟ')],
        [S] => vec![letter('ส'), letter('ซ')],
        [H] => vec![letter('ห'), letter('ฮ')],
        [L] => vec![with_ho('ล'), letter('ล')],
        [W] => vec![with_ho('ว'), letter('ว')],
        [J] => vec![with_ho('ย'), letter('ย')],
        [Kh, W] => vec![
            OnsetSpelling { letter: 'ข', cluster: Some('ว'), leading_ho: false },
            OnsetSpelling { letter: 'ค', cluster: Some('ว'), leading_ho: false },
        ],
        [K, W] => vec![OnsetSpelling { letter: 'ก', cluster: Some('ว'), leading_ho: false }],
        _ => {
            let text: Vec<&str> = onset.iter().map(|c| c.symbol()).collect();
            return Err(ToneError::UnknownOnset(text.join(" ")));
        }
    };
    Ok(spellings)
}

/// Orthographic rime: vowel pattern (which fixes length) and optional coda letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rime {
    pub vowel: VowelId,
    pub coda: Option<char>,
}

impl Rime {
    pub fn new(vowel: &str, coda: Option<char>) -> Rime {
        Rime { vowel: VowelId::by_name(vowel).unwrap_or_else(|| panic!("unknown vowel {vowel}")), coda }
    }
}

/// Every renderable (letter, mark) spelling whose Isan tone equals `target`.
pub fn candidate_spellings(onset: &[Consonant], rime: Rime, target: IsanTone) -> Result<Vec<OrthoSyllable>, ToneError> {
    candidate_spellings_in(isan6(), onset, rime, &ToneCategory::Isan(target))
}

pub fn candidate_spellings_in(
    tone_box: &ToneBox,
    onset: &[Consonant],
    rime: Rime,
    target: &ToneCategory,
) -> Result<Vec<OrthoSyllable>, ToneError> {
    let mut out = Vec::new();
    for sp in onset_spellings(onset)? {
        for mark in [ToneMark::None, ToneMark::MaiEk, ToneMark::MaiTho] {
            let Ok(syl) = OrthoSyllable::build(sp.letter, sp.cluster, sp.leading_ho, rime.vowel, rime.coda, mark) else {
                continue;
            };
            match tone_box.tone_of(&syl) {
                Ok(cat) if cat == target => out.push(syl),
                _ => {}
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Dialect classification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DialectClass {
    SixTone,
    NotSixTone,
}

impl fmt::Display for DialectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DialectClass::SixTone => "SixTone",
            DialectClass::NotSixTone => "NotSixTone",
        })
    }
}

/// Canonical form of the partition a labelling induces on the 20 cells:
/// each cell is replaced by the index of the first cell sharing its label.
fn partition<L: Eq + Hash>(cells: &BTreeMap<Cell, L>) -> Result<Vec<usize>, ToneError> {
    let missing: Vec<Cell> = Cell::all().filter(|c| !cells.contains_key(c)).collect();
    if !missing.is_empty() {
        return Err(ToneError::IncompleteBox(missing));
    }
    let mut first_seen: HashMap<&L, usize> = HashMap::new();
    Ok(Cell::all()
        .enumerate()
        .map(|(i, c)| *first_seen.entry(&cells[&c]).or_insert(i))
        .collect())
}

/// SixTone iff the elicited labels group the cells exactly as the Isan box does.
pub fn classify_dialect<L: Eq + Hash>(elicited: &BTreeMap<Cell, L>) -> Result<DialectClass, ToneError> {
    let reference = partition(&isan6().cell_map())?;
    Ok(if partition(elicited)? == reference { DialectClass::SixTone } else { DialectClass::NotSixTone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::parse_syllable;
    use ConsonantClass::*;
    use IsanTone::*;
    use SyllableKind::*;
    use ToneMark::*;

    fn isan(class: ConsonantClass, mark: ToneMark, kind: SyllableKind) -> ToneCategory {
        compute_tone(isan6(), class, mark, kind).unwrap()
    }

    #[test]
    fn isan_cells() {
        assert_eq!(isan(High, None, Live), T1.into());
        assert_eq!(isan(Low, MaiTho, Live), T6.into());
        assert_eq!(isan(Low, None, DeadShort), T4.into());
        assert_eq!(isan(Mid, None, DeadLong), T5.into());
    }

    #[test]
    fn dead_with_mark_and_out_of_box_marks() {
        assert_eq!(compute_tone(isan6(), Low, MaiEk, DeadShort), Err(ToneError::DeadWithMark(MaiEk)));
        assert_eq!(compute_tone(isan6(), Mid, MaiTri, Live), Err(ToneError::MarkOutOfBox(MaiTri)));
        // Central Thai ค่ะ: the mark decides.
        assert_eq!(compute_tone(thai5(), Low, MaiEk, DeadShort), Ok(ToneCategory::Thai(ThaiTone::Tho)));
    }

    #[test]
    fn mai_ek_is_uniform_in_isan() {
        for class in [High, Mid, Low] {
            assert_eq!(isan(class, MaiEk, Live), T4.into());
        }
    }

    #[test]
    fn mid_rows_agree_in_shipped_boxes() {
        for b in [isan6(), thai5()] {
            for column in Column::ALL {
                assert_eq!(
                    b.cell(Cell { row: Row::MidPlainRow, column }),
                    b.cell(Cell { row: Row::MidGlottalRow, column })
                );
            }
        }
    }

    #[test]
    fn thai_tones() {
        let t = |s: &str| compute_thai_tone(&parse_syllable(s).unwrap()).unwrap();
        assert_eq!(t("ค่า"), ToneCategory::Thai(ThaiTone::Tho));
        assert_eq!(t("ขา"), ToneCategory::Thai(ThaiTone::Chattawa));
        assert_eq!(t("ตา"), ToneCategory::Thai(ThaiTone::Saman));
        assert_eq!(t("ตู๊"), ToneCategory::Thai(ThaiTone::Tri));
        assert_eq!(t("ม้า"), ToneCategory::Thai(ThaiTone::Tri));
        assert!(matches!(
            compute_thai_tone(&parse_syllable("ค๊า").unwrap()),
            Err(ToneError::IllegalMark { class: Low, .. })
        ));
        assert_eq!(thai5().contour(&ToneCategory::Thai(ThaiTone::Chattawa)), Some("rising"));
    }

    #[test]
    fn tsv_round_trip_and_errors() {
        let b = ToneBox::from_tsv("x", &isan6().to_tsv()).unwrap();
        assert_eq!(b.cell_map(), isan6().cell_map());
        let short: String = ISAN6_TSV.lines().filter(|l| !l.starts_with("low\tnone")).collect::<Vec<_>>().join("\n");
        match ToneBox::from_tsv("x", &short) {
            Err(ToneError::IncompleteBox(cells)) => {
                assert_eq!(cells, vec![Cell { row: Row::LowRow, column: Column::NoMark }])
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(ToneBox::from_tsv("x", "high\tnone"), Err(ToneError::Format { line: 1, .. })));
        assert!(matches!(ToneBox::from_tsv("x", "top\tnone\tT1"), Err(ToneError::Format { .. })));
    }

    #[test]
    fn inverse_box_paper_case() {
        let rime = Rime::new("ออ", Some('ย'));
        let spell = |t| -> Vec<String> {
            candidate_spellings(&[Consonant::Kh], rime, t).unwrap().into_iter().map(|s| s.source_text).collect()
        };
        assert_eq!(spell(T5), vec!["ข้อย"]);
        assert_eq!(spell(T4), vec!["ข่อย", "ค่อย"]);
        assert!(spell(T2).is_empty());
        assert_eq!(spell(T1), vec!["ขอย"]);
        assert_eq!(spell(T3), vec!["คอย"]);
        assert_eq!(spell(T6), vec!["ค้อย"]);
        assert!(matches!(candidate_spellings(&[Consonant::R], rime, T1), Err(ToneError::UnknownOnset(_))));
    }

    #[test]
    fn dialect_classification() {
        assert_eq!(classify_dialect(&isan6().cell_map()).unwrap(), DialectClass::SixTone);
        assert_eq!(classify_dialect(&thai5().cell_map()).unwrap(), DialectClass::NotSixTone);
        let flat: BTreeMap<Cell, u8> = Cell::all().map(|c| (c, 0)).collect();
        assert_eq!(classify_dialect(&flat).unwrap(), DialectClass::NotSixTone);
        let mut partial = isan6().cell_map();
        partial.remove(&Cell { row: Row::HighRow, column: Column::MaiEk });
        assert!(matches!(classify_dialect(&partial), Err(ToneError::IncompleteBox(_))));
    }
}
