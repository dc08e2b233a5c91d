use isan_text::script::{effective_class, parse_syllable, render_syllable, syllable_kind};
use isan_text::tonebox::{compute_isan_tone, compute_thai_tone};

const SYLLABLES: &str = include_str!("fixtures/syllables.tsv");

#[test]
fn golden_syllables() {
    let mut checked = 0;
    for line in SYLLABLES.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let f: Vec<&str> = line.split('\t').collect();
        let s = parse_syllable(f[0]).unwrap_or_else(|e| panic!("{}: {e}", f[0]));
        assert_eq!(effective_class(&s).to_string(), f[1], "{} class", f[0]);
        assert_eq!(syllable_kind(&s).to_string(), f[2], "{} kind", f[0]);
        assert_eq!(compute_isan_tone(&s).unwrap().to_string(), f[3], "{} isan tone", f[0]);
        assert_eq!(compute_thai_tone(&s).unwrap().to_string(), f[4], "{} thai tone", f[0]);
        assert_eq!(render_syllable(&s).unwrap(), f[0], "{} round trip", f[0]);
        checked += 1;
    }
    assert_eq!(checked, 78);
}
