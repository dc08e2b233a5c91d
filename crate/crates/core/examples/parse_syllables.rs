//! Parse Thai-script syllables and show their tone-relevant parts.
//!
//! cargo run --example parse_syllables -- ขวิด เกาะ หล่า

use isan_text::script::{effective_class, parse_syllable, syllable_kind};

fn main() {
    let words: Vec<String> = std::env::args().skip(1).collect();
    let words = if words.is_empty() { vec!["ขวิด".into(), "เกาะ".into(), "หล่า".into(), "ปราบ".into()] } else { words };
    for w in words {
        match parse_syllable(&w) {
            Ok(s) => println!(
                "{w}: onset {} cluster {:?} leading-ห {} vowel {} coda {:?} mark {:?} -> {} {}",
                s.onset,
                s.cluster,
                s.leading_ho,
                s.vowel,
                s.coda,
                s.tone_mark,
                effective_class(&s),
                syllable_kind(&s)
            ),
            Err(e) => println!("{w}: {e}"),
        }
    }
}
