//! Citation-form pronunciations with phonotactic checks.

use isan_text::g2p::{phonemize_word, validate_pronunciation};
use isan_text::lexicon::bundled_lexicon;

fn main() {
    let words: Vec<String> = std::env::args().skip(1).collect();
    let defaults = ["กา", "บอล", "เกาะ", "ปราบ", "ขวิด", "ศาสนา", "ทราบ", "ช้าง", "มะ-ม่วง", "มะม่วง"];
    let words: Vec<String> = if words.is_empty() { defaults.iter().map(|s| s.to_string()).collect() } else { words };
    for w in words {
        match phonemize_word(&w, bundled_lexicon()) {
            Ok(p) => println!("{w}\t/{p}/\tviolations: {}", validate_pronunciation(&p).len()),
            Err(e) => println!("{w}\t{e}"),
        }
    }
}
