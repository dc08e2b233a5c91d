//! Isan and Central Thai tones for the same spellings.

use isan_text::script::parse_syllable;
use isan_text::tonebox::{compute_isan_tone, compute_thai_tone, isan6, thai5};

fn main() {
    for w in ["ขา", "ปลา", "งู", "ค่า", "หมาก", "ม้า", "มด", "ผัก", "บีบ", "เชือก"] {
        let s = parse_syllable(w).expect("valid syllable");
        println!("{w}\tisan {}\tthai {}", compute_isan_tone(&s).unwrap(), compute_thai_tone(&s).unwrap());
    }
    println!("\n{}", isan6().to_tsv());
    println!("thai box categories: {}", thai5().categories().len());
}
