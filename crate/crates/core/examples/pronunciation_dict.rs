//! Build a pronunciation dictionary with variants and homographs, write it
//! out, read it back and look words up.

use isan_text::g2p::dict::{build_dictionary, Dictionary};
use isan_text::lexicon::bundled_lexicon;

fn main() {
    let dict = build_dictionary(["รัก", "ย่าง", "เสือ", "กา", "รำ"], bundled_lexicon()).unwrap();
    let text = dict.serialize();
    print!("{text}");
    let back = Dictionary::parse(&text).unwrap();
    assert_eq!(back, dict);
    for w in ["รัก", "ย่าง"] {
        let found = back.lookup(w, None).unwrap();
        for e in &found.entries {
            let ranked: Vec<String> = e.ranked().iter().map(|(r, p)| format!("{r} /{p}/")).collect();
            println!("{w} [{}] {}{}", e.context.as_deref().unwrap_or("-"), ranked.join(", "), if found.ambiguous { " (homograph)" } else { "" });
        }
    }
}
