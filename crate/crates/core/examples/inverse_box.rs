//! All spellings the Isan tone box allows for /kʰɔːj/ in each tone, then the
//! one the tie-breaks pick.

use isan_text::g2p::{Consonant, IsanTone};
use isan_text::orthography::derive_spelling;
use isan_text::tonebox::{candidate_spellings, Rime};

fn main() {
    for tone in IsanTone::NATIVE {
        let cands = candidate_spellings(&[Consonant::Kh], Rime::new("ออ", Some('ย')), tone).unwrap();
        let texts: Vec<&str> = cands.iter().map(|c| c.source_text.as_str()).collect();
        println!("{tone}: {texts:?}");
    }
    for (p, etymon) in [("kʰ ɔː j T4", None), ("m aː T1", Some("หมัก")), ("l aː T4", None), ("s ua n T6", None)] {
        let d = derive_spelling(&p.parse().unwrap(), etymon).unwrap();
        println!("/{p}/ -> {} via {}", d.spelling, d.trail.join(", "));
    }
}
