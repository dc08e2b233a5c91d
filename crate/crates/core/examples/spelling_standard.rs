//! Route words by origin and spell them by the Isan standard.

use isan_text::orthography::Speller;
use isan_text::lexicon::WordOrigin;

fn main() {
    let speller = Speller::bundled();
    for w in ["รัก", "โรง", "ฉีก", "รวย", "ลึก", "ขาม", "กราบ", "สามารถ", "ชาติชาย", "เว้า"] {
        match speller.spell_auto(w, None, None) {
            Ok(d) => println!("{w}\t{}\t{}\t{}", d.spelling, d.origin, d.trail.join(",")),
            Err(e) => println!("{w}\terror: {e}"),
        }
    }
    let heard = "kʰ ɔː j T5".parse().unwrap();
    let d = speller.spell("ฉัน", WordOrigin::IsanNative, Some(&heard), None).unwrap();
    println!("ฉัน heard /{heard}/\t{}\t{}", d.spelling, d.alternatives.join(" "));
}
