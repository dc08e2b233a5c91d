//! Classify an elicited tone box: pass a row/column/label TSV, or see the
//! bundled Isan and Thai boxes.

use std::collections::BTreeMap;

use isan_text::tonebox::{classify_dialect, isan6, read_cells, thai5};

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let cells = read_cells(&std::fs::read_to_string(&path).expect("readable file")).expect("tone box TSV");
        let labels: BTreeMap<_, String> = cells.into_iter().map(|(c, (l, _))| (c, l)).collect();
        println!("{path}: {}", classify_dialect(&labels).unwrap());
        return;
    }
    println!("isan6: {}", classify_dialect(&isan6().cell_map()).unwrap());
    println!("thai5: {}", classify_dialect(&thai5().cell_map()).unwrap());
}
