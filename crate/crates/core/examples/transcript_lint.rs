//! Lint transcript lines and resolve phonological phenomena.

use isan_text::transcript::{
    apply_fixes, resolve_phenomenon, validate_text, Phenomenon, TranscriptConfig,
};

fn main() {
    let text = "สนใจติดต่อ ศูนย์แปดสี่ สามหกสอง สามหกสองสี่\nไปๆ มาๆ\nตอนเดือนม.ค.คน  มา เบาะ\nร้าน 7 สาขา\n";
    let cfg = TranscriptConfig::default();
    let report = validate_text("sample.txt", text, &cfg);
    print!("{}", report.render_text());
    for (rule, c) in report.summary() {
        println!("{rule}: {} error(s), {} warning(s)", c.errors, c.warnings);
    }
    for (n, line) in text.lines().enumerate() {
        let diags: Vec<_> = report.diagnostics.iter().filter(|d| d.line == n + 1).map(|d| d.diagnostic.clone()).collect();
        if !diags.is_empty() {
            println!("fixed: {}", apply_fixes(line, &diags));
        }
    }
    for (heard, full, p) in [
        ("ตำหุง", "ตำบักหุ่ง", Phenomenon::SyllableDeletion),
        ("ยิบเอ็ด", "ยี่สิบเอ็ด", Phenomenon::AssimilationCountChange),
        ("ป่าว", "เปล่า", Phenomenon::Reduction),
    ] {
        println!("{heard} / {full} ({p:?}) -> {}", resolve_phenomenon(heard, full, p));
    }
}
