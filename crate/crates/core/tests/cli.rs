use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_isan");
const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");

fn isan(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn fixture(name: &str) -> String {
    format!("{FIXTURES}/{name}")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn help_and_bad_flags() {
    assert_eq!(isan(&["--help"], "").status.code(), Some(0));
    assert_eq!(isan(&["dict", "--help"], "").status.code(), Some(0));
    assert_eq!(isan(&["--no-such-flag", "tone"], "").status.code(), Some(2));
    assert_eq!(isan(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn tone_from_stdin() {
    let o = isan(&["tone"], "ม้า\nขา ปลา งู\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ม้า\tLow\tLive\tT6\nขา\tHigh\tLive\tT1\nปลา\tMid\tLive\tT2\nงู\tLow\tLive\tT3\n");
    let o = isan(&["tone"], "");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), ""));
}

#[test]
fn transcripts() {
    let o = isan(&["validate-transcript", &fixture("clean_transcript.txt")], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o), "");
    let o = isan(&["validate-transcript", &fixture("yamok_transcript.txt")], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("punctuation.mai-yamok error"));
    let o = isan(&["--format", "json", "validate-transcript", &fixture("yamok_transcript.txt")], "");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!((v["rule"].as_str(), v["line"].as_u64()), (Some("punctuation.mai-yamok"), Some(1)));
    assert_eq!(isan(&["validate-transcript", "/no/such/file"], "").status.code(), Some(2));
}

#[test]
fn dialects() {
    let o = isan(&["classify-dialect", &fixture("isan_box.tsv")], "");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "SixTone\n"));
    let o = isan(&["classify-dialect", &fixture("thai_box.tsv")], "");
    assert_eq!(stdout(&o), "NotSixTone\n");
}

#[test]
fn dictionary_commands() {
    let o = isan(&["dict", "lookup", "รัก"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "รัก\t\tprimary\th a k̚ T4\tthai-cognate\nรัก\t\tvariant\tl a k̚ T4\tthai-cognate\n");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.tsv");
    let o = isan(&["dict", "build", "-o", out.to_str().unwrap()], "รัก\nย่าง\nกา\n");
    assert_eq!(o.status.code(), Some(0));
    let o = isan(&["dict", "lookup", "ย่าง", "--dict", out.to_str().unwrap()], "");
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = isan(&["dict", "lookup", "ย่าง", "--context", "grill", "--dict", out.to_str().unwrap()], "");
    assert_eq!(stdout(&o), "ย่าง\tgrill\tprimary\tj aː ŋ T6\tthai-cognate\n");
}

#[test]
fn spelling_commands() {
    let o = isan(&["correspond", "รัก", "ฉีก"], "");
    let rows: Vec<Vec<String>> = stdout(&o).lines().map(|l| l.split('\t').map(String::from).collect()).collect();
    assert_eq!((rows[0][1].as_str(), rows[1][1].as_str()), ("ฮัก", "ฉีก"));
    let o = isan(&["suggest-spelling"], "ฉัน\tisan-native\tkʰ ɔː j T5\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ฉัน\tข้อย\tisan-native\t"));
    let o = isan(&["suggest-spelling", "--origin", "proper-name", "ชาติชาย"], "");
    assert!(stdout(&o).starts_with("ชาติชาย\tชาติชาย\tproper-name"));
    let o = isan(&["phonemize", "กา", "มะ-ม่วง"], "");
    assert_eq!(stdout(&o), "กา\tk aː T2\nมะ-ม่วง\tm a ʔ T4 . m ua ŋ T4\n");
}

#[test]
fn config_overrides_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("box.tsv"), std::fs::read_to_string(fixture("thai_box.tsv")).unwrap()).unwrap();
    std::fs::write(dir.path().join("isan.toml"), "format = \"json\"\n[data]\ntone_box = \"box.tsv\"\n").unwrap();
    let cfg = dir.path().join("isan.toml");
    let o = isan(&["--config", cfg.to_str().unwrap(), "tone", "ขา"], "");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["tone"], "Chattawa");
    std::fs::write(&cfg, "[data]\nlexicon = \"missing.tsv\"\n").unwrap();
    assert_eq!(isan(&["--config", cfg.to_str().unwrap(), "tone", "ขา"], "").status.code(), Some(2));
    std::fs::write(&cfg, "bogus = 1\n").unwrap();
    assert_eq!(isan(&["--config", cfg.to_str().unwrap(), "tone", "ขา"], "").status.code(), Some(2));
    let a = isan(&["suggest-spelling"], "รัก\nเว้า\nกราบ\n");
    let b = isan(&["suggest-spelling"], "รัก\nเว้า\nกราบ\n");
    assert_eq!(a.stdout, b.stdout);
}
