use std::path::PathBuf;
use std::process::{Command, Output};

use tdcode::{compute_label, construct_pair_code, Code, Label, Word};

fn tdc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdc")).args(args).env_remove("TDCODE_CACHE").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = tdc(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tdc-test-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn worked_examples() {
    assert_eq!(stdout(&["confuse", "012012", "011112"]), "not-confusable\n");
    assert_eq!(stdout(&["confuse", "01210210", "01201210"]), "confusable\n");
    assert_eq!(stdout(&["label", "01210210"]), "01210:(1,+)(2,+)\n");
    assert_eq!(stdout(&["dup", "01210", "1", "3"]), "01211210\n");
    assert_eq!(stdout(&["root", "01012012"]), "012\n");
    assert_eq!(stdout(&["root", "-k", "2", "012012"]), "012012\n");
    assert_eq!(stdout(&["root", "--exact", "-k", "1", "0011022"]), "0102\n");
}

#[test]
fn table_row_six() {
    let out = stdout(&["table", "--n-max", "6"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tconstr1\tlower\teq1\tprop4\toptimal");
    assert_eq!(lines[6], "6\t111\t117\t117\t117\t117");
}

#[test]
fn bounds_and_counts() {
    assert_eq!(stdout(&["irr", "3", "--count"]), "12\n");
    assert_eq!(stdout(&["irr", "2"]), "01\n02\n10\n12\n20\n21\n");
    let b = stdout(&["bounds", "--n", "11", "-f", "tsv"]);
    let cols: Vec<&str> = b.trim().split('\t').collect();
    assert_eq!(cols[0], "11");
    assert_eq!(cols[1], "867");
    assert_eq!(cols[3], "1227");
    assert_eq!(cols[4], "1389");
}

#[test]
fn large_alphabet_uses_commas() {
    assert_eq!(stdout(&["-q", "12", "root", "0,11,11,3"]), "0,11,3\n");
}

#[test]
fn exit_codes() {
    assert_eq!(tdc(&["root", "0130"]).status.code(), Some(2));
    assert_eq!(tdc(&["dup", "012", "2", "3"]).status.code(), Some(2));
    assert_eq!(tdc(&["confuse", "012"]).status.code(), Some(2));
    let out = tdc(&["cone", "012", "--max-len", "30", "--budget-states", "500"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    assert_eq!(tdc(&["irr", "40", "--budget-states", "1000"]).status.code(), Some(3));
}

#[test]
fn json_round_trips() {
    let l: Label = serde_json::from_str(&stdout(&["label", "01201210", "-f", "json"])).unwrap();
    assert_eq!(l, compute_label(&Word::parse("01201210", 3).unwrap()));
    let c: Code = serde_json::from_str(&stdout(&["code", "pair", "01021", "-f", "json"])).unwrap();
    assert_eq!(c, construct_pair_code(&Word::parse("01021", 3).unwrap()).unwrap());
    let text = stdout(&["code", "one-region", "012", "--n", "12"]);
    assert_eq!(Code::from_text(&text).unwrap().len(), 3);
}

#[test]
fn oracle_agrees_on_examples() {
    let yes = stdout(&["oracle", "01210210", "01201210", "--max-len", "12"]);
    assert!(yes.starts_with("confusable "), "{yes}");
    let no = stdout(&["oracle", "012012", "011112", "--max-len", "10", "-f", "tsv"]);
    assert_eq!(no, "012012\t011112\tno-witness\t-\n");
}

#[test]
fn cone_lists_descendants() {
    let out = stdout(&["cone", "01", "--max-len", "3", "--length", "3"]);
    assert_eq!(out, "001\n011\n");
}

#[test]
fn output_is_deterministic() {
    for args in [&["optimal", "--n", "7"][..], &["code", "recursive", "0102", "--n", "11"], &["cone", "012", "--max-len", "7"]] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn optimal_matches_known_values() {
    let out = stdout(&["optimal", "--n", "8"]);
    assert_eq!(out.lines().last().unwrap(), "total\t-\t315");
    let out = stdout(&["optimal", "--root", "012", "--n", "16", "--words"]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "T(16, 012) = 4");
    assert_eq!(lines.count(), 4);
}

#[test]
fn cache_file_is_written_and_reused() {
    let dir = scratch("cache");
    let path = dir.join("t.tsv");
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_tdc"))
            .args(["optimal", "--root", "0102", "--n", "10"])
            .env("TDCODE_CACHE", &path)
            .output()
            .unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let first = run();
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.lines().any(|l| l.starts_with("0102\t10\t")), "{written}");
    assert_eq!(run(), first);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), written);
}

#[test]
fn fixtures_verify() {
    let out = stdout(&["verify", "--exact-max", "8"]);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")), "{out}");
    assert!(out.contains("PASS table n=20 optimal (stored)"));
    assert!(out.contains("PASS table n=30 lower"));
    assert!(out.lines().last().unwrap().ends_with("0 failed"));
}

#[test]
fn verify_without_stored_optima() {
    let out = stdout(&["verify", "--exact-max", "6", "--stored", "/nonexistent/tcache.tsv"]);
    assert!(out.lines().next().unwrap().starts_with("INFO no stored optima"));
    assert!(!out.contains("optimal (stored)"));
    assert!(out.lines().last().unwrap().ends_with("0 failed"));
}

#[test]
fn empty_fixture_dir_is_an_error() {
    let dir = scratch("empty");
    let out = tdc(&["verify", "--fixtures", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing fixture"));
}

#[test]
fn broken_fixture_reports_a_diff() {
    let dir = scratch("broken");
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::copy(src.join("table1.tsv"), dir.join("table1.tsv")).unwrap();
    std::fs::write(dir.join("examples.tsv"), "root3\t01012012\t0120\n").unwrap();
    let out = tdc(&["verify", "--fixtures", dir.to_str().unwrap(), "--exact-max", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL root3 01012012: expected 0120, got 012"), "{text}");
}
