use std::path::Path;
use std::process::{Command, Output};

fn ispw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ispw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

const CASES: &[(&str, i32, &[&str])] = &[
    ("classify_z8.txt", 0, &["classify", "Zmod(8)"]),
    ("classify_trivext_z4.txt", 0, &["classify", "trivext(Zmod(4), mod(2))"]),
    ("classify_trivext_z4.json", 0, &["--json", "classify", "trivext(Zmod(4), mod(2))"]),
    ("classify_dup_z8.txt", 0, &["classify", "dup(Zmod(8), ideal(2))"]),
    ("classify_dup_ff.txt", 0, &["classify", "dup(trivext(Zmod(2), mod(2)), ideal((0, 1)))"]),
    ("classify_zint.txt", 0, &["classify", "Zint"]),
    ("factor_z8_strong.txt", 0, &["factor", "Zmod(8)", "ideal(4)", "strong"]),
    ("factor_trivext_none.txt", 1, &["factor", "trivext(Zmod(4), mod(2))", "ideal((0, 1))", "strong"]),
    ("factor_zint_isp.txt", 0, &["factor", "Zint", "ideal(12)", "isp"]),
    ("factor_z6_zpi.json", 0, &["--json", "factor", "Zmod(6)", "ideal(0)", "zpi"]),
    ("check_dupli_z6.txt", 0, &["check", "thm-dupli", "Zmod(6)", "ideal(3)"]),
    ("check_car_plane.txt", 0, &["check", "prop-car", "Zmod(2)", "mod(2, 2)"]),
    ("check_spr_plane.txt", 0, &["check", "prop-spr", "trivext(Zmod(2), mod(2, 2))"]),
    ("spec_z12.txt", 0, &["spec", "Zmod(12)"]),
    ("ideals_z8.txt", 0, &["ideals", "Zmod(8)"]),
    ("ideals_ff.json", 0, &["--json", "ideals", "trivext(Zmod(2), mod(2))"]),
];

#[test]
fn golden_outputs() {
    for &(name, code, args) in CASES {
        let out = ispw(args);
        assert_eq!(out.status.code(), Some(code), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(name), "{name}");
    }
}

#[test]
fn headline_lines() {
    let text = String::from_utf8(ispw(&["classify", "trivext(Zmod(4), mod(2))"]).stdout).unwrap();
    assert!(text.contains("\nisp: vacuous-true"));
    assert!(text.contains("\nstrongly_isp: false  counterexample ideal((0, 1))"));
    let text = String::from_utf8(ispw(&["factor", "Zmod(8)", "ideal(4)", "strong"]).stdout).unwrap();
    assert_eq!(text, "J = ideal(1), H = [ideal(2), ideal(2)]\n");
}

#[test]
fn error_exit_codes() {
    for (args, code, needle) in [
        (&["classify", "Zmod(8"][..], 2, "line 1, column 7"),
        (&["classify", "Zmod(1)"][..], 3, "zero ring"),
        (&["classify", "trivext(Zmod(2), mod(3))"][..], 3, "3"),
        (&["classify", "loc(Zmod(12), ideal(4))"][..], 3, "prime"),
        (&["--max-size", "100", "classify", "dup(Zmod(16), ideal(2))"][..], 3, "size limit"),
        (&["factor", "Zmod(8)", "ideal(2)", "isp"][..], 3, "regular"),
        (&["factor", "Zmod(8)", "ideal(2)", "bogus"][..], 3, "bogus"),
        (&["check", "thm-nope", "Zmod(2)"][..], 3, "thm-nope"),
        (&["ideals", "Zint"][..], 3, "infinitely many"),
    ] {
        let out = ispw(args);
        let err = String::from_utf8_lossy(&out.stderr);
        assert_eq!(out.status.code(), Some(code), "{args:?}: {err}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(err.to_lowercase().contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn corpus_batch_is_stable_across_thread_counts() {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/corpus.txt");
    let corpus = corpus.to_str().unwrap();
    let one = ispw(&["--json", "--threads", "1", "--corpus", corpus, "classify"]);
    let four = ispw(&["--json", "--threads", "4", "--corpus", corpus, "classify"]);
    assert_eq!(one.status.code(), Some(0));
    assert!(!one.stdout.is_empty());
    assert_eq!(one.stdout, four.stdout);
    let checks = ispw(&["--corpus", corpus, "check", "lemma-regu"]);
    assert_eq!(checks.status.code(), Some(0));
    let text = String::from_utf8(checks.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("lemma-regu") || l.starts_with("checks:")));
    assert!(text.contains("fail: 0"));
}
