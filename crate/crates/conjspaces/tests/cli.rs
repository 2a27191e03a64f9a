//! Black-box tests of the binary: exit codes, flag handling, and the
//! behavior of file-driven subcommands on good and bad input.

use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjspaces"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_codes_cover_success_input_failure_and_usage() {
    // 0: a verdict was produced, even a negative one.
    let out = run(&["realizable", "data/op2.alg"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("non-realizable"));

    // 1: the input file does not validate.
    let out = run(&["check", "data/broken.alg"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("degree additivity"));

    let out = run(&["realizable", "data/broken.alg"]);
    assert_eq!(out.status.code(), Some(1));

    // 1: missing file is an input failure, not a usage error.
    let out = run(&["check", "data/no_such_file.alg"]);
    assert_eq!(out.status.code(), Some(1));

    // 2: bad usage — unknown subcommand, out-of-range level, unknown entry.
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["cd", "table", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["catalog", "verify", "NoSuchEntry"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn double_then_halve_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let doubled = dir.path().join("doubled.alg");
    let halved = dir.path().join("halved.alg");

    let out = run(&[
        "double",
        "data/rp2.alg",
        "--output",
        doubled.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty(), "--output moves the body off stdout");

    let out = run(&[
        "halve",
        doubled.to_str().unwrap(),
        "--output",
        halved.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    // Same table as the original, modulo the derived name.
    let original = std::fs::read_to_string(root().join("data/rp2.alg")).unwrap();
    let recovered = std::fs::read_to_string(&halved).unwrap();
    let strip_name = |s: &str| {
        s.lines()
            .skip(1)
            .collect::<Vec<_>>()
            .join("\n")
    };
    let original_canonical = {
        let out = run(&["check", "data/rp2.alg"]);
        assert_eq!(out.status.code(), Some(0));
        original
    };
    // Parse both through the library for a structural comparison.
    let a = conjspaces::formats::alg::parse(&original_canonical).unwrap();
    let b = conjspaces::formats::alg::parse(&recovered).unwrap();
    let map: Vec<(String, String)> = a
        .basis()
        .iter()
        .map(|c| (c.label.clone(), c.label.clone()))
        .collect();
    assert!(a.tables_equal_under(&b, &map).is_ok());
    assert_eq!(strip_name(&recovered), strip_name(&conjspaces::formats::alg::print(&a)));
}

#[test]
fn json_flag_produces_parseable_reports_everywhere() {
    let cases: &[&[&str]] = &[
        &["cd", "mul", "e1 + e2", "e4", "--level", "3", "--json"],
        &["cd", "table", "2", "--json"],
        &["cd", "fixed", "3", "--json"],
        &["jordan", "check", "data/projector_top.herm", "--json"],
        &["jordan", "stratum", "data/projector_zero.herm", "--json"],
        &["adem", "Sq1 Sq2 + Sq3", "--json"],
        &["check", "data/floyd_y.alg", "--json"],
        &["double", "data/floyd_z.alg", "--json"],
        &["halve", "data/op2.alg", "--json"],
        &["wu", "data/floyd_y.alg", "--json"],
        &["sw", "data/cp3.alg", "--json"],
        &["present", "data/rp2.pres", "--json"],
        &["realize4", "data/whitehead.json", "--json"],
        &["realizable", "data/floyd_y.alg", "--json"],
        &["catalog", "list", "--json"],
        &["catalog", "verify", "CP2", "--json"],
        &["selftest", "--samples", "10", "--json"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value =
            serde_json::from_str(&stdout(&out)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert!(v.is_object(), "{args:?} yields a JSON object");
    }
}

#[test]
fn max_degree_gates_unbounded_quotients() {
    // Without a cap the polynomial quotient is rejected as input.
    let out = run(&["check", "data/rp_inf.alg"]);
    assert_eq!(out.status.code(), Some(1));

    // With a cap it is a perfectly good truncated algebra.
    let out = run(&["check", "data/rp_inf.alg", "--max-degree", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all axioms hold"));

    // The cap also bounds Wu computations on the truncation.
    let out = run(&["sw", "data/rp_inf.alg", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn seed_changes_the_selftest_stream_but_not_the_outcome() {
    let a = run(&["selftest", "--samples", "25", "--seed", "1"]);
    let b = run(&["selftest", "--samples", "25", "--seed", "2"]);
    let c = run(&["selftest", "--samples", "25", "--seed", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&c), "same seed, same report");
    assert!(stdout(&a).contains("seed 1"));
    assert!(stdout(&b).contains("seed 2"));
}

#[test]
fn verdict_text_and_json_agree_on_the_rule() {
    let text = stdout(&run(&["realizable", "data/floyd_y.alg"]));
    let json = stdout(&run(&["realizable", "data/floyd_y.alg", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(text.contains("floyd-lemma"));
    assert_eq!(v["rule"], "floyd-lemma");
    assert_eq!(v["verdict"], "non-realizable");
    assert_eq!(v["trail"].as_array().unwrap().len(), 3);
}
