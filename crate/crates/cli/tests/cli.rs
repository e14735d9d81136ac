use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/corpus")
        .join(name)
}

fn lettercount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lettercount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lettercount(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_str().unwrap().to_string()
}

fn alice() -> String {
    corpus("alice29.txt").to_str().unwrap().to_string()
}

#[test]
fn count_appends_ranks() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "t.txt", "Eee, ta!");
    let out = stdout(&["count", "--alphabet", "en", &f]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "letter,count,proportion,rank");
    assert_eq!(lines[1], "a,1,0.200000,2");
    assert_eq!(lines[5], "e,3,0.600000,1");
    assert_eq!(lines[20], "t,1,0.200000,3");
    assert_eq!(lines.len(), 27);
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = alice();
    for args in [
        vec!["count", a.as_str()],
        vec![
            "stability",
            "--random",
            "--seed",
            "3",
            "--sizes",
            "90,1000",
            a.as_str(),
        ],
        vec![
            "generate",
            "--from",
            a.as_str(),
            "--length",
            "300",
            "--seed",
            "9",
        ],
        vec!["zipf", a.as_str()],
    ] {
        assert_eq!(
            lettercount(&args).stdout,
            lettercount(&args).stdout,
            "{args:?}"
        );
    }
}

#[test]
fn every_subcommand_honors_every_format() {
    let dir = TempDir::new().unwrap();
    let a = alice();
    let b = corpus("lcet10.txt").to_str().unwrap().to_string();
    let prefix = dir.path().join("model").to_str().unwrap().to_string();
    stdout(&["train-model", "--out", &prefix, &b]);
    let cipher = String::from_utf8(lettercount(&["encrypt", "--seed", "4", &a]).stdout).unwrap();
    let c = write(&dir, "c.txt", &cipher[..3000]);
    let commands: Vec<Vec<&str>> = vec![
        vec!["count", &a],
        vec!["digrams", &a],
        vec!["compare", &a, &b],
        vec!["stability", "--sizes", "90,1000", &a],
        vec!["positions", &a],
        vec!["style", "vc", &a, &b],
        vec!["style", "alberti", &a],
        vec!["style", "compare", &a, &b],
        vec!["style", "compass", &a],
        vec!["lipogram", "--reference", &b, &a],
        vec!["entropy", &a],
        vec!["generate", "--model", &prefix, "--length", "50"],
        vec!["generate", "--from", &a, "--vc", "--length", "50"],
        vec!["zipf", &a],
        vec!["solve", "--model", &prefix, "--restarts", "2", &c],
        vec!["markov", "test", &a],
        vec!["encrypt", "--key", "zyxwvutsrqponmlkjihgfedcba", &a],
        vec!["train-model", "--out", &prefix, &b],
    ];
    for cmd in commands {
        let mut outputs = Vec::new();
        for format in ["csv", "json", "text"] {
            let mut args = vec!["--format", format];
            args.extend(cmd.iter().copied());
            let out = stdout(&args);
            assert!(!out.is_empty(), "{args:?}");
            match format {
                "json" => {
                    serde_json::from_str::<Value>(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
                }
                "csv" => assert!(
                    out.lines().next().unwrap().contains(',') || out.starts_with("sequence"),
                    "{args:?}"
                ),
                _ => {}
            }
            outputs.push(out);
        }
        assert!(
            outputs[0] != outputs[1] && outputs[1] != outputs[2],
            "{cmd:?}"
        );
    }
}

#[test]
fn solve_warns_on_short_cryptograms() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("en").to_str().unwrap().to_string();
    stdout(&[
        "train-model",
        "--out",
        &prefix,
        corpus("lcet10.txt").to_str().unwrap(),
    ]);
    let c = write(&dir, "short.txt", "KHOOR ZRUOG WKLV LV D VKRUW PHVVDJH");
    let out = lettercount(&[
        "solve",
        "--model",
        &prefix,
        "--restarts",
        "20",
        "--seed",
        "7",
        &c,
    ]);
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["length_warning"]["threshold"], 90);
    assert_eq!(report["length_warning"]["length"], 29);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn solve_recovers_a_long_cryptogram() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("en").to_str().unwrap().to_string();
    stdout(&[
        "train-model",
        "--out",
        &prefix,
        corpus("lcet10.txt").to_str().unwrap(),
    ]);
    let cipher = stdout(&["encrypt", "--key", "qwertyuiopasdfghjklzxcvbnm", &alice()]);
    let c = write(&dir, "c.txt", &cipher[8_000..10_000]);
    let report = json(&["solve", "--model", &prefix, "--seed", "1", &c]);
    assert_eq!(report["key"], "qwertyuiopasdfghjklzxcvbnm");
    assert!(report["length_warning"].is_null());
}

#[test]
fn custom_symbol_inventory() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("en").to_str().unwrap().to_string();
    stdout(&[
        "train-model",
        "--out",
        &prefix,
        corpus("lcet10.txt").to_str().unwrap(),
    ]);
    let c = write(&dir, "c.txt", "0123");
    let symbols = "0123456789!@#$%^&*()[]{}<>";
    let report = json(&[
        "solve",
        "--model",
        &prefix,
        "--restarts",
        "1",
        "--symbols",
        symbols,
        &c,
    ]);
    assert_eq!(report["key"].as_str().unwrap().chars().count(), 26);
    let bad = write(&dir, "bad.txt", "01x");
    let out = lettercount(&["solve", "--model", &prefix, "--symbols", symbols, &bad]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn markov_test_on_a_long_text_rejects_independence() {
    let report = json(&["markov", "test", "--alphabet", "en", &alice()]);
    assert!(report["p_value"].as_f64().unwrap() < 1e-6);
    assert_eq!(report["df"], 1);
    let keys: Vec<&str> = report
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys,
        [
            "chi_square",
            "df",
            "p_value",
            "p_vc",
            "p_cv",
            "p_vv",
            "p_cc"
        ]
    );
}

#[test]
fn alberti_prints_fractions() {
    let dir = TempDir::new().unwrap();
    // 3 vowels, 4 consonants
    let f = write(&dir, "t.txt", "abecidf");
    let out = stdout(&["style", "alberti", "--format", "csv", &f]);
    assert_eq!(
        out.lines().nth(1).unwrap(),
        "3,4,0.428571,7/16,3/7,false,false,boundary"
    );
}

#[test]
fn alphabet_from_file() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "abc.alphabet",
        "name: abc\nletters: abc\nvowels: a\nfold: d > -\n",
    );
    let f = write(&dir, "t.txt", "abcd abz");
    let out = stdout(&["count", "--alphabet", &spec, &f]);
    assert_eq!(
        out,
        "letter,count,proportion,rank\na,2,0.400000,1\nb,2,0.400000,2\nc,1,0.200000,3\n"
    );
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        lettercount(&["count", "/no/such/file"]).status.code(),
        Some(1)
    );
    assert_eq!(
        lettercount(&["count", "--no-such-flag", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(lettercount(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        lettercount(&["--format", "xml", "count", "x"])
            .status
            .code(),
        Some(2)
    );
    let bad = write(&dir, "bad.alphabet", "name: x\nletters: ab\n");
    let f = write(&dir, "t.txt", "ab");
    let out = lettercount(&["count", "--alphabet", &bad, &f]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let empty = write(&dir, "empty.txt", "123 !!");
    assert_eq!(lettercount(&["entropy", &empty]).status.code(), Some(1));
    assert_eq!(
        lettercount(&["markov", "test", &empty]).status.code(),
        Some(1)
    );
}
