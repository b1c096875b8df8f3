//! End-to-end tests driving the compiled binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn skewchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn skewchar_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_skewchar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn chord_word_to_polynomial() {
    let out = skewchar(&["chord", "123123"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "u^3 + 3*u");

    let out = skewchar(&["chord", "1212"]);
    assert_eq!(stdout(&out).trim(), "u^2 + 1");
}

#[test]
fn chord_rejects_bad_words_with_exit_2() {
    let out = skewchar(&["chord", "121"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("occurs"));
}

#[test]
fn graph_from_stdin_and_file() {
    let edge_list = "n=4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    let out = skewchar_stdin(&["graph", "-"], edge_list);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "u^4 + 6*u^2 + 1");

    let dir = std::env::temp_dir().join("skewchar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.edges");
    std::fs::write(&path, edge_list).unwrap();
    let out = skewchar(&["graph", path.to_str().unwrap(), "--refined"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("u^4"));
}

#[test]
fn json_and_text_outputs_agree() {
    let out_text = skewchar(&["chord", "123123"]);
    let out_json = skewchar(&["chord", "123123", "--json"]);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out_json).trim()).unwrap();
    let terms = parsed.as_array().unwrap();
    // u^3 + 3*u.
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["u"], 3);
    assert_eq!(terms[0]["c"], 1);
    assert_eq!(terms[1]["u"], 1);
    assert_eq!(terms[1]["c"], 3);
    assert_eq!(stdout(&out_text).trim(), "u^3 + 3*u");
}

#[test]
fn series_kn_matches_published_table() {
    let out = skewchar(&["series", "kn", "--max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "K_0: 1",
            "K_1: u",
            "K_2: u^2 + 1",
            "K_3: u^3 + 3*u",
            "K_4: u^4 + 6*u^2 + 1",
            "K_5: u^5 + 10*u^3 + 5*u",
            "K_6: u^6 + 15*u^4 + 15*u^2 + 1",
        ]
    );
}

#[test]
fn matrix_char_poly() {
    let out = skewchar_stdin(&["matrix", "-"], "0 1 1\n-1 0 1\n-1 -1 0\n");
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "u^3 + 3*u");
    // Non-antisymmetric input is an input error.
    let out = skewchar_stdin(&["matrix", "-"], "0 1\n1 0\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ribbon_and_dmatroid_round_trip() {
    // The crossed double ribbon ("1212" as a rotation system).
    let ribbon = r#"{"sigma": [[0, 1, 2, 3]], "alpha": [[0, 2], [1, 3]]}"#;
    let out = skewchar_stdin(&["ribbon", "-"], ribbon);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("boundary components: 1"));
    assert!(text.contains("spanning quasi-trees: 2"));
    assert!(text.contains("Q = u^2 + 1"));

    let dm = r#"{"ground": ["1", "2"], "feasible": [["1"], ["2"]]}"#;
    let out = skewchar_stdin(&["dmatroid", "-"], dm);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("delta-matroid: true"));
    assert!(text.contains("even: true"));
    assert!(text.contains("binary: true"));
    assert!(text.contains("Q = w^2 + 2*w"));
}

#[test]
fn project_reports_constant() {
    let out = skewchar_stdin(&["project", "-"], "n=2\n0 1\n");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Q(pi(G)) = 1"), "output was: {text}");

    let out = skewchar_stdin(&["project", "-", "--json"], "n=2\n0 1\n");
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["projection"].as_array().unwrap().len(), 2);
}

#[test]
fn check_suites_pass_and_are_seed_deterministic() {
    let out = skewchar(&[
        "check",
        "graph-4t",
        "--max-vertices",
        "4",
        "--exhaustive",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("check graph-4t: PASS"));

    let a = skewchar(&["check", "matrix-4t", "--seed", "9", "--trials", "100"]);
    let b = skewchar(&["check", "matrix-4t", "--seed", "9", "--trials", "100"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b), "same command + seed must be byte-identical");

    let out = skewchar(&["check", "cut-point", "--max-chords", "4"]);
    assert!(out.status.success());
    let out = skewchar(&["check", "hamiltonian", "--max-chords", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("note: 2-chord"));
    assert!(text.contains("check hamiltonian: PASS"));
}

#[test]
fn check_reduction_script() {
    // One 4-term rewrite of the 5-wheel, with all three images pinned.
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/wheel-reduction.json");
    let out = skewchar(&["check", "reduction", "--script", path]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("G: u^6 + 10*u^4 + 10*u^2 + 1"));
    assert!(text.contains("G': u^6 + 9*u^4 + 9*u^2 + 1"));
    assert!(text.contains("Gt: u^6 + 10*u^4 + 9*u^2 + 1"));
    assert!(text.contains("Gt': u^6 + 9*u^4 + 8*u^2 + 1"));
    assert!(text.contains("check reduction: PASS"));

    // A wrong pinned image is rejected.
    let bad = serde_json::json!([
        {"graph": "n=6\n0 1\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n2 4\n3 5\n4 5\n",
         "a": 4, "b": 5, "role": "G"},
        {"graph": "n=6\n0 1\n", "role": "G'"},
    ]);
    let dir = std::env::temp_dir().join("skewchar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad_path = dir.join("bad-step.json");
    std::fs::write(&bad_path, bad.to_string()).unwrap();
    let out = skewchar(&["check", "reduction", "--script", bad_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_is_an_input_error() {
    let out = skewchar(&["check", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn remaining_check_suites_run_small() {
    for (suite, extra) in [
        ("two-term", vec!["--max-vertices", "4", "--exhaustive"]),
        ("constancy", vec!["--max-vertices", "4", "--trials", "4"]),
        ("lemma-7-1-2", vec!["--max-chords", "3"]),
        ("boundary-corank", vec!["--max-chords", "4"]),
        ("dm-multiplicativity", vec!["--trials", "5"]),
        ("graphic-dm-equality", vec!["--max-vertices", "5", "--trials", "20"]),
    ] {
        let mut args = vec!["check", suite];
        args.extend(extra);
        let out = skewchar(&args);
        assert!(
            out.status.success(),
            "{suite}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        assert!(stdout(&out).contains("PASS"), "{suite}");
    }
}

#[test]
fn chord_file_with_one_word_per_line() {
    let dir = std::env::temp_dir().join("skewchar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("words.txt");
    std::fs::write(&path, "1212\n1122\n123123\n").unwrap();
    let out = skewchar(&["chord", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        vec!["u^2 + 1", "u^2", "u^3 + 3*u"]
    );
}

#[test]
fn series_kmn_matches_closed_form() {
    let out = skewchar(&["series", "kmn", "--max", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("K_{1,1}: u^2 + 1"));
    assert!(text.contains("K_{2,3}: u^5 + 6*u^3"));
    assert!(text.contains("K_{3,3}: u^6 + 9*u^4"));
}

#[test]
fn threads_flag_gives_identical_results() {
    // An 8-chord word written unspaced: each digit is a token.
    let one = skewchar(&["--threads", "1", "chord", "1234567812345678"]);
    let two = skewchar(&["--threads", "2", "chord", "1234567812345678"]);
    assert!(one.status.success());
    assert_eq!(stdout(&one), stdout(&two));
}
