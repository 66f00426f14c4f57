//! End-to-end tests driving the compiled binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn domseq(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domseq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn domseq");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait for domseq")
}

fn stdout_json_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("bad JSON {l:?}: {e}")))
        .collect()
}

#[test]
fn analyze_p5_reports_known_values() {
    // P5 as an edge list
    let input = "5\n0 1\n1 2\n2 3\n3 4\n";
    let out = domseq(
        &["analyze", "-", "--format", "edgelist", "--output", "structured"],
        input,
    );
    assert!(out.status.success());
    let records = stdout_json_lines(&out);
    assert_eq!(records.len(), 1);
    let p = &records[0]["profile"];
    assert_eq!(p["gamma"], 2);
    assert_eq!(p["gamma_t"], 3);
    assert_eq!(p["min_dom_ons"], 2);
    assert_eq!(records[0]["closed"]["status"], "non_uniform");
}

#[test]
fn analyze_streams_one_record_per_graph6_line() {
    // K4 and C5
    let out = domseq(&["analyze", "-", "--output", "structured"], "C~\nDhc\n");
    assert!(out.status.success());
    let records = stdout_json_lines(&out);
    assert_eq!(records.len(), 2);
    assert_eq!(records[0]["index"], 1);
    assert_eq!(records[0]["closed"]["status"], "uniform");
    assert_eq!(records[0]["closed"]["k"], 1);
    assert_eq!(records[1]["index"], 2);
    assert_eq!(records[1]["n"], 5);
}

#[test]
fn analyze_reports_parse_errors_per_line_and_exits_1() {
    let out = domseq(&["analyze", "-", "--output", "structured"], "C~\n!!!\nC~\n");
    assert_eq!(out.status.code(), Some(1));
    let records = stdout_json_lines(&out);
    assert_eq!(records.len(), 3);
    assert_eq!(records[1]["index"], 2);
    assert!(records[1]["error"].as_str().unwrap().contains("graph6"));
    // surrounding graphs still analyzed
    assert_eq!(records[2]["closed"]["k"], 1);
}

#[test]
fn structured_output_is_identical_across_worker_counts() {
    let input = "C~\nDhc\nD?{\nDhC\n";
    let one = domseq(
        &["analyze", "-", "--output", "structured", "--workers", "1"],
        input,
    );
    let four = domseq(
        &["analyze", "-", "--output", "structured", "--workers", "4"],
        input,
    );
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn recognize_both_agrees_on_generated_instances() {
    let gen = domseq(
        &["generate", "random", "--seed", "11", "--budget", "16", "--count", "5"],
        "",
    );
    assert!(gen.status.success());
    let graphs = String::from_utf8_lossy(&gen.stdout).to_string();
    let out = domseq(
        &["recognize", "-", "--method", "both", "--output", "structured"],
        &graphs,
    );
    assert!(out.status.success());
    for record in stdout_json_lines(&out) {
        assert_eq!(record["agree"], true);
        assert_eq!(record["structural"]["status"], "uniform");
        assert_eq!(record["structural"]["k"], record["brute"]["k"]);
    }
}

#[test]
fn generate_families_match_expected_classification() {
    let out = domseq(&["generate", "complete", "6"], "");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "E~~w");

    let out = domseq(
        &["generate", "two-uniform", "1,1", "1,1", "--output", "structured"],
        "",
    );
    let record = &stdout_json_lines(&out)[0];
    assert_eq!(record["n"], 4);
    assert_eq!(record["claimed_k"], 2);

    let out = domseq(
        &["generate", "friendship-complement", "2", "--output", "structured"],
        "",
    );
    let record = &stdout_json_lines(&out)[0];
    assert_eq!(record["n"], 5);
    assert_eq!(record["claimed_k"], 3);
    let g6 = record["graph6"].as_str().unwrap().to_string();
    let check = domseq(
        &["recognize", "-", "--method", "both", "--output", "structured"],
        &format!("{g6}\n"),
    );
    let rec = &stdout_json_lines(&check)[0];
    assert_eq!(rec["structural"]["k"], 3);
}

#[test]
fn verify_small_sizes_pass() {
    let out = domseq(&["verify", "--n", "4", "--output", "structured"], "");
    assert!(out.status.success());
    let records = stdout_json_lines(&out);
    assert_eq!(records.len(), 4);
    assert_eq!(records[2]["graphs"], 8);
    for r in &records {
        for check in r["checks"].as_array().unwrap() {
            assert_eq!(check["failures"], 0);
        }
    }
}

#[test]
fn verify_rejects_oversized_scale() {
    let out = domseq(&["verify", "--n", "9"], "");
    assert_eq!(out.status.code(), Some(1));
    let out = domseq(&["verify", "--n", "8"], "");
    // without the opt-in flag, 8 is refused as well
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    let out = domseq(&["analyze", "--format", "nonsense"], "");
    assert_eq!(out.status.code(), Some(1));
    let out = domseq(&["no-such-command"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = domseq(&["--help"], "");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cap_overflow_downgrades_to_structural_with_warning() {
    // a 24-vertex 2-uniform graph, above the default solver cap
    let gen = domseq(
        &["generate", "two-uniform", "6,6", "6,6"],
        "",
    );
    assert!(gen.status.success());
    let graphs = String::from_utf8_lossy(&gen.stdout).to_string();
    let out = domseq(&["analyze", "-", "--output", "structured"], &graphs);
    assert!(out.status.success());
    let record = &stdout_json_lines(&out)[0];
    assert!(record.get("profile").is_none());
    assert_eq!(record["closed"]["status"], "uniform");
    assert_eq!(record["closed"]["k"], 2);
    assert!(!record["warnings"].as_array().unwrap().is_empty());

    // raising the cap restores the exact fields
    let out = domseq(
        &["analyze", "-", "--output", "structured", "--cap", "24"],
        &graphs,
    );
    let record = &stdout_json_lines(&out)[0];
    assert_eq!(record["profile"]["gamma"], 2);
    assert_eq!(record["profile"]["gamma_gr"], 2);
}
