//! End-to-end tests of the `partition-lab` binary: exit codes, golden text,
//! JSON shape, and output determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partition-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("one JSON object on stdout")
}

#[test]
fn check_affirmative_exit_and_ledger() {
    let output = run(&["check", "5^2,3,2^2", "--method", "both"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("check: 5 = 2+1+2"));
    assert!(text.contains("check: 3 = 2+1"));
    assert!(text.contains("check: 2 = 2"));
    assert!(text.contains("verdict: self-conjugate"));
}

#[test]
fn check_negative_exit_and_failing_sum() {
    let output = run(&["check", "20,7^5,6^2,5^4,4^2,2^2,1^4"]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("check: 16 ≠ 7"));
    assert!(text.contains("verdict: not self-conjugate"));
}

#[test]
fn check_single_cell() {
    let output = run(&["check", "1"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_two_with_diagnostics() {
    let output = run(&["check", "3,five"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stdout(&output).is_empty());
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("five"));

    let output = run(&["diagram", "1,2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn diagram_golden_bytes() {
    let output = run(&["diagram", "2,1"]);
    assert_eq!(stdout(&output), "##\n#\n");

    let output = run(&["diagram", "4,3,2^2,1", "--style", "young"]);
    assert_eq!(stdout(&output), "####\n###\n##\n##\n#\n");

    let output = run(&["diagram", "4,3,2,2,1", "--conjugate"]);
    assert_eq!(stdout(&output), "#####\n####\n##\n#\n");

    let output = run(&["diagram", "1", "--style", "ferrers"]);
    assert_eq!(stdout(&output), "*\n");
}

#[test]
fn decompose_text_and_exit_codes() {
    let output = run(&["decompose", "7^2,6,4,3^2,2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("L of width 2 with outer arm 7"));
    assert!(text.contains("L of width 1 with outer arm 4"));
    assert!(text.contains("Durfee square of dimension 1"));

    let output = run(&["decompose", "5,4,3,2,1"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("fancy triangle of dimension 5"));

    let output = run(&["decompose", "6,5^4"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("residual: [6,5,5,5,5]"));
}

#[test]
fn decompose_json_shape() {
    let output = run(&["decompose", "7^2,6,4,3^2,2", "--json"]);
    let value = json(&output);
    assert_eq!(value["schema"], "partition-lab/1");
    assert_eq!(value["frames"], serde_json::json!([7, 6, 4]));
    assert_eq!(value["egg"]["kind"], "durfee-square");
    assert_eq!(value["egg"]["dim"], 1);
    assert!(value["residual"].is_null());

    let output = run(&["decompose", "6,5^4", "--json"]);
    let value = json(&output);
    assert_eq!(value["residual"], serde_json::json!([6, 5, 5, 5, 5]));
}

#[test]
fn count_sc_table_and_guard() {
    let output = run(&["count-sc", "4"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains(" 4           8           8  yes"));

    let output = run(&["count-sc", "11"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn pfn_methods_agree() {
    for method in ["series", "recurrence", "enumerate"] {
        let output = run(&["pfn", "50", "--method", method]);
        assert_eq!(output.status.code(), Some(0), "{method}");
        assert!(stdout(&output).contains("p(50) = 204226"), "{method}");
    }
    let output = run(&["pfn", "0"]);
    assert!(stdout(&output).contains("p(0) = 1"));

    let output = run(&["pfn", "100", "--method", "rademacher"]);
    assert!(stdout(&output).contains("p(100) = 190569292"));
}

#[test]
fn pfn_enumerate_guard() {
    let output = run(&["pfn", "61", "--method", "enumerate"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn pfn_trace_is_deterministic_and_grouped() {
    let args = ["pfn", "200", "--method", "rademacher", "--trace", "--kmax", "8"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.contains("+3,972,998,993,185.896"));
    assert!(text.contains("p(200) = 3972999029388"));
    let term_lines = text.lines().filter(|l| l.starts_with("k=")).count();
    assert_eq!(term_lines, 8);
}

#[test]
fn pfn_json_uses_plain_strings() {
    let output = run(&[
        "pfn", "200", "--method", "rademacher", "--trace", "--kmax", "8", "--json",
    ]);
    let value = json(&output);
    assert_eq!(value["value"], "3972999029388");
    let terms = value["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 8);
    // machine mode never groups digits
    assert_eq!(terms[0]["value"], "3972998993185.896");
}

#[test]
fn congruences_suites() {
    let output = run(&["congruences", "chowla"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("residue 245"));

    let output = run(&["congruences", "lists"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("p(116) ≡ 0 (mod 121)"));

    let output = run(&["congruences", "ramanujan", "--limit", "200"]);
    assert_eq!(output.status.code(), Some(0));

    let output = run(&["congruences", "atkin", "--json"]);
    let value = json(&output);
    assert_eq!(value["passed"], true);
}

#[test]
fn euler_table_and_guard() {
    let output = run(&["euler", "7"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("   7                 5                 5  yes"));

    let output = run(&["euler", "301"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn area_verdicts() {
    let output = run(&["area", "3^2,1^2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("below the diagonal: 4"));
    assert!(text.contains("verdict: balanced"));

    let output = run(&["area", "1"]);
    assert!(stdout(&output).contains("below the diagonal: 1/2"));

    let output = run(&["area", "6,5^4"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("verdict: unbalanced"));
}

#[test]
fn enumerate_size_and_dimension() {
    let output = run(&["enumerate", "--size", "7"]);
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.first(), Some(&"[7]"));
    assert_eq!(lines[lines.len() - 2], "[1,1,1,1,1,1,1]");
    assert_eq!(lines.last(), Some(&"count: 15"));

    let output = run(&["enumerate", "--dimension", "3", "--self-conjugate"]);
    assert!(stdout(&output).contains("count: 4"));

    let output = run(&["enumerate", "--size", "7", "--odd"]);
    assert!(stdout(&output).contains("count: 5"));

    let output = run(&["enumerate", "--size", "61"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn digits_env_override_is_accepted() {
    let output = Command::new(env!("CARGO_BIN_EXE_partition-lab"))
        .args(["pfn", "100", "--method", "rademacher"])
        .env("PARTITION_LAB_DIGITS", "50")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("p(100) = 190569292"));
}

#[test]
fn json_is_one_schema_tagged_object_everywhere() {
    let invocations: Vec<Vec<&str>> = vec![
        vec!["check", "1", "--json"],
        vec!["diagram", "2,1", "--json"],
        vec!["decompose", "3,1,1", "--json"],
        vec!["count-sc", "3", "--json"],
        vec!["pfn", "7", "--json"],
        vec!["congruences", "chowla", "--json"],
        vec!["euler", "5", "--json"],
        vec!["area", "1", "--json"],
        vec!["enumerate", "--size", "4", "--json"],
    ];
    for args in invocations {
        let output = run(&args);
        let value = json(&output);
        assert_eq!(value["schema"], "partition-lab/1", "args: {args:?}");
    }
}
