//! End-to-end tests of the `wcone` binary: exit codes, deterministic
//! output, and the external file formats.

use std::process::{Command, Output};
use wcone::analysis::AnalysisReport;

fn wcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

const GOLDEN: &[&str] = &[
    "--dN", "2", "--A", "1", "--l1", "1", "--l2", "29", "--w1", "3", "--w2", "2",
];

fn with_golden(head: &[&str], tail: &[&str]) -> Vec<String> {
    head.iter()
        .chain(GOLDEN.iter())
        .chain(tail.iter())
        .map(|s| s.to_string())
        .collect()
}

#[test]
fn analyze_json_is_byte_identical_across_runs() {
    let args = with_golden(&["analyze"], &["--json"]);
    let args: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    let first = wcone(&args);
    let second = wcone(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn analyze_json_round_trips() {
    let args = with_golden(&["analyze"], &["--json", "--ray", "1,1"]);
    let args: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    let out = wcone(&args);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let report: AnalysisReport = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, text);
    // Exact interval endpoints ride along with every approximate value.
    assert!(text.contains("approx_decimal"));
    assert!(text.contains("/"));
}

#[test]
fn invalid_weight_order_exits_2_naming_the_violation() {
    let out = wcone(&[
        "analyze", "--dN", "2", "--A", "1", "--l1", "1", "--l2", "29", "--w1", "2", "--w2", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("w1 ≥ w2 fails"), "{err}");
}

#[test]
fn unknown_flag_exits_2() {
    let out = wcone(&["analyze", "--nonsense", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sample_csv_shape_and_determinism() {
    let args = with_golden(
        &["sample"],
        &["--bmin", "1/10", "--bmax", "10", "--count", "500"],
    );
    let args: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    let out = wcone(&args);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 501);
    assert_eq!(lines[0], "b,H,dH,f_csc,S_num,V_num,verdict");
    let bs: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert!(bs.windows(2).all(|w| w[0] < w[1]), "b column monotone");
    // 17 significant digits on the first sample value.
    assert!(lines[1].starts_with("0.10000000000000000,"));
    let again = wcone(&args);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn scan_rows_only_for_smooth_l2() {
    let out = wcone(&[
        "scan", "--dN", "2", "--A", "1", "--l1", "1", "--w1", "3", "--w2", "2", "--l2-from",
        "29", "--l2-to", "41", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let l2s: Vec<&str> = text
        .trim_end()
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(l2s, vec!["29", "31", "35", "37", "41"]);
}

#[test]
fn output_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("wcone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = with_golden(&["analyze"], &["--json", "--output", path.to_str().unwrap()]);
    let args: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    let out = wcone(&args);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let report: AnalysisReport = serde_json::from_str(&written).unwrap();
    assert_eq!(report.params.l2, 29);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_paper_passes_and_prints_the_notes() {
    let out = wcone(&["verify-paper"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    let passes = text.lines().filter(|l| l.starts_with("PASS")).count();
    assert_eq!(passes, 12, "{text}");
    assert!(!text.contains("FAIL"), "{text}");
    // The two standing discrepancy notes are part of the output contract.
    assert!(text.contains("differs in its linear coefficient"), "{text}");
    assert!(text.contains("A = 2(1 - G)"), "{text}");
    assert!(text.trim_end().ends_with("all checks passed"));
}

#[test]
fn extremal_regular_ray_is_an_input_error() {
    let out = wcone(&[
        "extremal", "--dN", "1", "--A", "-2", "--l1", "1", "--l2", "1", "--w1", "3", "--w2",
        "2", "--ray", "3,2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("regular ray"), "{err}");
}
