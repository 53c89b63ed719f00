mod common;

use common::{float_mentions, kummerlab, report_without_elapsed, stdout};
use kummerlab::{list_checks, registry, select, Report, Status, Summary};
use serde_json::Value;

#[test]
fn full_run_passes_and_lists_every_check() {
    let out = kummerlab(&[]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for info in list_checks() {
        assert!(
            text.contains(&info.id),
            "{} missing from the text report",
            info.id
        );
    }
    assert!(text.contains("0 failed"));
}

#[test]
fn nikulin_filter_selects_exactly_the_nikulin_checks() {
    let out = kummerlab(&["--check", "nikulin.*", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    let expected: Vec<String> = list_checks()
        .into_iter()
        .map(|c| c.id)
        .filter(|id| id.starts_with("nikulin."))
        .collect();
    assert_eq!(ids, expected);
    assert!(ids.contains(&"nikulin.roots16") && ids.contains(&"nikulin.saturation.56"));
}

#[test]
fn unknown_check_exits_with_usage_error() {
    let out = kummerlab(&["--check", "no.such.check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no.such.check"));
    assert!(out.stdout.is_empty());
    // one bad pattern among good ones is still an error
    assert_eq!(
        kummerlab(&["--check", "nikulin.*", "--check", "nope*"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn malformed_arguments_exit_with_usage_error() {
    assert_eq!(kummerlab(&["--report", "xml"]).status.code(), Some(2));
    assert_eq!(kummerlab(&["--frobnicate"]).status.code(), Some(2));
    assert_eq!(kummerlab(&["--check", "[unclosed"]).status.code(), Some(2));
}

#[test]
fn repeated_checks_combine() {
    let out = kummerlab(&[
        "--check",
        "cover.eT10",
        "--check",
        "fibration.*24",
        "--report",
        "json",
    ]);
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["cover.eT10", "fibration.eulersum24"]);
}

#[test]
fn list_has_unique_sorted_ids_with_anchors() {
    let out = kummerlab(&["--list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("even_sets.count30\t")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("fibration.eulersum24\t")));
    let infos = list_checks();
    assert!(infos.len() >= 30);
    assert!(infos.windows(2).all(|w| w[0].id < w[1].id));
    assert!(infos
        .iter()
        .all(|i| !i.anchor.is_empty() && !i.description.is_empty()));

    let json: Value =
        serde_json::from_slice(&kummerlab(&["--list", "--report", "json"]).stdout).unwrap();
    assert_eq!(json.as_array().unwrap().len(), infos.len());
}

#[test]
fn json_report_is_deterministic_modulo_elapsed_time() {
    let a = kummerlab(&["--report", "json"]);
    let b = kummerlab(&["--report", "json"]);
    assert_eq!(report_without_elapsed(&a), report_without_elapsed(&b));
    let strip = |o: &std::process::Output| {
        stdout(o)
            .lines()
            .filter(|l| !l.contains("\"elapsed_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn json_schema_and_summary_tallies() {
    let out = kummerlab(&["--report", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["version"].is_string());
    assert!(v["elapsed_ms"].is_u64());
    for c in v["checks"].as_array().unwrap() {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["data", "detail", "id", "status"]);
        assert!(matches!(
            c["status"].as_str(),
            Some("pass" | "fail" | "flagged")
        ));
    }
    let report: Report = serde_json::from_value(v).unwrap();
    assert_eq!(report.summary, Summary::tally(&report.checks));
    assert_eq!(report.summary.fail, 0);
    assert!(report.summary.flagged > 0);
}

#[test]
fn flagged_checks_are_the_open_items() {
    let report = kummerlab::run(&["*".to_string()]).unwrap();
    let flagged: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Flagged)
        .map(|c| c.id.as_str())
        .collect();
    assert!(flagged.contains(&"delta.identity.literal_sign"));
    assert!(flagged.contains(&"cover.T_diagonal_WE"));
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn select_without_patterns_keeps_everything() {
    let n = registry().len();
    assert_eq!(select(registry(), &[]).unwrap().len(), n);
}

#[test]
fn no_floating_point_in_the_sources() {
    let hits = float_mentions();
    assert!(hits.is_empty(), "floating point found at {hits:?}");
}
