use std::process::{Command, Output};

use hypharm_core::Rational;
use serde_json::Value;

fn hypharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypharm"))
        .args(args)
        .output()
        .expect("spawn hypharm")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn verify_all_at_n_zero_passes() {
    let o = hypharm(&["verify", "--suite", "all", "--n-max", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["summary"]["failed"], 0);
    for c in r["cells"].as_array().unwrap() {
        assert_eq!(c["n"], 0);
        if c["status"] == "skipped" {
            assert!(!c["reason"].as_str().unwrap().is_empty());
        }
    }
}

#[test]
fn summary_matches_cells_and_order() {
    let o = hypharm(&["verify", "--suite", "table2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let cells = r["cells"].as_array().unwrap();
    let count = |s: &str| cells.iter().filter(|c| c["status"] == s).count();
    assert_eq!(r["summary"]["total"], cells.len());
    assert_eq!(r["summary"]["passed"], count("pass"));
    assert_eq!(r["summary"]["skipped"], count("skipped"));
    assert_eq!(cells.len(), 21 * 7);
    let ids: Vec<&str> = cells.iter().map(|c| c["record_id"].as_str().unwrap()).collect();
    assert_eq!(ids[0], "t2e1");
    assert_eq!(ids[7 * 9], "t2e10");
    assert_eq!(ids.last(), Some(&"t2e21"));
}

#[test]
fn rationals_are_exact_strings() {
    let o = hypharm(&["verify", "--suite", "theorems", "--n-max", "3", "--param-max", "1"]);
    let r = json(&o);
    let mut fractions = 0;
    for c in r["cells"].as_array().unwrap() {
        for side in ["lhs", "rhs"] {
            if let Some(v) = c.get(side) {
                let s = v.as_str().expect("rational serialized as a string");
                let q: Rational = s.parse().unwrap();
                assert_eq!(q.to_string(), s);
                fractions += usize::from(s.contains('/'));
            }
        }
    }
    assert!(fractions > 0);
}

#[test]
fn table_one_reports_disputed_entries() {
    let o = hypharm(&["verify", "--suite", "table1"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["summary"]["failed"], r["summary"]["disputed"]);
    let mut ids: Vec<&str> = r["cells"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["record_id"].as_str().unwrap())
        .collect();
    ids.dedup();
    assert_eq!(ids, ["t1e5", "t1e6", "t1e7", "t1e22"]);
}

#[test]
fn bad_suite_and_caps_are_usage_errors() {
    assert_eq!(hypharm(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(hypharm(&["verify", "--n-max", "9"]).status.code(), Some(2));
    assert_eq!(hypharm(&["verify", "--n-max", "-1"]).status.code(), Some(2));
    let o = hypharm(&["verify", "--suite", "table2", "--n-max", "7", "--unsafe-large"]);
    assert_eq!(o.status.code(), Some(0));
    let max_n = json(&o)["cells"].as_array().unwrap().iter().map(|c| c["n"].as_i64().unwrap()).max();
    assert_eq!(max_n, Some(7));
}

#[test]
fn io_failure_exits_three() {
    let o = hypharm(&["verify", "--suite", "xi", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn out_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = hypharm(&["verify", "--suite", "xi", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(r["suite"], "xi");
    assert_eq!(r["summary"]["failed"], 0);
}

#[test]
fn tables_render() {
    let o = hypharm(&["table", "1", "--n-max", "2", "--format", "markdown"]);
    let rows = stdout(&o).lines().filter(|l| l.starts_with("| t1e")).count();
    assert_eq!(rows, 26);
    let o = hypharm(&["table", "2", "--n-max", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o)["rows"].as_array().unwrap().len();
    assert_eq!(rows, 21);
    assert_eq!(hypharm(&["table", "3"]).status.code(), Some(2));
}

#[test]
fn derive_traces() {
    let o = hypharm(&["derive", "chu", "lambda=0", "mu=0", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let d = json(&o);
    assert_eq!(d["lhs"]["value"], "6");
    assert_eq!(d["rhs"]["value"], "6");
    assert_eq!(d["deriv_match"], true);
    let o = hypharm(&["derive", "wh_5", "0", "0", "0", "0", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("  match").count(), 2);
    assert_eq!(hypharm(&["derive", "chu", "0", "0", "--n", "0"]).status.code(), Some(0));
}

#[test]
fn derive_domain_errors_name_the_constraint() {
    let o = hypharm(&["derive", "ps_lam", "1", "0", "0", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lambda > 1 + mu + nu"));
    let o = hypharm(&["derive", "chu", "mu=0", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lambda"));
    assert_eq!(hypharm(&["derive", "nope", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn limits_probe() {
    let o = hypharm(&[
        "limits", "reflex", "--mu", "3", "--nu", "2", "--n", "3", "--ys", "10,100,1000", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["monotone_decreasing_magnitude"], true);
    let mags: Vec<Rational> = r["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().parse::<Rational>().unwrap().abs())
        .collect();
    assert!(mags.windows(2).all(|w| w[1] < w[0]));

    let o = hypharm(&["limits", "--n", "0", "--ys", "10,100", "--format", "json"]);
    let r = json(&o);
    assert!(r["values"].as_array().unwrap().iter().all(|v| v == "0"));
    assert_eq!(r["converged"], true);

    assert_eq!(hypharm(&["limits", "--n", "2", "--ys", "100,10"]).status.code(), Some(2));
    assert_eq!(hypharm(&["limits", "--n", "2", "--ys", "10,10"]).status.code(), Some(2));
}

#[test]
fn manifest_lists_every_record() {
    let o = hypharm(&["manifest"]);
    assert_eq!(o.status.code(), Some(0));
    let m = json(&o);
    let entries = m.as_array().unwrap();
    assert_eq!(entries.len(), 62);
    let thm2 = entries.iter().find(|e| e["id"] == "thm2").unwrap();
    assert_eq!(thm2["source"], "Theorem 2");
    assert!(thm2["constraints"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c == "lambda > 1 + mu + nu"));
}
