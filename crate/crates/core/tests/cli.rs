use std::process::Command;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The documented envelope of `--format json`.
#[derive(Serialize, Deserialize)]
struct Report {
    schema: String,
    command: String,
    p: u32,
    result: Value,
}

fn verp(args: &[&str]) -> (i32, String, String) {
    let dir = std::env::temp_dir().join(format!("verp-cli-test-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_verp"))
        .args(args)
        .env("VERP_CACHE_DIR", &dir)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn fusion_example() {
    let (code, out, _) = verp(&["fusion", "--p", "5", "L2", "L2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "L1 + L3");
}

#[test]
fn free_lie_example() {
    let (code, out, _) = verp(&["free-lie", "--p", "5", "L2", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "E_5 = L4"), "{out}");
}

#[test]
fn pbw_gap_example() {
    let (code, out, _) = verp(&["pbw-gap", "--p", "5", "L2", "--n", "5", "--degree", "5"]);
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    assert!(last.trim_start().starts_with('5') && last.trim_end().ends_with("L4"), "{out}");
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["--format", "json", "koszul", "L2", "--degree", "6"],
        vec!["--format", "json", "pjacobi", "--algebra", "free:L2:5"],
        vec!["--format", "json", "sympow", "--m", "3"],
    ] {
        let (code, out, _) = verp(&args);
        assert_eq!(code, 0);
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(r.schema, "verp-report/1");
        assert_eq!(r.p, 5);
        let again = serde_json::to_string_pretty(&r).unwrap();
        assert_eq!(again.trim(), out.trim());
    }
    let (_, out, _) = verp(&["--format", "json", "pjacobi", "--algebra", "free:L2:5"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["gamma_kernel_dim"], 2);
    assert_eq!(v["result"]["hom_l2_dim"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(verp(&["fusion", "L2"]).0, 1);
    assert_eq!(verp(&["--p", "4", "fusion", "L1", "L1"]).0, 1);
    assert_eq!(verp(&["fusion", "L9", "L1"]).0, 1);
    assert_eq!(verp(&["pbw-gap", "L2", "--n", "3", "--degree", "4"]).0, 2);
    assert_eq!(verp(&["koszul", "L4"]).0, 2);
    assert_eq!(verp(&["--help"]).0, 0);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = verp(&["selftest", "--seed", "11"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 12);
}
