//! One PASS/FAIL line per acceptance criterion. Criterion 13 (p = 7) runs
//! when `VERP_STRETCH=1`. Runs without the test harness so the lines are
//! never captured.

use verp::acceptance::{run, Options, TITLES};

fn options() -> Options {
    let stretch = std::env::var("VERP_STRETCH").is_ok_and(|v| v == "1" || v.eq_ignore_ascii_case("true"));
    let seed = std::env::var("VERP_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(verp::acceptance::DEFAULT_SEED);
    Options { seed, stretch }
}

fn main() {
    let opts = options();
    let mut failed = Vec::new();
    for id in 1..=TITLES.len() {
        let o = run(id, &opts);
        println!("{}", o.line());
        for c in o.checks.iter().filter(|c| !c.passed) {
            println!("    failed: {} {}", c.label, c.mismatch.as_deref().unwrap_or(""));
        }
        if let Some(e) = &o.error {
            println!("    error: {e}");
        }
        if !o.passed && !o.skipped {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
