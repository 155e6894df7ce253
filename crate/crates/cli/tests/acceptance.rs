//! One line per acceptance criterion. Runs without the libtest harness so the
//! verdicts are always printed.

use flagj_cli::suites::{run_one, SUITES};

fn main() {
    let mut failed = Vec::new();
    for name in SUITES {
        let report = run_one(name).expect("listed suite runs");
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        println!("criterion {} ({}): {verdict}", report.criterion, report.suite);
        for c in report.checks.iter().filter(|c| !c.pass) {
            println!("    failed: {} {}", c.name, c.detail);
        }
        if !report.pass {
            failed.push(report.criterion);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
