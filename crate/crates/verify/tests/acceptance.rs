//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//!
//! Pass criterion numbers to run a subset: `cargo test --test acceptance -- 3 9`.

use std::process::ExitCode;

use skein_verify::CRITERIA;

fn main() -> ExitCode {
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for c in CRITERIA
        .iter()
        .filter(|c| wanted.is_empty() || wanted.contains(&c.number))
    {
        let (outcome, elapsed) = c.run();
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict}  {} ({elapsed:.1?})", c.number, c.title);
        for line in &outcome.details {
            println!("    {line}");
        }
        if !outcome.passed {
            failed.push(c.number);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
