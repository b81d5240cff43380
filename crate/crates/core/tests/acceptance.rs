//! Runs every acceptance criterion at its stated size and time budget and
//! prints one PASS/FAIL line per criterion, followed by its evidence.
//!
//! Criteria 2, 7 and 8 are known to fail as stated; the reasons are recorded
//! in the decisions ledger and in the README. They still run in full and are
//! reported FAIL. The target itself fails only on an unexpected FAIL.

use std::process::ExitCode;

use dellac::verify::{run, Suite};

const KNOWN_FAILURES: [usize; 3] = [2, 7, 8];

fn main() -> ExitCode {
    let reports = run(Suite::All, usize::MAX);
    for r in &reports {
        print!("{r}");
    }
    println!();
    for r in &reports {
        println!("{} criterion {}: {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.name);
    }
    let unexpected: Vec<usize> = reports
        .iter()
        .filter(|r| !r.pass && !KNOWN_FAILURES.contains(&r.id))
        .map(|r| r.id)
        .collect();
    let recovered: Vec<usize> = reports
        .iter()
        .filter(|r| r.pass && KNOWN_FAILURES.contains(&r.id))
        .map(|r| r.id)
        .collect();
    if !recovered.is_empty() {
        println!("criteria {recovered:?} were expected to fail but passed");
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
