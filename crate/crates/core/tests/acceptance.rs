//! Runs every acceptance criterion at full size and prints one line each.
//! Built without the libtest harness so the lines are never captured.

use std::process::ExitCode;

use tilting_core::acceptance::Suite;

fn main() -> ExitCode {
    let mut suite = Suite::new(false);
    let mut failed = Vec::new();
    for id in Suite::ids() {
        let outcome = suite.run(id);
        println!("{outcome}");
        if !outcome.passed {
            failed.push(outcome.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
