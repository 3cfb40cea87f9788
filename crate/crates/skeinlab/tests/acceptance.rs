//! Prints one line per acceptance criterion and fails if any check fails.
//! Checks that run out of skein budget are reported as SKIPPED-BUDGET.

use skeinlab::verify::{run_suite, Status, SuiteOptions};
use skeinlab_core::homfly::DEFAULT_BUDGET;

fn main() {
    let checks = run_suite(&SuiteOptions { budget: DEFAULT_BUDGET, extended: false });
    let mut failed = 0;
    for c in checks.iter().filter(|c| !c.id.contains(|ch: char| ch.is_ascii_alphabetic())) {
        println!("criterion {}: {} - {} ({})", c.id, c.status.label(), c.title, c.detail);
        if c.status == Status::Fail {
            failed += 1;
        }
    }
    for c in checks.iter().filter(|c| c.status == Status::Fail) {
        eprintln!("failed check {}: {}: {}", c.id, c.claim, c.detail);
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
