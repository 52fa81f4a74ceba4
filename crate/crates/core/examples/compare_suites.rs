//! Runs the oracle comparison suites and prints one line per suite.

use ctl_fragments::compare::compare;

fn main() {
    let seeds = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    let report = compare(seeds);
    for s in &report.suites {
        println!("{:<40} cases={:<5} mismatches={}", s.name, s.cases, s.mismatches.len());
        if let Some(m) = s.mismatches.first() {
            println!("    first: seed {} {}", m.seed, m.detail);
        }
    }
}
