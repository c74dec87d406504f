//! Structural checks on the commutator system when s = 1.

use walled_brauer::scalars::Delta;
use walled_brauer::solver::section5_suite;
use walled_brauer::Bounds;

fn main() -> Result<(), walled_brauer::Error> {
    for r in 2..=4 {
        let report = section5_suite(r, &Delta::Generic, &Bounds::default())?;
        println!(
            "r = {r}: |C| = {}, |Lambda| = {}, selected rank {} of expected {}",
            report.cycle_type_count,
            report.lambda_count,
            report.selected_rank,
            report.expected_rank
        );
        for check in &report.checks {
            println!(
                "  [{}] {}",
                if check.passed { "ok" } else { "FAIL" },
                check.name
            );
        }
    }
    Ok(())
}
