//! Check the enumerated curves of every torsion order against the expected
//! discriminant tables, then recompute the two questionable conductors.
//!
//! Any "violation" printed here is a curve whose conductor genuinely has
//! exactly two prime divisors but whose minimal discriminant appears in no
//! row of the reference table.
//!
//! Run with: cargo run --release --example verify_tables

use pqcurves::classify::{discrepancy_reports, verify_theorem_jobs};
use pqcurves::model::TorsionOrder;

fn main() {
    for n in TorsionOrder::ALL {
        let bound = match n {
            TorsionOrder::Ten | TorsionOrder::Twelve => 200,
            _ => 100,
        };
        let report = verify_theorem_jobs(n, bound, 4);
        println!(
            "N={:>2} bound={bound} [{}]: {} matched, {} violation(s), {} unwitnessed, max szpiro {}",
            n.value(),
            report.mode,
            report.matched.len(),
            report.violations.len(),
            report.unwitnessed.len(),
            report
                .max_szpiro_ratio
                .map(|r| format!("{r:.4}"))
                .unwrap_or_else(|| "-".into()),
        );
        for rec in &report.violations {
            println!(
                "    beyond the table: {} with disc_min = {}, conductor = {}",
                rec.param, rec.disc_min, rec.conductor
            );
        }
    }
    println!();
    for rep in discrepancy_reports() {
        println!(
            "{}: computed conductor {} (tabulated value claims different exponents; support matches: {})",
            rep.param,
            rep.computed_conductor,
            rep.support_matches
        );
    }
}
