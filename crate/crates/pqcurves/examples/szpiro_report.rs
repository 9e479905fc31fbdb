//! Largest Szpiro ratios log|disc_min| / log N over the enumerated curves
//! of every torsion order, checked exactly against the established
//! per-order exponents.
//!
//! Run with: cargo run --release --example szpiro_report

use pqcurves::classify::{enumerate_jobs, expected_table, szpiro_check};
use pqcurves::model::TorsionOrder;

fn main() {
    for n in TorsionOrder::ALL {
        let table = expected_table(n);
        let records = enumerate_jobs(n, 100, table.mode, 4);
        let Some(k) = table.szpiro_exponent else {
            println!("N={:>2}: {} record(s), no exponent to check", n.value(), records.len());
            continue;
        };
        let report = szpiro_check(&records, k).unwrap();
        match (report.max_ratio, report.worst) {
            (Some(r), Some(worst)) => println!(
                "N={:>2}: {} record(s), max ratio {:.4} at {}, |disc| < N^{} holds: {}",
                n.value(),
                report.checked,
                r,
                worst,
                k,
                report.all_within()
            ),
            _ => println!("N={:>2}: no records", n.value()),
        }
    }
}
