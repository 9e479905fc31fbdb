//! Enumerate every curve with a given torsion order and a conductor with
//! exactly two prime divisors, up to a parameter height bound.
//!
//! Run with: cargo run --example enumerate_families [N] [bound]

use pqcurves::classify::{enumerate_jobs, ConductorMode};
use pqcurves::model::TorsionOrder;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|v| v.parse().ok()).unwrap_or(6);
    let bound: i64 = args.next().and_then(|v| v.parse().ok()).unwrap_or(100);
    let order = TorsionOrder::from_value(n).expect("N in {4,...,10,12}");

    let records = enumerate_jobs(order, bound, ConductorMode::PrimePower, 4);
    println!(
        "torsion order {n}, height bound {bound}: {} curve(s)",
        records.len()
    );
    for rec in &records {
        println!(
            "  lambda = {}/{}  disc_min = {:<22}  conductor = {:<10}  szpiro {:.4}",
            rec.param.s(),
            rec.param.t(),
            rec.disc_min.to_string(),
            rec.conductor.value(),
            rec.szpiro_ratio
        );
    }
}
