//! Generate solutions of the Pell equation x^2 - 125 y^2 = +-4 from powers
//! of the fundamental unit (11 + sqrt(125))/2 and cross-check the list
//! against exhaustive search.
//!
//! Run with: cargo run --example pell_solutions

use pqcurves::dioph::{pell_125, pell_125_brute_force, PellSign};

fn main() {
    for sign in [PellSign::Minus4, PellSign::Plus4] {
        let c = sign.constant();
        let generated = pell_125(sign, 5).unwrap();
        println!("x^2 - 125 y^2 = {c}: first 5 solutions from the unit power generator");
        for (x, y) in &generated {
            println!("  ({x}, {y})");
        }
        let brute = pell_125_brute_force(sign, 100_000);
        println!("  exhaustive search over y <= 10^5 found {} of them", brute.len());
        assert_eq!(
            &generated[..brute.len()],
            &brute[..],
            "generator disagrees with brute force"
        );
        println!();
    }
}
