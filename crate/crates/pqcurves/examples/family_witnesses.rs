//! Construct explicit witnesses for the symbolic columns of the order-4
//! discriminant table: each column pins |disc| = p^a q^b shapes to an
//! arithmetic side condition (2^(k-4) +- 1 prime, 16p +- 1 a prime power,
//! and so on), and a witness exists exactly when the side condition holds.
//!
//! Run with: cargo run --example family_witnesses

use pqcurves::classify::{family_witness, TableFamily};

fn main() {
    let cases: Vec<(TableFamily, u32, Option<i64>, &str)> = vec![
        (TableFamily::TwoPow2kPlus4TimesP, 5, None, "k=5 (p = 2^1 + 1 = 3)"),
        (TableFamily::TwoPow2kPlus4TimesP, 7, None, "k=7 (p = 2^3 +- 1: 7 works)"),
        (TableFamily::TwoPow4kTimesP, 1, None, "k=1 (p = 2^5 - 1 = 31)"),
        (TableFamily::TwoPow4kTimesP, 2, None, "k=2 (63 and 65 both composite)"),
        (TableFamily::P4TimesQb, 0, Some(3), "p=3 (16*3 + 1 = 7^2)"),
        (TableFamily::P4kTimesQ, 3, Some(3), "p=3, k=3 (16*27 + 1 = 433 prime)"),
        (TableFamily::P2kTimesQ, 1, Some(3), "p=3, k=1 (25 is not prime)"),
        (TableFamily::P2kTimesQ, 1, Some(5), "p=5, k=1 (41 is prime)"),
        (TableFamily::P2kTimesQ, 2, Some(3), "p=3, k=2 (3^4 + 16 = 97 prime)"),
    ];
    for (family, k, p, label) in cases {
        match family_witness(family, k, p) {
            Ok(Some(rec)) => println!(
                "{label}: witness {} with disc_min = {}, conductor = {}",
                rec.param, rec.disc_min, rec.conductor
            ),
            Ok(None) => println!("{label}: side condition fails, no witness"),
            Err(e) => println!("{label}: {e}"),
        }
    }
}
