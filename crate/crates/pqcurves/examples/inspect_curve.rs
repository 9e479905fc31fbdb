//! Walk through everything the library computes for a single curve:
//! integral model, invariants, torsion check, minimal model, per-prime
//! reduction data, and the conductor.
//!
//! Run with: cargo run --example inspect_curve

use num_bigint::BigInt;
use pqcurves::localdata::conductor;
use pqcurves::model::{integral_model, Point, TateParameter, TorsionOrder};

fn main() {
    // lambda = 2 parametrizes the unique 7-torsion curve whose conductor
    // has exactly two prime divisors.
    let param = TateParameter::new(TorsionOrder::Seven, 2, 1).expect("nondegenerate");
    let model = integral_model(&param);
    println!("parameter {param}, integral model {model}");

    let inv = model.invariants();
    println!("c4 = {}, c6 = {}, disc = {}", inv.c4, inv.c6, inv.disc);
    assert_eq!(&inv.c4 * &inv.c4 * &inv.c4 - &inv.c6 * &inv.c6, 1728 * &inv.disc);

    let origin = Point::affine(0, 0);
    let order = model.order_of_point(&origin, 20).unwrap();
    println!("order of (0,0): {order:?}");

    let global = conductor(&model).expect("nonsingular");
    println!(
        "minimal model {} (u = {}), minimal disc {}",
        global.minimal_model, global.scaling, global.disc_min
    );
    for ld in &global.locals {
        println!(
            "  p = {}: {} with f = {}, m = {} components, {}",
            ld.p, ld.kodaira, ld.f, ld.m, ld.reduction
        );
    }
    println!("conductor {}", global.conductor.value());
    assert_eq!(global.conductor.value(), BigInt::from(26));
}
