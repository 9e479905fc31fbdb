//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with --nocapture; the harness result line mirrors it).
//!
//! Criterion 3 asserts the literal reference tables. The enumeration finds
//! four genuine curves beyond those tables, so that single test stays red
//! until the tables are amended; its failure message lists the extra
//! curves with full data.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pqcurves::classify::{
    discrepancy_reports, verify_theorem_jobs, MatchKind, VerifyReport,
};
use pqcurves::dioph::{
    catalan_search, cor25_filter, lemma22_search, lemma23_search, lemma24_search,
    mordell_search, pell_125, pell_125_brute_force, PellSign,
};
use pqcurves::model::{
    closed_form_disc_at, integral_coeffs, Point, TateParameter, TorsionOrder,
    WeierstrassModel,
};

fn coprime(s: i64, t: i64) -> bool {
    s.unsigned_abs().gcd(&t.unsigned_abs()) == 1
}

fn model_from(n: TorsionOrder, s: i64, t: i64) -> WeierstrassModel {
    let [a1, a2, a3, a4, a6] = integral_coeffs(n, s, t);
    WeierstrassModel { a1, a2, a3, a4, a6 }
}

/// Verification reports for every order at the acceptance bounds, computed
/// once and shared by criteria 3, 6 and 7.
fn verification_reports() -> &'static (BTreeMap<u32, VerifyReport>, Duration) {
    static REPORTS: OnceLock<(BTreeMap<u32, VerifyReport>, Duration)> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let start = Instant::now();
        let mut map = BTreeMap::new();
        for n in TorsionOrder::ALL {
            let bound = match n {
                TorsionOrder::Ten | TorsionOrder::Twelve => 200,
                _ => 100,
            };
            map.insert(n.value(), verify_theorem_jobs(n, bound, 4));
        }
        (map, start.elapsed())
    })
}

#[test]
fn criterion_1_closed_form_discriminant_identity() {
    let start = Instant::now();
    let mut checked = 0u64;
    for n in TorsionOrder::ALL {
        for s in -200i64..=200 {
            for t in -200i64..=200 {
                if t == 0 || !coprime(s, t) {
                    continue;
                }
                let closed = closed_form_disc_at(n, s, t);
                let generic = model_from(n, s, t).discriminant();
                assert_eq!(closed, generic, "disc mismatch at N={n} ({s},{t})");
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 1 PASS: closed-form = generic discriminant on {checked} grid points \
         (exact, {:.1}s single-threaded)",
        elapsed.as_secs_f64()
    );
    assert!(elapsed < Duration::from_secs(60), "runtime target exceeded");
}

#[test]
fn criterion_2_torsion_order_at_origin() {
    let start = Instant::now();
    let mut checked = 0u64;
    for n in TorsionOrder::ALL {
        let order = n.value();
        for s in -50i64..=50 {
            for t in 1i64..=50 {
                let Ok(param) = TateParameter::new(n, s, t) else {
                    continue;
                };
                let model = pqcurves::model::integral_model(&param);
                let got = model
                    .order_of_point(&Point::affine(0, 0), 2 * order)
                    .expect("(0,0) is on every integral model")
                    .expect("order within cap");
                assert_eq!(got, order, "torsion order at {param}");
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 2 PASS: order of (0,0) equals N on {checked} grid points \
         ({:.1}s)",
        elapsed.as_secs_f64()
    );
    assert!(elapsed < Duration::from_secs(120), "runtime target exceeded");
}

fn disc_from(sign: i8, factors: &[(i64, u32)]) -> BigInt {
    let mut v = BigInt::from(sign);
    for (p, e) in factors {
        v *= BigInt::from(*p).pow(*e);
    }
    v
}

#[test]
fn criterion_3_theorem_regressions() {
    let (reports, elapsed) = verification_reports();
    let mut failures: Vec<String> = Vec::new();

    // Required matched sporadics, exactly as signed factorizations where
    // the tables are signed (orders 6..9) and by absolute value for the
    // order-5 list.
    let signed_required: [(u32, i64); 3] = [
        (7, -((1i64 << 7) * 13)),
        (8, -((1i64 << 11) * 6561)),
        (9, -((1i64 << 9) * 243)),
    ];
    for (n, disc) in signed_required {
        let report = &reports[&n];
        let hit = report
            .matched
            .iter()
            .any(|(r, k)| *k == MatchKind::Sporadic && r.disc_min.value() == BigInt::from(disc));
        if !hit {
            failures.push(format!("N={n}: required sporadic {disc} not matched"));
        }
    }
    let nine_order6: [(i8, &[(i64, u32)]); 9] = [
        (1, &[(2, 1), (7, 2)]),
        (-1, &[(2, 2), (7, 1)]),
        (1, &[(2, 3), (7, 6)]),
        (1, &[(2, 4), (5, 1)]),
        (-1, &[(2, 4), (3, 3)]),
        (1, &[(2, 6), (17, 1)]),
        (-1, &[(2, 6), (7, 3)]),
        (1, &[(2, 8), (3, 3)]),
        (-1, &[(2, 8), (5, 2)]),
    ];
    for (sign, factors) in nine_order6 {
        let want = disc_from(sign, factors);
        if !reports[&6]
            .matched
            .iter()
            .any(|(r, _)| r.disc_min.value() == want)
        {
            failures.push(format!("N=6: required sporadic {want} not matched"));
        }
    }
    let six_order5: [&[(i64, u32)]; 6] = [
        &[(2, 5), (5, 2)],
        &[(2, 15), (5, 2)],
        &[(3, 5), (5, 2)],
        &[(13, 5), (5, 2)],
        &[(37, 5), (31, 2)],
        &[(7, 5), (5, 3)],
    ];
    for factors in six_order5 {
        let want = disc_from(1, factors);
        if !reports[&5]
            .matched
            .iter()
            .any(|(r, _)| r.disc_min.abs_value() == want)
        {
            failures.push(format!("N=5: required sporadic |{want}| not matched"));
        }
    }

    // Zero violations for N = 4..9; empty enumerations for N = 10, 12.
    for n in [4u32, 5, 6, 7, 8, 9] {
        let report = &reports[&n];
        println!(
            "  N={n} bound={} mode={}: {} matched, {} violations, {} unwitnessed",
            report.bound,
            report.mode,
            report.matched.len(),
            report.violations.len(),
            report.unwitnessed.len()
        );
        for v in &report.violations {
            failures.push(format!(
                "N={n}: enumerated curve beyond the table: {} with disc_min = {}, \
                 conductor = {}, torsion {} (verified)",
                v.param, v.disc_min, v.conductor, v.torsion_verified
            ));
        }
    }
    for n in [10u32, 12] {
        let report = &reports[&n];
        if report.record_count() != 0 {
            failures.push(format!(
                "N={n}: expected an empty enumeration at bound {}, found {} curve(s)",
                report.bound,
                report.record_count()
            ));
        } else {
            println!("  N={n} bound={}: 0 curves (expected 0)", report.bound);
        }
    }

    println!(
        "criterion 3 {}: theorem regressions at B=100/200 ({:.1}s, 4 workers){}",
        if failures.is_empty() { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        if failures.is_empty() {
            String::new()
        } else {
            format!(" - {} deviation(s) from the reference tables", failures.len())
        }
    );
    assert!(*elapsed < Duration::from_secs(600), "runtime target exceeded");
    assert!(
        failures.is_empty(),
        "the reference tables are missing curves that provably exist \
         (each verified: exact minimal model via Kraus-checked reduction, \
         torsion order by explicit group law, conductor via Tate's algorithm):\n  {}",
        failures.join("\n  ")
    );
}

#[test]
fn criterion_4_diophantine_oracle_equality() {
    let start = Instant::now();
    let tup = |vals: &[i64]| -> Vec<BigInt> { vals.iter().map(|&v| BigInt::from(v)).collect() };

    // 16 p^m + 1 = y^n has no admissible solutions.
    let set = lemma22_search(1000, 20).unwrap();
    assert!(set.solutions.is_empty(), "{:?}", set.solutions);

    // x^2 + 2^h = y^n: the sporadic plus the two-power family.
    let set = lemma23_search(12, 10_000).unwrap();
    let mut expected = vec![tup(&[7, 3, 5, 4])];
    for h in 3..=12i64 {
        let half = 1i64 << (h - 2);
        expected.push(tup(&[half - 1, half + 1, h, 2]));
    }
    expected.sort();
    assert_eq!(set.solutions, expected);

    // x^2 - 125 = +-4 y^l: the five-shape list, nothing else.
    let set = lemma24_search(100, 5).unwrap();
    let mut expected = Vec::new();
    for (x, y, l) in [(15i64, 5i64, 2i64), (63, 31, 2), (5, 5, 2), (25, 5, 3)] {
        expected.push(tup(&[x, y, l]));
        expected.push(tup(&[-x, y, l]));
    }
    for l in 2..=5i64 {
        expected.push(tup(&[11, 1, l]));
        expected.push(tup(&[-11, 1, l]));
    }
    expected.sort();
    assert_eq!(set.solutions, expected);
    assert!(set.open_family.is_empty());

    // s^2 - 11s - 1 = +-y^l: the seven tuples, with the two prime-power
    // rejections reported.
    let set = cor25_filter(100, 5).unwrap();
    let mut expected = vec![
        tup(&[13, 5, 2]),
        tup(&[-2, 5, 2]),
        tup(&[37, 31, 2]),
        tup(&[8, 5, 2]),
        tup(&[3, 5, 2]),
        tup(&[-7, 5, 3]),
    ];
    for l in 2..=5i64 {
        expected.push(tup(&[11, 1, l]));
    }
    expected.sort();
    assert_eq!(set.solutions, expected);
    let rejected: Vec<_> = set.rejected.iter().map(|(t, _)| t.clone()).collect();
    assert!(rejected.contains(&tup(&[-26, 31, 2])));
    assert!(rejected.contains(&tup(&[18, 5, 3])));
    assert_eq!(rejected.len(), 2);

    // X^2 - 2000 = Y^3.
    let set = mordell_search(2000, 10_000).unwrap();
    let mut expected = vec![
        tup(&[100, 20]),
        tup(&[-100, 20]),
        tup(&[44, -4]),
        tup(&[-44, -4]),
    ];
    expected.sort();
    assert_eq!(set.solutions, expected);

    // x^m - y^n = 1.
    let set = catalan_search(1000).unwrap();
    let mut expected = vec![tup(&[3, 2, 2, 3]), tup(&[-3, 2, 2, 3])];
    expected.sort();
    assert_eq!(set.solutions, expected);

    let elapsed = start.elapsed();
    println!(
        "criterion 4 PASS: all six Diophantine searches match the expected sets exactly \
         ({:.1}s)",
        elapsed.as_secs_f64()
    );
    assert!(elapsed < Duration::from_secs(60), "runtime target exceeded");
}

#[test]
fn criterion_5_pell_generator_vs_brute_force() {
    let start = Instant::now();
    for sign in [PellSign::Minus4, PellSign::Plus4] {
        let generated = pell_125(sign, 5).unwrap();
        assert_eq!(generated.len(), 5);
        let c = BigInt::from(sign.constant());
        for (x, y) in &generated {
            assert_eq!(x * x - 125i32 * y * y, c, "generated pair fails the equation");
            assert!(y.is_positive() && x.is_positive());
        }
        // Exhaustive search over y <= 10^5 sees a prefix of the generated
        // list; the two must agree exactly on that prefix, with nothing
        // skipped or extra.
        let brute = pell_125_brute_force(sign, 100_000);
        assert!(brute.len() >= 2, "brute force found too few solutions");
        assert_eq!(
            &generated[..brute.len()],
            &brute[..],
            "unit-power generator disagrees with exhaustive search (sign {c})"
        );
        // and every generated y beyond the prefix is out of range
        for (_, y) in &generated[brute.len()..] {
            assert!(y > &BigInt::from(100_000i64));
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 5 PASS: Pell generator equals exhaustive search over y <= 10^5 \
         for both signs ({:.1}s)",
        elapsed.as_secs_f64()
    );
    assert!(elapsed < Duration::from_secs(30), "runtime target exceeded");
}

#[test]
fn criterion_6_local_data_identity() {
    let (reports, _) = verification_reports();
    let mut curves = 0u32;
    let mut primes = 0u32;
    for report in reports.values() {
        for rec in report
            .matched
            .iter()
            .map(|(r, _)| r)
            .chain(report.violations.iter())
        {
            curves += 1;
            assert_eq!(rec.locals.len(), 2);
            for ld in &rec.locals {
                primes += 1;
                assert_eq!(
                    i64::from(ld.f),
                    i64::from(ld.ord_disc) - i64::from(ld.m) + 1,
                    "conductor-exponent identity fails for {} at p={}",
                    rec.param,
                    ld.p
                );
                assert_eq!(
                    ld.f == 1,
                    ld.reduction.is_multiplicative(),
                    "f = 1 must characterize multiplicative reduction ({} at p={})",
                    rec.param,
                    ld.p
                );
                assert!(ld.f >= 1, "bad prime with conductor exponent 0");
            }
        }
    }
    println!(
        "criterion 6 PASS: f = ord(disc) - m + 1 and (f = 1 <=> multiplicative) \
         on {curves} curves / {primes} bad primes (exact)"
    );
}

#[test]
fn criterion_7_szpiro_bounds() {
    let (reports, _) = verification_reports();
    let exponents: [(u32, u32); 6] = [(4, 32), (5, 6), (6, 6), (7, 3), (8, 7), (9, 5)];
    for (n, k) in exponents {
        let report = &reports[&n];
        let mut max_ratio = f64::MIN;
        for rec in report
            .matched
            .iter()
            .map(|(r, _)| r)
            .chain(report.violations.iter())
        {
            // exact integer comparison, never floats
            assert!(
                rec.disc_min.abs_value() < rec.conductor.value().pow(k),
                "|disc| >= N^{k} for {} (disc {}, conductor {})",
                rec.param,
                rec.disc_min,
                rec.conductor
            );
            max_ratio = max_ratio.max(rec.szpiro_ratio);
        }
        println!("  N={n}: max log|disc|/log N = {max_ratio:.4} < {k}");
    }
    println!("criterion 7 PASS: |disc_min| < N^K exactly for K = 32, 6, 6, 3, 7, 5");
}

#[test]
fn criterion_8_c4_c6_discriminant_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x70_71_63_75);
    let mut done = 0;
    while done < 1000 {
        let n = TorsionOrder::ALL[rng.gen_range(0..8)];
        let s = rng.gen_range(-1000i64..=1000);
        let t = rng.gen_range(-1000i64..=1000);
        if t == 0 {
            continue;
        }
        let inv = model_from(n, s, t).invariants();
        assert_eq!(
            &inv.c4 * &inv.c4 * &inv.c4 - &inv.c6 * &inv.c6,
            1728i32 * &inv.disc,
            "identity fails at N={n} ({s},{t})"
        );
        done += 1;
    }
    println!("criterion 8 PASS: c4^3 - c6^2 = 1728 disc on 1000 seeded samples (exact)");
}

#[test]
fn criterion_9_conductor_discrepancy_report() {
    let reports = discrepancy_reports();
    assert_eq!(reports.len(), 2);
    for rep in &reports {
        let tab: Vec<String> = rep
            .tabulated
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        println!(
            "  {}: computed conductor {} vs tabulated {} (exponents {})",
            rep.param,
            rep.computed_conductor,
            tab.join(" * "),
            if rep.exponents_match { "agree" } else { "differ, reported as computed" }
        );
        assert!(
            rep.support_matches,
            "prime support must be exactly {{2, 3}} for N={}",
            rep.n.value()
        );
    }
    // frozen computed values: 2^4 * 3 = 48 and 2 * 3^3 = 54
    assert_eq!(reports[0].computed_conductor.value(), BigInt::from(48));
    assert_eq!(reports[1].computed_conductor.value(), BigInt::from(54));
    println!(
        "criterion 9 PASS: recomputed conductors have prime support {{2, 3}}; \
         exponents reported as computed"
    );
}

/// Stability stress run: raising the bound to 500 must not change the
/// verification outcome for the finite lists. Slow; run explicitly with
/// `cargo test --test acceptance -- --ignored`.
#[test]
#[ignore]
fn stability_bound_500() {
    for n in [6u32, 7, 8, 9, 10, 12] {
        let order = TorsionOrder::from_value(n).unwrap();
        let at_100 = verify_theorem_jobs(order, 100, 8);
        let at_500 = verify_theorem_jobs(order, 500, 8);
        let discs = |r: &VerifyReport| -> Vec<BigInt> {
            let mut v: Vec<BigInt> = r
                .matched
                .iter()
                .map(|(rec, _)| rec.disc_min.value())
                .chain(r.violations.iter().map(|rec| rec.disc_min.value()))
                .collect();
            v.sort();
            v
        };
        assert_eq!(discs(&at_100), discs(&at_500), "new curves appeared for N={n}");
    }
    println!("stability PASS: bounds 100 and 500 agree for N = 6..10, 12");
}
