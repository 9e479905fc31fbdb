//! Exhaustive enumeration over the (s, t) grid, conductor-shape filtering,
//! Szpiro-ratio checks, and regression verification against the expected
//! discriminant table for each torsion order.
//!
//! The enumeration never factors a full discriminant: the closed form is a
//! product of small polynomial factors, each of which is factored on its
//! own and merged. Primes carrying fewer than 12 powers of the discriminant
//! can never be removed by minimalization, which gives a cheap rejection
//! test before any minimal model is computed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::arith::{self, Factorization};
use crate::error::{Error, Result};
use crate::localdata::{
    conductor_with_factored_disc, minimalize_with_factored_disc, tate_local, GlobalData,
    LocalData,
};
use crate::model::{
    closed_form_factors, integral_model, Point, TateParameter, TorsionOrder, WeierstrassModel,
};

/// Conductor-shape hypothesis: exactly two primes, either both exponent 1
/// (N = p q) or with arbitrary positive exponents (N = p^a q^b).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConductorMode {
    Squarefree,
    PrimePower,
}

impl fmt::Display for ConductorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConductorMode::Squarefree => write!(f, "squarefree"),
            ConductorMode::PrimePower => write!(f, "prime-power"),
        }
    }
}

/// One classified curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveRecord {
    pub param: TateParameter,
    pub minimal_model: WeierstrassModel,
    pub disc_min: Factorization,
    pub conductor: Factorization,
    pub locals: Vec<LocalData>,
    /// log |disc_min| / log N, for reporting; bound checks are exact.
    pub szpiro_ratio: f64,
    pub torsion_verified: u32,
}

impl CurveRecord {
    /// Exact check |disc_min| < N^k.
    pub fn szpiro_within(&self, k: u32) -> bool {
        self.disc_min.abs_value() < self.conductor.value().pow(k)
    }
}

/// Builds the full record for one parameter, or None when the parameter is
/// degenerate or the conductor does not have exactly two prime divisors
/// (with both exponents 1 in squarefree mode).
fn record_for_pair(n: TorsionOrder, s: i64, t: i64, mode: ConductorMode) -> Option<CurveRecord> {
    let param = TateParameter::new(n, s, t).ok()?;
    let disc_fact = factored_closed_form_disc(&param);
    // A prime with fewer than 12 powers of the discriminant survives any
    // minimalization, so three such primes already disqualify the curve.
    let permanent = disc_fact
        .factors()
        .iter()
        .filter(|(_, e)| *e < 12)
        .count();
    if permanent > 2 || disc_fact.num_primes() < 2 {
        return None;
    }
    let model = integral_model(&param);
    // Minimalize first: only curves whose minimal discriminant has exactly
    // two prime divisors are worth running Tate's algorithm on.
    let (min_model, scaling, min_fact) =
        minimalize_with_factored_disc(&model, &disc_fact).ok()?;
    if min_fact.num_primes() != 2 {
        return None;
    }
    let mut locals = Vec::with_capacity(2);
    let mut cond = Vec::with_capacity(2);
    for (prime, e) in min_fact.factors() {
        let ld = tate_local(&min_model, prime).ok()?;
        debug_assert_eq!(ld.ord_disc, *e);
        cond.push((prime.clone(), ld.f));
        locals.push(ld);
    }
    let conductor = Factorization::new(1, cond).expect("conductor factors are prime");
    let global = GlobalData {
        minimal_model: min_model,
        scaling,
        disc_min: min_fact,
        conductor,
        locals,
    };
    finish_record(param, model, global, mode)
}

fn finish_record(
    param: TateParameter,
    model: WeierstrassModel,
    global: GlobalData,
    mode: ConductorMode,
) -> Option<CurveRecord> {
    if mode == ConductorMode::Squarefree && !global.conductor.is_squarefree() {
        return None;
    }
    let n = param.torsion_order().value();
    let order = model
        .order_of_point(&Point::affine(0, 0), 2 * n)
        .expect("(0,0) lies on every integral model")
        .expect("torsion point order exceeds twice the expected order");
    assert_eq!(order, n, "torsion order mismatch at {param}");
    let szpiro_ratio = global.szpiro_ratio();
    Some(CurveRecord {
        param,
        minimal_model: global.minimal_model,
        disc_min: global.disc_min,
        conductor: global.conductor,
        locals: global.locals,
        szpiro_ratio,
        torsion_verified: order,
    })
}

/// Factorization of the closed-form discriminant, assembled factor by
/// factor (each factor value is small even when the product is enormous).
fn factored_closed_form_disc(param: &TateParameter) -> Factorization {
    let mut sign = 1i8;
    let mut merged: BTreeMap<BigInt, u32> = BTreeMap::new();
    for (value, exp) in closed_form_factors(param.torsion_order(), param.s(), param.t()) {
        if value.is_negative() && exp % 2 == 1 {
            sign = -sign;
        }
        let mag = value.abs();
        if mag.is_one() {
            continue;
        }
        let f = arith::factor(&mag).expect("nonzero factor");
        for (p, e) in f.factors() {
            *merged.entry(p.clone()).or_insert(0) += e * exp;
        }
    }
    Factorization::new(sign, merged.into_iter().collect()).expect("valid factorization")
}

/// All curves with a rational point of order `n`, parameter height at most
/// `bound` (|s| <= bound, 0 < t <= bound, gcd(s,t) = 1), whose conductor has
/// exactly two distinct prime divisors; deduplicated by canonical minimal
/// model. Deterministic output order (sorted by minimal model).
pub fn enumerate(n: TorsionOrder, bound: i64, mode: ConductorMode) -> Vec<CurveRecord> {
    enumerate_jobs(n, bound, mode, 1)
}

/// `enumerate` with the (s, t) grid partitioned across `jobs` workers.
/// The merge is deterministic regardless of the worker count.
pub fn enumerate_jobs(
    n: TorsionOrder,
    bound: i64,
    mode: ConductorMode,
    jobs: usize,
) -> Vec<CurveRecord> {
    let per_t = |t: i64| -> Vec<CurveRecord> {
        let mut found = Vec::new();
        for s in -bound..=bound {
            if s.unsigned_abs().gcd(&t.unsigned_abs()) != 1 {
                continue;
            }
            if let Some(rec) = record_for_pair(n, s, t, mode) {
                found.push(rec);
            }
        }
        found
    };
    let rows: Vec<Vec<CurveRecord>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| (1..=bound).into_par_iter().map(per_t).collect())
    } else {
        (1..=bound).map(per_t).collect()
    };
    let mut dedup: BTreeMap<WeierstrassModel, CurveRecord> = BTreeMap::new();
    for rec in rows.into_iter().flatten() {
        dedup.entry(rec.minimal_model.clone()).or_insert(rec);
    }
    dedup.into_values().collect()
}

/// A symbolic discriminant family |disc| = p^a q^b with an arithmetic side
/// condition, as listed in the order-4 table and the order-5 open shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscFamily {
    /// 2^(2k+4) * p with p = 2^(k-4) +- 1, k >= 4.
    TwoPow2kPlus4TimesP,
    /// 2^(2k+4) * p^4, same side condition.
    TwoPow2kPlus4TimesP4,
    /// 2^(4k) * p with p = 2^(k+4) +- 1, k >= 1.
    TwoPow4kTimesP,
    /// 2^(4k) * p^7, same side condition.
    TwoPow4kTimesP7,
    /// p^4 * q^b with 16p +- 1 = q^b, b >= 1.
    P4TimesQb,
    /// p^4 * q^(7b) with 16p +- 1 = q^b, b > 1.
    P4TimesQ7b,
    /// p^(4k) * q with q = 16p^k +- 1, k >= 1.
    P4kTimesQ,
    /// p^(4k) * q^7 with q = 16p^k +- 1, k > 1.
    P4kTimesQ7,
    /// p^(2k) * q with q = p^(2k) + 16, k >= 1.
    P2kTimesQ,
    /// p^(5k) * q^(2l+1); exponents >= 3 on q belong to the unresolved
    /// case and are flagged as open.
    P5kTimesQOdd,
}

impl DiscFamily {
    pub fn name(self) -> &'static str {
        match self {
            DiscFamily::TwoPow2kPlus4TimesP => "2^(2k+4)*p, p=2^(k-4)+-1, k>=4",
            DiscFamily::TwoPow2kPlus4TimesP4 => "2^(2k+4)*p^4, p=2^(k-4)+-1, k>=4",
            DiscFamily::TwoPow4kTimesP => "2^(4k)*p, p=2^(k+4)+-1, k>=1",
            DiscFamily::TwoPow4kTimesP7 => "2^(4k)*p^7, p=2^(k+4)+-1, k>=1",
            DiscFamily::P4TimesQb => "p^4*q^b, 16p+-1=q^b",
            DiscFamily::P4TimesQ7b => "p^4*q^(7b), 16p+-1=q^b, b>1",
            DiscFamily::P4kTimesQ => "p^(4k)*q, q=16p^k+-1",
            DiscFamily::P4kTimesQ7 => "p^(4k)*q^7, q=16p^k+-1, k>1",
            DiscFamily::P2kTimesQ => "p^(2k)*q, q=p^(2k)+16",
            DiscFamily::P5kTimesQOdd => "p^(5k)*q^(2l+1)",
        }
    }

    /// Does |disc| = pa^ea * pb^eb fit this family shape (in some order of
    /// the two primes)? Returns the open-family flag on a match.
    fn matches(self, pa: &BigInt, ea: u32, pb: &BigInt, eb: u32) -> Option<bool> {
        let ordered = [(pa, ea, pb, eb), (pb, eb, pa, ea)];
        let two = BigInt::from(2);
        for (p, a, q, b) in ordered {
            let hit = match self {
                DiscFamily::TwoPow2kPlus4TimesP | DiscFamily::TwoPow2kPlus4TimesP4 => {
                    let want_b = if self == DiscFamily::TwoPow2kPlus4TimesP { 1 } else { 4 };
                    *p == two && b == want_b && a >= 12 && a % 2 == 0 && {
                        let k = (a - 4) / 2;
                        k >= 4 && (q == &(two.pow(k - 4) + 1i32) || q == &(two.pow(k - 4) - 1i32))
                    }
                }
                DiscFamily::TwoPow4kTimesP | DiscFamily::TwoPow4kTimesP7 => {
                    let want_b = if self == DiscFamily::TwoPow4kTimesP { 1 } else { 7 };
                    *p == two && b == want_b && a % 4 == 0 && a >= 4 && {
                        let k = a / 4;
                        q == &(two.pow(k + 4) + 1i32) || q == &(two.pow(k + 4) - 1i32)
                    }
                }
                DiscFamily::P4TimesQb => {
                    a == 4 && {
                        let qb = q.pow(b);
                        qb == 16i32 * p + 1i32 || qb == 16i32 * p - 1i32
                    }
                }
                DiscFamily::P4TimesQ7b => {
                    a == 4 && b % 7 == 0 && b / 7 >= 2 && {
                        let qb = q.pow(b / 7);
                        qb == 16i32 * p + 1i32 || qb == 16i32 * p - 1i32
                    }
                }
                DiscFamily::P4kTimesQ | DiscFamily::P4kTimesQ7 => {
                    let (want_b, min_k) = if self == DiscFamily::P4kTimesQ { (1, 1) } else { (7, 2) };
                    b == want_b && a % 4 == 0 && a / 4 >= min_k && {
                        let pk = p.pow(a / 4);
                        q == &(16i32 * &pk + 1i32) || q == &(16i32 * &pk - 1i32)
                    }
                }
                DiscFamily::P2kTimesQ => {
                    b == 1 && a % 2 == 0 && a >= 2 && q == &(p.pow(a) + 16i32)
                }
                DiscFamily::P5kTimesQOdd => a % 5 == 0 && a >= 5 && b % 2 == 1,
            };
            if hit {
                let open = self == DiscFamily::P5kTimesQOdd && ordered_open(a, b);
                return Some(open);
            }
        }
        None
    }
}

fn ordered_open(a: u32, b: u32) -> bool {
    // the q-exponent of the order-5 family; >= 3 is the unresolved case
    let qexp = if a % 5 == 0 && a >= 5 { b } else { a };
    qexp >= 3
}

/// Expected classification results for one torsion order: the hypothesis
/// mode, the tabulated sporadic discriminants (signed or absolute), the
/// symbolic families, and the Szpiro exponent established for the family.
#[derive(Clone, Debug)]
pub struct TheoremTable {
    pub n: TorsionOrder,
    pub mode: ConductorMode,
    /// Sporadics compare by absolute value (the order-4 and order-5 tables
    /// list |disc|) or as signed values (orders 6..9).
    pub match_abs: bool,
    pub sporadic: Vec<(i8, Vec<(i64, u32)>)>,
    pub families: Vec<DiscFamily>,
    pub szpiro_exponent: Option<u32>,
}

/// The expected table for each torsion order.
pub fn expected_table(n: TorsionOrder) -> TheoremTable {
    let sp = |list: &[(i8, &[(i64, u32)])]| -> Vec<(i8, Vec<(i64, u32)>)> {
        list.iter().map(|(s, f)| (*s, f.to_vec())).collect()
    };
    match n {
        TorsionOrder::Four => TheoremTable {
            n,
            mode: ConductorMode::Squarefree,
            match_abs: true,
            sporadic: sp(&[
                (1, &[(2, 4), (3, 1)]),
                (1, &[(2, 4), (5, 1)]),
                (1, &[(2, 4), (3, 7)]),
                (1, &[(2, 8), (7, 1)]),
                (1, &[(2, 8), (3, 2)]),
                (1, &[(2, 8), (7, 7)]),
                (1, &[(3, 2), (7, 1)]),
                (1, &[(3, 2), (5, 2)]),
            ]),
            families: vec![
                DiscFamily::TwoPow2kPlus4TimesP,
                DiscFamily::TwoPow2kPlus4TimesP4,
                DiscFamily::TwoPow4kTimesP,
                DiscFamily::TwoPow4kTimesP7,
                DiscFamily::P4TimesQb,
                DiscFamily::P4TimesQ7b,
                DiscFamily::P4kTimesQ,
                DiscFamily::P4kTimesQ7,
                DiscFamily::P2kTimesQ,
            ],
            szpiro_exponent: Some(32),
        },
        TorsionOrder::Five => TheoremTable {
            n,
            mode: ConductorMode::PrimePower,
            match_abs: true,
            sporadic: sp(&[
                (1, &[(2, 5), (5, 2)]),
                (1, &[(2, 15), (5, 2)]),
                (1, &[(3, 5), (5, 2)]),
                (1, &[(5, 2), (13, 5)]),
                (1, &[(31, 2), (37, 5)]),
                (1, &[(5, 3), (7, 5)]),
            ]),
            families: vec![DiscFamily::P5kTimesQOdd],
            szpiro_exponent: Some(6),
        },
        TorsionOrder::Six => TheoremTable {
            n,
            mode: ConductorMode::PrimePower,
            match_abs: false,
            sporadic: sp(&[
                (1, &[(2, 1), (7, 2)]),
                (-1, &[(2, 2), (7, 1)]),
                (1, &[(2, 3), (7, 6)]),
                (1, &[(2, 4), (5, 1)]),
                (-1, &[(2, 4), (3, 3)]),
                (1, &[(2, 6), (17, 1)]),
                (-1, &[(2, 6), (7, 3)]),
                (1, &[(2, 8), (3, 3)]),
                (-1, &[(2, 8), (5, 2)]),
            ]),
            families: vec![],
            szpiro_exponent: Some(6),
        },
        TorsionOrder::Seven => TheoremTable {
            n,
            mode: ConductorMode::PrimePower,
            match_abs: false,
            sporadic: sp(&[(-1, &[(2, 7), (13, 1)])]),
            families: vec![],
            szpiro_exponent: Some(3),
        },
        TorsionOrder::Eight => TheoremTable {
            n,
            mode: ConductorMode::PrimePower,
            match_abs: false,
            sporadic: sp(&[(-1, &[(2, 11), (3, 8)])]),
            families: vec![],
            szpiro_exponent: Some(7),
        },
        TorsionOrder::Nine => TheoremTable {
            n,
            mode: ConductorMode::PrimePower,
            match_abs: false,
            sporadic: sp(&[(-1, &[(2, 9), (3, 5)])]),
            families: vec![],
            szpiro_exponent: Some(5),
        },
        TorsionOrder::Ten | TorsionOrder::Twelve => TheoremTable {
            n,
            mode: ConductorMode::PrimePower,
            match_abs: false,
            sporadic: vec![],
            families: vec![],
            szpiro_exponent: None,
        },
    }
}

/// How an enumerated curve matched the expected table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchKind {
    Sporadic,
    Family { name: &'static str, open: bool },
}

impl fmt::Display for MatchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchKind::Sporadic => write!(f, "sporadic"),
            MatchKind::Family { name, open: false } => write!(f, "family {name}"),
            MatchKind::Family { name, open: true } => write!(f, "family {name} [open]"),
        }
    }
}

/// Result of checking an enumeration against the expected table.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub n: TorsionOrder,
    pub bound: i64,
    pub mode: ConductorMode,
    pub matched: Vec<(CurveRecord, MatchKind)>,
    /// Expected sporadic entries with no witness at this bound (not a
    /// failure; the search is bound-limited).
    pub unwitnessed: Vec<String>,
    /// Enumerated curves matching no expected entry: hard failures.
    pub violations: Vec<CurveRecord>,
    pub szpiro_exponent: Option<u32>,
    pub max_szpiro_ratio: Option<f64>,
    pub szpiro_ok: bool,
}

impl VerifyReport {
    pub fn record_count(&self) -> usize {
        self.matched.len() + self.violations.len()
    }
}

fn sporadic_matches(
    entry: &(i8, Vec<(i64, u32)>),
    disc: &Factorization,
    match_abs: bool,
) -> bool {
    let (sign, factors) = entry;
    if !match_abs && i32::from(*sign) != i32::from(disc.sign()) {
        return false;
    }
    let got = disc.factors();
    factors.len() == got.len()
        && factors
            .iter()
            .zip(got)
            .all(|((p, e), (q, f))| &BigInt::from(*p) == q && e == f)
}

fn match_record(table: &TheoremTable, rec: &CurveRecord) -> Option<MatchKind> {
    for entry in &table.sporadic {
        if sporadic_matches(entry, &rec.disc_min, table.match_abs) {
            return Some(MatchKind::Sporadic);
        }
    }
    let f = rec.disc_min.factors();
    debug_assert_eq!(f.len(), 2);
    let (pa, ea) = (&f[0].0, f[0].1);
    let (pb, eb) = (&f[1].0, f[1].1);
    for fam in &table.families {
        if let Some(open) = fam.matches(pa, ea, pb, eb) {
            return Some(MatchKind::Family { name: fam.name(), open });
        }
    }
    None
}

/// Enumerates at the given bound under the table's own hypothesis mode and
/// compares every curve found against the expected table.
pub fn verify_theorem(n: TorsionOrder, bound: i64) -> VerifyReport {
    verify_theorem_jobs(n, bound, 1)
}

pub fn verify_theorem_jobs(n: TorsionOrder, bound: i64, jobs: usize) -> VerifyReport {
    let table = expected_table(n);
    let records = enumerate_jobs(n, bound, table.mode, jobs);
    let mut matched = Vec::new();
    let mut violations = Vec::new();
    for rec in records {
        match match_record(&table, &rec) {
            Some(kind) => matched.push((rec, kind)),
            None => violations.push(rec),
        }
    }
    let unwitnessed = table
        .sporadic
        .iter()
        .filter(|entry| {
            !matched
                .iter()
                .any(|(rec, _)| sporadic_matches(entry, &rec.disc_min, table.match_abs))
        })
        .map(|(sign, factors)| {
            let body = factors
                .iter()
                .map(|(p, e)| {
                    if *e == 1 {
                        p.to_string()
                    } else {
                        format!("{p}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" * ");
            if *sign < 0 && !table.match_abs {
                format!("-{body}")
            } else {
                body
            }
        })
        .collect();
    let max_szpiro_ratio = matched
        .iter()
        .map(|(r, _)| r.szpiro_ratio)
        .chain(violations.iter().map(|r| r.szpiro_ratio))
        .max_by(|a, b| a.total_cmp(b));
    let szpiro_ok = match table.szpiro_exponent {
        None => violations.is_empty(),
        Some(k) => matched
            .iter()
            .map(|(r, _)| r)
            .chain(violations.iter())
            .all(|r| r.szpiro_within(k)),
    };
    VerifyReport {
        n,
        bound,
        mode: table.mode,
        matched,
        unwitnessed,
        violations,
        szpiro_exponent: table.szpiro_exponent,
        max_szpiro_ratio,
        szpiro_ok,
    }
}

/// Exact Szpiro-bound check |disc_min| < N^k over a batch of records.
#[derive(Clone, Debug)]
pub struct SzpiroReport {
    pub exponent: u32,
    pub checked: usize,
    pub max_ratio: Option<f64>,
    pub worst: Option<TateParameter>,
    pub failures: Vec<TateParameter>,
}

impl SzpiroReport {
    pub fn all_within(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn szpiro_check(records: &[CurveRecord], exponent: u32) -> Result<SzpiroReport> {
    if exponent == 0 {
        return Err(Error::DomainError("exponent must be positive".into()));
    }
    let mut max_ratio: Option<f64> = None;
    let mut worst = None;
    let mut failures = Vec::new();
    for rec in records {
        if max_ratio.map_or(true, |m| rec.szpiro_ratio > m) {
            max_ratio = Some(rec.szpiro_ratio);
            worst = Some(rec.param);
        }
        if !rec.szpiro_within(exponent) {
            failures.push(rec.param);
        }
    }
    Ok(SzpiroReport {
        exponent,
        checked: records.len(),
        max_ratio,
        worst,
        failures,
    })
}

/// The nine columns of the order-4 discriminant table, for witness
/// construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFamily {
    TwoPow2kPlus4TimesP,
    TwoPow2kPlus4TimesP4,
    TwoPow4kTimesP,
    TwoPow4kTimesP7,
    P4TimesQb,
    P4TimesQ7b,
    P4kTimesQ,
    P4kTimesQ7,
    P2kTimesQ,
}

impl std::str::FromStr for TableFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "2^(2k+4)*p" => TableFamily::TwoPow2kPlus4TimesP,
            "2^(2k+4)*p^4" => TableFamily::TwoPow2kPlus4TimesP4,
            "2^(4k)*p" => TableFamily::TwoPow4kTimesP,
            "2^(4k)*p^7" => TableFamily::TwoPow4kTimesP7,
            "p^4*q^b" => TableFamily::P4TimesQb,
            "p^4*q^(7b)" => TableFamily::P4TimesQ7b,
            "p^(4k)*q" => TableFamily::P4kTimesQ,
            "p^(4k)*q^7" => TableFamily::P4kTimesQ7,
            "p^(2k)*q" => TableFamily::P2kTimesQ,
            other => {
                return Err(Error::DomainError(format!("unknown family {other:?}")))
            }
        })
    }
}

fn small_prime(v: i64) -> bool {
    v >= 2 && arith::is_prime(&BigInt::from(v))
}

fn checked_pow(base: i64, exp: u32) -> Result<i64> {
    base.checked_pow(exp)
        .filter(|v| v.unsigned_abs() <= 1 << 40)
        .ok_or_else(|| Error::DomainError("witness parameter overflows the height cap".into()))
}

/// Constructs the (s, t) witness for a column of the order-4 table at the
/// given parameter k (and base prime p where the column needs one). Returns
/// None when the arithmetic side condition fails, e.g. 2^(k-4) +- 1 is not
/// prime. Sign choices are tried +1 first, then -1.
pub fn family_witness(
    family: TableFamily,
    k: u32,
    p: Option<i64>,
) -> Result<Option<CurveRecord>> {
    let need_p = || -> Result<i64> {
        let v = p.ok_or_else(|| {
            Error::DomainError("this family needs a base prime p".into())
        })?;
        if !small_prime(v) {
            return Err(Error::DomainError(format!("{v} is not prime")));
        }
        Ok(v)
    };
    let mut candidates: Vec<(i64, i64)> = Vec::new();
    match family {
        TableFamily::TwoPow2kPlus4TimesP => {
            if k < 4 {
                return Err(Error::DomainError("k >= 4 required".into()));
            }
            let t = checked_pow(2, k)?;
            let half = checked_pow(2, k - 4)?;
            if small_prime(half + 1) {
                candidates.push((1, t));
            }
            if small_prime(half - 1) {
                candidates.push((-1, t));
            }
        }
        TableFamily::TwoPow2kPlus4TimesP4 => {
            if k < 4 {
                return Err(Error::DomainError("k >= 4 required".into()));
            }
            let t = checked_pow(2, k)?;
            let half = checked_pow(2, k - 4)?;
            for q in [half + 1, half - 1] {
                if small_prime(q) {
                    candidates.push((-q, t));
                }
            }
        }
        TableFamily::TwoPow4kTimesP => {
            if k < 1 {
                return Err(Error::DomainError("k >= 1 required".into()));
            }
            let s = checked_pow(2, k)?;
            let big = checked_pow(2, k + 4)?;
            if small_prime(big + 1) {
                candidates.push((s, 1));
            }
            if small_prime(big - 1) {
                candidates.push((-s, 1));
            }
        }
        TableFamily::TwoPow4kTimesP7 => {
            if k < 1 {
                return Err(Error::DomainError("k >= 1 required".into()));
            }
            let s = checked_pow(2, k)?;
            let big = checked_pow(2, k + 4)?;
            for q in [big + 1, big - 1] {
                if small_prime(q) {
                    candidates.push((-s, q));
                }
            }
        }
        TableFamily::P4TimesQb => {
            let p = need_p()?;
            if is_prime_power_value(16 * p + 1) {
                candidates.push((p, 1));
            }
            if is_prime_power_value(16 * p - 1) {
                candidates.push((-p, 1));
            }
        }
        TableFamily::P4TimesQ7b => {
            let p = need_p()?;
            for t in [16 * p + 1, 16 * p - 1] {
                if is_proper_prime_power_value(t) {
                    candidates.push((-p, t));
                }
            }
        }
        TableFamily::P4kTimesQ => {
            if k < 1 {
                return Err(Error::DomainError("k >= 1 required".into()));
            }
            let p = need_p()?;
            let pk = checked_pow(p, k)?;
            if small_prime(16 * pk + 1) {
                candidates.push((pk, 1));
            }
            if small_prime(16 * pk - 1) {
                candidates.push((-pk, 1));
            }
        }
        TableFamily::P4kTimesQ7 => {
            if k < 2 {
                return Err(Error::DomainError("k > 1 required".into()));
            }
            let p = need_p()?;
            let pk = checked_pow(p, k)?;
            for t in [16 * pk + 1, 16 * pk - 1] {
                if small_prime(t) {
                    candidates.push((-pk, t));
                }
            }
        }
        TableFamily::P2kTimesQ => {
            if k < 1 {
                return Err(Error::DomainError("k >= 1 required".into()));
            }
            let p = need_p()?;
            let t = checked_pow(p, 2 * k)?;
            if small_prime(t + 16) {
                candidates.push((1, t));
            }
        }
    }
    for (s, t) in candidates {
        if let Some(rec) = record_for_pair(TorsionOrder::Four, s, t, ConductorMode::PrimePower) {
            return Ok(Some(rec));
        }
    }
    Ok(None)
}

fn is_prime_power_value(v: i64) -> bool {
    v >= 2 && arith::prime_power(&BigInt::from(v)).is_some()
}

fn is_proper_prime_power_value(v: i64) -> bool {
    v >= 4
        && matches!(arith::prime_power(&BigInt::from(v)), Some((_, e)) if e >= 2)
}

/// Comparison of a computed conductor against a previously tabulated value.
#[derive(Clone, Debug)]
pub struct ConductorDiscrepancy {
    pub n: TorsionOrder,
    pub param: TateParameter,
    pub disc_min: Factorization,
    pub computed_conductor: Factorization,
    pub tabulated: Vec<(i64, u32)>,
    pub support_matches: bool,
    pub exponents_match: bool,
}

/// Recomputes the conductors of the two curves whose tabulated conductor
/// exponents are suspect (the unique order-8 and order-9 curves), and
/// reports computed vs tabulated. The classification-level claim is only
/// that the prime support is {2, 3}.
pub fn discrepancy_reports() -> Vec<ConductorDiscrepancy> {
    let cases: [(TorsionOrder, i64, i64, &[(i64, u32)]); 2] = [
        (TorsionOrder::Eight, 1, 4, &[(2, 2), (3, 1)]),
        (TorsionOrder::Nine, -1, 1, &[(2, 1), (3, 2)]),
    ];
    cases
        .into_iter()
        .map(|(n, s, t, tabulated)| {
            let param = TateParameter::new(n, s, t).expect("valid parameter");
            let model = integral_model(&param);
            let disc_fact = factored_closed_form_disc(&param);
            let global = conductor_with_factored_disc(&model, &disc_fact)
                .expect("nonsingular reference curve");
            let computed = global.conductor;
            let support_matches = computed.num_primes() == tabulated.len()
                && computed
                    .factors()
                    .iter()
                    .zip(tabulated)
                    .all(|((p, _), (q, _))| p == &BigInt::from(*q));
            let exponents_match = support_matches
                && computed
                    .factors()
                    .iter()
                    .zip(tabulated)
                    .all(|((_, e), (_, f))| e == f);
            ConductorDiscrepancy {
                n,
                param,
                disc_min: global.disc_min,
                computed_conductor: computed,
                tabulated: tabulated.to_vec(),
                support_matches,
                exponents_match,
            }
        })
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::dioph;
    use crate::model::closed_form_disc;

    fn fact(sign: i8, factors: &[(i64, u32)]) -> Factorization {
        Factorization::new(
            sign,
            factors
                .iter()
                .map(|(p, e)| (BigInt::from(*p), *e))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn enumerate_order_7_finds_exactly_one_curve() {
        let records = enumerate(TorsionOrder::Seven, 50, ConductorMode::PrimePower);
        assert_eq!(records.len(), 1);
        let rec = &records[0];
        assert_eq!(rec.disc_min, fact(-1, &[(2, 7), (13, 1)]));
        assert_eq!(rec.conductor.value(), BigInt::from(26));
        assert_eq!(rec.torsion_verified, 7);
    }

    #[test]
    fn enumerate_orders_10_and_12_find_nothing() {
        assert!(enumerate(TorsionOrder::Ten, 60, ConductorMode::PrimePower).is_empty());
        assert!(enumerate(TorsionOrder::Twelve, 60, ConductorMode::PrimePower).is_empty());
    }

    #[test]
    fn parallel_enumeration_matches_sequential() {
        let seq = enumerate(TorsionOrder::Six, 40, ConductorMode::PrimePower);
        let par = enumerate_jobs(TorsionOrder::Six, 40, ConductorMode::PrimePower, 3);
        assert_eq!(seq, par);
    }

    #[test]
    fn verify_order_6_matches_all_nine_values_plus_one_extra() {
        let report = verify_theorem(TorsionOrder::Six, 100);
        assert!(report.unwitnessed.is_empty(), "{:?}", report.unwitnessed);
        assert_eq!(report.matched.len(), 9);
        assert!(report.szpiro_ok);
        // One genuine curve beyond the reference list: lambda = -1/17 has
        // minimal discriminant 2^3 * 17^2 and conductor 34. The reference
        // table misses the quadruple (s, t, s+t, 9s+t) = (-1, 17, 16, 8).
        assert_eq!(report.violations.len(), 1);
        assert_eq!(
            report.violations[0].disc_min,
            fact(1, &[(2, 3), (17, 2)])
        );
        assert_eq!(report.violations[0].conductor.value(), BigInt::from(34));
        // the nine signed values, frozen
        let mut found: Vec<BigInt> = report
            .matched
            .iter()
            .map(|(r, _)| r.disc_min.value())
            .collect();
        found.sort();
        let mut expected: Vec<BigInt> = [
            2 * 49,
            -4 * 7,
            8 * 117_649,
            16 * 5,
            -16 * 27,
            64 * 17,
            -64 * 343,
            256 * 27,
            -256 * 25,
        ]
        .into_iter()
        .map(BigInt::from)
        .collect();
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn verify_order_8_finds_the_tabulated_curve_plus_two_extras() {
        let report = verify_theorem(TorsionOrder::Eight, 50);
        assert_eq!(report.matched.len(), 1);
        assert_eq!(
            report.matched[0].0.disc_min,
            fact(-1, &[(2, 11), (3, 8)])
        );
        assert!(report.szpiro_ok);
        // Two genuine curves beyond the reference list. For t = 2 mod 4
        // the closed-form discriminant carries exactly 2^12, all of which
        // minimalizes away, so the prime 2 leaves the support; the
        // reference argument assumed the support never shrinks.
        //   lambda = -1/2: disc_min = 3^8 * 7,    conductor 21
        //   lambda =  1/6: disc_min = -3^2 * 5^8, conductor 15
        assert_eq!(report.violations.len(), 2);
        let discs: Vec<_> = report.violations.iter().map(|r| r.disc_min.clone()).collect();
        assert!(discs.contains(&fact(1, &[(3, 8), (7, 1)])));
        assert!(discs.contains(&fact(-1, &[(3, 2), (5, 8)])));
        for v in &report.violations {
            assert_eq!(v.torsion_verified, 8);
        }
    }

    #[test]
    fn verify_order_4_finds_one_curve_beyond_the_table() {
        let report = verify_theorem(TorsionOrder::Four, 40);
        assert_eq!(report.mode, ConductorMode::Squarefree);
        assert!(report.matched.len() >= 5);
        assert!(report.szpiro_ok);
        // lambda = -1 is the curve y^2 + xy + y = x^3 + x^2 with
        // disc = -15 and conductor 15; |disc| = 3 * 5 appears in no row
        // of the reference table (the case |s| = |t| = 1 with 16s + t a
        // semiprime was skipped there).
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].disc_min, fact(-1, &[(3, 1), (5, 1)]));
        assert_eq!(
            report.violations[0].minimal_model,
            crate::model::WeierstrassModel::new(1, 1, 1, 0, 0)
        );
        assert_eq!(report.violations[0].torsion_verified, 4);
    }

    #[test]
    fn verify_order_5_flags_only_family_matches_beyond_sporadics() {
        let report = verify_theorem(TorsionOrder::Five, 40);
        assert!(report.violations.is_empty(), "{:#?}", report.violations);
        let sporadics = report
            .matched
            .iter()
            .filter(|(_, k)| *k == MatchKind::Sporadic)
            .count();
        assert_eq!(sporadics, 6, "all six sporadic values appear by height 40");
        for (rec, kind) in &report.matched {
            if let MatchKind::Family { open, .. } = kind {
                let f = rec.disc_min.factors();
                let qexp = if f[0].1 % 5 == 0 && f[0].1 >= 5 { f[1].1 } else { f[0].1 };
                assert_eq!(*open, qexp >= 3);
            }
        }
    }

    #[test]
    fn family_shape_matching() {
        // 2^4 * 31 fits 2^(4k)*p with k=1, p = 2^5 - 1
        assert_eq!(
            DiscFamily::TwoPow4kTimesP.matches(&BigInt::from(2), 4, &BigInt::from(31), 1),
            Some(false)
        );
        // 3^4 * 5^4: p^4 q^b with 16*5+1 = 81 = 3^4
        assert_eq!(
            DiscFamily::P4TimesQb.matches(&BigInt::from(3), 4, &BigInt::from(5), 4),
            Some(false)
        );
        // 3^4 * 97: p^(2k) q with 97 = 3^4 + 16
        assert_eq!(
            DiscFamily::P2kTimesQ.matches(&BigInt::from(3), 4, &BigInt::from(97), 1),
            Some(false)
        );
        // 2^15 * 5^2 is not of shape p^(5k) q^(2l+1)
        assert_eq!(
            DiscFamily::P5kTimesQOdd.matches(&BigInt::from(2), 15, &BigInt::from(5), 2),
            None
        );
        // 2^5 * 19 is, with exponent 1 on q (not open)
        assert_eq!(
            DiscFamily::P5kTimesQOdd.matches(&BigInt::from(2), 5, &BigInt::from(19), 1),
            Some(false)
        );
    }

    #[test]
    fn family_witness_examples() {
        // k=5: p = 2^1 + 1 = 3 is prime; the witness minimalizes to
        // 2^15 * 3 (the last factor-of-4 reduction is blocked at 2).
        let rec = family_witness(TableFamily::TwoPow2kPlus4TimesP, 5, None)
            .unwrap()
            .expect("witness exists");
        assert_eq!(rec.disc_min.abs(), fact(1, &[(2, 15), (3, 1)]).abs());
        assert_eq!(rec.conductor.support(), vec![BigInt::from(2), BigInt::from(3)]);

        // p = 3, k = 1: q = 25 is not prime; p = 5 gives q = 41.
        assert!(family_witness(TableFamily::P2kTimesQ, 1, Some(3))
            .unwrap()
            .is_none());
        let rec = family_witness(TableFamily::P2kTimesQ, 1, Some(5))
            .unwrap()
            .expect("witness exists");
        assert_eq!(rec.disc_min.abs(), fact(1, &[(5, 2), (41, 1)]).abs());

        // p = 3: 16*3 + 1 = 49 = 7^2.
        let rec = family_witness(TableFamily::P4TimesQb, 0, Some(3))
            .unwrap()
            .expect("witness exists");
        assert_eq!(rec.disc_min.abs(), fact(1, &[(3, 4), (7, 2)]).abs());

        assert!(family_witness(TableFamily::TwoPow2kPlus4TimesP, 3, None).is_err());
        assert!(family_witness(TableFamily::P2kTimesQ, 1, Some(4)).is_err());
    }

    #[test]
    fn dedup_covers_equivalent_parametrizations() {
        // lambda = 5 and lambda = -5/81 give the same curve; enumeration
        // keeps a single record for it.
        let a = record_for_pair(TorsionOrder::Four, 5, 1, ConductorMode::Squarefree).unwrap();
        let b = record_for_pair(TorsionOrder::Four, -5, 81, ConductorMode::Squarefree).unwrap();
        assert_eq!(a.minimal_model, b.minimal_model);
        let records = enumerate(TorsionOrder::Four, 81, ConductorMode::Squarefree);
        let hits: Vec<_> = records
            .iter()
            .filter(|r| r.minimal_model == a.minimal_model)
            .collect();
        assert_eq!(hits.len(), 1);
    }

    #[test]
    fn szpiro_check_reports_exact_bounds() {
        let records = enumerate(TorsionOrder::Seven, 50, ConductorMode::PrimePower);
        let report = szpiro_check(&records, 3).unwrap();
        assert!(report.all_within());
        let ratio = report.max_ratio.unwrap();
        assert!(ratio > 2.2 && ratio < 2.3, "ratio = {ratio}");
        // exponent 2 is too small: 1664 > 26^2 = 676
        let report = szpiro_check(&records, 2).unwrap();
        assert!(!report.all_within());
    }

    #[test]
    fn order_5_discs_from_shifted_square_solutions() {
        // The prime-power tuples of the shifted-square filter, substituted
        // into the order-5 closed form at t = 1, give exactly the sporadic
        // |disc| list.
        let set = dioph::cor25_filter(100, 5).unwrap();
        let mut derived: Vec<BigInt> = Vec::new();
        for sol in &set.solutions {
            if sol[1].is_one() {
                continue; // y = 1 gives a one-prime discriminant
            }
            let s = i64::try_from(&sol[0]).unwrap();
            let param = TateParameter::new(TorsionOrder::Five, s, 1).unwrap();
            derived.push(closed_form_disc(&param).abs());
        }
        derived.sort();
        derived.dedup();
        let mut expected: Vec<BigInt> = expected_table(TorsionOrder::Five)
            .sporadic
            .iter()
            .map(|(_, f)| {
                f.iter()
                    .map(|(p, e)| BigInt::from(*p).pow(*e))
                    .product::<BigInt>()
            })
            .collect();
        expected.sort();
        assert_eq!(derived, expected);
    }

    #[test]
    fn discrepancy_reports_have_matching_support() {
        let reports = discrepancy_reports();
        assert_eq!(reports.len(), 2);
        for rep in &reports {
            assert!(rep.support_matches, "{:?}", rep);
            // the tabulated exponents disagree with the recomputed ones
            assert!(!rep.exponents_match, "{:?}", rep);
        }
        assert_eq!(reports[0].computed_conductor.value(), BigInt::from(48));
        assert_eq!(reports[1].computed_conductor.value(), BigInt::from(54));
    }
}
