//! Command-line front end: `curve`, `enumerate`, `verify`, `dioph`,
//! `szpiro`, with table, CSV, and JSON-lines output.
//!
//! Exit codes: 0 success / verified, 1 verification failure, 2 usage error.
//! Structured output is schema-versioned and deterministic; big integers
//! are serialized as decimal strings so downstream consumers never truncate
//! them.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::Factorization;
use crate::classify::{self, ConductorMode, CurveRecord, VerifyReport};
use crate::dioph::{self, PellSign, SolutionSet};
use crate::error::Error;
use crate::localdata::{self, LocalData};
use crate::model::{integral_model, Point, TateParameter, TorsionOrder};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(
    name = "pqcurves",
    version,
    about = "Elliptic curves over Q with an N-torsion point and a conductor divisible by exactly two primes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    JsonLines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Squarefree,
    PrimePower,
}

impl From<ModeArg> for ConductorMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Squarefree => ConductorMode::Squarefree,
            ModeArg::PrimePower => ConductorMode::PrimePower,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EqArg {
    Catalan,
    Lemma22,
    Lemma23,
    Lemma24,
    Cor25,
    Pell125,
    Mordell2000,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect one curve: integral model, invariants, minimal model,
    /// per-prime local data, conductor, Szpiro ratio, torsion check.
    Curve {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// List every curve with a two-prime conductor up to a height bound.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 100)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = ModeArg::PrimePower)]
        mode: ModeArg,
        /// Worker count for the grid (env PQCURVES_JOBS).
        #[arg(long, env = "PQCURVES_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Verify an enumeration against the expected discriminant table.
    /// Exits 1 if any curve matches no table entry.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 100)]
        bound: i64,
        /// Also recompute the conductors whose tabulated exponents are
        /// questionable and print computed vs tabulated (warnings only).
        #[arg(long)]
        report_discrepancies: bool,
        #[arg(long, env = "PQCURVES_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Run one of the bounded Diophantine searches.
    Dioph {
        #[arg(long, value_enum)]
        eq: EqArg,
        /// Main bound (catalan base, lemma23/lemma24 value bound, mordell Y bound).
        #[arg(long)]
        bound: Option<i64>,
        /// Prime bound for lemma22.
        #[arg(long)]
        pbound: Option<i64>,
        /// Exponent bound m for lemma22.
        #[arg(long)]
        mbound: Option<u32>,
        /// Two-power exponent bound h for lemma23.
        #[arg(long)]
        hbound: Option<u32>,
        /// Exponent bound l for lemma24 / cor25.
        #[arg(long)]
        lbound: Option<u32>,
        /// Pell constant sign: +4 or -4.
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
        /// Number of Pell solutions to generate.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Szpiro-ratio report over an enumeration: checks |disc| < N^k.
    Szpiro {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 100)]
        bound: i64,
        /// Exponent to check (defaults to the table's established value).
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, env = "PQCURVES_JOBS", default_value_t = 1)]
        jobs: usize,
    },
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{err}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Curve { n, s, t } => cmd_curve(n, s, t, cli.format),
        Command::Enumerate { n, bound, mode, jobs } => {
            cmd_enumerate(n, bound, mode.into(), jobs, cli.format)
        }
        Command::Verify { n, bound, report_discrepancies, jobs } => {
            cmd_verify(n, bound, report_discrepancies, jobs, cli.format)
        }
        Command::Dioph { eq, bound, pbound, mbound, hbound, lbound, sign, count } => {
            cmd_dioph(eq, bound, pbound, mbound, hbound, lbound, sign, count, cli.format)
        }
        Command::Szpiro { n, bound, k, mode, jobs } => {
            cmd_szpiro(n, bound, k, mode.map(Into::into), jobs, cli.format)
        }
    }
}

fn fact_json(f: &Factorization) -> Value {
    json!({
        "sign": f.sign(),
        "factors": f.factors().iter()
            .map(|(p, e)| json!([p.to_string(), e]))
            .collect::<Vec<_>>(),
        "value": f.value().to_string(),
    })
}

fn local_json(ld: &LocalData) -> Value {
    json!({
        "p": ld.p.to_string(),
        "ord_disc": ld.ord_disc,
        "kodaira": ld.kodaira.to_string(),
        "f": ld.f,
        "m": ld.m,
        "reduction": ld.reduction.to_string(),
    })
}

fn record_json(rec: &CurveRecord) -> Value {
    let m = &rec.minimal_model;
    json!({
        "n": rec.param.torsion_order().value(),
        "s": rec.param.s(),
        "t": rec.param.t(),
        "minimal_model": {
            "a1": m.a1.to_string(),
            "a2": m.a2.to_string(),
            "a3": m.a3.to_string(),
            "a4": m.a4.to_string(),
            "a6": m.a6.to_string(),
        },
        "disc_min": fact_json(&rec.disc_min),
        "conductor": fact_json(&rec.conductor),
        "local_data": rec.locals.iter().map(local_json).collect::<Vec<_>>(),
        "szpiro_ratio": format!("{:.6}", rec.szpiro_ratio),
        "torsion": rec.torsion_verified,
    })
}

fn emit_line(command: &str, payload: Value) {
    let line = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "record": payload,
    });
    println!("{line}");
}

const CSV_HEADER: &str = "N,s,t,a1,a2,a3,a4,a6,disc_min,conductor,szpiro_ratio,torsion";

fn record_csv(rec: &CurveRecord) -> String {
    let m = &rec.minimal_model;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{:.6},{}",
        rec.param.torsion_order().value(),
        rec.param.s(),
        rec.param.t(),
        m.a1,
        m.a2,
        m.a3,
        m.a4,
        m.a6,
        rec.disc_min.value(),
        rec.conductor.value(),
        rec.szpiro_ratio,
        rec.torsion_verified,
    )
}

fn cmd_curve(n: u32, s: i64, t: i64, format: Format) -> Result<i32, Error> {
    let order = TorsionOrder::from_value(n)?;
    let param = TateParameter::new(order, s, t)?;
    let model = integral_model(&param);
    let inv = model.invariants();
    let global = localdata::conductor(&model)?;
    let torsion = model
        .order_of_point(&Point::affine(0, 0), 2 * n)?
        .expect("torsion point order within cap");
    let ratio = global.szpiro_ratio();
    match format {
        Format::Table => {
            println!("parameters:     {param}  (lambda = {})", param.lambda());
            println!("integral model: [a1,a2,a3,a4,a6] = {model}");
            println!("invariants:     c4 = {}", inv.c4);
            println!("                c6 = {}", inv.c6);
            println!(
                "                disc = {} = {}",
                inv.disc,
                fact_display(&inv.disc)
            );
            if let Some(j) = &inv.j {
                println!("                j = {j}");
            }
            println!(
                "minimal model:  {}  (u = {})",
                global.minimal_model, global.scaling
            );
            println!("minimal disc:   {}", global.disc_min);
            println!("local data:");
            for ld in &global.locals {
                println!(
                    "  p={}: kodaira {} ord(disc)={} f={} m={} {}",
                    ld.p, ld.kodaira, ld.ord_disc, ld.f, ld.m, ld.reduction
                );
            }
            println!(
                "conductor:      {} = {}",
                global.conductor.value(),
                global.conductor
            );
            println!("szpiro ratio:   {ratio:.6}");
            println!("torsion:        order of (0,0) = {torsion} (expected {n})");
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            let rec = record_from_global(param, global, torsion, ratio);
            println!("{}", record_csv(&rec));
        }
        Format::JsonLines => {
            let rec = record_from_global(param, global, torsion, ratio);
            emit_line("curve", record_json(&rec));
        }
    }
    Ok(0)
}

fn record_from_global(
    param: TateParameter,
    global: localdata::GlobalData,
    torsion: u32,
    ratio: f64,
) -> CurveRecord {
    CurveRecord {
        param,
        minimal_model: global.minimal_model,
        disc_min: global.disc_min,
        conductor: global.conductor,
        locals: global.locals,
        szpiro_ratio: ratio,
        torsion_verified: torsion,
    }
}

fn fact_display(v: &BigInt) -> String {
    crate::arith::factor(v)
        .map(|f| f.to_string())
        .unwrap_or_else(|_| "0".into())
}

fn cmd_enumerate(
    n: u32,
    bound: i64,
    mode: ConductorMode,
    jobs: usize,
    format: Format,
) -> Result<i32, Error> {
    let order = TorsionOrder::from_value(n)?;
    let records = classify::enumerate_jobs(order, bound, mode, jobs.max(1));
    match format {
        Format::Table => {
            println!(
                "N={n} bound={bound} mode={mode}: {} curve(s) with two-prime conductor",
                records.len()
            );
            for rec in &records {
                println!(
                    "  (s,t)=({},{})  disc_min = {}  conductor = {}  ratio {:.4}  torsion {}",
                    rec.param.s(),
                    rec.param.t(),
                    rec.disc_min,
                    rec.conductor,
                    rec.szpiro_ratio,
                    rec.torsion_verified
                );
            }
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            for rec in &records {
                println!("{}", record_csv(rec));
            }
        }
        Format::JsonLines => {
            for rec in &records {
                emit_line("enumerate", record_json(rec));
            }
        }
    }
    Ok(0)
}

fn verify_json(report: &VerifyReport) -> Value {
    json!({
        "n": report.n.value(),
        "bound": report.bound,
        "mode": report.mode.to_string(),
        "matched": report.matched.iter().map(|(rec, kind)| json!({
            "record": record_json(rec),
            "match": kind.to_string(),
        })).collect::<Vec<_>>(),
        "unwitnessed": report.unwitnessed,
        "violations": report.violations.iter().map(record_json).collect::<Vec<_>>(),
        "szpiro_exponent": report.szpiro_exponent,
        "max_szpiro_ratio": report.max_szpiro_ratio.map(|r| format!("{r:.6}")),
        "szpiro_ok": report.szpiro_ok,
    })
}

fn cmd_verify(
    n: u32,
    bound: i64,
    report_discrepancies: bool,
    jobs: usize,
    format: Format,
) -> Result<i32, Error> {
    let order = TorsionOrder::from_value(n)?;
    let report = classify::verify_theorem_jobs(order, bound, jobs.max(1));
    match format {
        Format::Table => {
            println!(
                "verify N={n} bound={bound} mode={}: {} curve(s), {} matched, {} violation(s)",
                report.mode,
                report.record_count(),
                report.matched.len(),
                report.violations.len()
            );
            for (rec, kind) in &report.matched {
                println!(
                    "  matched   (s,t)=({},{})  disc_min = {}  conductor = {}  [{kind}]",
                    rec.param.s(),
                    rec.param.t(),
                    rec.disc_min,
                    rec.conductor
                );
            }
            for rec in &report.violations {
                println!(
                    "  VIOLATION (s,t)=({},{})  disc_min = {}  conductor = {}  (matches no table entry)",
                    rec.param.s(),
                    rec.param.t(),
                    rec.disc_min,
                    rec.conductor
                );
            }
            for u in &report.unwitnessed {
                println!("  unwitnessed: {u} (no curve at this bound; bound-limited)");
            }
            if let (Some(k), Some(r)) = (report.szpiro_exponent, report.max_szpiro_ratio) {
                println!(
                    "  szpiro: max ratio {r:.6} against exponent {k} -> {}",
                    if report.szpiro_ok { "within bound" } else { "EXCEEDED" }
                );
            }
            if report.record_count() == 0 {
                println!("  0 curves (expected 0)");
            }
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            for (rec, _) in &report.matched {
                println!("{}", record_csv(rec));
            }
            for rec in &report.violations {
                println!("{}", record_csv(rec));
            }
        }
        Format::JsonLines => {
            emit_line("verify", verify_json(&report));
        }
    }
    if report_discrepancies {
        for rep in classify::discrepancy_reports() {
            let tab = rep
                .tabulated
                .iter()
                .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
                .collect::<Vec<_>>()
                .join(" * ");
            let status = if rep.exponents_match {
                "exponents agree"
            } else if rep.support_matches {
                "prime support agrees, exponents differ"
            } else {
                "PRIME SUPPORT DIFFERS"
            };
            eprintln!(
                "warning: {}: computed conductor {} vs tabulated {} ({})",
                rep.param,
                rep.computed_conductor,
                tab,
                status
            );
        }
    }
    Ok(if report.violations.is_empty() { 0 } else { 1 })
}

fn solutions_json(set: &SolutionSet) -> Value {
    let tuples = |list: &[Vec<BigInt>]| -> Vec<Value> {
        list.iter()
            .map(|t| json!(t.iter().map(|v| v.to_string()).collect::<Vec<_>>()))
            .collect()
    };
    json!({
        "equation": set.equation.to_string(),
        "bounds": set.bounds.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>(),
        "solutions": tuples(&set.solutions),
        "families": set.families.iter().map(|f| json!({
            "parameter": f.parameter,
            "description": f.description,
            "range": [f.range.0, f.range.1],
        })).collect::<Vec<_>>(),
        "open_family": tuples(&set.open_family),
        "rejected": set.rejected.iter().map(|(t, why)| json!({
            "tuple": t.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "reason": why,
        })).collect::<Vec<_>>(),
    })
}

fn print_solution_set(set: &SolutionSet, format: Format) {
    match format {
        Format::Table | Format::Csv => {
            println!("equation: {}", set.equation);
            let bounds = set
                .bounds
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            println!("bounds:   {bounds}");
            println!("solutions ({}):", set.solutions.len());
            for t in &set.solutions {
                println!(
                    "  ({})",
                    t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                );
            }
            for f in &set.families {
                println!(
                    "family:   {} for {} in {}..={}",
                    f.description, f.parameter, f.range.0, f.range.1
                );
            }
            if !set.open_family.is_empty() {
                println!("open family members (unresolved case, flagged):");
                for t in &set.open_family {
                    println!(
                        "  ({})",
                        t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                    );
                }
            }
            for (t, why) in &set.rejected {
                println!(
                    "rejected: ({}) -- {why}",
                    t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                );
            }
        }
        Format::JsonLines => emit_line("dioph", solutions_json(set)),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_dioph(
    eq: EqArg,
    bound: Option<i64>,
    pbound: Option<i64>,
    mbound: Option<u32>,
    hbound: Option<u32>,
    lbound: Option<u32>,
    sign: Option<String>,
    count: Option<usize>,
    format: Format,
) -> Result<i32, Error> {
    match eq {
        EqArg::Catalan => {
            let set = dioph::catalan_search(bound.unwrap_or(1000))?;
            print_solution_set(&set, format);
        }
        EqArg::Lemma22 => {
            let set = dioph::lemma22_search(pbound.unwrap_or(1000), mbound.unwrap_or(20))?;
            print_solution_set(&set, format);
        }
        EqArg::Lemma23 => {
            let set = dioph::lemma23_search(hbound.unwrap_or(12), bound.unwrap_or(10_000))?;
            print_solution_set(&set, format);
        }
        EqArg::Lemma24 => {
            let set = dioph::lemma24_search(bound.unwrap_or(100), lbound.unwrap_or(5))?;
            print_solution_set(&set, format);
        }
        EqArg::Cor25 => {
            let set = dioph::cor25_filter(bound.unwrap_or(100), lbound.unwrap_or(5))?;
            print_solution_set(&set, format);
        }
        EqArg::Pell125 => {
            let sign: PellSign = sign.as_deref().unwrap_or("-4").parse()?;
            let sols = dioph::pell_125(sign, count.unwrap_or(3))?;
            match format {
                Format::Table | Format::Csv => {
                    println!("x^2 - 125 y^2 = {}", sign.constant());
                    for (x, y) in &sols {
                        println!("  ({x}, {y})");
                    }
                }
                Format::JsonLines => {
                    emit_line(
                        "dioph",
                        json!({
                            "equation": format!("x^2 - 125 y^2 = {}", sign.constant()),
                            "solutions": sols.iter()
                                .map(|(x, y)| json!([x.to_string(), y.to_string()]))
                                .collect::<Vec<_>>(),
                        }),
                    );
                }
            }
        }
        EqArg::Mordell2000 => {
            let set = dioph::mordell_search(2000, bound.unwrap_or(10_000))?;
            print_solution_set(&set, format);
        }
    }
    Ok(0)
}

fn cmd_szpiro(
    n: u32,
    bound: i64,
    k: Option<u32>,
    mode: Option<ConductorMode>,
    jobs: usize,
    format: Format,
) -> Result<i32, Error> {
    let order = TorsionOrder::from_value(n)?;
    let table = classify::expected_table(order);
    let mode = mode.unwrap_or(table.mode);
    let exponent = k.or(table.szpiro_exponent).unwrap_or(6);
    let records = classify::enumerate_jobs(order, bound, mode, jobs.max(1));
    let report = classify::szpiro_check(&records, exponent)?;
    match format {
        Format::Table | Format::Csv => {
            println!(
                "szpiro N={n} bound={bound} mode={mode}: {} record(s), exponent {exponent}",
                report.checked
            );
            match (report.max_ratio, report.worst) {
                (Some(r), Some(p)) => println!("  max ratio {r:.6} at {p}"),
                _ => println!("  no records"),
            }
            println!(
                "  |disc| < N^{exponent} for all records: {}",
                report.all_within()
            );
        }
        Format::JsonLines => {
            emit_line(
                "szpiro",
                json!({
                    "n": n,
                    "bound": bound,
                    "mode": mode.to_string(),
                    "exponent": exponent,
                    "checked": report.checked,
                    "max_ratio": report.max_ratio.map(|r| format!("{r:.6}")),
                    "all_within": report.all_within(),
                }),
            );
        }
    }
    Ok(if report.all_within() { 0 } else { 1 })
}
