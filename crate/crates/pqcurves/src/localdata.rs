//! Global minimal models, Tate's algorithm at each bad prime, and conductor
//! assembly via f_p = ord_p(disc_min) - m_p + 1.
//!
//! Minimalization is Laska-Kraus-Connell: the scale u is the largest integer
//! such that (c4/u^4, c6/u^6) still satisfies Kraus's integrality conditions
//! at 2 and 3, and the reduced model is reconstructed from the minimal
//! (c4, c6) pair, so the output is always in the canonical range a1, a3 in
//! {0,1}, a2 in {-1,0,1}. Tate's algorithm is implemented in full
//! generality, including the wild primes 2 and 3; shortcuts valid only for
//! p >= 5 are never used.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, Factorization};
use crate::error::{Error, Result};
use crate::model::WeierstrassModel;

/// Kodaira symbol of the special fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    /// I_0 is good reduction; I_n (n >= 1) is multiplicative.
    I(u32),
    II,
    III,
    IV,
    /// I_n^* (n >= 0).
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Number of irreducible components of the special fiber over the
    /// algebraic closure (counted without multiplicity).
    pub fn component_count(self) -> u32 {
        match self {
            KodairaType::I(0) => 1,
            KodairaType::I(n) => n,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IStar(n) => 5 + n,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Good,
    MultiplicativeSplit,
    MultiplicativeNonsplit,
    Additive,
}

impl ReductionKind {
    pub fn is_multiplicative(self) -> bool {
        matches!(
            self,
            ReductionKind::MultiplicativeSplit | ReductionKind::MultiplicativeNonsplit
        )
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionKind::Good => write!(f, "good"),
            ReductionKind::MultiplicativeSplit => write!(f, "multiplicative (split)"),
            ReductionKind::MultiplicativeNonsplit => write!(f, "multiplicative (nonsplit)"),
            ReductionKind::Additive => write!(f, "additive"),
        }
    }
}

/// Reduction data of a curve at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub p: BigInt,
    /// Valuation of the minimal discriminant at p.
    pub ord_disc: u32,
    pub kodaira: KodairaType,
    /// Conductor exponent.
    pub f: u32,
    /// Component count of the special fiber.
    pub m: u32,
    pub reduction: ReductionKind,
}

/// Minimal model plus all per-prime data and the assembled conductor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalData {
    pub minimal_model: WeierstrassModel,
    /// disc(input) = scaling^12 * disc(minimal_model).
    pub scaling: BigInt,
    pub disc_min: Factorization,
    pub conductor: Factorization,
    pub locals: Vec<LocalData>,
}

impl GlobalData {
    /// log |disc_min| / log N, as a float for reporting only.
    pub fn szpiro_ratio(&self) -> f64 {
        ln_big(&self.disc_min.abs_value()) / ln_big(&self.conductor.value())
    }
}

pub(crate) fn ln_big(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 52 {
        return n.to_f64().unwrap().abs().ln();
    }
    let shift = bits - 52;
    let top: BigInt = n.abs() >> shift;
    top.to_f64().unwrap().ln() + (shift as f64) * std::f64::consts::LN_2
}

fn exact_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    assert!(r.is_zero(), "non-exact division {n}/{d}");
    q
}

/// v_p(n), or None for n = 0.
fn val(n: &BigInt, p: &BigInt) -> Option<u32> {
    if n.is_zero() {
        None
    } else {
        Some(arith::padic_valuation(n, p).expect("nonzero"))
    }
}

/// v_p(n) >= k, counting v_p(0) as infinite.
fn val_at_least(n: &BigInt, p: &BigInt, k: u32) -> bool {
    val(n, p).map_or(true, |v| v >= k)
}

/// Kraus's condition at 2: (c4, c6) arise from an integral model iff
/// c6 = -1 (mod 4), or c4 = 0 (mod 16) and c6 = 0 or 8 (mod 32).
fn kraus_at_2(c4: &BigInt, c6: &BigInt) -> bool {
    if c6.mod_floor(&BigInt::from(4)) == BigInt::from(3) {
        return true;
    }
    if !c4.mod_floor(&BigInt::from(16)).is_zero() {
        return false;
    }
    let r = c6.mod_floor(&BigInt::from(32));
    r.is_zero() || r == BigInt::from(8)
}

/// Kraus's condition at 3: ord_3(c6) != 2.
fn kraus_at_3(c6: &BigInt) -> bool {
    val(c6, &BigInt::from(3)) != Some(2)
}

/// Rebuilds the reduced integral model with the given invariants. The pair
/// must satisfy Kraus's conditions; divisibility is asserted.
fn model_from_c4_c6(c4: &BigInt, c6: &BigInt) -> WeierstrassModel {
    let twelve = BigInt::from(12);
    let r = (-c6).mod_floor(&twelve);
    let b2 = if r <= BigInt::from(6) { r } else { r - twelve };
    let b4 = exact_div(&(&b2 * &b2 - c4), &BigInt::from(24));
    let b6 = exact_div(
        &(-(&b2 * &b2 * &b2) + 36i32 * &b2 * &b4 - c6),
        &BigInt::from(216),
    );
    let a1 = b2.mod_floor(&BigInt::from(2));
    let a2 = exact_div(&(&b2 - &a1), &BigInt::from(4));
    let a3 = b6.mod_floor(&BigInt::from(2));
    let a4 = exact_div(&(&b4 - &a1 * &a3), &BigInt::from(2));
    let a6 = exact_div(&(&b6 - &a3), &BigInt::from(4));
    WeierstrassModel { a1, a2, a3, a4, a6 }
}

/// Global minimal model of `model` together with the scale u
/// (disc = u^12 * disc_min). The result is canonicalized.
pub fn minimalize(model: &WeierstrassModel) -> Result<(WeierstrassModel, BigInt)> {
    let disc = model.discriminant();
    if disc.is_zero() {
        return Err(Error::SingularCurve("discriminant is zero".into()));
    }
    let fact = arith::factor(&disc)?;
    let (m, u, _) = minimalize_with_factored_disc(model, &fact)?;
    Ok((m, u))
}

/// Minimalization when the discriminant factorization is already known
/// (the enumeration grid assembles it from closed-form factors).
pub(crate) fn minimalize_with_factored_disc(
    model: &WeierstrassModel,
    disc_fact: &Factorization,
) -> Result<(WeierstrassModel, BigInt, Factorization)> {
    let inv = model.invariants();
    if inv.disc.is_zero() {
        return Err(Error::SingularCurve("discriminant is zero".into()));
    }
    debug_assert_eq!(disc_fact.value(), inv.disc);
    let mut u = BigInt::one();
    let mut min_fact = disc_fact.clone();
    for (p, e) in disc_fact.factors() {
        if *e < 12 {
            continue;
        }
        let mut d = e / 12;
        if !inv.c4.is_zero() {
            d = d.min(val(&inv.c4, p).unwrap() / 4);
        }
        if !inv.c6.is_zero() {
            d = d.min(val(&inv.c6, p).unwrap() / 6);
        }
        if *p == BigInt::from(2) {
            while d > 0 {
                let c4r = exact_div(&inv.c4, &p.pow(4 * d));
                let c6r = exact_div(&inv.c6, &p.pow(6 * d));
                if kraus_at_2(&c4r, &c6r) {
                    break;
                }
                d -= 1;
            }
        } else if *p == BigInt::from(3) {
            while d > 0 {
                let c6r = exact_div(&inv.c6, &p.pow(6 * d));
                if kraus_at_3(&c6r) {
                    break;
                }
                d -= 1;
            }
        }
        if d > 0 {
            u *= p.pow(d);
            min_fact.reduce_exponent(p, 12 * d);
        }
    }
    let c4m = exact_div(&inv.c4, &u.pow(4));
    let c6m = exact_div(&inv.c6, &u.pow(6));
    let min_model = model_from_c4_c6(&c4m, &c6m);
    debug_assert_eq!(min_model.discriminant(), min_fact.value());
    Ok((min_model, u, min_fact))
}

fn modp(x: &BigInt, p: &BigInt) -> BigInt {
    x.mod_floor(p)
}

/// Inverse mod a prime p of a unit x.
fn inv_modp(x: &BigInt, p: &BigInt) -> BigInt {
    let xm = modp(x, p);
    debug_assert!(!xm.is_zero());
    xm.modpow(&(p - 2i32), p)
}

/// Singular point of the reduction mod p (p | disc). Brute force for
/// p in {2, 3}; closed form from the completed-square cubic otherwise.
fn singular_point(e: &WeierstrassModel, p: &BigInt) -> (BigInt, BigInt) {
    let inv = e.invariants();
    if let Some(ps) = p.to_u32().filter(|&q| q <= 3) {
        let pb = BigInt::from(ps);
        for x in 0..ps {
            for y in 0..ps {
                let (xb, yb) = (BigInt::from(x), BigInt::from(y));
                let on = &yb * &yb + &e.a1 * &xb * &yb + &e.a3 * &yb
                    - (&xb * &xb * &xb + &e.a2 * &xb * &xb + &e.a4 * &xb + &e.a6);
                let fx = &e.a1 * &yb - 3i32 * &xb * &xb - 2i32 * &e.a2 * &xb - &e.a4;
                let fy = 2i32 * &yb + &e.a1 * &xb + &e.a3;
                if modp(&on, &pb).is_zero()
                    && modp(&fx, &pb).is_zero()
                    && modp(&fy, &pb).is_zero()
                {
                    return (xb, yb);
                }
            }
        }
        unreachable!("no singular point mod {p} though p | disc");
    }
    // In the double-cover form y'^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 the
    // singular x is the repeated root of the cubic; for a cubic
    // a x^3 + b x^2 + c x + d with b^2 - 3ac != 0 the repeated root is
    // (9ad - bc) / (2(b^2 - 3ac)), and here b^2 - 3ac = c4.
    let x0 = if !modp(&inv.c4, p).is_zero() {
        let num = 18i32 * &inv.b6 - &inv.b2 * &inv.b4;
        modp(&(num * inv_modp(&inv.c4, p)), p)
    } else {
        modp(&(-&inv.b2 * inv_modp(&BigInt::from(12), p)), p)
    };
    let y0 = modp(
        &(-(&e.a1 * &x0 + &e.a3) * inv_modp(&BigInt::from(2), p)),
        p,
    );
    (x0, y0)
}

enum QuadRoots {
    Distinct,
    Repeated(BigInt),
}

/// Root structure of A Y^2 + B Y + C mod p, with A a unit. The discriminant
/// B^2 - 4AC detects repeated roots in every characteristic.
fn quad_structure(a: &BigInt, b: &BigInt, c: &BigInt, p: &BigInt) -> QuadRoots {
    let disc = modp(&(b * b - 4i32 * a * c), p);
    if !disc.is_zero() {
        return QuadRoots::Distinct;
    }
    let root = if *p == BigInt::from(2) {
        // B is even here, so A Y^2 + C = A (Y + C/A)^2 over F_2.
        modp(&(c * inv_modp(a, p)), p)
    } else {
        modp(&(-b * inv_modp(&(2i32 * a), p)), p)
    };
    QuadRoots::Repeated(root)
}

enum CubicRoots {
    Distinct,
    DoubleSimple(BigInt),
    Triple(BigInt),
}

/// Root structure of the monic cubic T^3 + a T^2 + b T + c mod p.
fn cubic_structure(a: &BigInt, b: &BigInt, c: &BigInt, p: &BigInt) -> CubicRoots {
    let eval = |t: &BigInt| modp(&(t * t * t + a * t * t + b * t + c), p);
    let multiplicity = |root: &BigInt| -> u32 {
        // repeated synthetic division by (T - root)
        let mut coeffs = vec![BigInt::one(), a.clone(), b.clone(), c.clone()];
        let mut mult = 0;
        loop {
            let mut out = Vec::with_capacity(coeffs.len() - 1);
            let mut acc = BigInt::zero();
            for co in &coeffs[..coeffs.len() - 1] {
                acc = modp(&(&acc * root + co), p);
                out.push(acc.clone());
            }
            let rem = modp(&(&acc * root + coeffs.last().unwrap()), p);
            if !rem.is_zero() {
                return mult;
            }
            mult += 1;
            coeffs = out;
            if coeffs.len() == 1 {
                return mult;
            }
        }
    };
    if let Some(ps) = p.to_u32().filter(|&q| q < 64) {
        for t in 0..ps {
            let tb = BigInt::from(t);
            if eval(&tb).is_zero() {
                match multiplicity(&tb) {
                    0 | 1 => continue,
                    2 => return CubicRoots::DoubleSimple(tb),
                    _ => return CubicRoots::Triple(tb),
                }
            }
        }
        return CubicRoots::Distinct;
    }
    // Large p (>= 5): the cubic discriminant detects repeated roots; the
    // shared root of (P, P') falls out of one polynomial-division step,
    // whose linear remainder is ((6b - 2a^2) T + (9c - ab)) / 9.
    let disc = 18i32 * a * b * c - 4i32 * a * a * a * c + a * a * b * b
        - 4i32 * b * b * b
        - 27i32 * c * c;
    if !modp(&disc, p).is_zero() {
        return CubicRoots::Distinct;
    }
    let lam = modp(&(6i32 * b - 2i32 * a * a), p);
    let alpha = if !lam.is_zero() {
        let mu = modp(&(9i32 * c - a * b), p);
        modp(&(-mu * inv_modp(&lam, p)), p)
    } else {
        // P' itself has a double root at -a/3.
        modp(&(-a * inv_modp(&BigInt::from(3), p)), p)
    };
    debug_assert!(eval(&alpha).is_zero());
    match multiplicity(&alpha) {
        2 => CubicRoots::DoubleSimple(alpha),
        3 => CubicRoots::Triple(alpha),
        m => unreachable!("repeated root with multiplicity {m}"),
    }
}

/// Tate's algorithm at p. If the model is not minimal at p it is reduced
/// first, so the reported data always refer to the local minimal model.
pub fn tate_local(model: &WeierstrassModel, p: &BigInt) -> Result<LocalData> {
    if p.is_negative() || !arith::is_prime(p) {
        return Err(Error::DomainError(format!("{p} is not prime")));
    }
    let mut e = model.clone();
    loop {
        match tate_pass(&e, p)? {
            TatePass::Done(data) => return Ok(data),
            TatePass::NotMinimal => {
                e = WeierstrassModel {
                    a1: exact_div(&e.a1, p),
                    a2: exact_div(&e.a2, &p.pow(2)),
                    a3: exact_div(&e.a3, &p.pow(3)),
                    a4: exact_div(&e.a4, &p.pow(4)),
                    a6: exact_div(&e.a6, &p.pow(6)),
                };
            }
        }
    }
}

enum TatePass {
    Done(LocalData),
    NotMinimal,
}

fn tate_pass(model: &WeierstrassModel, p: &BigInt) -> Result<TatePass> {
    let inv = model.invariants();
    if inv.disc.is_zero() {
        return Err(Error::SingularCurve("discriminant is zero".into()));
    }
    let n = val(&inv.disc, p).unwrap();
    let done = |kodaira: KodairaType, f: u32, reduction: ReductionKind| {
        let m = kodaira.component_count();
        debug_assert_eq!(
            i64::from(f),
            i64::from(n) - i64::from(m) + 1,
            "component bookkeeping at {p} for {kodaira}"
        );
        Ok(TatePass::Done(LocalData {
            p: p.clone(),
            ord_disc: n,
            kodaira,
            f,
            m,
            reduction,
        }))
    };
    if n == 0 {
        return done(KodairaType::I(0), 0, ReductionKind::Good);
    }

    // Move the singular point of the reduction to (0, 0); afterwards
    // p | a3, a4, a6.
    let (x0, y0) = singular_point(model, p);
    let e = model.transform(&x0, &BigInt::zero(), &y0);
    debug_assert!(
        val_at_least(&e.a3, p, 1) && val_at_least(&e.a4, p, 1) && val_at_least(&e.a6, p, 1)
    );

    if !modp(&inv.c4, p).is_zero() {
        // Nodal: type I_n. Split iff T^2 + a1 T - a2 has its roots in F_p.
        let split = if *p == BigInt::from(2) {
            modp(&e.a2, p).is_zero()
        } else {
            let b2 = &e.a1 * &e.a1 + 4i32 * &e.a2;
            arith::legendre_symbol(&b2, p)? == 1
        };
        let red = if split {
            ReductionKind::MultiplicativeSplit
        } else {
            ReductionKind::MultiplicativeNonsplit
        };
        return done(KodairaType::I(n), 1, red);
    }

    // Additive from here on.
    if !val_at_least(&e.a6, p, 2) {
        return done(KodairaType::II, n, ReductionKind::Additive);
    }
    if !val_at_least(&e.invariants().b8, p, 3) {
        return done(KodairaType::III, n - 1, ReductionKind::Additive);
    }
    let b6 = &e.a3 * &e.a3 + 4i32 * &e.a6;
    if !val_at_least(&b6, p, 3) {
        return done(KodairaType::IV, n - 2, ReductionKind::Additive);
    }

    // Normalize to p | a1, a2; p^2 | a3, a4; p^3 | a6.
    let e = if *p == BigInt::from(2) {
        let s = modp(&e.a2, p);
        let e = e.transform(&BigInt::zero(), &s, &BigInt::zero());
        // v(a3) >= 2 and v(a6) >= 2 hold here; t = 2*tau fixes a6 mod 8.
        let tau = modp(&exact_div(&e.a6, &BigInt::from(4)), &BigInt::from(2));
        e.transform(&BigInt::zero(), &BigInt::zero(), &(2i32 * tau))
    } else {
        let inv2 = inv_modp(&BigInt::from(2), p);
        let s = modp(&(-&e.a1 * &inv2), p);
        let e = e.transform(&BigInt::zero(), &s, &BigInt::zero());
        let p2 = p * p;
        let t = (-&e.a3 * &inv2).mod_floor(&p2);
        e.transform(&BigInt::zero(), &BigInt::zero(), &t)
    };
    debug_assert!(
        val_at_least(&e.a1, p, 1)
            && val_at_least(&e.a2, p, 1)
            && val_at_least(&e.a3, p, 2)
            && val_at_least(&e.a4, p, 2)
            && val_at_least(&e.a6, p, 3)
    );

    // The cubic T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) mod p.
    let ca = exact_div(&e.a2, p);
    let cb = exact_div(&e.a4, &p.pow(2));
    let cc = exact_div(&e.a6, &p.pow(3));
    match cubic_structure(&ca, &cb, &cc, p) {
        CubicRoots::Distinct => done(KodairaType::IStar(0), n - 4, ReductionKind::Additive),
        CubicRoots::DoubleSimple(alpha) => {
            // Type I_m^* for some m >= 1: shift the double root to T = 0
            // and alternate the two quadratic tests.
            let mut e = e.transform(&(p * alpha), &BigInt::zero(), &BigInt::zero());
            debug_assert_eq!(val(&e.a2, p), Some(1));
            debug_assert!(
                val_at_least(&e.a3, p, 2)
                    && val_at_least(&e.a4, p, 3)
                    && val_at_least(&e.a6, p, 4)
            );
            let a2p = exact_div(&e.a2, p);
            let mut q = 2u32;
            loop {
                // Y^2 + (a3/p^q) Y - a6/p^(2q)
                let b = exact_div(&e.a3, &p.pow(q));
                let c = -exact_div(&e.a6, &p.pow(2 * q));
                match quad_structure(&BigInt::one(), &b, &c, p) {
                    QuadRoots::Distinct => {
                        let m = 2 * q - 3;
                        return done(KodairaType::IStar(m), n - 4 - m, ReductionKind::Additive);
                    }
                    QuadRoots::Repeated(y0) => {
                        e = e.transform(&BigInt::zero(), &BigInt::zero(), &(p.pow(q) * y0));
                        debug_assert!(
                            val_at_least(&e.a3, p, q + 1) && val_at_least(&e.a6, p, 2 * q + 1)
                        );
                    }
                }
                // (a2/p) X^2 + (a4/p^(q+1)) X + a6/p^(2q+1)
                let b = exact_div(&e.a4, &p.pow(q + 1));
                let c = exact_div(&e.a6, &p.pow(2 * q + 1));
                match quad_structure(&a2p, &b, &c, p) {
                    QuadRoots::Distinct => {
                        let m = 2 * q - 2;
                        return done(KodairaType::IStar(m), n - 4 - m, ReductionKind::Additive);
                    }
                    QuadRoots::Repeated(x0) => {
                        e = e.transform(&(p.pow(q) * x0), &BigInt::zero(), &BigInt::zero());
                        debug_assert!(
                            val_at_least(&e.a4, p, q + 2) && val_at_least(&e.a6, p, 2 * q + 2)
                        );
                    }
                }
                q += 1;
            }
        }
        CubicRoots::Triple(alpha) => {
            let e = e.transform(&(p * alpha), &BigInt::zero(), &BigInt::zero());
            debug_assert!(
                val_at_least(&e.a2, p, 2)
                    && val_at_least(&e.a4, p, 3)
                    && val_at_least(&e.a6, p, 4)
            );
            // Y^2 + (a3/p^2) Y - a6/p^4
            let b = exact_div(&e.a3, &p.pow(2));
            let c = -exact_div(&e.a6, &p.pow(4));
            let e = match quad_structure(&BigInt::one(), &b, &c, p) {
                QuadRoots::Distinct => {
                    return done(KodairaType::IVStar, n - 6, ReductionKind::Additive);
                }
                QuadRoots::Repeated(y0) => {
                    e.transform(&BigInt::zero(), &BigInt::zero(), &(p.pow(2) * y0))
                }
            };
            debug_assert!(val_at_least(&e.a3, p, 3) && val_at_least(&e.a6, p, 5));
            if !val_at_least(&e.a4, p, 4) {
                return done(KodairaType::IIIStar, n - 7, ReductionKind::Additive);
            }
            if !val_at_least(&e.a6, p, 6) {
                return done(KodairaType::IIStar, n - 8, ReductionKind::Additive);
            }
            // p | a1, p^2 | a2, p^3 | a3, p^4 | a4, p^6 | a6: not minimal.
            debug_assert!(val_at_least(&e.a1, p, 1) && val_at_least(&e.a3, p, 3));
            Ok(TatePass::NotMinimal)
        }
    }
}

/// Minimalizes, factors the minimal discriminant, and runs Tate's algorithm
/// at every bad prime.
pub fn conductor(model: &WeierstrassModel) -> Result<GlobalData> {
    let disc = model.discriminant();
    if disc.is_zero() {
        return Err(Error::SingularCurve("discriminant is zero".into()));
    }
    let fact = arith::factor(&disc)?;
    conductor_with_factored_disc(model, &fact)
}

pub(crate) fn conductor_with_factored_disc(
    model: &WeierstrassModel,
    disc_fact: &Factorization,
) -> Result<GlobalData> {
    let (min_model, u, min_fact) = minimalize_with_factored_disc(model, disc_fact)?;
    let mut locals = Vec::new();
    let mut cond = Vec::new();
    for (p, e) in min_fact.factors() {
        let ld = tate_local(&min_model, p)?;
        assert_eq!(ld.ord_disc, *e, "minimal model not minimal at {p}");
        assert!(ld.f >= 1);
        cond.push((p.clone(), ld.f));
        locals.push(ld);
    }
    let conductor = Factorization::new(1, cond)?;
    Ok(GlobalData {
        minimal_model: min_model,
        scaling: u,
        disc_min: min_fact,
        conductor,
        locals,
    })
}
