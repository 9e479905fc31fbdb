//! Bounded exhaustive solvers for the exponential Diophantine equations
//! behind the classification, each paired with enough structure that tests
//! can re-substitute every reported tuple into its defining equation.
//!
//! All searches are deterministic and complete over their stated bounds;
//! the bounds used are recorded in the returned [`SolutionSet`]. Values are
//! promoted to big integers before anything can overflow 64 bits.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// Which equation a [`SolutionSet`] answers for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquationId {
    /// x^m - y^n = 1 with m, n > 1 and |x|, |y| >= 2 (tuples (x, m, y, n)).
    Catalan,
    /// 16 p^m + 1 = y^n, |p| prime, m > 1, n prime, y a prime power
    /// (tuples (p, m, y, n)).
    SixteenPowPlusOne,
    /// x^2 + 2^h = y^n, n > 1, y odd, h > 2, everything positive
    /// (tuples (x, y, h, n)).
    SquarePlusTwoPower,
    /// x^2 - 125 = +-4 y^l, l > 1, y > 0 (tuples (x, y, l)).
    SquareMinus125,
    /// s^2 - 11s - 1 = +-y^l with |s| and y prime powers (tuples (s, y, l)).
    ShiftedSquare,
    /// X^2 - k = Y^3 (tuples (X, Y); k recorded in the bounds).
    Mordell,
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EquationId::Catalan => "x^m - y^n = 1",
            EquationId::SixteenPowPlusOne => "16 p^m + 1 = y^n",
            EquationId::SquarePlusTwoPower => "x^2 + 2^h = y^n",
            EquationId::SquareMinus125 => "x^2 - 125 = +-4 y^l",
            EquationId::ShiftedSquare => "s^2 - 11 s - 1 = +-y^l",
            EquationId::Mordell => "X^2 - k = Y^3",
        };
        write!(f, "{s}")
    }
}

/// A symbolic one-parameter family of solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily {
    pub parameter: &'static str,
    pub description: String,
    /// Inclusive parameter range covered by the search bounds.
    pub range: (i64, i64),
    kind: FamilyKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyKind {
    /// (2^(h-2) - 1, 2^(h-2) + 1, h, 2), parametrized by h.
    TwoPowerSandwich,
    /// (x0, 1, l) for every exponent l, parametrized by l.
    YIsOne { x0: i64, arity: usize },
}

impl SolutionFamily {
    pub fn instantiate(&self, k: i64) -> Vec<BigInt> {
        match self.kind {
            FamilyKind::TwoPowerSandwich => {
                let half = BigInt::from(2).pow(k as u32 - 2);
                vec![
                    &half - 1i32,
                    &half + 1i32,
                    BigInt::from(k),
                    BigInt::from(2),
                ]
            }
            FamilyKind::YIsOne { x0, arity } => {
                let mut v = vec![BigInt::from(x0), BigInt::one(), BigInt::from(k)];
                v.truncate(arity);
                v
            }
        }
    }
}

/// The result of one bounded search: every concrete solution found, the
/// symbolic families they fall into, any members of an unresolved family
/// (reported separately, never merged into `solutions`), tuples rejected by
/// a side condition, and the exact bounds that were searched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub equation: EquationId,
    pub solutions: Vec<Vec<BigInt>>,
    pub families: Vec<SolutionFamily>,
    pub open_family: Vec<Vec<BigInt>>,
    pub rejected: Vec<(Vec<BigInt>, String)>,
    pub bounds: Vec<(String, i64)>,
}

impl SolutionSet {
    fn new(equation: EquationId, bounds: Vec<(String, i64)>) -> Self {
        SolutionSet {
            equation,
            solutions: Vec::new(),
            families: Vec::new(),
            open_family: Vec::new(),
            rejected: Vec::new(),
            bounds: Vec::new(),
        }
        .with_bounds(bounds)
    }

    fn with_bounds(mut self, bounds: Vec<(String, i64)>) -> Self {
        self.bounds = bounds;
        self
    }

    fn finish(mut self) -> Self {
        self.solutions.sort();
        self.solutions.dedup();
        self.open_family.sort();
        self.open_family.dedup();
        self
    }

    fn bound(&self, name: &str) -> i64 {
        self.bounds
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
            .unwrap_or(0)
    }

    /// Exact re-substitution of a tuple into the defining equation.
    pub fn check_tuple(&self, tuple: &[BigInt]) -> bool {
        let p2 = |e: &BigInt| e * e;
        match self.equation {
            EquationId::Catalan => {
                let (x, m, y, n) = (&tuple[0], &tuple[1], &tuple[2], &tuple[3]);
                let (m, n) = (u32::try_from(m).unwrap(), u32::try_from(n).unwrap());
                x.pow(m) - y.pow(n) == BigInt::one()
            }
            EquationId::SixteenPowPlusOne => {
                let (p, m, y, n) = (&tuple[0], &tuple[1], &tuple[2], &tuple[3]);
                let (m, n) = (u32::try_from(m).unwrap(), u32::try_from(n).unwrap());
                16i32 * p.pow(m) + 1i32 == y.pow(n)
            }
            EquationId::SquarePlusTwoPower => {
                let (x, y, h, n) = (&tuple[0], &tuple[1], &tuple[2], &tuple[3]);
                let (h, n) = (u32::try_from(h).unwrap(), u32::try_from(n).unwrap());
                p2(x) + BigInt::from(2).pow(h) == y.pow(n)
            }
            EquationId::SquareMinus125 => {
                let (x, y, l) = (&tuple[0], &tuple[1], &tuple[2]);
                let l = u32::try_from(l).unwrap();
                let lhs = p2(x) - 125i32;
                lhs == 4i32 * y.pow(l) || lhs == -4i32 * y.pow(l)
            }
            EquationId::ShiftedSquare => {
                let (s, y, l) = (&tuple[0], &tuple[1], &tuple[2]);
                let l = u32::try_from(l).unwrap();
                let lhs = p2(s) - 11i32 * s - 1i32;
                lhs == y.pow(l) || lhs == -y.pow(l)
            }
            EquationId::Mordell => {
                let k = BigInt::from(self.bound("k"));
                let (x, y) = (&tuple[0], &tuple[1]);
                p2(x) - k == y * y * y
            }
        }
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// All (x, m, y, n) with x^m - y^n = 1, m, n > 1, 2 <= |x|, |y| <= B,
/// exponents up to 2*log2(B).
pub fn catalan_search(base_bound: i64) -> Result<SolutionSet> {
    if base_bound < 10 {
        return Err(Error::DomainError("base bound must be >= 10".into()));
    }
    let exp_bound = 2 * (64 - (base_bound as u64).leading_zeros());
    let mut set = SolutionSet::new(
        EquationId::Catalan,
        vec![
            ("base_bound".into(), base_bound),
            ("exp_bound".into(), exp_bound as i64),
        ],
    );
    // value -> all (base, exp) representations, signed bases included
    let mut powers: HashMap<BigInt, Vec<(i64, u32)>> = HashMap::new();
    for b in 2..=base_bound {
        for sign in [1i64, -1] {
            let base = sign * b;
            let mut v = big(base) * big(base);
            for e in 2..=exp_bound {
                powers.entry(v.clone()).or_default().push((base, e));
                v *= big(base);
            }
        }
    }
    for (v, ylist) in &powers {
        let target = v + 1i32;
        if let Some(xlist) = powers.get(&target) {
            for &(x, m) in xlist {
                for &(y, n) in ylist {
                    set.solutions
                        .push(vec![big(x), big(m as i64), big(y), big(n as i64)]);
                }
            }
        }
    }
    Ok(set.finish())
}

/// All (p, m, y, n) with 16 p^m + 1 = y^n, |p| prime <= P, 1 < m <= M,
/// n prime, and y = l^t a prime power. Expected empty.
pub fn lemma22_search(prime_bound: i64, exp_bound: u32) -> Result<SolutionSet> {
    if prime_bound < 3 || exp_bound < 2 {
        return Err(Error::DomainError("need P >= 3 and M >= 2".into()));
    }
    let mut set = SolutionSet::new(
        EquationId::SixteenPowPlusOne,
        vec![
            ("prime_bound".into(), prime_bound),
            ("exp_bound".into(), exp_bound as i64),
        ],
    );
    for &q in arith::small_primes() {
        if i64::from(q) > prime_bound {
            break;
        }
        for p in [i64::from(q), -i64::from(q)] {
            let mut pm = big(p) * big(p);
            for m in 2..=exp_bound {
                let v = 16i32 * &pm + 1i32;
                pm *= big(p);
                let mag = v.magnitude();
                if mag <= &1u32.into() {
                    continue;
                }
                let max_n = mag.bits() as u32;
                for &n in arith::small_primes() {
                    if n > max_n {
                        break;
                    }
                    if v.is_negative() && n % 2 == 0 {
                        continue;
                    }
                    let root = mag.nth_root(n);
                    if &root.pow(n) != mag {
                        continue;
                    }
                    let y = if v.is_negative() {
                        -BigInt::from(root)
                    } else {
                        BigInt::from(root)
                    };
                    if arith::prime_power(&y).is_none() {
                        continue;
                    }
                    set.solutions
                        .push(vec![big(p), big(m as i64), y, big(n as i64)]);
                }
            }
        }
    }
    Ok(set.finish())
}

/// All positive (x, y, h, n) with x^2 + 2^h = y^n, n > 1, y odd, 2 < h <= H,
/// x, y <= B.
pub fn lemma23_search(h_bound: u32, base_bound: i64) -> Result<SolutionSet> {
    if h_bound < 3 || base_bound < 10 {
        return Err(Error::DomainError("need H >= 3 and B >= 10".into()));
    }
    if h_bound > 100 {
        return Err(Error::DomainError("H > 100 unsupported".into()));
    }
    let mut set = SolutionSet::new(
        EquationId::SquarePlusTwoPower,
        vec![
            ("h_bound".into(), h_bound as i64),
            ("base_bound".into(), base_bound),
        ],
    );
    // Precompute every y^n with y odd, y <= B, n >= 2, up to the largest
    // searched value; the scan is then a hash lookup per (x, h).
    let max_v = (base_bound as u128) * (base_bound as u128) + (1u128 << h_bound);
    let mut powers: HashMap<u128, Vec<(i64, u32)>> = HashMap::new();
    for y in (3..=base_bound).step_by(2) {
        let yb = y as u128;
        let mut v = yb.checked_mul(yb).filter(|&v| v <= max_v);
        let mut n = 2u32;
        while let Some(val) = v {
            powers.entry(val).or_default().push((y, n));
            v = val.checked_mul(yb).filter(|&v| v <= max_v);
            n += 1;
        }
    }
    for h in 3..=h_bound {
        let two_h = 1u128 << h;
        // v = x^2 + 2^h is odd exactly when x is odd, and y must be odd.
        for x in (1..=base_bound).step_by(2) {
            let v = (x as u128) * (x as u128) + two_h;
            for &(y, n) in powers.get(&v).into_iter().flatten() {
                set.solutions
                    .push(vec![big(x), big(y), big(h as i64), big(n as i64)]);
            }
        }
    }
    let max_family_h = (3..=h_bound)
        .filter(|&h| {
            h >= 3 && {
                let half = 1i128 << (h - 2);
                half - 1 <= base_bound as i128 && half + 1 <= base_bound as i128
            }
        })
        .max();
    if let Some(hmax) = max_family_h {
        set.families.push(SolutionFamily {
            parameter: "h",
            description: "(2^(h-2)-1, 2^(h-2)+1, h, 2)".into(),
            range: (3, hmax as i64),
            kind: FamilyKind::TwoPowerSandwich,
        });
    }
    Ok(set.finish())
}

/// All (x, y, l) with x^2 - 125 = +-4 y^l, l in 2..=L, y > 0, |x| <= B.
/// Members of the unresolved shape (positive sign, l odd, 5 does not
/// divide x) that fall outside the known list are reported in
/// `open_family`, never in `solutions`.
pub fn lemma24_search(x_bound: i64, exp_bound: u32) -> Result<SolutionSet> {
    if x_bound < 70 || exp_bound < 3 {
        return Err(Error::DomainError("need B >= 70 and L >= 3".into()));
    }
    let mut set = SolutionSet::new(
        EquationId::SquareMinus125,
        vec![
            ("x_bound".into(), x_bound),
            ("exp_bound".into(), exp_bound as i64),
        ],
    );
    let known_positive: [(i64, i64, u32); 3] = [(15, 5, 2), (63, 31, 2), (25, 5, 3)];
    for x in (1..=x_bound).step_by(2) {
        let xx = (x as i128) * (x as i128);
        let (v, positive) = if xx >= 125 {
            (((xx - 125) / 4) as u128, true)
        } else {
            (((125 - xx) / 4) as u128, false)
        };
        if v == 0 {
            continue; // x^2 = 125 is impossible anyway
        }
        if v == 1 {
            // y = 1 satisfies the equation for every exponent
            for l in 2..=exp_bound {
                for xs in [x, -x] {
                    set.solutions.push(vec![big(xs), BigInt::one(), big(l as i64)]);
                }
            }
            set.families.push(SolutionFamily {
                parameter: "l",
                description: format!("(+-{x}, 1, l)"),
                range: (2, exp_bound as i64),
                kind: FamilyKind::YIsOne { x0: x, arity: 3 },
            });
            continue;
        }
        let max_l = exp_bound.min(128 - v.leading_zeros());
        for l in 2..=max_l {
            let r = v.nth_root(l);
            if r < 2 {
                break;
            }
            if r.pow(l) != v {
                continue;
            }
            let open = positive && l % 2 == 1 && x % 5 != 0;
            let known = !positive
                || known_positive
                    .iter()
                    .any(|&(kx, ky, kl)| kx == x && ky == r as i64 && kl == l);
            for xs in [x, -x] {
                let tuple = vec![big(xs), BigInt::from(r), big(l as i64)];
                if open && !known {
                    set.open_family.push(tuple);
                } else {
                    set.solutions.push(tuple);
                }
            }
        }
    }
    Ok(set.finish())
}

/// Filters the solutions of `lemma24_search` through the substitution
/// x = 2s - 11 and the requirement that |s| (and y, unless y = 1) be prime
/// powers. Tuples failing the prime-power condition are reported with the
/// reason; s = 0 never corresponds to a curve parameter and is skipped.
pub fn cor25_filter(x_bound: i64, exp_bound: u32) -> Result<SolutionSet> {
    let inner = lemma24_search(x_bound, exp_bound)?;
    let mut set = SolutionSet::new(
        EquationId::ShiftedSquare,
        inner.bounds.clone(),
    );
    let transform = |tuple: &[BigInt]| -> Option<Vec<BigInt>> {
        let s = (&tuple[0] + 11i32) / 2i32;
        if s.is_zero() {
            return None;
        }
        Some(vec![s, tuple[1].clone(), tuple[2].clone()])
    };
    let prime_power_ok = |v: &BigInt| v.is_one() || arith::prime_power(v).is_some();
    for tuple in &inner.solutions {
        let Some(out) = transform(tuple) else { continue };
        if !prime_power_ok(&out[0].abs()) {
            set.rejected
                .push((out, "|s| is not a prime power".into()));
            continue;
        }
        if !prime_power_ok(&out[1]) {
            set.rejected.push((out, "y is not a prime power".into()));
            continue;
        }
        set.solutions.push(out);
    }
    for tuple in &inner.open_family {
        let Some(out) = transform(tuple) else { continue };
        if prime_power_ok(&out[0].abs()) && prime_power_ok(&out[1]) {
            set.open_family.push(out);
        }
    }
    // (11, 1, l) survives the filter for every exponent l.
    set.families.push(SolutionFamily {
        parameter: "l",
        description: "(11, 1, l)".into(),
        range: (2, exp_bound as i64),
        kind: FamilyKind::YIsOne { x0: 11, arity: 3 },
    });
    set.rejected.sort();
    Ok(set.finish())
}

/// Sign of the Pell constant in x^2 - 125 y^2 = c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PellSign {
    Plus4,
    Minus4,
}

impl PellSign {
    pub fn constant(self) -> i64 {
        match self {
            PellSign::Plus4 => 4,
            PellSign::Minus4 => -4,
        }
    }
}

impl std::str::FromStr for PellSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+4" | "4" | "plus4" => Ok(PellSign::Plus4),
            "-4" | "minus4" => Ok(PellSign::Minus4),
            other => Err(Error::DomainError(format!("unknown Pell sign {other:?}"))),
        }
    }
}

/// First `count` positive solutions of x^2 - 125 y^2 = +-4 in increasing y,
/// generated by powers of the fundamental unit (11 + sqrt(125))/2: odd
/// powers have norm -4 and even powers norm +4.
pub fn pell_125(sign: PellSign, count: usize) -> Result<Vec<(BigInt, BigInt)>> {
    if count == 0 {
        return Err(Error::DomainError("count must be >= 1".into()));
    }
    let mut out = Vec::with_capacity(count);
    // (x, y) = fundamental solution of norm -4
    let (mut x, mut y) = (big(11), big(1));
    let mut parity_minus = true;
    while out.len() < count {
        if (sign == PellSign::Minus4) == parity_minus {
            debug_assert_eq!(&x * &x - 125i32 * &y * &y, big(sign.constant()));
            out.push((x.clone(), y.clone()));
        }
        // multiply (x + y sqrt(125))/2 by the fundamental unit
        let nx = 11i32 * &x + 125i32 * &y;
        let ny = &x + 11i32 * &y;
        if nx.is_odd() || ny.is_odd() {
            return Err(Error::NoSolution(
                "parity obstruction in the unit recurrence".into(),
            ));
        }
        x = nx / 2i32;
        y = ny / 2i32;
        parity_minus = !parity_minus;
    }
    Ok(out)
}

/// Exhaustive-search oracle for the same Pell equation: all solutions with
/// 0 < y <= y_bound, x > 0, in increasing y.
pub fn pell_125_brute_force(sign: PellSign, y_bound: i64) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let c = sign.constant() as i128;
    for y in 1..=(y_bound as i128) {
        let rhs = 125 * y * y + c;
        if rhs < 0 {
            continue;
        }
        let r = (rhs as u128).sqrt();
        if (r as i128) * (r as i128) == rhs {
            out.push((BigInt::from(r), BigInt::from(y)));
        }
    }
    out
}

/// All integer (X, Y) with X^2 - k = Y^3 and |Y| <= B.
pub fn mordell_search(k: i64, y_bound: i64) -> Result<SolutionSet> {
    if y_bound < 1 {
        return Err(Error::DomainError("bound must be >= 1".into()));
    }
    let mut set = SolutionSet::new(
        EquationId::Mordell,
        vec![("k".into(), k), ("y_bound".into(), y_bound)],
    );
    for y in -(y_bound as i128)..=(y_bound as i128) {
        let rhs = y * y * y + k as i128;
        if rhs < 0 {
            continue;
        }
        let r = (rhs as u128).sqrt();
        if (r as i128) * (r as i128) != rhs {
            continue;
        }
        if r == 0 {
            set.solutions.push(vec![BigInt::zero(), BigInt::from(y)]);
        } else {
            set.solutions.push(vec![BigInt::from(r), BigInt::from(y)]);
            set.solutions.push(vec![-BigInt::from(r), BigInt::from(y)]);
        }
    }
    Ok(set.finish())
}
