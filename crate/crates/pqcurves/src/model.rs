//! Weierstrass models for curves with a rational N-torsion point.
//!
//! The universal Tate normal form `y^2 + (1-c)xy - by = x^3 - bx^2` places
//! the torsion point at (0,0). For each N in {4,...,10,12} \ {11} the pair
//! (b, c) is a fixed rational function of a parameter lambda = s/t, and a
//! change of variables with a per-N scale factor clears all denominators,
//! giving an integral model whose coefficients are polynomials in (s, t).
//! Those polynomials, and the closed forms of the resulting discriminants,
//! are hard-wired here; the generic b-invariant formulas provide the second,
//! independent route to the same discriminant.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Torsion orders handled by the parametrization (Mazur's list restricted
/// to N >= 4; N = 11 admits no rational point of that order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorsionOrder {
    Four,
    Five,
    Six,
    Seven,
    Eight,
    Nine,
    Ten,
    Twelve,
}

impl TorsionOrder {
    pub const ALL: [TorsionOrder; 8] = [
        TorsionOrder::Four,
        TorsionOrder::Five,
        TorsionOrder::Six,
        TorsionOrder::Seven,
        TorsionOrder::Eight,
        TorsionOrder::Nine,
        TorsionOrder::Ten,
        TorsionOrder::Twelve,
    ];

    pub fn value(self) -> u32 {
        match self {
            TorsionOrder::Four => 4,
            TorsionOrder::Five => 5,
            TorsionOrder::Six => 6,
            TorsionOrder::Seven => 7,
            TorsionOrder::Eight => 8,
            TorsionOrder::Nine => 9,
            TorsionOrder::Ten => 10,
            TorsionOrder::Twelve => 12,
        }
    }

    pub fn from_value(n: u32) -> Result<Self> {
        match n {
            4 => Ok(TorsionOrder::Four),
            5 => Ok(TorsionOrder::Five),
            6 => Ok(TorsionOrder::Six),
            7 => Ok(TorsionOrder::Seven),
            8 => Ok(TorsionOrder::Eight),
            9 => Ok(TorsionOrder::Nine),
            10 => Ok(TorsionOrder::Ten),
            12 => Ok(TorsionOrder::Twelve),
            _ => Err(Error::DomainError(format!(
                "torsion order must be in {{4,...,10,12}}, got {n}"
            ))),
        }
    }
}

impl fmt::Display for TorsionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The pair (s, t) with gcd(s,t) = 1 and t > 0, encoding lambda = s/t for a
/// curve with an N-torsion point. Construction rejects parameters whose
/// model would be singular or whose clearing transformation is undefined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TateParameter {
    n: TorsionOrder,
    s: i64,
    t: i64,
}

impl TateParameter {
    pub fn new(n: TorsionOrder, s: i64, t: i64) -> Result<Self> {
        if t == 0 {
            return Err(Error::DegenerateParameter("t = 0".into()));
        }
        // (s, t) and (-s, -t) give the same lambda; canonicalize to t > 0.
        let (s, t) = if t < 0 { (-s, -t) } else { (s, t) };
        if s.unsigned_abs().gcd(&t.unsigned_abs()) != 1 {
            return Err(Error::DomainError(format!("gcd({s}, {t}) != 1")));
        }
        // Bound so closed-form evaluation never overflows an i128 product.
        if s.unsigned_abs() > (1 << 40) || t.unsigned_abs() > (1 << 40) {
            return Err(Error::DomainError("parameter height exceeds 2^40".into()));
        }
        // Clearing-transformation denominators.
        match n {
            TorsionOrder::Eight if s == 0 => {
                return Err(Error::DegenerateParameter("s = 0 (scale s*t vanishes)".into()));
            }
            TorsionOrder::Twelve if s == t => {
                return Err(Error::DegenerateParameter("s = t (scale t*(s-t)^3 vanishes)".into()));
            }
            _ => {}
        }
        if let Some(name) = vanishing_disc_factor(n, s, t) {
            return Err(Error::SingularCurve(name));
        }
        Ok(TateParameter { n, s, t })
    }

    pub fn torsion_order(&self) -> TorsionOrder {
        self.n
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn lambda(&self) -> BigRational {
        BigRational::new(BigInt::from(self.s), BigInt::from(self.t))
    }
}

impl fmt::Display for TateParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} (s,t)=({},{})", self.n, self.s, self.t)
    }
}

/// A long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeierstrassModel {
    pub a1: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
    pub a4: BigInt,
    pub a6: BigInt,
}

/// The standard quantities attached to a Weierstrass model. `j` is None
/// exactly when the discriminant vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub b2: BigInt,
    pub b4: BigInt,
    pub b6: BigInt,
    pub b8: BigInt,
    pub c4: BigInt,
    pub c6: BigInt,
    pub disc: BigInt,
    pub j: Option<BigRational>,
}

/// A rational point, either affine or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Infinity,
    Affine(BigRational, BigRational),
}

impl Point {
    pub fn affine(x: i64, y: i64) -> Point {
        Point::Affine(
            BigRational::from(BigInt::from(x)),
            BigRational::from(BigInt::from(y)),
        )
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "infinity"),
            Point::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl WeierstrassModel {
    pub fn new(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64) -> Self {
        WeierstrassModel {
            a1: a1.into(),
            a2: a2.into(),
            a3: a3.into(),
            a4: a4.into(),
            a6: a6.into(),
        }
    }

    pub fn coefficients(&self) -> [&BigInt; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn invariants(&self) -> Invariants {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1 * a1 + 4i32 * a2;
        let b4 = 2i32 * a4 + a1 * a3;
        let b6 = a3 * a3 + 4i32 * a6;
        let b8 = a1 * a1 * a6 + 4i32 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        let c4 = &b2 * &b2 - 24i32 * &b4;
        let c6 = -(&b2 * &b2 * &b2) + 36i32 * &b2 * &b4 - 216i32 * &b6;
        let disc = -(&b2 * &b2 * &b8) - 8i32 * (&b4 * &b4 * &b4) - 27i32 * (&b6 * &b6)
            + 9i32 * &b2 * &b4 * &b6;
        let j = if disc.is_zero() {
            None
        } else {
            Some(BigRational::new(&c4 * &c4 * &c4, disc.clone()))
        };
        Invariants { b2, b4, b6, b8, c4, c6, disc, j }
    }

    pub fn discriminant(&self) -> BigInt {
        self.invariants().disc
    }

    /// Exact check of the curve equation.
    pub fn is_on_curve(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => {
                let r = |z: &BigInt| BigRational::from(z.clone());
                let lhs = y * y + r(&self.a1) * x * y + r(&self.a3) * y;
                let rhs = x * x * x + r(&self.a2) * x * x + r(&self.a4) * x + r(&self.a6);
                lhs == rhs
            }
        }
    }

    /// -P = (x, -y - a1 x - a3).
    pub fn negate_point(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let r = |z: &BigInt| BigRational::from(z.clone());
                Point::Affine(x.clone(), -y - r(&self.a1) * x - r(&self.a3))
            }
        }
    }

    /// Chord-tangent addition on the long Weierstrass model.
    pub fn add_points(&self, p: &Point, q: &Point) -> Result<Point> {
        for pt in [p, q] {
            if !self.is_on_curve(pt) {
                return Err(Error::PointNotOnCurve(pt.to_string()));
            }
        }
        let r = |z: &BigInt| BigRational::from(z.clone());
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return Ok(q.clone()),
            (_, Point::Infinity) => return Ok(p.clone()),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        if x1 == x2 {
            let minus_q = self.negate_point(q);
            if *p == minus_q {
                return Ok(Point::Infinity);
            }
        }
        let (a1, a2, a3, a4, a6) = (
            r(&self.a1),
            r(&self.a2),
            r(&self.a3),
            r(&self.a4),
            r(&self.a6),
        );
        let (lambda, nu) = if x1 != x2 {
            let lambda = (y2 - y1) / (x2 - x1);
            let nu = y1 - &lambda * x1;
            (lambda, nu)
        } else {
            // P = Q, and 2y1 + a1 x1 + a3 != 0 since P != -P here.
            let denom = BigRational::from(BigInt::from(2)) * y1 + &a1 * x1 + &a3;
            let lambda = (BigRational::from(BigInt::from(3)) * x1 * x1
                + BigRational::from(BigInt::from(2)) * &a2 * x1
                + &a4
                - &a1 * y1)
                / &denom;
            let nu = (-(x1 * x1 * x1) + &a4 * x1 + BigRational::from(BigInt::from(2)) * &a6
                - &a3 * y1)
                / &denom;
            (lambda, nu)
        };
        let x3 = &lambda * &lambda + &a1 * &lambda - &a2 - x1 - x2;
        let y3 = -(&lambda + &a1) * &x3 - &nu - &a3;
        let sum = Point::Affine(x3, y3);
        debug_assert!(self.is_on_curve(&sum));
        Ok(sum)
    }

    /// Exact order of P if it is at most `cap`, else None.
    pub fn order_of_point(&self, p: &Point, cap: u32) -> Result<Option<u32>> {
        if !self.is_on_curve(p) {
            return Err(Error::PointNotOnCurve(p.to_string()));
        }
        if cap == 0 {
            return Err(Error::DomainError("cap must be >= 1".into()));
        }
        // acc holds k*P at the top of iteration k.
        let mut acc = p.clone();
        for k in 1..=cap {
            if acc.is_infinity() {
                return Ok(Some(k));
            }
            acc = self.add_points(&acc, p)?;
        }
        Ok(None)
    }

    /// Translation x -> x + r, y -> y + s*x + t (unimodular, u = 1).
    pub(crate) fn transform(&self, r: &BigInt, s: &BigInt, t: &BigInt) -> Self {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let na1 = a1 + 2i32 * s;
        let na2 = a2 - s * a1 - s * s + 3i32 * r;
        let na3 = a3 + r * a1 + 2i32 * t;
        let na4 = a4 - s * a3 + 2i32 * r * a2 - (t + r * s) * a1 + 3i32 * r * r - 2i32 * s * t;
        let na6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        WeierstrassModel { a1: na1, a2: na2, a3: na3, a4: na4, a6: na6 }
    }

    /// Substitution (x, y) -> (u^2 x, u^3 y): multiplies a_i by u^i and the
    /// discriminant by u^12.
    pub fn scale_up(&self, u: &BigInt) -> Self {
        WeierstrassModel {
            a1: &self.a1 * u,
            a2: &self.a2 * u.pow(2),
            a3: &self.a3 * u.pow(3),
            a4: &self.a4 * u.pow(4),
            a6: &self.a6 * u.pow(6),
        }
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

/// A Weierstrass model with rational coefficients (used for the universal
/// Tate normal form before denominators are cleared).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalModel {
    pub a1: BigRational,
    pub a2: BigRational,
    pub a3: BigRational,
    pub a4: BigRational,
    pub a6: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInvariants {
    pub b2: BigRational,
    pub b4: BigRational,
    pub b6: BigRational,
    pub b8: BigRational,
    pub c4: BigRational,
    pub c6: BigRational,
    pub disc: BigRational,
}

impl RationalModel {
    pub fn invariants(&self) -> RationalInvariants {
        let i = |n: i64| BigRational::from(BigInt::from(n));
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1 * a1 + i(4) * a2;
        let b4 = i(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + i(4) * a6;
        let b8 = a1 * a1 * a6 + i(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        let c4 = &b2 * &b2 - i(24) * &b4;
        let c6 = -(&b2 * &b2 * &b2) + i(36) * &b2 * &b4 - i(216) * &b6;
        let disc = -(&b2 * &b2 * &b8) - i(8) * (&b4 * &b4 * &b4) - i(27) * (&b6 * &b6)
            + i(9) * &b2 * &b4 * &b6;
        RationalInvariants { b2, b4, b6, b8, c4, c6, disc }
    }
}

/// The Tate normal form E_{b,c}: y^2 + (1-c)xy - by = x^3 - bx^2, with its
/// invariants. Errors if disc(b, c) = 0.
pub fn universal_model(b: &BigRational, c: &BigRational) -> Result<(RationalModel, RationalInvariants)> {
    let one = BigRational::one();
    let model = RationalModel {
        a1: &one - c,
        a2: -b.clone(),
        a3: -b.clone(),
        a4: BigRational::zero(),
        a6: BigRational::zero(),
    };
    let inv = model.invariants();
    if inv.disc.is_zero() {
        return Err(Error::SingularCurve(format!("disc(b={b}, c={c}) = 0")));
    }
    Ok((model, inv))
}

/// Closed form disc(b,c) = b^3 (16b^2 - b(8c^2 + 20c - 1) - c(1-c)^3).
pub fn universal_disc_closed_form(b: &BigRational, c: &BigRational) -> BigRational {
    let i = |n: i64| BigRational::from(BigInt::from(n));
    let one = BigRational::one();
    b * b * b
        * (i(16) * b * b - b * (i(8) * c * c + i(20) * c - &one)
            - c * (&one - c) * (&one - c) * (&one - c))
}

/// (b, c) of the Tate normal form as functions of lambda, for every N.
/// For N = 10 and 12 these are genuinely rational functions; errors when a
/// denominator vanishes.
pub fn tate_normal_bc(n: TorsionOrder, lambda: &BigRational) -> Result<(BigRational, BigRational)> {
    let one = BigRational::one();
    let i = |k: i64| BigRational::from(BigInt::from(k));
    let l = lambda;
    Ok(match n {
        TorsionOrder::Four => (l.clone(), BigRational::zero()),
        TorsionOrder::Five => (l.clone(), l.clone()),
        TorsionOrder::Six => (l * l + l, l.clone()),
        TorsionOrder::Seven => (l * l * (l - &one), l * (l - &one)),
        TorsionOrder::Eight => {
            if l.is_zero() {
                return Err(Error::DegenerateParameter("lambda = 0".into()));
            }
            let b = (i(2) * l - &one) * (l - &one);
            let c = &b / l;
            (b, c)
        }
        TorsionOrder::Nine => {
            let c = l * l * (l - &one);
            let b = &c * (l * l - l + &one);
            (b, c)
        }
        TorsionOrder::Ten => {
            let d = l * l - i(3) * l + &one;
            if d.is_zero() {
                return Err(Error::DegenerateParameter("lambda^2 - 3 lambda + 1 = 0".into()));
            }
            let num = l * l * l * (l - &one) * (i(2) * l - &one);
            let b = &num / (&d * &d);
            let c = -(l * (l - &one) * (i(2) * l - &one)) / &d;
            (b, c)
        }
        TorsionOrder::Twelve => {
            let d = l - &one;
            if d.is_zero() {
                return Err(Error::DegenerateParameter("lambda = 1".into()));
            }
            let d3 = &d * &d * &d;
            let d4 = &d3 * &d;
            let common = l * (i(2) * l - &one) * (i(3) * l * l - i(3) * l + &one);
            let c = -(&common / &d3);
            let b = &common * (i(2) * l * l - i(2) * l + &one) / &d4;
            (b, c)
        }
    })
}

/// Scale factor u relating the universal model to the integral model:
/// integral a_i = u^i * universal a_i.
pub fn clearing_scale(n: TorsionOrder, s: i64, t: i64) -> BigInt {
    let (s, t) = (BigInt::from(s), BigInt::from(t));
    match n {
        TorsionOrder::Four | TorsionOrder::Five | TorsionOrder::Six => t,
        TorsionOrder::Seven => &t * &t,
        TorsionOrder::Eight => &s * &t,
        TorsionOrder::Nine => &t * &t * &t,
        TorsionOrder::Ten => &t * (&s * &s - 3i32 * &s * &t + &t * &t),
        TorsionOrder::Twelve => {
            let d = &s - &t;
            &t * &d * &d * &d
        }
    }
}

/// Integral-model coefficients [a1, a2, a3, a4, a6] as polynomials in (s, t).
/// Pure evaluation with no validity checks; degenerate parameters simply
/// produce a singular model (a4 = a6 = 0 for every torsion order).
pub fn integral_coeffs(n: TorsionOrder, s: i64, t: i64) -> [BigInt; 5] {
    let sb = BigInt::from(s);
    let tb = BigInt::from(t);
    let (s, t) = (&sb, &tb);
    let zero = BigInt::zero();
    let (a1, a2, a3) = match n {
        // y^2 + t xy - s t^2 y = x^3 - s t x^2
        TorsionOrder::Four => (t.clone(), -(s * t), -(s * t * t)),
        // y^2 + (t-s) xy - s t^2 y = x^3 - s t x^2
        TorsionOrder::Five => (t - s, -(s * t), -(s * t * t)),
        // y^2 + (t-s) xy - (t^2 s + t s^2) y = x^3 - (s t + s^2) x^2
        TorsionOrder::Six => (t - s, -(s * t + s * s), -(t * t * s + t * s * s)),
        // y^2 + (t^2 - s^2 + s t) xy - s^2 (s t^3 - t^4) y = x^3 - (s^3 t - s^2 t^2) x^2
        TorsionOrder::Seven => (
            t * t - s * s + s * t,
            -(s * s * s * t - s * s * t * t),
            -(s * s * (s * t * t * t - t * t * t * t)),
        ),
        // y^2 - (t^2 - 4 s t + 2 s^2) xy - t s^3 (s-t)(2s-t) y = x^3 - s^2 (s-t)(2s-t) x^2
        TorsionOrder::Eight => {
            let d1 = s - t;
            let d2 = 2i32 * s - t;
            (
                -(t * t - 4i32 * s * t + 2i32 * s * s),
                -(s * s * &d1 * &d2),
                -(t * s * s * s * &d1 * &d2),
            )
        }
        // y^2 + (t^3 - s^2(s-t)) xy - t^4 s^2 (s-t)(s^2 - s t + t^2) y
        //   = x^3 - t s^2 (s-t)(s^2 - s t + t^2) x^2
        TorsionOrder::Nine => {
            let d1 = s - t;
            let q = s * s - s * t + t * t;
            (
                t * t * t - s * s * &d1,
                -(t * s * s * &d1 * &q),
                -(t * t * t * t * s * s * &d1 * &q),
            )
        }
        // y^2 + [t(s^2-3st+t^2) + s(s-t)(2s-t)] xy - t^2 s^3 (s-t)(2s-t)(s^2-3st+t^2) y
        //   = x^3 - t s^3 (s-t)(2s-t) x^2
        TorsionOrder::Ten => {
            let d1 = s - t;
            let d2 = 2i32 * s - t;
            let q = s * s - 3i32 * s * t + t * t;
            (
                t * &q + s * &d1 * &d2,
                -(t * s * s * s * &d1 * &d2),
                -(t * t * s * s * s * &d1 * &d2 * &q),
            )
        }
        // y^2 + [t(s-t)^3 + s(2s-t)(3s^2-3st+t^2)] xy
        //   - t s (s-t)^5 (2s-t)(3s^2-3st+t^2)(2s^2-2st+t^2) y
        //   = x^3 - s (s-t)^2 (2s-t)(3s^2-3st+t^2)(2s^2-2st+t^2) x^2
        TorsionOrder::Twelve => {
            let d1 = s - t;
            let d2 = 2i32 * s - t;
            let q3 = 3i32 * s * s - 3i32 * s * t + t * t;
            let q2 = 2i32 * s * s - 2i32 * s * t + t * t;
            let d1_2 = &d1 * &d1;
            let d1_5 = &d1_2 * &d1_2 * &d1;
            (
                t * &d1_2 * &d1 + s * &d2 * &q3,
                -(s * &d1_2 * &d2 * &q3 * &q2),
                -(t * s * &d1_5 * &d2 * &q3 * &q2),
            )
        }
    };
    [a1, a2, a3, zero.clone(), zero]
}

/// The closed-form discriminant as a list of (factor value, exponent).
pub(crate) fn closed_form_factors(n: TorsionOrder, s: i64, t: i64) -> Vec<(BigInt, u32)> {
    let s = i128::from(s);
    let t = i128::from(t);
    let v: Vec<(i128, u32)> = match n {
        TorsionOrder::Four => vec![(s, 4), (t, 7), (16 * s + t, 1)],
        TorsionOrder::Five => vec![(s, 5), (t, 5), (s * s - 11 * s * t - t * t, 1)],
        TorsionOrder::Six => vec![(s, 6), (t, 2), (s + t, 3), (9 * s + t, 1)],
        TorsionOrder::Seven => vec![
            (s, 7),
            (t, 7),
            (s - t, 7),
            (s * s * s - 8 * s * s * t + 5 * s * t * t + t * t * t, 1),
        ],
        TorsionOrder::Eight => vec![
            (s, 8),
            (t, 2),
            (s - t, 8),
            (2 * s - t, 4),
            (8 * s * s - 8 * s * t + t * t, 1),
        ],
        TorsionOrder::Nine => vec![
            (s, 9),
            (t, 9),
            (s - t, 9),
            (s * s - s * t + t * t, 3),
            (s * s * s - 6 * s * s * t + 3 * s * t * t + t * t * t, 1),
        ],
        TorsionOrder::Ten => vec![
            (s, 10),
            (t, 5),
            (s - t, 10),
            (2 * s - t, 5),
            (4 * s * s - 2 * s * t - t * t, 1),
            (s * s - 3 * s * t + t * t, 2),
        ],
        TorsionOrder::Twelve => vec![
            (s, 12),
            (t, 2),
            (s - t, 12),
            (2 * s - t, 6),
            (3 * s * s - 3 * s * t + t * t, 4),
            (2 * s * s - 2 * s * t + t * t, 3),
            (6 * s * s - 6 * s * t + t * t, 1),
        ],
    };
    v.into_iter().map(|(f, e)| (BigInt::from(f), e)).collect()
}

/// Name of the first vanishing closed-form factor, if any (the model is
/// singular exactly when one vanishes).
fn vanishing_disc_factor(n: TorsionOrder, s: i64, t: i64) -> Option<String> {
    let names: &[&str] = match n {
        TorsionOrder::Four => &["s", "t", "16s+t"],
        TorsionOrder::Five => &["s", "t", "s^2-11st-t^2"],
        TorsionOrder::Six => &["s", "t", "s+t", "9s+t"],
        TorsionOrder::Seven => &["s", "t", "s-t", "s^3-8s^2t+5st^2+t^3"],
        TorsionOrder::Eight => &["s", "t", "s-t", "2s-t", "8s^2-8st+t^2"],
        TorsionOrder::Nine => &["s", "t", "s-t", "s^2-st+t^2", "s^3-6s^2t+3st^2+t^3"],
        TorsionOrder::Ten => &[
            "s",
            "t",
            "s-t",
            "2s-t",
            "4s^2-2st-t^2",
            "s^2-3st+t^2",
        ],
        TorsionOrder::Twelve => &[
            "s",
            "t",
            "s-t",
            "2s-t",
            "3s^2-3st+t^2",
            "2s^2-2st+t^2",
            "6s^2-6st+t^2",
        ],
    };
    for ((value, _), name) in closed_form_factors(n, s, t).iter().zip(names) {
        if value.is_zero() {
            return Some(format!("{name}=0"));
        }
    }
    None
}

/// The integral Weierstrass model attached to a validated parameter.
pub fn integral_model(param: &TateParameter) -> WeierstrassModel {
    let [a1, a2, a3, a4, a6] = integral_coeffs(param.n, param.s, param.t);
    WeierstrassModel { a1, a2, a3, a4, a6 }
}

/// Evaluates the closed-form discriminant polynomial for the integral model.
pub fn closed_form_disc(param: &TateParameter) -> BigInt {
    closed_form_disc_at(param.n, param.s, param.t)
}

/// The closed-form discriminant polynomial at arbitrary (s, t), validity
/// unchecked (degenerate parameters evaluate to zero).
pub fn closed_form_disc_at(n: TorsionOrder, s: i64, t: i64) -> BigInt {
    let mut d = BigInt::one();
    for (f, e) in closed_form_factors(n, s, t) {
        d *= f.pow(e);
    }
    d
}
