//! Arbitrary-precision integer number theory: factorization, primality,
//! prime-power and perfect-power structure, p-adic valuations, and the
//! Legendre/Jacobi symbol.
//!
//! Primality is deterministic Miller-Rabin (first 13 prime bases) below
//! 3.317e24 and Baillie-PSW above; no certificates are produced.
//! Factorization is trial division by sieved primes followed by Brent-cycle
//! Pollard rho with a fixed parameter schedule, so output is reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial division strips primes up to this bound before Pollard rho runs.
pub const TRIAL_DIVISION_BOUND: u32 = 1_000_000;

/// Largest n for which the 13-base Miller-Rabin test is a proof
/// (3,317,044,064,679,887,385,961,981).
const DETERMINISTIC_MR_BOUND: &str = "3317044064679887385961981";

const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub(crate) fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_DIVISION_BOUND as usize;
        let mut is_comp = vec![false; n + 1];
        let mut primes = Vec::with_capacity(80_000);
        for p in 2..=n {
            if !is_comp[p] {
                primes.push(p as u32);
                let mut q = p * p;
                while q <= n {
                    is_comp[q] = true;
                    q += p;
                }
            }
        }
        primes
    })
}

/// A signed integer in fully factored form: `sign * prod p_i^(e_i)` with the
/// primes strictly increasing. Zero has no representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    sign: i8,
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    /// Builds a factorization, checking every invariant (sign is +-1, primes
    /// strictly increasing and actually prime, exponents >= 1).
    pub fn new(sign: i8, factors: Vec<(BigInt, u32)>) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::DomainError(format!("sign must be +-1, got {sign}")));
        }
        for w in factors.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::DomainError(
                    "primes must be strictly increasing".into(),
                ));
            }
        }
        for (p, e) in &factors {
            if *e == 0 {
                return Err(Error::DomainError(format!("exponent of {p} is zero")));
            }
            if !is_prime(p) {
                return Err(Error::DomainError(format!("{p} is not prime")));
            }
        }
        Ok(Factorization { sign, factors })
    }

    pub fn one() -> Self {
        Factorization { sign: 1, factors: Vec::new() }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    /// Reassembles `sign * prod p^e`.
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        v
    }

    pub fn abs_value(&self) -> BigInt {
        self.value().abs()
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn support(&self) -> Vec<BigInt> {
        self.factors.iter().map(|(p, _)| p.clone()).collect()
    }

    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn abs(&self) -> Factorization {
        Factorization { sign: 1, factors: self.factors.clone() }
    }

    /// Lowers the exponent of `p` by `by`, dropping the prime at zero.
    /// Panics if `p` does not carry at least `by`.
    pub(crate) fn reduce_exponent(&mut self, p: &BigInt, by: u32) {
        let idx = self
            .factors
            .iter()
            .position(|(q, _)| q == p)
            .expect("prime not present in factorization");
        assert!(self.factors[idx].1 >= by, "exponent underflow");
        self.factors[idx].1 -= by;
        if self.factors[idx].1 == 0 {
            self.factors.remove(idx);
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors a nonzero integer. Deterministic: the same input always yields
/// the same (unique) factorization.
pub fn factor(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut map: BTreeMap<BigUint, u32> = BTreeMap::new();
    let m = n.magnitude().clone();
    if let Some(m64) = m.to_u64() {
        factor_u64_into(m64, &mut map);
    } else {
        factor_big_into(m, &mut map);
    }
    let factors = map
        .into_iter()
        .map(|(p, e)| (BigInt::from(p), e))
        .collect();
    Ok(Factorization { sign, factors })
}

fn factor_u64_into(mut m: u64, map: &mut BTreeMap<BigUint, u32>) {
    if m <= 1 {
        return;
    }
    for &p in small_primes() {
        let p = p as u64;
        if p * p > m {
            break;
        }
        while m % p == 0 {
            m /= p;
            *map.entry(BigUint::from(p)).or_insert(0) += 1;
        }
    }
    if m > 1 {
        // Remaining cofactor exceeds 1e12 or is prime; rho splits composites.
        if is_prime_u64(m) {
            *map.entry(BigUint::from(m)).or_insert(0) += 1;
        } else {
            let d = pollard_rho_u64(m);
            factor_u64_into(d, map);
            factor_u64_into(m / d, map);
        }
    }
}

fn factor_big_into(mut m: BigUint, map: &mut BTreeMap<BigUint, u32>) {
    for &p in small_primes() {
        if m.is_one() {
            return;
        }
        let pb = BigUint::from(p);
        while (&m % &pb).is_zero() {
            m /= &pb;
            *map.entry(pb.clone()).or_insert(0) += 1;
        }
    }
    split_big(m, map);
}

fn split_big(m: BigUint, map: &mut BTreeMap<BigUint, u32>) {
    if m.is_one() {
        return;
    }
    if let Some(m64) = m.to_u64() {
        factor_u64_into(m64, map);
        return;
    }
    if is_prime_uint(&m) {
        *map.entry(m).or_insert(0) += 1;
        return;
    }
    // Perfect powers first: rho converges poorly on p^k.
    if let Some((b, k)) = max_power_decomposition(&m) {
        if k > 1 {
            let mut inner: BTreeMap<BigUint, u32> = BTreeMap::new();
            split_big(b, &mut inner);
            for (p, e) in inner {
                *map.entry(p).or_insert(0) += e * k;
            }
            return;
        }
    }
    let d = pollard_rho_big(&m);
    split_big(d.clone(), map);
    split_big(m / d, map);
}

/// Primality of |n|. Deterministic for |n| < 3.317e24, Baillie-PSW beyond.
pub fn is_prime(n: &BigInt) -> bool {
    is_prime_uint(n.magnitude())
}

fn is_prime_uint(n: &BigUint) -> bool {
    if let Some(n64) = n.to_u64() {
        return is_prime_u64(n64);
    }
    // Quick trial division before the heavy tests.
    for &p in &small_primes()[..512] {
        if (n % p).is_zero() {
            return false;
        }
    }
    static BOUND: OnceLock<BigUint> = OnceLock::new();
    let bound = BOUND.get_or_init(|| DETERMINISTIC_MR_BOUND.parse().unwrap());
    if n < bound {
        return MR_BASES
            .iter()
            .all(|&a| !mr_witnesses_composite(n, &BigUint::from(a)));
    }
    if mr_witnesses_composite(n, &BigUint::from(2u32)) {
        return false;
    }
    strong_lucas_prp(n)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// True if `a` proves `n` composite (n odd, n > a >= 2).
fn mr_witnesses_composite(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap();
    let d = &nm1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == nm1 {
        return false;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u32), n);
        if x == nm1 {
            return false;
        }
    }
    true
}

/// Strong Lucas probable-prime test with Selfridge parameter selection.
/// `n` odd, not a perfect square, coprime to the small primes.
fn strong_lucas_prp(n: &BigUint) -> bool {
    let nb = BigInt::from(n.clone());
    // A perfect square admits no D with (D/n) = -1.
    let r = n.sqrt();
    if &(&r * &r) == n {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        let j = jacobi_symbol(&d, &nb);
        if j == 0 {
            // Shares a factor with n.
            return d.magnitude() == n;
        }
        if j == -1 {
            break;
        }
        d = if d.is_positive() { -(&d + 2i32) } else { -(&d - 2i32) };
    }
    // P = 1, Q = (1 - D)/4.
    let q = (BigInt::one() - &d) / 4;
    let half = (n + BigUint::one()) >> 1; // inverse of 2 mod n
    let to_mod = |x: &BigInt| -> BigUint { x.mod_floor(&nb).magnitude().clone() };
    let dmod = to_mod(&d);
    let qmod = to_mod(&q);
    let np1 = n + BigUint::one();
    let s = np1.trailing_zeros().unwrap();
    let d0 = &np1 >> s;

    let mut u = BigUint::one();
    let mut v = BigUint::one();
    let mut qk = qmod.clone();
    let bits = d0.bits();
    for i in (0..bits - 1).rev() {
        // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
        u = (&u * &v) % n;
        let v2 = (&v * &v) % n;
        let twoqk = (&qk << 1) % n;
        v = (v2 + n - &twoqk % n) % n;
        qk = (&qk * &qk) % n;
        if d0.bit(i) {
            // increment: U' = (U + V)/2, V' = (D U + V)/2
            let ut = (&u + &v) % n;
            let vt = ((&dmod * &u) % n + &v) % n;
            u = (&ut * &half) % n;
            v = (&vt * &half) % n;
            qk = (&qk * &qmod) % n;
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        let v2 = (&v * &v) % n;
        let twoqk = (&qk << 1) % n;
        v = (v2 + n - &twoqk % n) % n;
        qk = (&qk * &qk) % n;
        if v.is_zero() {
            return true;
        }
    }
    false
}

fn pollard_rho_u64(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime_u64(n) && n % 2 != 0);
    // Brent's cycle detection; fixed schedule keeps results reproducible.
    for c in 1u64.. {
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        let mut saved = 2u64;
        let mut count = 0u32;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            let diff = if x > y { x - y } else { y - x };
            if diff == 0 {
                d = n;
                break;
            }
            saved = mul_mod_u64(saved, diff, n);
            count += 1;
            if count == 64 {
                d = gcd_u64(saved, n);
                saved = 1;
                count = 0;
            }
        }
        if d == 1 {
            d = gcd_u64(saved, n);
        }
        if d != 1 && d != n {
            return d;
        }
    }
    unreachable!()
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pollard_rho_big(n: &BigUint) -> BigUint {
    for c in 1u32.. {
        let cb = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cb) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut saved = BigUint::one();
        loop {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without factor; try next c
            }
            saved = (&saved * &diff) % n;
            let g = saved.gcd(n);
            if !g.is_one() {
                if &g != n {
                    return g;
                }
                break;
            }
        }
    }
    unreachable!()
}

/// Maximal-exponent representation |n| = b^k (k >= 1); None for |n| <= 1.
fn max_power_decomposition(n: &BigUint) -> Option<(BigUint, u32)> {
    if n <= &BigUint::one() {
        return None;
    }
    let maxk = n.bits() as u32;
    for k in (2..=maxk).rev() {
        let r = n.nth_root(k);
        if r.pow(k) == *n {
            return Some((r, k));
        }
    }
    Some((n.clone(), 1))
}

/// If |n| = p^k with p prime and k >= 1, returns (p, k); None otherwise
/// (including |n| in {0, 1}).
pub fn prime_power(n: &BigInt) -> Option<(BigInt, u32)> {
    let (b, k) = max_power_decomposition(n.magnitude())?;
    if is_prime_uint(&b) {
        Some((BigInt::from(b), k))
    } else {
        None
    }
}

/// Largest-exponent representation |n| = base^exp with exp >= min_exp, or
/// None. Errors if |n| < 2.
pub fn perfect_power(n: &BigInt, min_exp: u32) -> Result<Option<(BigInt, u32)>> {
    if n.magnitude() < &BigUint::from(2u32) {
        return Err(Error::DomainError(format!(
            "perfect_power requires |n| >= 2, got {n}"
        )));
    }
    if min_exp < 2 {
        return Err(Error::DomainError("min_exp must be >= 2".into()));
    }
    let (b, k) = max_power_decomposition(n.magnitude()).unwrap();
    if k >= min_exp {
        Ok(Some((BigInt::from(b), k)))
    } else {
        Ok(None)
    }
}

/// Largest k with p^k | n. Errors on n = 0; p must be prime (>= 2).
pub fn padic_valuation(n: &BigInt, p: &BigInt) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p < &BigInt::from(2) {
        return Err(Error::DomainError(format!("{p} is not a prime")));
    }
    let mut m = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Ok(k);
        }
        m = q;
        k += 1;
    }
}

/// Jacobi symbol (a/n) for odd positive n; equals the Legendre symbol when
/// n is an odd prime.
pub fn jacobi_symbol(a: &BigInt, n: &BigInt) -> i32 {
    debug_assert!(n.is_positive() && n.is_odd());
    let mut a = a.mod_floor(n).magnitude().clone();
    let mut n = n.magnitude().clone();
    let mut sign = 1i32;
    let three = BigUint::from(3u32);
    let five = BigUint::from(5u32);
    let four = BigUint::from(4u32);
    let eight = BigUint::from(8u32);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = &n % &eight;
            if r == three || r == five {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % &four) == three && (&n % &four) == three {
            sign = -sign;
        }
        a %= &n;
    }
    if n.is_one() {
        sign
    } else {
        0
    }
}

/// Legendre symbol (a/p) for an odd prime p.
pub fn legendre_symbol(a: &BigInt, p: &BigInt) -> Result<i32> {
    if !p.is_odd() || !is_prime(p) || p.is_negative() {
        return Err(Error::DomainError(format!("{p} is not an odd prime")));
    }
    Ok(jacobi_symbol(a, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fz(n: i64) -> Factorization {
        factor(&BigInt::from(n)).unwrap()
    }

    #[test]
    fn factor_of_one_is_empty_product() {
        let f = fz(1);
        assert_eq!(f.sign(), 1);
        assert!(f.factors().is_empty());
        assert_eq!(f.value(), BigInt::one());
    }

    #[test]
    fn factor_signed_discriminant_values() {
        // -13436928 = -(2^11 * 3^8)
        let f = fz(-13_436_928);
        assert_eq!(f.sign(), -1);
        assert_eq!(
            f.factors(),
            &[(BigInt::from(2), 11), (BigInt::from(3), 8)]
        );
        // 2304 = 2^8 * 3^2
        let f = fz(2304);
        assert_eq!(f.factors(), &[(BigInt::from(2), 8), (BigInt::from(3), 2)]);
    }

    #[test]
    fn factor_zero_is_an_error() {
        assert_eq!(factor(&BigInt::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn factor_large_semiprime() {
        let p = BigInt::from(1_000_000_007u64);
        let q = BigInt::from(998_244_353u64);
        let f = factor(&(&p * &q)).unwrap();
        assert_eq!(f.factors(), &[(q, 1), (p, 1)]);
    }

    #[test]
    fn display_formats() {
        assert_eq!(fz(-13_436_928).to_string(), "-2^11 * 3^8");
        assert_eq!(fz(26).to_string(), "2 * 13");
        assert_eq!(fz(1).to_string(), "1");
        assert_eq!(fz(-1).to_string(), "-1");
    }

    /// Trial-division oracle, independent of the production primality path.
    fn is_prime_by_trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn primality_of_small_table_entries() {
        assert!(is_prime(&BigInt::from(37)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(is_prime(&BigInt::from(-13)));
        assert!(!is_prime(&BigInt::from(0)));
    }

    #[test]
    fn mersenne_31_is_prime_cross_checked() {
        let m = (1u64 << 31) - 1;
        assert!(is_prime_by_trial(m));
        assert!(is_prime(&BigInt::from(m)));
    }

    #[test]
    fn primality_agrees_with_trial_division_on_a_range() {
        for n in 0u64..2000 {
            assert_eq!(is_prime(&BigInt::from(n)), is_prime_by_trial(n), "n={n}");
        }
    }

    #[test]
    fn primality_beyond_the_deterministic_bound() {
        // 10^25 + 13 is prime; 10^25 + 1 is not. Both exceed 3.317e24.
        let base = BigInt::from(10u32).pow(25);
        assert!(is_prime(&(&base + 13)));
        assert!(!is_prime(&(&base + 1)));
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(
            prime_power(&BigInt::from(125)),
            Some((BigInt::from(5), 3))
        );
        assert_eq!(prime_power(&BigInt::from(1)), None);
        assert_eq!(prime_power(&BigInt::from(0)), None);
        assert_eq!(
            prime_power(&BigInt::from(1i64 << 15)),
            Some((BigInt::from(2), 15))
        );
        assert_eq!(prime_power(&BigInt::from(6)), None);
        assert_eq!(prime_power(&BigInt::from(-8)), Some((BigInt::from(2), 3)));
    }

    #[test]
    fn perfect_power_examples() {
        assert_eq!(
            perfect_power(&BigInt::from(8), 2).unwrap(),
            Some((BigInt::from(2), 3))
        );
        // 6561 = 3^8 by repeated multiplication
        let mut v = BigInt::one();
        for _ in 0..8 {
            v *= 3;
        }
        assert_eq!(v, BigInt::from(6561));
        assert_eq!(
            perfect_power(&v, 2).unwrap(),
            Some((BigInt::from(3), 8))
        );
        assert_eq!(perfect_power(&BigInt::from(26), 2).unwrap(), None);
        assert!(perfect_power(&BigInt::from(1), 2).is_err());
    }

    #[test]
    fn valuation_examples() {
        let v = |n: i64, p: i64| padic_valuation(&BigInt::from(n), &BigInt::from(p)).unwrap();
        assert_eq!(v(1664, 2), 7);
        assert_eq!(v(17, 2), 0);
        assert_eq!(v(2000, 5), 3);
        assert!(padic_valuation(&BigInt::zero(), &BigInt::from(2)).is_err());
    }

    #[test]
    fn legendre_examples() {
        let l = |a: i64, p: i64| legendre_symbol(&BigInt::from(a), &BigInt::from(p)).unwrap();
        assert_eq!(l(-4, 11), -1);
        assert_eq!(l(0, 7), 0);
        assert_eq!(l(2, 7), 1);
        assert!(legendre_symbol(&BigInt::from(3), &BigInt::from(2)).is_err());
        assert!(legendre_symbol(&BigInt::from(3), &BigInt::from(9)).is_err());
    }

    proptest! {
        #[test]
        fn factor_round_trips(n in -1_000_000i64..=1_000_000i64) {
            prop_assume!(n != 0);
            let f = fz(n);
            prop_assert_eq!(f.value(), BigInt::from(n));
        }

        #[test]
        fn prime_power_implies_single_prime_in_factorization(n in 2i64..=100_000) {
            if let Some((p, k)) = prime_power(&BigInt::from(n)) {
                let f = fz(n);
                prop_assert_eq!(f.num_primes(), 1);
                prop_assert_eq!(&f.factors()[0].0, &p);
                prop_assert_eq!(f.factors()[0].1, k);
            }
        }

        #[test]
        fn valuation_matches_factorization(n in 1i64..=1_000_000, pi in 0usize..6) {
            let p = [2i64, 3, 5, 7, 11, 13][pi];
            let f = fz(n);
            let v = padic_valuation(&BigInt::from(n), &BigInt::from(p)).unwrap();
            prop_assert_eq!(v, f.exponent_of(&BigInt::from(p)));
        }

        #[test]
        fn legendre_matches_euler_criterion(a in -200i64..=200, pi in 0usize..8) {
            let p = [3i64, 5, 7, 11, 13, 17, 19, 23][pi];
            let pb = BigInt::from(p);
            let sym = legendre_symbol(&BigInt::from(a), &pb).unwrap();
            let e = BigInt::from(a).mod_floor(&pb).modpow(&BigInt::from((p - 1) / 2), &pb);
            let euler = if e.is_zero() { 0 } else if e.is_one() { 1 } else { -1 };
            prop_assert_eq!(sym, euler);
        }

        #[test]
        fn perfect_power_is_maximal(n in 2i64..=1_000_000) {
            if let Some((b, e)) = perfect_power(&BigInt::from(n), 2).unwrap() {
                prop_assert_eq!(b.pow(e), BigInt::from(n));
                // maximality: the base is not itself a perfect power
                prop_assert_eq!(perfect_power(&b, 2).unwrap(), None);
            }
        }
    }
}
