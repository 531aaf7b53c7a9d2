//! Positive integers held as their prime factorization.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::primes::{is_prime, is_prime_u64};
use super::ExactError;

/// A positive integer stored as a map from prime to exponent.
///
/// The empty map denotes 1. Every key is certified prime, every exponent is
/// at least 1, and the keys iterate in increasing order, which makes the
/// textual rendering (`2^6*3^2*19`) canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredInteger {
    factors: BTreeMap<BigUint, u32>,
}

impl FactoredInteger {
    /// The factorization of 1.
    pub fn one() -> Self {
        FactoredInteger { factors: BTreeMap::new() }
    }

    /// Build from `(prime, exponent)` pairs, validating both.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (BigUint, u32)>,
    {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            if e == 0 {
                return Err(ExactError::BadExponent(p.to_string()));
            }
            if !is_prime(&p) {
                return Err(ExactError::NotPrime(p.to_string()));
            }
            if factors.insert(p.clone(), e).is_some() {
                return Err(ExactError::Parse(format!("duplicate prime {p}")));
            }
        }
        Ok(FactoredInteger { factors })
    }

    /// Convenience constructor from small pairs; panics on invalid input.
    pub fn from_u64_pairs(pairs: &[(u64, u32)]) -> Self {
        Self::from_pairs(pairs.iter().map(|&(p, e)| (BigUint::from(p), e)))
            .expect("invalid prime/exponent pair")
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Iterate `(prime, exponent)` in increasing prime order.
    pub fn factors(&self) -> impl Iterator<Item = (&BigUint, u32)> {
        self.factors.iter().map(|(p, &e)| (p, e))
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    /// Number of distinct prime divisors.
    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    /// Multiply out exactly.
    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, &e) in &self.factors {
            acc *= p.pow(e);
        }
        acc
    }

    /// Raise to the `e`-th power (exponent-wise).
    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let factors = self
            .factors
            .iter()
            .map(|(p, &k)| (p.clone(), k * e))
            .collect();
        FactoredInteger { factors }
    }

    /// Exact division; fails if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        let mut factors = self.factors.clone();
        for (p, &e) in &other.factors {
            let have = factors.get(p).copied().unwrap_or(0);
            if have < e {
                return Err(ExactError::NotDivisible(format!(
                    "{other} does not divide {self}"
                )));
            }
            if have == e {
                factors.remove(p);
            } else {
                factors.insert(p.clone(), have - e);
            }
        }
        Ok(FactoredInteger { factors })
    }
}

impl Mul for &FactoredInteger {
    type Output = FactoredInteger;

    /// Exponent-wise sum: `value(a * b) = value(a) * value(b)`.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &FactoredInteger) -> FactoredInteger {
        let mut factors = self.factors.clone();
        for (p, &e) in &rhs.factors {
            *factors.entry(p.clone()).or_insert(0) += e;
        }
        FactoredInteger { factors }
    }
}

impl Mul for FactoredInteger {
    type Output = FactoredInteger;
    fn mul(self, rhs: FactoredInteger) -> FactoredInteger {
        (&self).mul(&rhs)
    }
}

impl fmt::Display for FactoredInteger {
    /// Canonical rendering: ascending primes, `^` exponents (1 omitted),
    /// `*` separators. The empty factorization renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, &e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FactoredInteger {
    type Err = ExactError;

    /// Parse the canonical rendering. Rejects duplicate or non-ascending
    /// primes, composite keys, zero exponents, and stray characters.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ExactError::Parse("empty factorization".into()));
        }
        if s == "1" {
            return Ok(FactoredInteger::one());
        }
        let mut factors = BTreeMap::new();
        let mut last: Option<BigUint> = None;
        for term in s.split('*') {
            let term = term.trim();
            let (p_str, e_str) = match term.split_once('^') {
                Some((p, e)) => (p.trim(), Some(e.trim())),
                None => (term, None),
            };
            let p: BigUint = p_str
                .parse()
                .map_err(|_| ExactError::Parse(format!("bad prime token {p_str:?}")))?;
            let e: u32 = match e_str {
                Some(e) => e
                    .parse()
                    .map_err(|_| ExactError::Parse(format!("bad exponent token {e:?}")))?,
                None => 1,
            };
            if e == 0 {
                return Err(ExactError::BadExponent(p.to_string()));
            }
            if !is_prime(&p) {
                return Err(ExactError::NotPrime(p.to_string()));
            }
            if let Some(prev) = &last {
                if *prev >= p {
                    return Err(ExactError::Parse(format!(
                        "primes not strictly ascending at {p}"
                    )));
                }
            }
            last = Some(p.clone());
            if factors.insert(p.clone(), e).is_some() {
                return Err(ExactError::Parse(format!("duplicate prime {p}")));
            }
        }
        Ok(FactoredInteger { factors })
    }
}

/// Factorize a positive integer by trial division.
///
/// Divides out 2, 3, 5 and then walks a mod-30 wheel. Inputs that fit in
/// `u128` run in machine arithmetic; anything larger takes a slow exact
/// `BigUint` path. Errors on input 0.
pub fn factorize(n: &BigUint) -> Result<FactoredInteger, ExactError> {
    if n == &BigUint::ZERO {
        return Err(ExactError::NonPositive);
    }
    if let Some(small) = n.to_u128() {
        return Ok(factorize_u128(small));
    }
    // BigUint fallback
    let mut rest = n.clone();
    let mut factors = BTreeMap::new();
    let mut push = |p: BigUint, e: u32| {
        if e > 0 {
            factors.insert(p, e);
        }
    };
    for p in [2u32, 3, 5] {
        let p = BigUint::from(p);
        let mut e = 0;
        while (&rest % &p) == BigUint::ZERO {
            rest /= &p;
            e += 1;
        }
        push(p, e);
    }
    let mut d = BigUint::from(7u32);
    let mut wheel = WHEEL.iter().cycle();
    while &d * &d <= rest {
        if (&rest % &d) == BigUint::ZERO {
            let mut e = 0;
            while (&rest % &d) == BigUint::ZERO {
                rest /= &d;
                e += 1;
            }
            push(d.clone(), e);
        }
        d += BigUint::from(*wheel.next().unwrap());
    }
    if rest > BigUint::one() {
        push(rest, 1);
    }
    Ok(FactoredInteger { factors })
}

/// Increments between consecutive units mod 30, starting from 7.
const WHEEL: [u32; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

fn factorize_u128(mut n: u128) -> FactoredInteger {
    let mut factors = BTreeMap::new();
    let mut push = |p: u128, e: u32| {
        if e > 0 {
            factors.insert(BigUint::from(p), e);
        }
    };
    for p in [2u128, 3, 5] {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        push(p, e);
    }
    // Whenever the cofactor sits in u64 range, a primality check lets the
    // wheel stop early instead of walking all the way to sqrt(n).
    let cofactor_is_prime = |n: u128| match u64::try_from(n) {
        Ok(small) => small > 1 && is_prime_u64(small),
        Err(_) => false,
    };
    if cofactor_is_prime(n) {
        push(n, 1);
        return FactoredInteger { factors };
    }
    let mut d: u128 = 7;
    let mut wheel = WHEEL.iter().cycle();
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            push(d, e);
            if cofactor_is_prime(n) {
                push(n, 1);
                return FactoredInteger { factors };
            }
        }
        d += *wheel.next().unwrap() as u128;
    }
    if n > 1 {
        push(n, 1);
    }
    FactoredInteger { factors }
}

/// `factorize` for machine-sized input.
pub fn factorize_u64(n: u64) -> Result<FactoredInteger, ExactError> {
    factorize(&BigUint::from(n))
}
