//! Unbounded exact integer, factored-integer, and rational arithmetic.
//!
//! Everything downstream reduces to the three primitives here: trial-division
//! factorization into a [`FactoredInteger`], exact products via
//! [`FactoredInteger::value`], and total-order comparison of [`Rational`]
//! values by cross multiplication. All values are immutable after
//! construction and every operation is pure.

mod factored;
mod primes;
mod rational;

pub use factored::{factorize, factorize_u64, FactoredInteger};
pub use primes::{is_prime, is_prime_u64, primes_up_to};
pub use rational::Rational;

use std::fmt;

/// Errors from construction or parsing of exact values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// `factorize` was asked for a nonpositive integer.
    NonPositive,
    /// A factored-integer key failed the primality check.
    NotPrime(String),
    /// Exponent 0 or another structural defect in factored input.
    BadExponent(String),
    /// Exact division was impossible (missing prime or exponent underflow).
    NotDivisible(String),
    /// Zero denominator.
    ZeroDenominator,
    /// Unparseable textual form.
    Parse(String),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::NonPositive => write!(f, "expected a positive integer"),
            ExactError::NotPrime(p) => write!(f, "{p} is not prime"),
            ExactError::BadExponent(p) => write!(f, "bad exponent for prime {p}"),
            ExactError::NotDivisible(m) => write!(f, "exact division failed: {m}"),
            ExactError::ZeroDenominator => write!(f, "zero denominator"),
            ExactError::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

impl std::error::Error for ExactError {}
