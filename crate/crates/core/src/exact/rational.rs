//! Reduced fractions of unbounded integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// An exact rational, normalized eagerly on construction.
///
/// The invariants `gcd(|num|, den) = 1` and `den > 0` hold for every value,
/// so equality is structural and comparison is cross multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Construct `num/den`, reducing and moving the sign into the numerator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Ok(Rational { num, den })
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational { num: n, den: BigInt::one() }
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        Rational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
    }

    pub fn from_u64(num: u64, den: u64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den)).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rational::from_integer(BigInt::zero())
    }

    pub fn one() -> Self {
        Rational::from_integer(BigInt::one())
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// The integer value when the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.num.clone())
    }

    /// Compare against an unbounded nonnegative integer without allocating a
    /// second rational.
    pub fn cmp_biguint(&self, n: &BigUint) -> Ordering {
        let rhs = BigInt::from_biguint(Sign::Plus, n.clone()) * &self.den;
        self.num.cmp(&rhs)
    }

    /// Truncated decimal rendering with `digits` places, by long division.
    pub fn to_decimal(&self, digits: usize) -> String {
        let negative = self.num.is_negative();
        let abs_num = self.num.abs();
        let (int_part, mut rem) = abs_num.div_rem(&self.den);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if digits > 0 {
            out.push('.');
            let ten = BigInt::from(10);
            for _ in 0..digits {
                rem *= &ten;
                let (d, r) = rem.div_rem(&self.den);
                out.push_str(&d.to_string());
                rem = r;
            }
        }
        out
    }
}

impl Ord for Rational {
    /// Total order by exact cross multiplication.
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational::new(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl fmt::Display for Rational {
    /// `num/den`, with `/den` omitted for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Parse `num/den` or a bare integer.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, ExactError> {
            t.trim()
                .parse()
                .map_err(|_| ExactError::Parse(format!("bad integer token {t:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}
