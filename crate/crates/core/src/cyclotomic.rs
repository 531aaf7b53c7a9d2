//! Cyclotomic polynomials and the quadratic-ring degree expressions.
//!
//! `Phi_n` is built by recursive exact division of `x^n - 1` by the product
//! of `Phi_d` over proper divisors `d | n`, with results memoized behind a
//! lock. Only small `n` are ever needed, so simplicity wins over sparse
//! arithmetic. The [`QuadExpr`] type carries values `a + b*sqrt(r)` exactly,
//! which is how the `(1/sqrt 2) q Phi_1 Phi_2 ...` degree formulas of the
//! Suzuki and Ree families are evaluated without floating point.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

/// Dense integer-coefficient polynomial; index is the power, trailing zeros
/// are trimmed, so the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`
    pub fn x_n_minus_one(n: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n as usize] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a quadratic-ring point.
    pub fn eval_quad(&self, x: &QuadExpr) -> QuadExpr {
        let mut acc = QuadExpr::from_rational(Rational::zero(), x.radicand());
        for c in self.coeffs.iter().rev() {
            let c = QuadExpr::from_rational(Rational::from_integer(c.clone()), x.radicand());
            acc = &(&acc * x) + &c;
        }
        acc
    }

    /// Exact division.
    ///
    /// A nonzero remainder means a construction bug upstream, not bad user
    /// data, so it aborts.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> IntPolynomial {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        assert!(n >= m, "exact_div: degree of dividend below divisor");
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for i in (0..=n - m).rev() {
            let top = rem[i + m - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, &lead);
            assert!(r.is_zero(), "exact_div: leading coefficient does not divide");
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "exact_div: nonzero remainder, invariant violated"
        );
        IntPolynomial::from_coeffs(quot)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers, e.g. `x^4 - x^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && power > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial.
///
/// Monic of degree `phi(n)`, with constant term 1 for `n >= 2`. Results are
/// memoized in a lock-protected cache, so repeated queries are cheap and
/// identical regardless of thread interleaving. Panics on `n = 0`.
pub fn cyclotomic(n: u32) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic: n must be positive");
    if let Some(hit) = cyclo_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        IntPolynomial::from_i64_coeffs(&[-1, 1])
    } else {
        let mut quotient = IntPolynomial::x_n_minus_one(n);
        for d in divisors(n) {
            if d < n {
                quotient = quotient.exact_div(&cyclotomic(d));
            }
        }
        quotient
    };
    cyclo_cache().lock().unwrap().insert(n, result.clone());
    result
}

/// Check the defining identity `prod_{d|n} Phi_d(x) = x^n - 1` exactly.
pub fn product_identity_check(n: u32) -> bool {
    assert!(n >= 1, "product_identity_check: n must be positive");
    let mut product = IntPolynomial::one();
    for d in divisors(n) {
        product = &product * &cyclotomic(d);
    }
    product == IntPolynomial::x_n_minus_one(n)
}

/// An element `rational + surd * sqrt(radicand)` of a real quadratic ring.
///
/// The radicand is a squarefree integer at least 2; this artifact only ever
/// uses 2 and 3. Addition and multiplication stay inside the ring, and both
/// operands of a binary operation must live in the same ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExpr {
    rational: Rational,
    surd: Rational,
    radicand: u32,
}

/// Non-integral result of [`QuadExpr::to_integer`]; in practice this means a
/// degree formula was evaluated with the wrong parameter parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadError {
    SurdRemains(String),
    NotAnInteger(String),
    NotSquarefree(u32),
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadError::SurdRemains(v) => write!(f, "irrational value {v}"),
            QuadError::NotAnInteger(v) => write!(f, "non-integral rational value {v}"),
            QuadError::NotSquarefree(r) => write!(f, "radicand {r} is not squarefree"),
        }
    }
}

impl std::error::Error for QuadError {}

fn is_squarefree(n: u32) -> bool {
    let mut n = n;
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return false;
            }
        }
        d += 1;
    }
    true
}

impl QuadExpr {
    pub fn new(rational: Rational, surd: Rational, radicand: u32) -> Result<Self, QuadError> {
        if radicand < 2 || !is_squarefree(radicand) {
            return Err(QuadError::NotSquarefree(radicand));
        }
        Ok(QuadExpr { rational, surd, radicand })
    }

    pub fn from_rational(rational: Rational, radicand: u32) -> Self {
        QuadExpr::new(rational, Rational::zero(), radicand).expect("valid radicand")
    }

    /// `sqrt(radicand)` itself.
    pub fn sqrt(radicand: u32) -> Self {
        QuadExpr::new(Rational::zero(), Rational::one(), radicand).expect("valid radicand")
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    pub fn radicand(&self) -> u32 {
        self.radicand
    }

    pub fn conjugate(&self) -> Self {
        QuadExpr {
            rational: self.rational.clone(),
            surd: &Rational::zero() - &self.surd,
            radicand: self.radicand,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.surd == Rational::zero()
    }

    /// Extract the value as a rational integer.
    ///
    /// Errors when a surd survives or the rational part has a denominator;
    /// either signals a misuse of a degree formula.
    pub fn to_integer(&self) -> Result<BigInt, QuadError> {
        if !self.is_rational() {
            return Err(QuadError::SurdRemains(self.to_string()));
        }
        self.rational
            .to_integer()
            .ok_or_else(|| QuadError::NotAnInteger(self.to_string()))
    }
}

impl Add for &QuadExpr {
    type Output = QuadExpr;
    fn add(self, rhs: &QuadExpr) -> QuadExpr {
        assert_eq!(self.radicand, rhs.radicand, "mixed quadratic rings");
        QuadExpr {
            rational: &self.rational + &rhs.rational,
            surd: &self.surd + &rhs.surd,
            radicand: self.radicand,
        }
    }
}

impl Mul for &QuadExpr {
    type Output = QuadExpr;
    /// `(a + b sqrt r)(c + d sqrt r) = (ac + bdr) + (ad + bc) sqrt r`
    fn mul(self, rhs: &QuadExpr) -> QuadExpr {
        assert_eq!(self.radicand, rhs.radicand, "mixed quadratic rings");
        let r = Rational::from_u64(self.radicand as u64, 1);
        QuadExpr {
            rational: &(&self.rational * &rhs.rational) + &(&(&self.surd * &rhs.surd) * &r),
            surd: &(&self.rational * &rhs.surd) + &(&self.surd * &rhs.rational),
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for QuadExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rational, self.surd, self.radicand)
        }
    }
}
