//! The codegree function, the solvability-criterion predicate, the constant
//! `a`, and the sharpness scan over the sporadic table.
//!
//! Every verdict is an exact rational comparison. The criterion is exposed
//! at the closed boundary `k = a` as well (with equality flagged), because
//! the sharpness analysis lives exactly on that boundary.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::catalog::Catalog;
use crate::exact::{FactoredInteger, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionError {
    /// `degree` does not divide `kernel_index`: not a genuine character datum.
    NotDivisible { degree: BigUint, kernel_index: BigUint },
    /// `kernel_index <= degree^2` on a nonprincipal entry; genuine characters
    /// satisfy `|G/ker| > chi(1)^2`.
    QuadraticBound { degree: BigUint, kernel_index: BigUint },
    ZeroField(String),
    NonPositiveK,
}

impl fmt::Display for CriterionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriterionError::NotDivisible { degree, kernel_index } => {
                write!(f, "degree {degree} does not divide kernel index {kernel_index}")
            }
            CriterionError::QuadraticBound { degree, kernel_index } => write!(
                f,
                "kernel index {kernel_index} is not above degree^2 = {}^2",
                degree
            ),
            CriterionError::ZeroField(m) => write!(f, "zero value for {m}"),
            CriterionError::NonPositiveK => write!(f, "k must be positive"),
        }
    }
}

impl std::error::Error for CriterionError {}

/// One irreducible-character datum: the degree `chi(1)` and the index
/// `|G : ker chi|` of its kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharEntry {
    degree: BigUint,
    kernel_index: BigUint,
}

impl CharEntry {
    /// Validates positivity and, for nonprincipal entries, the bound
    /// `kernel_index > degree^2`. Divisibility is left to [`codegree`].
    pub fn new(degree: BigUint, kernel_index: BigUint) -> Result<Self, CriterionError> {
        if degree == BigUint::ZERO {
            return Err(CriterionError::ZeroField("degree".into()));
        }
        if kernel_index == BigUint::ZERO {
            return Err(CriterionError::ZeroField("kernel index".into()));
        }
        if kernel_index > BigUint::one() && kernel_index <= &degree * &degree {
            return Err(CriterionError::QuadraticBound { degree, kernel_index });
        }
        if kernel_index == BigUint::one() && !degree.is_one() {
            return Err(CriterionError::QuadraticBound { degree, kernel_index });
        }
        Ok(CharEntry { degree, kernel_index })
    }

    pub fn from_u64(degree: u64, kernel_index: u64) -> Result<Self, CriterionError> {
        Self::new(BigUint::from(degree), BigUint::from(kernel_index))
    }

    pub fn degree(&self) -> &BigUint {
        &self.degree
    }

    pub fn kernel_index(&self) -> &BigUint {
        &self.kernel_index
    }

    pub fn is_linear(&self) -> bool {
        self.degree.is_one()
    }
}

/// `cod(chi) = |G : ker chi| / chi(1)`, exact.
pub fn codegree(e: &CharEntry) -> Result<BigUint, CriterionError> {
    let (quot, rem) = num_integer::Integer::div_rem(&e.kernel_index, &e.degree);
    if rem != BigUint::ZERO {
        return Err(CriterionError::NotDivisible {
            degree: e.degree.clone(),
            kernel_index: e.kernel_index.clone(),
        });
    }
    Ok(quot)
}

/// The sharp constant `a = 2^9 * 3^2 * 19^2 / (5 * 7^3 * 11 * 31)`, reduced.
pub fn constant_a() -> Rational {
    Rational::from_u64(1_663_488, 584_815)
}

/// One failed instance of `k * cod(chi) <= chi(1)^s`.
#[derive(Debug, Clone)]
pub struct Violation {
    /// Index into the entry list handed to [`criterion_holds`].
    pub index: usize,
    pub entry: CharEntry,
    /// `k * cod(chi)`, exact.
    pub lhs: Rational,
    /// `chi(1)^s`, exact.
    pub rhs: BigUint,
}

/// Outcome of the criterion over a list of entries.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub k: Rational,
    pub s: u32,
    /// True iff `violations` is empty.
    pub holds: bool,
    pub violations: Vec<Violation>,
    /// Indices of nonlinear entries where `k * cod(chi) = chi(1)^s` exactly.
    pub equalities: Vec<usize>,
    /// Nonlinear entries examined.
    pub checked: usize,
}

/// Check `k * cod(chi) <= chi(1)^s` for every nonlinear entry.
///
/// Linear entries (degree 1) are skipped. All violations are collected, and
/// boundary equalities are flagged separately.
pub fn criterion_holds(
    entries: &[CharEntry],
    k: &Rational,
    s: u32,
) -> Result<CriterionReport, CriterionError> {
    if !k.is_positive() {
        return Err(CriterionError::NonPositiveK);
    }
    let mut violations = Vec::new();
    let mut equalities = Vec::new();
    let mut checked = 0;
    for (index, entry) in entries.iter().enumerate() {
        if entry.is_linear() {
            continue;
        }
        checked += 1;
        let cod = codegree(entry)?;
        let lhs = k * &Rational::from_biguint(&cod);
        let rhs = entry.degree.pow(s);
        match lhs.cmp_biguint(&rhs) {
            Ordering::Greater => violations.push(Violation {
                index,
                entry: entry.clone(),
                lhs,
                rhs,
            }),
            Ordering::Equal => equalities.push(index),
            Ordering::Less => {}
        }
    }
    Ok(CriterionReport {
        k: k.clone(),
        s,
        holds: violations.is_empty(),
        violations,
        equalities,
        checked,
    })
}

/// Exact ordering of `k * |G|` against `degree^3`.
///
/// For a faithful character of degree `degree` this ordering coincides with
/// the ordering of `k * cod(chi)` against `chi(1)^2`, since
/// `cod(chi) = |G| / chi(1)` there.
pub fn cube_equiv(
    order: &FactoredInteger,
    degree: &BigUint,
    k: &Rational,
) -> Result<Ordering, CriterionError> {
    let order_value = order.value();
    if num_integer::Integer::mod_floor(&order_value, degree) != BigUint::ZERO {
        return Err(CriterionError::NotDivisible {
            degree: degree.clone(),
            kernel_index: order_value,
        });
    }
    let lhs = k * &Rational::from_biguint(&order_value);
    Ok(lhs.cmp_biguint(&degree.pow(3)))
}

/// One scanned sporadic row: the exact ratio `degree^3 / |S|`.
#[derive(Debug, Clone)]
pub struct SharpnessRow {
    pub name: String,
    pub degree: BigUint,
    pub order: FactoredInteger,
    pub ratio: Rational,
}

/// Result of scanning `degree^3 / order` over the sporadic table.
#[derive(Debug, Clone)]
pub struct SharpnessReport {
    /// All scanned rows (Fi22 excluded), sorted by name.
    pub rows: Vec<SharpnessRow>,
    pub max_ratio: Rational,
    /// Names attaining the maximum.
    pub argmax: Vec<String>,
    /// The maximum equals the constant `a` exactly.
    pub max_is_a: bool,
    /// The maximum is attained at O'N and nowhere else.
    pub unique_at_on: bool,
    /// Fi22's ratio, reported separately: its tabulated degree is the
    /// minimal extendible degree, not the minimal degree, and its ratio
    /// exceeds `a`.
    pub fi22_ratio: Rational,
    pub fi22_exceeds_a: bool,
}

impl SharpnessReport {
    pub fn all_assertions_hold(&self) -> bool {
        self.max_is_a && self.unique_at_on && self.fi22_exceeds_a
    }
}

fn degree_cubed_over_order(degree: &BigUint, order: &FactoredInteger) -> Rational {
    Rational::new(
        BigInt::from(degree.pow(3)),
        BigInt::from(order.value()),
    )
    .expect("group order is positive")
}

/// Scan all sporadic rows except Fi22 for the maximum of `degree^3 / |S|`.
///
/// The report asserts (as booleans, never panics) that the maximum is
/// exactly `a`, attained only at O'N, and that the excluded Fi22 row sits
/// strictly above `a`.
pub fn sharpness_scan(catalog: &Catalog) -> SharpnessReport {
    let a = constant_a();
    let mut rows = Vec::new();
    for row in catalog.sporadic_rows() {
        if row.name == "Fi22" {
            continue;
        }
        rows.push(SharpnessRow {
            name: row.name.clone(),
            degree: row.min_ext_degree.clone(),
            order: row.order.clone(),
            ratio: degree_cubed_over_order(&row.min_ext_degree, &row.order),
        });
    }
    let max_ratio = rows
        .iter()
        .map(|r| r.ratio.clone())
        .max()
        .expect("nonempty sporadic table");
    let argmax: Vec<String> = rows
        .iter()
        .filter(|r| r.ratio == max_ratio)
        .map(|r| r.name.clone())
        .collect();
    let fi22 = catalog.sporadic_row("Fi22").expect("Fi22 present");
    let fi22_ratio = degree_cubed_over_order(&fi22.min_ext_degree, &fi22.order);
    SharpnessReport {
        max_is_a: max_ratio == a,
        unique_at_on: argmax == ["ON".to_string()],
        fi22_exceeds_a: fi22_ratio > a,
        rows,
        max_ratio,
        argmax,
        fi22_ratio,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorize_u64;

    #[test]
    fn codegree_examples() {
        let principal = CharEntry::from_u64(1, 1).unwrap();
        assert_eq!(codegree(&principal).unwrap(), BigUint::one());

        let s3_faithful = CharEntry::from_u64(2, 6).unwrap();
        assert_eq!(codegree(&s3_faithful).unwrap(), BigUint::from(3u32));

        let on = CharEntry::from_u64(10_944, 460_815_505_920).unwrap();
        assert_eq!(codegree(&on).unwrap(), BigUint::from(42_106_680u64));
        assert_eq!(
            factorize_u64(42_106_680).unwrap(),
            FactoredInteger::from_u64_pairs(&[(2, 3), (3, 2), (5, 1), (7, 3), (11, 1), (31, 1)])
        );
    }

    #[test]
    fn codegree_rejects_nondivisible() {
        let bad = CharEntry::from_u64(2, 7).unwrap();
        assert!(matches!(codegree(&bad), Err(CriterionError::NotDivisible { .. })));
    }

    #[test]
    fn char_entry_enforces_quadratic_bound() {
        assert!(CharEntry::from_u64(2, 4).is_err());
        assert!(CharEntry::from_u64(2, 5).is_ok());
        assert!(CharEntry::from_u64(1, 2).is_ok()); // nonprincipal linear
        assert!(CharEntry::from_u64(3, 1).is_err()); // kernel index 1 needs degree 1
        assert!(CharEntry::from_u64(0, 1).is_err());
    }

    #[test]
    fn constant_a_value() {
        let a = constant_a();
        assert_eq!(a, Rational::from_u64(1_663_488, 584_815));
        assert!(a > Rational::from_u64(5, 2));
        assert!(a < Rational::from_u64(3, 1));
        // numerator and denominator match the factored forms
        assert_eq!(
            FactoredInteger::from_u64_pairs(&[(2, 9), (3, 2), (19, 2)]).value().to_string(),
            a.numerator().to_string()
        );
        assert_eq!(
            FactoredInteger::from_u64_pairs(&[(5, 1), (7, 3), (11, 1), (31, 1)])
                .value()
                .to_string(),
            a.denominator().to_string()
        );
    }

    #[test]
    fn criterion_examples() {
        let a = constant_a();

        // A5 degree-3 entry: cod = 20 and a*20 > 9
        let a5 = vec![CharEntry::from_u64(3, 60).unwrap()];
        let report = criterion_holds(&a5, &a, 2).unwrap();
        assert!(!report.holds);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].rhs, BigUint::from(9u32));

        // abelian group: no nonlinear entries, holds vacuously
        let abelian = vec![CharEntry::from_u64(1, 1).unwrap(), CharEntry::from_u64(1, 4).unwrap()];
        let report = criterion_holds(&abelian, &a, 2).unwrap();
        assert!(report.holds);
        assert_eq!(report.checked, 0);

        // O'N minimal-degree entry: equality at k = a
        let on = vec![CharEntry::from_u64(10_944, 460_815_505_920).unwrap()];
        let report = criterion_holds(&on, &a, 2).unwrap();
        assert!(report.holds);
        assert_eq!(report.equalities, vec![0]);
    }

    #[test]
    fn criterion_rejects_nonpositive_k() {
        let k = Rational::from_integer((-1).into());
        assert!(matches!(criterion_holds(&[], &k, 2), Err(CriterionError::NonPositiveK)));
    }

    #[test]
    fn cube_equiv_examples() {
        let a = constant_a();
        let a5_order = factorize_u64(60).unwrap();
        assert_eq!(
            cube_equiv(&a5_order, &BigUint::from(4u32), &a).unwrap(),
            Ordering::Greater
        );

        let on_order = factorize_u64(460_815_505_920).unwrap();
        assert_eq!(
            cube_equiv(&on_order, &BigUint::from(10_944u32), &a).unwrap(),
            Ordering::Equal
        );

        let fi22_doubled =
            FactoredInteger::from_u64_pairs(&[(2, 18), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)]);
        assert_eq!(
            cube_equiv(&fi22_doubled, &BigUint::from(156u32), &a).unwrap(),
            Ordering::Greater
        );

        assert!(cube_equiv(&a5_order, &BigUint::from(7u32), &a).is_err());
    }

    #[test]
    fn sharpness_report() {
        let catalog = Catalog::load().unwrap();
        let report = sharpness_scan(&catalog);
        assert!(report.all_assertions_hold());
        assert_eq!(report.max_ratio, constant_a());
        assert_eq!(report.argmax, vec!["ON".to_string()]);
        assert_eq!(report.rows.len(), 25);
        // Monster row sits far below a
        let m = report.rows.iter().find(|r| r.name == "M").unwrap();
        assert!(m.ratio < constant_a());
        assert!(report.fi22_ratio > constant_a());
    }

    #[test]
    fn sharpness_breaks_under_degree_perturbation() {
        let catalog = Catalog::load().unwrap();
        let on = catalog.sporadic_row("ON").unwrap();
        for wrong in [10_943u64, 10_945] {
            let ratio = degree_cubed_over_order(&BigUint::from(wrong), &on.order);
            assert_ne!(ratio, constant_a());
        }
    }
}
