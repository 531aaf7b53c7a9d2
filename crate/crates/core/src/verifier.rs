//! Mechanical re-verification of the inequality chains behind the criterion,
//! over exact parameter grids.
//!
//! Two kinds of claims appear. A *strict* claim (`lhs > rhs`) is asserted by
//! the source argument outright; an equality there is a genuine finding and
//! is reported as such. A *closed* claim (`lhs >= rhs`) arises from every
//! check scaled by `k`: the criterion's hypothesis is the open condition
//! `k > a`, so running at the boundary `k = a` verifies the whole open range,
//! and an exact tie at the boundary is expected, not a defect. Boundary ties
//! are flagged with `boundary = true` in the report.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::catalog::{alternating_theta, Catalog, CatalogError, Family, GroupDescriptor};
use crate::criterion::constant_a;
use crate::cyclotomic::{cyclotomic, QuadExpr};
use crate::exact::{primes_up_to, Rational};

/// Truncation bounds for the infinite families, plus the constant `k`.
#[derive(Debug, Clone)]
pub struct GridConfig {
    /// Prime powers `q <= q_max` for the Lie-type grids.
    pub q_max: u64,
    /// Rank bound for the classical families.
    pub n_max: u32,
    /// Suzuki/Ree exponent bound (`Q = p^(2m+1)`, `1 <= m <= m_max`).
    pub m_max: u32,
    /// Field-exponent bound for the arithmetic lemma scan.
    pub f_max: u32,
    /// Prime bound for the arithmetic lemma scan.
    pub p_max: u64,
    /// Bound for the direct-product contradiction scan.
    pub t_max: u32,
    /// Alternating-degree bound (separate from the rank bound).
    pub alt_max: u32,
    pub k: Rational,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            q_max: 200,
            n_max: 12,
            m_max: 8,
            f_max: 64,
            p_max: 1000,
            t_max: 50,
            alt_max: 30,
            k: constant_a(),
        }
    }
}

impl GridConfig {
    /// Every bound must reach the smallest admissible parameter of its
    /// family, so no grid silently degenerates to a vacuous pass.
    pub fn validate(&self) -> Result<(), String> {
        let checks = [
            (self.q_max >= 4, "q_max must be at least 4 (the smallest simple A1 parameter)"),
            (self.n_max >= 2, "n_max must be at least 2"),
            (self.m_max >= 1, "m_max must be at least 1"),
            (self.f_max >= 1, "f_max must be at least 1"),
            (self.p_max >= 3, "p_max must be at least 3"),
            (self.t_max >= 2, "t_max must be at least 2"),
            (self.alt_max >= 5, "alt_max must be at least 5"),
            (self.k.is_positive(), "k must be positive"),
        ];
        for (ok, message) in checks {
            if !ok {
                return Err(message.into());
            }
        }
        Ok(())
    }
}

/// A non-strict case: parameters plus both sides rendered exactly.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CaseOutcome {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    /// True when the claim was closed (`>=`), so the equality is an expected
    /// boundary tie rather than a finding.
    pub boundary: bool,
}

/// Aggregated outcome of one check over its grid.
///
/// `cases_checked = strict_passes + equalities.len() + failures.len()` holds
/// by construction.
#[derive(Debug, Clone, serde::Serialize)]
pub struct VerifyReport {
    pub check_name: String,
    pub k: String,
    pub cases_checked: u64,
    pub strict_passes: u64,
    pub equalities: Vec<CaseOutcome>,
    pub failures: Vec<CaseOutcome>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    fn new(check_name: &str, k: &Rational) -> Self {
        VerifyReport {
            check_name: check_name.to_string(),
            k: k.to_string(),
            cases_checked: 0,
            strict_passes: 0,
            equalities: Vec::new(),
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Failures, or equalities where strictness was claimed.
    pub fn has_blocking_findings(&self, allow_equalities: bool) -> bool {
        if !self.failures.is_empty() {
            return true;
        }
        !allow_equalities && self.equalities.iter().any(|e| !e.boundary)
    }

    pub fn passed(&self) -> bool {
        !self.has_blocking_findings(false)
    }

    /// One line per non-pass case, both sides exact.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check: {}", self.check_name);
        let _ = writeln!(out, "k = {} (constant a = {})", self.k, constant_a());
        let _ = writeln!(
            out,
            "cases: {}  strict: {}  equalities: {}  failures: {}",
            self.cases_checked,
            self.strict_passes,
            self.equalities.len(),
            self.failures.len()
        );
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        for eq in &self.equalities {
            let kind = if eq.boundary { "boundary equality" } else { "EQUALITY (strict claim)" };
            let _ = writeln!(out, "  {kind}: {}: {} = {}", eq.params, eq.lhs, eq.rhs);
        }
        for fail in &self.failures {
            let _ = writeln!(out, "  FAILURE: {}: {} < {}", fail.params, fail.lhs, fail.rhs);
        }
        let verdict = if self.has_blocking_findings(false) { "FINDINGS" } else { "pass" };
        let _ = writeln!(out, "result: {verdict}");
        out
    }

    fn record(&mut self, params: String, lhs: String, rhs: String, ord: Ordering, closed: bool) {
        self.cases_checked += 1;
        match ord {
            Ordering::Greater => self.strict_passes += 1,
            Ordering::Equal => {
                self.equalities.push(CaseOutcome { params, lhs, rhs, boundary: closed })
            }
            Ordering::Less => {
                self.failures.push(CaseOutcome { params, lhs, rhs, boundary: false })
            }
        }
    }

    /// Strict claim `lhs > rhs` on integers.
    fn claim_strict(&mut self, params: impl Into<String>, lhs: &BigUint, rhs: &BigUint) {
        self.record(params.into(), lhs.to_string(), rhs.to_string(), lhs.cmp(rhs), false);
    }

    /// Closed claim `k-side >= rhs`, rational against integer.
    fn claim_closed(&mut self, params: impl Into<String>, lhs: &Rational, rhs: &BigUint) {
        self.record(
            params.into(),
            lhs.to_string(),
            rhs.to_string(),
            lhs.cmp_biguint(rhs),
            true,
        );
    }

    /// Closed claim on two rationals.
    fn claim_closed_rat(&mut self, params: impl Into<String>, lhs: &Rational, rhs: &Rational) {
        self.record(params.into(), lhs.to_string(), rhs.to_string(), lhs.cmp(rhs), true);
    }
}

/// Prime powers `q <= max` with their decomposition, ascending.
pub fn prime_powers(max: u64) -> Vec<(u64, u64, u32)> {
    let mut out = Vec::new();
    for p in primes_up_to(max) {
        let mut q = p;
        let mut f = 1;
        loop {
            out.push((q, p, f));
            match q.checked_mul(p) {
                Some(next) if next <= max => {
                    q = next;
                    f += 1;
                }
                _ => break,
            }
        }
    }
    out.sort_unstable();
    out
}

fn push_q_family(
    grid: &mut Vec<GroupDescriptor>,
    qs: &[(u64, u64, u32)],
    build: impl Fn(u64) -> Result<GroupDescriptor, CatalogError>,
) {
    for &(q, _, _) in qs {
        if let Ok(d) = build(q) {
            grid.push(d);
        }
    }
}

/// Every descriptor of the tabulated Lie-type families on the grid.
///
/// Ascending and deterministic; nonsimple parameter points are skipped by
/// the descriptor constructors.
pub fn table1_grid(cfg: &GridConfig) -> Vec<GroupDescriptor> {
    let qs = prime_powers(cfg.q_max);
    let mut grid = Vec::new();
    for n in 2..=cfg.n_max {
        push_q_family(&mut grid, &qs, |q| GroupDescriptor::linear(n, q));
        push_q_family(&mut grid, &qs, |q| GroupDescriptor::unitary(n, q));
        push_q_family(&mut grid, &qs, |q| GroupDescriptor::orthogonal_odd(n, q));
        push_q_family(&mut grid, &qs, |q| GroupDescriptor::symplectic(n, q));
    }
    for n in 4..=cfg.n_max {
        push_q_family(&mut grid, &qs, |q| GroupDescriptor::orthogonal_plus(n, q));
        push_q_family(&mut grid, &qs, |q| GroupDescriptor::orthogonal_minus(n, q));
    }
    push_q_family(&mut grid, &qs, GroupDescriptor::triality_d4);
    push_q_family(&mut grid, &qs, GroupDescriptor::f4);
    push_q_family(&mut grid, &qs, GroupDescriptor::e6);
    push_q_family(&mut grid, &qs, GroupDescriptor::twisted_e6);
    push_q_family(&mut grid, &qs, GroupDescriptor::e7);
    push_q_family(&mut grid, &qs, GroupDescriptor::e8);
    for m in 1..=cfg.m_max {
        if let Ok(d) = GroupDescriptor::suzuki(m) {
            grid.push(d);
        }
        if let Ok(d) = GroupDescriptor::ree_f4(m) {
            grid.push(d);
        }
    }
    grid
}

/// The Table-1 grid extended by the families it omits (`A1`, `G2`, `2G2`)
/// and the Tits group; used for the Steinberg-bound invariants.
pub fn lie_grid(cfg: &GridConfig) -> Vec<GroupDescriptor> {
    let qs = prime_powers(cfg.q_max);
    let mut grid = table1_grid(cfg);
    push_q_family(&mut grid, &qs, |q| GroupDescriptor::linear(1, q));
    push_q_family(&mut grid, &qs, GroupDescriptor::g2);
    for m in 1..=cfg.m_max {
        if let Ok(d) = GroupDescriptor::ree_g2(m) {
            grid.push(d);
        }
    }
    grid.push(GroupDescriptor::tits());
    grid
}

fn k_times(k: &Rational, value: &BigUint) -> Rational {
    k * &Rational::from_biguint(value)
}

/// `Phi_12` evaluated at `sqrt Q` for `Q = 3^(2m+1)`: the surd cancels and
/// the Ree degree `Q^2 - Q + 1` comes out as a rational integer.
fn ree_small_degree(m: u32) -> BigUint {
    let sqrt_q = QuadExpr::new(
        Rational::zero(),
        Rational::from_biguint(&BigUint::from(3u32).pow(m)),
        3,
    )
    .expect("radicand 3");
    cyclotomic(12)
        .eval_quad(&sqrt_q)
        .to_integer()
        .expect("Phi_12(sqrt Q) is a rational integer")
        .to_biguint()
        .expect("positive degree")
}

/// The smallest nontrivial Fi22 degree (ATLAS); the sporadic table's Fi22
/// row instead holds the minimal Aut-extendible degree 2^17*11.
const FI22_MIN_DEGREE: u64 = 78;

/// Extendibility lemma: for every tabulated Lie-type group the strong form
/// `|S| > theta1(1)^3` holds outright, and for the sporadic, Tits, and
/// alternating groups `k|S| >= theta(1)^3` at the configured `k`.
///
/// `A2(2)` uses its special degree-3 character, the one point where the
/// tabulated degree fails the cube bound. At `k = a` the O'N row ties
/// exactly; that tie is the sharpness witness and is reported as a boundary
/// equality.
pub fn verify_lemma_p1(catalog: &Catalog, cfg: &GridConfig) -> VerifyReport {
    let mut report = VerifyReport::new("lemma-p1", &cfg.k);
    for d in table1_grid(cfg) {
        let order = catalog.order_value(&d).expect("grid descriptor is valid");
        let special_a22 = d.family() == Family::A && d.n() == Some(2) && d.q() == Some(2);
        let (theta, label) = if special_a22 {
            (BigUint::from(3u32), format!("{d} [degree 3]"))
        } else {
            (catalog.theta1_degree(&d).expect("tabulated family"), d.to_string())
        };
        report.claim_strict(label, &order, &theta.pow(3));
    }
    for row in catalog.sporadic_rows() {
        if row.name == "Fi22" {
            continue; // excluded from the lemma's statement
        }
        let lhs = k_times(&cfg.k, &row.order.value());
        report.claim_closed(format!("sporadic {}", row.name), &lhs, &row.min_ext_degree.pow(3));
    }
    let tits = catalog.sporadic_row("Tits").expect("Tits present");
    let lhs = k_times(&cfg.k, &tits.order.value());
    report.claim_closed("Tits [degree 27]", &lhs, &tits.min_ext_degree.pow(3));
    for n in 5..=cfg.alt_max {
        let d = GroupDescriptor::alternating(n).expect("n >= 5");
        let order = catalog.order_value(&d).expect("alternating order");
        let theta = alternating_theta(n).expect("n >= 5");
        let lhs = k_times(&cfg.k, &order);
        report.claim_closed(d.to_string(), &lhs, &theta.pow(3));
    }
    report
}

/// The algebraic reductions used for `A_n(q)`:
/// `q^((n-1)^2 - 4) (q-1)^2 >= 1` for `n >= 3`, `(q^3 - 1) > (q + 1)^2` for
/// `n = 2`, `q >= 3`, and in both shapes the direct ratio `|S|/theta^3`
/// dominates the reduced bound.
pub fn verify_an_algebra(catalog: &Catalog, cfg: &GridConfig) -> VerifyReport {
    let mut report = VerifyReport::new("an-algebra", &cfg.k);
    let qs = prime_powers(cfg.q_max);
    let one = BigUint::one();
    for n in 3..=cfg.n_max {
        for &(q, _, _) in &qs {
            let exponent = (n - 1) * (n - 1) - 4;
            let bound = BigUint::from(q).pow(exponent) * BigUint::from(q - 1).pow(2);
            report.claim_closed(
                format!("A{n}({q}) reduced bound >= 1"),
                &Rational::from_biguint(&bound),
                &one,
            );
            let d = GroupDescriptor::linear(n, q).expect("n >= 3 is always simple");
            let direct = Rational::new(
                BigInt::from(catalog.order_value(&d).unwrap()),
                BigInt::from(catalog.theta1_degree(&d).unwrap().pow(3)),
            )
            .unwrap();
            report.claim_closed_rat(
                format!("A{n}({q}) direct ratio >= reduced bound"),
                &direct,
                &Rational::from_biguint(&bound),
            );
        }
    }
    for &(q, _, _) in &qs {
        if q < 3 {
            continue;
        }
        let lhs = BigUint::from(q).pow(3) - &one;
        let rhs = BigUint::from(q + 1).pow(2);
        report.claim_strict(format!("A2({q}) cubic gap"), &lhs, &rhs);
        let d = GroupDescriptor::linear(2, q).expect("q >= 3");
        let direct = Rational::new(
            BigInt::from(catalog.order_value(&d).unwrap()),
            BigInt::from(catalog.theta1_degree(&d).unwrap().pow(3)),
        )
        .unwrap();
        let bound = Rational::new(BigInt::from(lhs), BigInt::from(rhs)).unwrap();
        report.claim_closed_rat(format!("A2({q}) direct ratio >= reduced bound"), &direct, &bound);
    }
    report
}

/// The arithmetic lemma: `q = p^f` with `q = 3 (mod 6)` forces `f < q^(1/3)`,
/// compared exactly as `f^3 < q`.
///
/// The congruence already forces `p = 3`, which the scan records. The claim
/// is strict and has one genuine boundary counterexample, `q = 27` where
/// `f^3 = q`; the report surfaces it as a non-boundary equality.
pub fn verify_lemma_arith(cfg: &GridConfig) -> VerifyReport {
    let mut report = VerifyReport::new("lemma-arith", &cfg.k);
    let mut scanned = 0u64;
    let mut qualifying = 0u64;
    let six = BigUint::from(6u32);
    let three = BigUint::from(3u32);
    for p in primes_up_to(cfg.p_max) {
        let p_big = BigUint::from(p);
        let mut q = p_big.clone();
        for f in 1..=cfg.f_max {
            scanned += 1;
            if &q % &six == three {
                qualifying += 1;
                debug_assert_eq!(p, 3);
                let f_cubed = BigUint::from(f as u64).pow(3);
                report.claim_strict(format!("q = {p}^{f}"), &q, &f_cubed);
            }
            q *= &p_big;
        }
    }
    report.notes.push(format!(
        "scanned {scanned} prime powers; all {qualifying} values with q = 3 (mod 6) have p = 3"
    ));
    report
}

/// The direct-product contradiction in squared exact form: `t^4 < 60^(2t-3)`
/// for all `2 <= t <= t_max` (so `t^2 < |S|^(t - 3/2)` whenever
/// `|S| >= 60`), plus the base fact `60 > 7^2`.
pub fn verify_lemma_simple(cfg: &GridConfig) -> VerifyReport {
    let mut report = VerifyReport::new("lemma-simple", &cfg.k);
    let sixty = BigUint::from(60u32);
    for t in 2..=cfg.t_max {
        let lhs = sixty.pow(2 * t - 3);
        let rhs = BigUint::from(t as u64).pow(4);
        report.claim_strict(format!("t = {t}"), &lhs, &rhs);
    }
    report.claim_strict("minimal simple order vs 7^2", &sixty, &BigUint::from(49u32));
    report
}

/// The four minimal-normal-subgroup cases of the criterion's induction.
pub fn verify_theorem_cases(catalog: &Catalog, cfg: &GridConfig) -> VerifyReport {
    let mut report = VerifyReport::new("theorem-cases", &cfg.k);
    let k = &cfg.k;
    let qs = prime_powers(cfg.q_max);
    let one = BigUint::one();

    // (1) A1(q), q >= 4: k q(q^2 - 1) >= q^3
    for &(q, _, _) in &qs {
        if q < 4 {
            continue;
        }
        let q = BigUint::from(q);
        let lhs = k_times(k, &(&q * &(q.pow(2) - &one)));
        report.claim_closed(format!("case 1: A1({q})"), &lhs, &q.pow(3));
    }

    // (2a) G2(q), q not 3 mod 6: chi(1) <= out * (q^3 + 1) with out = q, so
    // k q^6(q^6-1)(q^2-1) >= q^3 (q^3+1)^3
    for &(q, _, _) in &qs {
        if q < 3 || q % 6 == 3 {
            continue;
        }
        let d = GroupDescriptor::g2(q).expect("q >= 3");
        let out = BigUint::from(catalog.out_bound(&d).expect("G2 outer bound"));
        let qb = BigUint::from(q);
        let lhs = k_times(k, &(qb.pow(6) * (qb.pow(6) - &one) * (qb.pow(2) - &one)));
        let rhs = out.pow(3) * (qb.pow(3) + &one).pow(3);
        report.claim_closed(format!("case 2a: G2({q})"), &lhs, &rhs);
    }

    // (2b) G2(q), q = 3^f: chi(1) <= out * Phi3 Phi6 with out = 2f, so
    // k q^6(q^6-1)(q^2-1) >= (2f)^3 (Phi3 Phi6)^3
    for &(q, p, f) in &qs {
        if q < 3 || q % 6 != 3 {
            continue;
        }
        debug_assert_eq!(p, 3);
        let d = GroupDescriptor::g2(q).expect("q >= 3");
        let out = BigUint::from(catalog.out_bound(&d).expect("G2 outer bound"));
        debug_assert_eq!(out, BigUint::from(2 * f as u64));
        let qb = BigUint::from(q);
        let q_int = BigInt::from(q);
        let phi36 = (cyclotomic(3).eval(&q_int) * cyclotomic(6).eval(&q_int))
            .to_biguint()
            .expect("positive");
        let lhs = k_times(k, &(qb.pow(6) * (qb.pow(6) - &one) * (qb.pow(2) - &one)));
        let rhs = out.pow(3) * phi36.pow(3);
        report.claim_closed(format!("case 2b: G2({q}), f = {f}"), &lhs, &rhs);
    }

    // the explicit q = 3 value check: 2k 3^5 (3^6 - 1) >= 13^3 7^3
    {
        let lhs_int = BigUint::from(2u32) * BigUint::from(3u32).pow(5) * BigUint::from(728u32);
        let lhs = k_times(k, &lhs_int);
        let rhs = BigUint::from(13u32).pow(3) * BigUint::from(7u32).pow(3);
        report.claim_closed("case 2b: G2(3) displayed value check", &lhs, &rhs);
        let ratio = Rational::new(
            lhs.numerator().clone(),
            lhs.denominator() * BigInt::from(rhs.clone()),
        )
        .unwrap();
        report
            .notes
            .push(format!("case 2b q = 3 ratio: {} (~{})", ratio, ratio.to_decimal(6)));
    }

    // (3) 2G2(Q), Q = 3^(2m+1): k Q^3(Q^3+1)(Q-1) >= (2m+1)^3 (Q^2-Q+1)^3
    for m in 1..=cfg.m_max {
        let d = GroupDescriptor::ree_g2(m).expect("m >= 1");
        let out = BigUint::from(catalog.out_bound(&d).expect("2G2 outer bound"));
        let q = BigUint::from(d.qq().unwrap());
        let lhs = k_times(k, &(q.pow(3) * (q.pow(3) + &one) * (&q - &one)));
        let degree = ree_small_degree(m);
        let rhs = out.pow(3) * degree.pow(3);
        report.claim_closed(format!("case 3: 2G2({q})"), &lhs, &rhs);
    }

    // (4) Fi22: chi(1) <= out * 78 = 156, so k * 2|Fi22| >= 156^3
    {
        let d = GroupDescriptor::sporadic("Fi22").expect("valid name");
        let out = catalog.out_bound(&d).expect("Fi22 outer bound");
        let fi22 = catalog.sporadic_row("Fi22").expect("Fi22 present");
        let doubled = BigUint::from(2u32) * fi22.order.value();
        let lhs = k_times(k, &doubled);
        let chi = BigUint::from(out * FI22_MIN_DEGREE);
        report.claim_closed("case 4: Fi22 [chi(1) <= 156]", &lhs, &chi.pow(3));
    }

    report
}

/// The simple-`G` branch for the exceptional set: the displayed inequalities
/// plus the end-to-end claim `k|G| >= theta^3` with the true orders
/// (including the central divisors the displayed chains drop).
pub fn verify_simple_g_cases(catalog: &Catalog, cfg: &GridConfig) -> VerifyReport {
    let mut report = VerifyReport::new("simple-g", &cfg.k);
    let k = &cfg.k;
    let qs = prime_powers(cfg.q_max);
    let one = BigUint::one();

    // A1(q): q(q^2-1) > (q-1)^3, and k|A1(q)| against both sides
    for &(q, _, _) in &qs {
        if q < 4 {
            continue;
        }
        let d = GroupDescriptor::linear(1, q).expect("q >= 4");
        let qb = BigUint::from(q);
        let chain_lhs = &qb * &(qb.pow(2) - &one);
        let chain_rhs = (&qb - &one).pow(3);
        report.claim_strict(format!("A1({q}) chain"), &chain_lhs, &chain_rhs);
        let order = catalog.order_value(&d).unwrap();
        let k_order = k_times(k, &order);
        report.claim_closed(format!("A1({q}) k|G| vs q(q^2-1)"), &k_order, &chain_lhs);
        report.claim_closed(format!("A1({q}) end-to-end [degree q-1]"), &k_order, &chain_rhs);
    }

    // G2(q): 3(q^2-1)^4 > q^6 - 1, and k|G2(q)| >= (Phi3 Phi6)^3
    for &(q, _, _) in &qs {
        if q < 3 {
            continue;
        }
        let qb = BigUint::from(q);
        let lhs = BigUint::from(3u32) * (qb.pow(2) - &one).pow(4);
        let rhs = qb.pow(6) - &one;
        report.claim_strict(format!("G2({q}) displayed chain"), &lhs, &rhs);
        let d = GroupDescriptor::g2(q).expect("q >= 3");
        let q_int = BigInt::from(q);
        let phi36 = (cyclotomic(3).eval(&q_int) * cyclotomic(6).eval(&q_int))
            .to_biguint()
            .expect("positive");
        let k_order = k_times(k, &catalog.order_value(&d).unwrap());
        report.claim_closed(format!("G2({q}) end-to-end [degree Phi3*Phi6]"), &k_order, &phi36.pow(3));
    }

    // 2G2(Q): (Q-1)(Q+1)^3 > Q^3 - 1, and k|2G2(Q)| >= (Q^2-Q+1)^3
    for m in 1..=cfg.m_max {
        let d = GroupDescriptor::ree_g2(m).expect("m >= 1");
        let q = BigUint::from(d.qq().unwrap());
        let lhs = (&q - &one) * (&q + &one).pow(3);
        let rhs = q.pow(3) - &one;
        report.claim_strict(format!("2G2({q}) displayed chain"), &lhs, &rhs);
        let degree = ree_small_degree(m);
        let k_order = k_times(k, &catalog.order_value(&d).unwrap());
        report.claim_closed(
            format!("2G2({q}) end-to-end [degree Q^2-Q+1]"),
            &k_order,
            &degree.pow(3),
        );
    }

    // Fi22 as the whole group: k|Fi22| >= 78^3
    {
        let fi22 = catalog.sporadic_row("Fi22").expect("Fi22 present");
        let k_order = k_times(k, &fi22.order.value());
        let degree = BigUint::from(FI22_MIN_DEGREE);
        report.claim_closed("Fi22 [degree 78]", &k_order, &degree.pow(3));
    }

    report
}

/// All six checks, in a fixed order.
pub fn verify_all(catalog: &Catalog, cfg: &GridConfig) -> Vec<VerifyReport> {
    vec![
        verify_lemma_p1(catalog, cfg),
        verify_an_algebra(catalog, cfg),
        verify_lemma_arith(cfg),
        verify_lemma_simple(cfg),
        verify_theorem_cases(catalog, cfg),
        verify_simple_g_cases(catalog, cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Catalog {
        Catalog::load().unwrap()
    }

    fn small_cfg() -> GridConfig {
        GridConfig { q_max: 30, n_max: 6, m_max: 2, f_max: 8, p_max: 50, t_max: 10, alt_max: 12, ..Default::default() }
    }

    #[test]
    fn report_counts_are_consistent() {
        let c = catalog();
        let cfg = small_cfg();
        for report in verify_all(&c, &cfg) {
            assert_eq!(
                report.cases_checked,
                report.strict_passes + report.equalities.len() as u64 + report.failures.len() as u64,
                "{}",
                report.check_name
            );
        }
    }

    #[test]
    fn lemma_p1_small_grid() {
        let c = catalog();
        let report = verify_lemma_p1(&c, &small_cfg());
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        // the single boundary tie is O'N at k = a
        assert_eq!(report.equalities.len(), 1);
        assert!(report.equalities[0].boundary);
        assert!(report.equalities[0].params.contains("ON"));
        assert!(report.passed());
    }

    #[test]
    fn lemma_p1_contains_named_examples() {
        // A2(2) via the degree-3 character: 168 > 27
        let c = catalog();
        let report = verify_lemma_p1(&c, &small_cfg());
        assert!(report.cases_checked > 100);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn an_algebra_boundary_cases() {
        let c = catalog();
        let report = verify_an_algebra(&c, &small_cfg());
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        // reduced bound = 1 exactly at (n, q) = (3, 2); direct ratio equals the
        // reduced bound exactly at A2(4); both are closed-claim boundaries
        assert!(report
            .equalities
            .iter()
            .any(|e| e.params.contains("A3(2)") && e.boundary));
        assert!(report
            .equalities
            .iter()
            .any(|e| e.params.contains("A2(4)") && e.boundary));
        assert!(report.equalities.iter().all(|e| e.boundary));
    }

    #[test]
    fn arith_finds_the_single_equality() {
        let cfg = GridConfig { p_max: 1000, f_max: 64, ..Default::default() };
        let report = verify_lemma_arith(&cfg);
        assert!(report.failures.is_empty());
        assert_eq!(report.equalities.len(), 1);
        let eq = &report.equalities[0];
        assert_eq!(eq.params, "q = 3^3");
        assert!(!eq.boundary); // strict claim: a genuine finding
        assert!(report.has_blocking_findings(false));
        assert!(!report.has_blocking_findings(true));
        assert_eq!(report.cases_checked, 64); // exactly the powers of 3
    }

    #[test]
    fn simple_lemma_grid() {
        let report = verify_lemma_simple(&small_cfg());
        assert!(report.failures.is_empty());
        assert!(report.equalities.is_empty());
        assert_eq!(report.cases_checked, 10); // t in 2..=10 plus the base fact
    }

    #[test]
    fn theorem_cases_pass_at_a() {
        let c = catalog();
        let report = verify_theorem_cases(&c, &small_cfg());
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        assert!(report.equalities.is_empty());
        assert!(report.notes.iter().any(|n| n.contains("1.335")));
    }

    #[test]
    fn lemma_p1_below_a_reports_the_on_failure() {
        // below the sharp constant, the O'N row must fail and be named
        let c = catalog();
        let cfg = GridConfig { k: Rational::from_u64(5, 2), ..small_cfg() };
        let report = verify_lemma_p1(&c, &cfg);
        assert!(!report.failures.is_empty());
        assert!(report.failures.iter().any(|f| f.params.contains("ON")));
    }

    #[test]
    fn grid_config_validation() {
        assert!(GridConfig::default().validate().is_ok());
        assert!(GridConfig { q_max: 3, ..Default::default() }.validate().is_err());
        assert!(GridConfig { t_max: 1, ..Default::default() }.validate().is_err());
        assert!(GridConfig { alt_max: 4, ..Default::default() }.validate().is_err());
    }

    #[test]
    fn theorem_case_2b_fails_at_k_one() {
        let c = catalog();
        let cfg = GridConfig { k: Rational::from_u64(1, 1), ..small_cfg() };
        let report = verify_theorem_cases(&c, &cfg);
        assert!(report
            .failures
            .iter()
            .any(|f| f.params.contains("case 2b: G2(3)")));
    }

    #[test]
    fn simple_g_cases_pass_at_a() {
        let c = catalog();
        let report = verify_simple_g_cases(&c, &small_cfg());
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        assert!(report.equalities.is_empty());
    }

    #[test]
    fn grid_iteration_is_deterministic() {
        let c = catalog();
        let cfg = small_cfg();
        let a = verify_lemma_p1(&c, &cfg);
        let b = verify_lemma_p1(&c, &cfg);
        assert_eq!(a.render_text(), b.render_text());
    }

    #[test]
    fn prime_power_enumeration() {
        let qs = prime_powers(32);
        let values: Vec<u64> = qs.iter().map(|&(q, _, _)| q).collect();
        assert_eq!(values, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]);
        assert!(qs.contains(&(27, 3, 3)));
    }
}
