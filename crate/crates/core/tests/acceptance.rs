//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test -p codegree --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use codegree::catalog::{Catalog, Family, GroupDescriptor};
use codegree::chartab::{bundled_tables, codegree_spectrum, solvable_from_table, theorem_a_check};
use codegree::criterion::{constant_a, sharpness_scan};
use codegree::cyclotomic::{cyclotomic, product_identity_check};
use codegree::exact::{factorize_u64, FactoredInteger, Rational};
use codegree::verifier::{
    lie_grid, table1_grid, verify_lemma_arith, verify_lemma_p1, verify_lemma_simple,
    verify_simple_g_cases, verify_theorem_cases, GridConfig,
};

fn fu(pairs: &[(u64, u32)]) -> FactoredInteger {
    FactoredInteger::from_u64_pairs(pairs)
}

/// Criterion 1: the sharpness identity holds exactly and the scan pins the
/// maximum at O'N.
#[test]
fn criterion_1_sharpness_identity() {
    let started = Instant::now();
    let catalog = Catalog::load().unwrap();

    // a * |O'N| = 10944^3 = 2^18 * 3^6 * 19^3, in exact rational arithmetic
    let a = constant_a();
    let on_order = catalog.order(&GroupDescriptor::sporadic("ON").unwrap()).unwrap();
    let product = &a * &Rational::from_biguint(&on_order.value());
    let theta_cubed = fu(&[(2, 18), (3, 6), (19, 3)]);
    assert_eq!(product, Rational::from_biguint(&theta_cubed.value()));
    assert_eq!(theta_cubed.value(), BigUint::from(10_944u32).pow(3));

    let report = sharpness_scan(&catalog);
    assert_eq!(report.max_ratio, Rational::from_u64(1_663_488, 584_815));
    assert!(report.max_is_a);
    assert_eq!(report.argmax, vec!["ON".to_string()]);
    assert!(report.unique_at_on);
    assert!(report.fi22_exceeds_a);

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "sharpness took {elapsed:?}, budget 1 s");
    println!(
        "criterion 1: PASS - a*|O'N| = 10944^3 exactly; sharpness max {} unique at O'N; \
         Fi22 ratio exceeds a ({elapsed:?})",
        report.max_ratio
    );
}

/// Criterion 2: the extendibility lemma over the full default grid.
#[test]
fn criterion_2_lemma_p1_grid() {
    let started = Instant::now();
    let catalog = Catalog::load().unwrap();
    let cfg = GridConfig::default();
    assert_eq!(cfg.q_max, 200);
    assert_eq!(cfg.n_max, 12);
    assert_eq!(cfg.m_max, 8);
    assert_eq!(cfg.alt_max, 30);
    assert_eq!(cfg.k, constant_a());

    let report = verify_lemma_p1(&catalog, &cfg);
    assert!(report.failures.is_empty(), "failures: {:?}", report.failures);
    // Every case is strict except the O'N row, which ties exactly at k = a:
    // criterion 1 asserts a|O'N| = 10944^3, so a strict pass there is
    // arithmetically impossible. The tie is reported as a boundary equality.
    assert_eq!(report.equalities.len(), 1, "equalities: {:?}", report.equalities);
    let tie = &report.equalities[0];
    assert!(tie.params.contains("ON"), "unexpected equality at {}", tie.params);
    assert!(tie.boundary);
    assert!(report.strict_passes >= 4000);
    assert!(report.passed());

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "lemma P1 grid took {elapsed:?}, budget 60 s");
    println!(
        "criterion 2: PASS - {} cases, {} strict, single expected O'N boundary equality, \
         zero failures ({elapsed:?})",
        report.cases_checked, report.strict_passes
    );
}

/// Criterion 3: the arithmetic lemma scan and its genuine boundary case.
#[test]
fn criterion_3_arith_scan() {
    let cfg = GridConfig { p_max: 1000, f_max: 64, ..Default::default() };
    let report = verify_lemma_arith(&cfg);
    assert!(report.failures.is_empty(), "failures: {:?}", report.failures);
    // only powers of 3 satisfy q = 3 (mod 6): exactly f_max qualifying cases
    assert_eq!(report.cases_checked, 64);
    assert!(report.notes.iter().any(|n| n.contains("have p = 3")));
    // the single non-strict point: q = 27 = 3^3 where f^3 = q
    assert_eq!(report.equalities.len(), 1);
    assert_eq!(report.equalities[0].params, "q = 3^3");
    assert!(!report.equalities[0].boundary, "the lemma claims strictness; this is a finding");
    println!(
        "criterion 3: PASS - all qualifying q are powers of 3; unique non-strict case q = 27 \
         detected and reported as a finding"
    );
}

/// Criterion 4: the four case inequalities at k = a, the explicit q = 3
/// value check, and the non-vacuity guard at k = 1.
#[test]
fn criterion_4_theorem_cases() {
    let catalog = Catalog::load().unwrap();
    let cfg = GridConfig::default();
    let report = verify_theorem_cases(&catalog, &cfg);
    assert!(report.failures.is_empty(), "failures: {:?}", report.failures);
    assert!(report.equalities.is_empty(), "equalities: {:?}", report.equalities);

    // the displayed q = 3 value: 2a * 3^5 (3^6 - 1) / (13^3 * 7^3) > 1,
    // exact LHS 2*1663488*243*728 / (584815 * 753571), decimal ~ 1.335
    let lhs = Rational::new(
        BigInt::from(2u32 * 1_663_488) * BigInt::from(243u32) * BigInt::from(728u32),
        BigInt::from(584_815u32) * BigInt::from(753_571u32),
    )
    .unwrap();
    assert!(lhs > Rational::one());
    assert!(lhs.to_decimal(6).starts_with("1.335"));
    assert!(report.notes.iter().any(|n| n.contains("1.335")));

    // the exact Fi22 comparison: a * 2^18 3^9 5^2 7 11 13 > 156^3
    let doubled_fi22 = fu(&[(2, 18), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)]);
    let product = &constant_a() * &Rational::from_biguint(&doubled_fi22.value());
    assert_eq!(
        product.cmp_biguint(&BigUint::from(156u32).pow(3)),
        std::cmp::Ordering::Greater
    );

    // non-vacuity: at k = 1 the case (2b) check must fail
    let weak = GridConfig { k: Rational::one(), ..GridConfig::default() };
    let weak_report = verify_theorem_cases(&catalog, &weak);
    assert!(!weak_report.failures.is_empty());
    assert!(weak_report.failures.iter().any(|f| f.params.contains("case 2b: G2(3)")));

    // the other simple-G chains also pass strictly at k = a
    let simple_g = verify_simple_g_cases(&catalog, &cfg);
    assert!(simple_g.failures.is_empty());
    assert!(simple_g.equalities.is_empty());
    let simple = verify_lemma_simple(&cfg);
    assert!(simple.failures.is_empty() && simple.equalities.is_empty());

    println!(
        "criterion 4: PASS - cases (1)-(4) strict at k = a; q = 3 value check {} (~{}); \
         Fi22 exact comparison holds; case 2b fails at k = 1 as required",
        lhs,
        lhs.to_decimal(6)
    );
}

/// Criterion 5: cyclotomic construction over the full range.
#[test]
fn criterion_5_cyclotomic_suite() {
    let started = Instant::now();
    use num_traits::ToPrimitive;
    for n in 1..=300u32 {
        assert!(product_identity_check(n), "product identity fails at n = {n}");
        let mut phi = 1u64;
        for (p, e) in factorize_u64(n as u64).unwrap().factors() {
            let p = p.to_u64().unwrap();
            phi *= p.pow(e - 1) * (p - 1);
        }
        assert_eq!(cyclotomic(n).degree().unwrap() as u64, phi, "degree(Phi_{n})");
    }
    let phi105 = cyclotomic(105);
    assert!(
        phi105.coeffs().iter().any(|c| c == &BigInt::from(2) || c == &BigInt::from(-2)),
        "Phi_105 must contain a coefficient of magnitude 2"
    );
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "cyclotomic suite took {elapsed:?}, budget 5 s");
    println!(
        "criterion 5: PASS - product identity and totient degree for n <= 300; \
         Phi_105 has a coefficient of magnitude 2 ({elapsed:?})"
    );
}

/// Criterion 6: order cross-checks, the B/C coincidence, and the Steinberg
/// cube bound across the full Lie-type grid.
#[test]
fn criterion_6_order_cross_checks() {
    let catalog = Catalog::load().unwrap();
    let big = BigUint::from;

    let expected: [(GroupDescriptor, u64); 6] = [
        (GroupDescriptor::linear(1, 4).unwrap(), 60),
        (GroupDescriptor::linear(1, 5).unwrap(), 60),
        (GroupDescriptor::linear(1, 7).unwrap(), 168),
        (GroupDescriptor::linear(2, 2).unwrap(), 168),
        (GroupDescriptor::tits(), 17_971_200),
        (GroupDescriptor::sporadic("ON").unwrap(), 460_815_505_920),
    ];
    for (d, order) in &expected {
        assert_eq!(catalog.order_value(d).unwrap(), big(*order), "{d}");
    }
    assert_eq!(
        catalog.order_value(&GroupDescriptor::sporadic("Fi22").unwrap()).unwrap(),
        big(64_561_751_654_400)
    );

    // |B_n(q)| = |C_n(q)| across the grid
    let cfg = GridConfig::default();
    let mut bc_points = 0;
    for d in table1_grid(&cfg) {
        if d.family() == Family::B {
            let twin = GroupDescriptor::symplectic(d.n().unwrap(), d.q().unwrap()).unwrap();
            assert_eq!(
                catalog.order_value(&d).unwrap(),
                catalog.order_value(&twin).unwrap(),
                "{d}"
            );
            bc_points += 1;
        }
    }
    assert!(bc_points > 500);

    // Steinberg cube bound |S| < |S|_p^3 on the full grid, and the tabulated
    // degree sits strictly between 1 and the Steinberg degree
    let full_grid = lie_grid(&cfg);
    assert!(full_grid.len() > 4000);
    for d in &full_grid {
        let order = catalog.order_value(d).unwrap();
        let steinberg = catalog.steinberg_degree(d).unwrap();
        assert!(order < steinberg.pow(3), "Steinberg cube bound fails for {d}");
        if let Ok(theta1) = catalog.theta1_degree(d) {
            assert!(theta1 > BigUint::one(), "{d}");
            assert!(theta1 < steinberg, "{d}");
        }
    }

    println!(
        "criterion 6: PASS - anchor orders, |B_n(q)| = |C_n(q)| at {bc_points} points, \
         Steinberg cube bound over {} descriptors",
        full_grid.len()
    );
}

/// Criterion 7: the bundled corpus end to end.
#[test]
fn criterion_7_character_table_corpus() {
    let a = constant_a();
    let tables = bundled_tables();
    assert_eq!(tables.len(), 8);

    // frozen oracle spectra, regenerated independently in chartab_oracle.rs
    let frozen: [(&str, &[(u64, u64)]); 8] = [
        ("S3", &[(1, 1), (1, 2), (2, 3)]),
        ("D4", &[(1, 1), (1, 2), (1, 2), (1, 2), (2, 4)]),
        ("Q8", &[(1, 1), (1, 2), (1, 2), (1, 2), (2, 4)]),
        ("A4", &[(1, 1), (1, 3), (1, 3), (3, 4)]),
        ("S4", &[(1, 1), (1, 2), (2, 3), (3, 8), (3, 8)]),
        ("SL(2,3)", &[(1, 1), (1, 3), (1, 3), (2, 12), (2, 12), (2, 12), (3, 4)]),
        ("A5", &[(1, 1), (3, 20), (3, 20), (4, 15), (5, 12)]),
        ("PSL(2,7)", &[(1, 1), (3, 56), (3, 56), (6, 28), (7, 24), (8, 21)]),
    ];
    let nonsolvable = ["A5", "PSL(2,7)"];

    for t in &tables {
        let expected = frozen.iter().find(|(n, _)| *n == t.name).unwrap().1;
        let spectrum = codegree_spectrum(t).unwrap();
        let pairs: Vec<(u64, u64)> = spectrum.iter().map(|(_, d, c)| (*d, *c)).collect();
        assert_eq!(pairs, expected, "{}: spectrum", t.name);
        for (label, degree, cod) in &spectrum {
            if !(*degree == 1 && *cod == 1) {
                assert!(cod > degree, "{}: {label}", t.name);
            }
        }

        let solvable = solvable_from_table(t).unwrap();
        assert_eq!(solvable, !nonsolvable.contains(&t.name.as_str()), "{}", t.name);
        assert_eq!(Some(solvable), t.solvable_flag, "{}", t.name);

        let verdict = theorem_a_check(t, &a, 2).unwrap();
        assert!(verdict.consistent_with_theorem, "{}", t.name);
        if nonsolvable.contains(&t.name.as_str()) {
            assert!(!verdict.hypothesis_holds, "{}: hypothesis must fail", t.name);
        }
        if t.name == "A5" {
            // the degree-3 violation: cod 20, a * 20 > 9
            let v = verdict
                .report
                .violations
                .iter()
                .find(|v| v.entry.degree() == &BigUint::from(3u32))
                .expect("A5 degree-3 violation");
            assert_eq!(v.rhs, BigUint::from(9u32));
            let twenty_a = &a * &Rational::from_u64(20, 1);
            assert_eq!(v.lhs, twenty_a);
            assert!(v.lhs.cmp_biguint(&v.rhs) == std::cmp::Ordering::Greater);
        }
    }
    println!(
        "criterion 7: PASS - 8 tables match the brute-force oracle spectra; cod > degree \
         throughout; solvability matches metadata; every table consistent at k = a with the \
         hypothesis failing on A5 and PSL(2,7)"
    );
}

/// Criterion 8: the universal solvability statement is deliberately replaced
/// by the property suites plus the per-table consistency shadow.
#[test]
fn criterion_8_documented_substitution() {
    // What CAN be checked at desk scale is checked elsewhere in this suite:
    // the inequality grids (criteria 2-4, 6) and the sharpness identity
    // (criterion 1). The universal statement itself is represented by its
    // empirical shadow: no table may satisfy the hypothesis at k > a while
    // being nonsolvable.
    let tables = bundled_tables();
    for k in [constant_a(), Rational::from_u64(3, 1), Rational::from_u64(50, 1)] {
        for t in &tables {
            let verdict = theorem_a_check(t, &k, 2).unwrap();
            assert!(verdict.consistent_with_theorem, "{} at k = {k}", t.name);
        }
    }
    println!(
        "criterion 8: PASS - universal solvability is out of desk-scale reach by design; \
         acceptance rests on the grid suites plus the consistency shadow, which holds on \
         the whole corpus"
    );
}
