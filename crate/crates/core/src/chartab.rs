//! Character-table ingestion and the empirical side of the criterion:
//! codegree spectra, kernel lattices, a solvability decision, and the
//! consistency check against the solvability theorem.
//!
//! Tables arrive as UTF-8 JSON (see [`parse_table`]); class 0 is the
//! identity class. Characters either carry exact integer `values` (rational
//! tables only) or an explicit `kernel_classes` list, so no cyclotomic-field
//! arithmetic is ever needed. Kernel detection from values is exact integer
//! equality `values[i] = degree`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::criterion::{constant_a, criterion_holds, CharEntry, CriterionError, CriterionReport};
use crate::exact::{factorize_u64, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    /// JSON syntax error with position.
    Syntax { line: usize, column: usize, message: String },
    /// A named invariant failed.
    Invariant(String),
    DuplicateLabel(String),
    /// Computed data is inconsistent (non-divisor kernel order, fractional
    /// codegree, or a metadata flag mismatch).
    Inconsistent(String),
    Criterion(CriterionError),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Syntax { line, column, message } => {
                write!(f, "syntax error at line {line}, column {column}: {message}")
            }
            TableError::Invariant(m) => write!(f, "invariant violation: {m}"),
            TableError::DuplicateLabel(l) => write!(f, "duplicate character label {l:?}"),
            TableError::Inconsistent(m) => write!(f, "inconsistent table data: {m}"),
            TableError::Criterion(e) => write!(f, "criterion error: {e}"),
        }
    }
}

impl std::error::Error for TableError {}

impl From<CriterionError> for TableError {
    fn from(e: CriterionError) -> Self {
        TableError::Criterion(e)
    }
}

/// One irreducible character: a label, its degree, and either the full list
/// of exact integer values (one per class) or an explicit kernel.
#[derive(Debug, Clone, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterData {
    pub label: String,
    pub degree: u64,
    #[serde(default)]
    pub values: Option<Vec<i64>>,
    #[serde(default)]
    pub kernel_classes: Option<Vec<usize>>,
}

/// A validated character table.
#[derive(Debug, Clone, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub characters: Vec<CharacterData>,
    /// Optional metadata: the known solvability of the group.
    #[serde(default, rename = "solvable")]
    pub solvable_flag: Option<bool>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }
}

fn is_principal(c: &CharacterData, class_count: usize) -> bool {
    if c.degree != 1 {
        return false;
    }
    match (&c.values, &c.kernel_classes) {
        (Some(values), _) => values.iter().all(|&v| v == 1),
        (None, Some(kernel)) => kernel.len() == class_count,
        (None, None) => false,
    }
}

/// Parse and validate a table from JSON bytes.
///
/// Every structural invariant is checked here: identity class first, class
/// sizes summing to the order, one character per class, a unique principal
/// character, the degree-square sum, and per-character shape constraints.
pub fn parse_table(text: &[u8]) -> Result<CharacterTable, TableError> {
    let table: CharacterTable = serde_json::from_slice(text).map_err(|e| TableError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    validate(&table)?;
    Ok(table)
}

fn validate(t: &CharacterTable) -> Result<(), TableError> {
    let classes = t.class_count();
    if t.order == 0 {
        return Err(TableError::Invariant("order must be positive".into()));
    }
    if classes == 0 {
        return Err(TableError::Invariant("no conjugacy classes".into()));
    }
    if t.class_sizes[0] != 1 {
        return Err(TableError::Invariant("class 0 must be the identity class of size 1".into()));
    }
    if t.class_sizes.contains(&0) {
        return Err(TableError::Invariant("class sizes must be positive".into()));
    }
    let size_sum: u64 = t.class_sizes.iter().sum();
    if size_sum != t.order {
        return Err(TableError::Invariant(format!(
            "class sizes sum to {size_sum}, order is {}",
            t.order
        )));
    }
    if t.characters.len() != classes {
        return Err(TableError::Invariant(format!(
            "{} characters for {classes} classes",
            t.characters.len()
        )));
    }
    let mut labels = BTreeSet::new();
    for c in &t.characters {
        if !labels.insert(c.label.clone()) {
            return Err(TableError::DuplicateLabel(c.label.clone()));
        }
        if c.degree == 0 {
            return Err(TableError::Invariant(format!("{}: degree must be positive", c.label)));
        }
        match (&c.values, &c.kernel_classes) {
            (None, None) => {
                return Err(TableError::Invariant(format!(
                    "{}: needs values or kernel_classes",
                    c.label
                )))
            }
            (Some(values), _) => {
                if values.len() != classes {
                    return Err(TableError::Invariant(format!(
                        "{}: {} values for {classes} classes",
                        c.label,
                        values.len()
                    )));
                }
                if values[0] != c.degree as i64 {
                    return Err(TableError::Invariant(format!(
                        "{}: values[0] = {} but degree = {}",
                        c.label, values[0], c.degree
                    )));
                }
            }
            (None, Some(_)) => {}
        }
        if let Some(kernel) = &c.kernel_classes {
            if !kernel.contains(&0) {
                return Err(TableError::Invariant(format!(
                    "{}: kernel must contain the identity class",
                    c.label
                )));
            }
            if kernel.iter().any(|&i| i >= classes) {
                return Err(TableError::Invariant(format!(
                    "{}: kernel class index out of range",
                    c.label
                )));
            }
            let unique: BTreeSet<usize> = kernel.iter().copied().collect();
            if unique.len() != kernel.len() {
                return Err(TableError::Invariant(format!(
                    "{}: repeated kernel class index",
                    c.label
                )));
            }
        }
    }
    let principal_count = t.characters.iter().filter(|c| is_principal(c, classes)).count();
    if principal_count != 1 {
        return Err(TableError::Invariant(format!(
            "expected exactly one principal character, found {principal_count}"
        )));
    }
    let degree_square_sum: u64 = t.characters.iter().map(|c| c.degree * c.degree).sum();
    if degree_square_sum != t.order {
        return Err(TableError::Invariant(format!(
            "degrees squared sum to {degree_square_sum}, order is {}",
            t.order
        )));
    }
    Ok(())
}

/// Kernel of a character as a set of class indices: the classes where the
/// value equals the degree, or the explicit list when values are absent.
pub fn kernel_classes(c: &CharacterData, _t: &CharacterTable) -> BTreeSet<usize> {
    match &c.values {
        Some(values) => values
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == c.degree as i64)
            .map(|(i, _)| i)
            .collect(),
        None => c
            .kernel_classes
            .as_ref()
            .expect("validated: values or kernel_classes present")
            .iter()
            .copied()
            .collect(),
    }
}

/// Order of the normal subgroup given by a kernel class set; errors when the
/// sum fails to divide the group order.
pub fn kernel_order(ks: &BTreeSet<usize>, t: &CharacterTable) -> Result<u64, TableError> {
    debug_assert!(ks.contains(&0));
    let order: u64 = ks.iter().map(|&i| t.class_sizes[i]).sum();
    if !t.order.is_multiple_of(order) {
        return Err(TableError::Inconsistent(format!(
            "kernel order {order} does not divide group order {}",
            t.order
        )));
    }
    Ok(order)
}

/// `(label, degree, codegree)` for every character, in table order.
pub fn codegree_spectrum(t: &CharacterTable) -> Result<Vec<(String, u64, u64)>, TableError> {
    let mut out = Vec::with_capacity(t.characters.len());
    for c in &t.characters {
        let ks = kernel_classes(c, t);
        let k_order = kernel_order(&ks, t)?;
        let index = t.order / k_order;
        if !index.is_multiple_of(c.degree) {
            return Err(TableError::Inconsistent(format!(
                "{}: kernel index {index} not divisible by degree {}",
                c.label, c.degree
            )));
        }
        out.push((c.label.clone(), c.degree, index / c.degree));
    }
    Ok(out)
}

/// The normal subgroup lattice: all kernels, closed under intersection,
/// with the trivial and full subgroups included. Sorted by order, then by
/// class set; each entry carries its order.
pub fn normal_subgroups(t: &CharacterTable) -> Result<Vec<(BTreeSet<usize>, u64)>, TableError> {
    let full: BTreeSet<usize> = (0..t.class_count()).collect();
    let trivial: BTreeSet<usize> = [0].into();
    let mut lattice: BTreeSet<BTreeSet<usize>> = [full, trivial].into();
    for c in &t.characters {
        lattice.insert(kernel_classes(c, t));
    }
    // close under pairwise intersection
    loop {
        let members: Vec<BTreeSet<usize>> = lattice.iter().cloned().collect();
        let before = lattice.len();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                lattice.insert(members[i].intersection(&members[j]).copied().collect());
            }
        }
        if lattice.len() == before {
            break;
        }
    }
    let mut out = Vec::with_capacity(lattice.len());
    for classes in lattice {
        let order = kernel_order(&classes, t)?;
        out.push((classes, order));
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// Solvability from the kernel lattice: walk one maximal chain from the
/// trivial subgroup to the full group and test every consecutive index for
/// being a prime power (prime-power chief factors characterize solvability,
/// and the verdict is independent of the chain chosen).
///
/// When the table carries a `solvable` metadata flag, a mismatch is reported
/// as a data error rather than silently preferring either side.
pub fn solvable_from_table(t: &CharacterTable) -> Result<bool, TableError> {
    let lattice = normal_subgroups(t)?;
    let full: BTreeSet<usize> = (0..t.class_count()).collect();
    let mut current: BTreeSet<usize> = [0].into();
    let mut current_order = 1u64;
    let mut verdict = true;
    while current != full {
        // the smallest strictly-larger member is a cover of `current`
        let (next, next_order) = lattice
            .iter()
            .filter(|(classes, _)| classes.is_superset(&current) && *classes != current)
            .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)))
            .expect("full group is a strict superset of every proper member")
            .clone();
        if !next_order.is_multiple_of(current_order) {
            return Err(TableError::Inconsistent(format!(
                "nested subgroup orders {current_order} and {next_order} violate divisibility"
            )));
        }
        let ratio = next_order / current_order;
        if factorize_u64(ratio).map_err(|e| TableError::Inconsistent(e.to_string()))?.distinct_primes() > 1
        {
            verdict = false;
        }
        current = next;
        current_order = next_order;
    }
    if let Some(flag) = t.solvable_flag {
        if flag != verdict {
            return Err(TableError::Inconsistent(format!(
                "computed solvable = {verdict} but metadata says {flag}"
            )));
        }
    }
    Ok(verdict)
}

/// Outcome of testing the solvability criterion on one table.
#[derive(Debug, Clone)]
pub struct TheoremAVerdict {
    pub report: CriterionReport,
    pub hypothesis_holds: bool,
    pub solvable: bool,
    /// `false` only on `hypothesis_holds && k > a && !solvable`, which no
    /// genuine character table can produce.
    pub consistent_with_theorem: bool,
}

/// Run the criterion hypothesis over the table's codegree spectrum and
/// compare with the table's actual solvability.
pub fn theorem_a_check(
    t: &CharacterTable,
    k: &Rational,
    s: u32,
) -> Result<TheoremAVerdict, TableError> {
    let spectrum = codegree_spectrum(t)?;
    let mut entries = Vec::with_capacity(spectrum.len());
    for (label, degree, cod) in &spectrum {
        let entry = CharEntry::new(BigUint::from(*degree), BigUint::from(degree * cod))
            .map_err(|e| TableError::Inconsistent(format!("{label}: {e}")))?;
        entries.push(entry);
    }
    let report = criterion_holds(&entries, k, s)?;
    let solvable = solvable_from_table(t)?;
    let hypothesis_holds = report.holds;
    let consistent_with_theorem = !(hypothesis_holds && *k > constant_a() && !solvable);
    Ok(TheoremAVerdict { report, hypothesis_holds, solvable, consistent_with_theorem })
}

/// The eight bundled tables as `(file name, JSON text)`.
pub const BUNDLED_TABLES: [(&str, &str); 8] = [
    ("s3.json", include_str!("../data/tables/s3.json")),
    ("d4.json", include_str!("../data/tables/d4.json")),
    ("q8.json", include_str!("../data/tables/q8.json")),
    ("a4.json", include_str!("../data/tables/a4.json")),
    ("s4.json", include_str!("../data/tables/s4.json")),
    ("sl23.json", include_str!("../data/tables/sl23.json")),
    ("a5.json", include_str!("../data/tables/a5.json")),
    ("psl27.json", include_str!("../data/tables/psl27.json")),
];

/// Parse every bundled table.
pub fn bundled_tables() -> Vec<CharacterTable> {
    BUNDLED_TABLES
        .iter()
        .map(|(name, text)| {
            parse_table(text.as_bytes()).unwrap_or_else(|e| panic!("bundled {name}: {e}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(name: &str) -> CharacterTable {
        let (_, text) = BUNDLED_TABLES.iter().find(|(n, _)| *n == name).unwrap();
        parse_table(text.as_bytes()).unwrap()
    }

    #[test]
    fn parse_bundled_tables() {
        let tables = bundled_tables();
        assert_eq!(tables.len(), 8);
        let a5 = table("a5.json");
        assert_eq!(a5.class_count(), 5);
        let mut degrees: Vec<u64> = a5.characters.iter().map(|c| c.degree).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 3, 3, 4, 5]);
        let s3 = table("s3.json");
        let degrees: Vec<u64> = s3.characters.iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![1, 1, 2]);
    }

    #[test]
    fn parse_rejects_bad_sum() {
        let text = r#"{"name":"broken","order":6,"class_sizes":[1,3,1],
            "characters":[{"label":"chi_1","degree":1,"values":[1,1,1]},
            {"label":"chi_2","degree":1,"values":[1,-1,1]},
            {"label":"chi_3","degree":2,"values":[2,0,-1]}]}"#;
        match parse_table(text.as_bytes()) {
            Err(TableError::Invariant(m)) => assert!(m.contains("sum")),
            other => panic!("expected invariant violation, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_unknown_keys_and_syntax() {
        let unknown = r#"{"name":"x","order":1,"class_sizes":[1],"extra":true,
            "characters":[{"label":"chi_1","degree":1,"values":[1]}]}"#;
        assert!(matches!(parse_table(unknown.as_bytes()), Err(TableError::Syntax { .. })));
        match parse_table(b"{\"name\": ") {
            Err(TableError::Syntax { line, .. }) => assert!(line >= 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicate_labels() {
        let text = r#"{"name":"x","order":2,"class_sizes":[1,1],
            "characters":[{"label":"chi_1","degree":1,"values":[1,1]},
            {"label":"chi_1","degree":1,"values":[1,-1]}]}"#;
        assert!(matches!(parse_table(text.as_bytes()), Err(TableError::DuplicateLabel(_))));
    }

    #[test]
    fn kernel_examples() {
        let s3 = table("s3.json");
        let principal = kernel_classes(&s3.characters[0], &s3);
        assert_eq!(principal, (0..3).collect());
        let sign = kernel_classes(&s3.characters[1], &s3);
        assert_eq!(sign, [0, 2].into());
        let faithful = kernel_classes(&s3.characters[2], &s3);
        assert_eq!(faithful, [0].into());
        assert_eq!(kernel_order(&sign, &s3).unwrap(), 3);
        assert_eq!(kernel_order(&principal, &s3).unwrap(), 6);
        assert_eq!(kernel_order(&faithful, &s3).unwrap(), 1);
    }

    #[test]
    fn spectrum_examples() {
        let s3 = table("s3.json");
        let spectrum = codegree_spectrum(&s3).unwrap();
        assert_eq!(
            spectrum,
            vec![
                ("chi_1".to_string(), 1, 1),
                ("chi_2".to_string(), 1, 2),
                ("chi_3".to_string(), 2, 3),
            ]
        );
        let a5 = table("a5.json");
        let spectrum = codegree_spectrum(&a5).unwrap();
        assert!(spectrum.contains(&("chi_2".to_string(), 3, 20)));
    }

    #[test]
    fn normal_subgroup_lattices() {
        let s3 = table("s3.json");
        let orders: Vec<u64> = normal_subgroups(&s3).unwrap().iter().map(|x| x.1).collect();
        assert_eq!(orders, vec![1, 3, 6]);

        let a5 = table("a5.json");
        let orders: Vec<u64> = normal_subgroups(&a5).unwrap().iter().map(|x| x.1).collect();
        assert_eq!(orders, vec![1, 60]);

        let q8 = table("q8.json");
        let orders: Vec<u64> = normal_subgroups(&q8).unwrap().iter().map(|x| x.1).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn solvability() {
        assert!(solvable_from_table(&table("s4.json")).unwrap());
        assert!(!solvable_from_table(&table("a5.json")).unwrap());
        assert!(!solvable_from_table(&table("psl27.json")).unwrap());
        let trivial = parse_table(
            br#"{"name":"1","order":1,"class_sizes":[1],
                "characters":[{"label":"chi_1","degree":1,"values":[1]}]}"#,
        )
        .unwrap();
        assert!(solvable_from_table(&trivial).unwrap());
    }

    #[test]
    fn solvability_flag_mismatch_is_reported() {
        let mut s3 = table("s3.json");
        s3.solvable_flag = Some(false);
        assert!(matches!(solvable_from_table(&s3), Err(TableError::Inconsistent(_))));
    }

    #[test]
    fn theorem_a_examples() {
        let a = constant_a();
        let a5 = table("a5.json");
        let verdict = theorem_a_check(&a5, &a, 2).unwrap();
        assert!(!verdict.hypothesis_holds);
        assert!(!verdict.solvable);
        assert!(verdict.consistent_with_theorem);
        // the degree-3 entries violate: a * 20 > 9
        assert!(verdict
            .report
            .violations
            .iter()
            .any(|v| v.entry.degree() == &BigUint::from(3u32)));

        let c4 = parse_table(
            br#"{"name":"C4","order":4,"class_sizes":[1,1,1,1],
                "characters":[{"label":"chi_1","degree":1,"values":[1,1,1,1]},
                {"label":"chi_2","degree":1,"kernel_classes":[0,2]},
                {"label":"chi_3","degree":1,"values":[1,-1,1,-1]},
                {"label":"chi_4","degree":1,"kernel_classes":[0,2]}]}"#,
        )
        .unwrap();
        let verdict = theorem_a_check(&c4, &a, 2).unwrap();
        assert!(verdict.hypothesis_holds); // vacuous: abelian
        assert!(verdict.solvable);
        assert!(verdict.consistent_with_theorem);

        let psl = table("psl27.json");
        let verdict = theorem_a_check(&psl, &a, 2).unwrap();
        assert!(!verdict.hypothesis_holds);
        assert!(!verdict.solvable);
        assert!(verdict.consistent_with_theorem);
    }
}
