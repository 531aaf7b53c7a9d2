//! Command-line front end for the codegree criterion toolkit.
//!
//! Exit codes: 0 when every check passes, 1 when a report contains a
//! failure or an equality where strictness was claimed, 2 for usage or
//! input errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use codegree::catalog::{Catalog, Family, GroupDescriptor};
use codegree::chartab;
use codegree::criterion::{constant_a, sharpness_scan, SharpnessReport};
use codegree::cyclotomic::cyclotomic;
use codegree::exact::Rational;
use codegree::verifier::{self, GridConfig, VerifyReport};

#[derive(Parser)]
#[command(
    name = "codegree",
    version,
    about = "Exact-arithmetic verification of a codegree solvability criterion",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-verify the inequality grids behind the criterion.
    Verify {
        #[arg(value_enum)]
        which: Check,
        #[command(flatten)]
        grid: GridArgs,
        /// Downgrade strict-claim equalities from findings to warnings.
        #[arg(long)]
        allow_equalities: bool,
        #[arg(long)]
        json: bool,
    },
    /// Scan degree^3/order over the sporadic table for the sharp constant.
    Sharpness {
        #[arg(long)]
        json: bool,
    },
    /// Look up one group: order, tabulated degrees, outer bound.
    Group {
        /// Family tag: alt, a, 2a, b, c, d, 2d, 3d4, g2, f4, e6, 2e6, e7,
        /// e8, 2b2, 2g2, 2f4, tits, sporadic.
        family: String,
        #[arg(long)]
        n: Option<u32>,
        /// Base field parameter (the field size Q for Suzuki/Ree).
        #[arg(long)]
        q: Option<u64>,
        /// Suzuki/Ree exponent: Q = 2^(2m+1) or 3^(2m+1).
        #[arg(long)]
        m: Option<u32>,
        /// ATLAS name, for `group sporadic`.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Character-table operations.
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
    /// Print the n-th cyclotomic polynomial, optionally evaluated.
    Cyclotomic {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Evaluate at this integer.
        #[arg(long)]
        at: Option<BigInt>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    P1,
    AnAlgebra,
    Arith,
    Simple,
    Cases,
    SimpleG,
    All,
}

#[derive(Subcommand)]
enum TableAction {
    /// Parse a table, print its codegree spectrum, and test the criterion
    /// hypothesis against the table's solvability.
    Check {
        file: std::path::PathBuf,
        #[arg(long, value_parser = parse_rational, default_value_t = constant_a())]
        k: Rational,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value_t = 2)]
        s: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = 200)]
    q_max: u64,
    #[arg(long, default_value_t = 12)]
    n_max: u32,
    #[arg(long, default_value_t = 8)]
    m_max: u32,
    #[arg(long, default_value_t = 64)]
    f_max: u32,
    #[arg(long, default_value_t = 1000)]
    p_max: u64,
    #[arg(long, default_value_t = 50)]
    t_max: u32,
    #[arg(long, default_value_t = 30)]
    alt_max: u32,
    /// Constant k as `num/den` or an integer (default: the sharp constant a).
    #[arg(long, value_parser = parse_rational, default_value_t = constant_a())]
    k: Rational,
    /// Criterion exponent (accepted for interface symmetry; the grid checks
    /// are all cubic).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value_t = 2)]
    s: u32,
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    let value: Rational = text.parse().map_err(|e| format!("{e}"))?;
    if !value.is_positive() {
        return Err("k must be positive".into());
    }
    Ok(value)
}

impl GridArgs {
    fn to_config(&self) -> GridConfig {
        GridConfig {
            q_max: self.q_max,
            n_max: self.n_max,
            m_max: self.m_max,
            f_max: self.f_max,
            p_max: self.p_max,
            t_max: self.t_max,
            alt_max: self.alt_max,
            k: self.k.clone(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { which, grid, allow_equalities, json } => {
            let catalog = Catalog::load_default().map_err(|e| e.to_string())?;
            let cfg = grid.to_config();
            cfg.validate()?;
            let reports = match which {
                Check::P1 => vec![verifier::verify_lemma_p1(&catalog, &cfg)],
                Check::AnAlgebra => vec![verifier::verify_an_algebra(&catalog, &cfg)],
                Check::Arith => vec![verifier::verify_lemma_arith(&cfg)],
                Check::Simple => vec![verifier::verify_lemma_simple(&cfg)],
                Check::Cases => vec![verifier::verify_theorem_cases(&catalog, &cfg)],
                Check::SimpleG => vec![verifier::verify_simple_g_cases(&catalog, &cfg)],
                Check::All => verifier::verify_all(&catalog, &cfg),
            };
            let blocking = reports.iter().any(|r| r.has_blocking_findings(allow_equalities));
            if json {
                println!("{}", render_reports_json(&reports)?);
            } else {
                for report in &reports {
                    print!("{}", report.render_text());
                }
            }
            Ok(exit_for(blocking))
        }
        Command::Sharpness { json } => {
            let catalog = Catalog::load_default().map_err(|e| e.to_string())?;
            let report = sharpness_scan(&catalog);
            if json {
                println!("{}", sharpness_json(&report)?);
            } else {
                print!("{}", sharpness_text(&report));
            }
            Ok(exit_for(!report.all_assertions_hold()))
        }
        Command::Group { family, n, q, m, name, json } => {
            let catalog = Catalog::load_default().map_err(|e| e.to_string())?;
            let family: Family = family.parse().map_err(|e| format!("{e}"))?;
            let descriptor = GroupDescriptor::from_parts(family, n, q, m, name.as_deref())
                .map_err(|e| e.to_string())?;
            let text = group_report(&catalog, &descriptor, json)?;
            println!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { action } => {
            let TableAction::Check { file, k, s, json } = action;
            let bytes = std::fs::read(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let table = chartab::parse_table(&bytes).map_err(|e| e.to_string())?;
            let verdict = chartab::theorem_a_check(&table, &k, s).map_err(|e| e.to_string())?;
            let spectrum = chartab::codegree_spectrum(&table).map_err(|e| e.to_string())?;
            if json {
                println!("{}", table_json(&table, &spectrum, &verdict, &k, s)?);
            } else {
                print!("{}", table_text(&table, &spectrum, &verdict, &k, s));
            }
            Ok(exit_for(!verdict.hypothesis_holds || !verdict.consistent_with_theorem))
        }
        Command::Cyclotomic { n, at, json } => {
            let poly = cyclotomic(n);
            let value = at.as_ref().map(|q| poly.eval(q));
            if json {
                let mut obj = serde_json::Map::new();
                obj.insert("n".into(), n.into());
                obj.insert("polynomial".into(), poly.to_string().into());
                obj.insert("degree".into(), poly.degree().unwrap_or(0).into());
                if let (Some(q), Some(v)) = (&at, &value) {
                    obj.insert("at".into(), q.to_string().into());
                    obj.insert("value".into(), v.to_string().into());
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::Value::Object(obj))
                        .map_err(|e| e.to_string())?
                );
            } else {
                println!("Phi_{n}(x) = {poly}");
                if let (Some(q), Some(v)) = (&at, &value) {
                    println!("Phi_{n}({q}) = {v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for(blocking: bool) -> ExitCode {
    if blocking {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn render_reports_json(reports: &[VerifyReport]) -> Result<String, String> {
    if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0]).map_err(|e| e.to_string())
    } else {
        serde_json::to_string_pretty(reports).map_err(|e| e.to_string())
    }
}

fn sharpness_text(report: &SharpnessReport) -> String {
    use std::fmt::Write;
    let a = constant_a();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "sharpness scan: degree^3 / order over the sporadic table (Fi22 excluded)"
    );
    let _ = writeln!(out, "constant a = {a} (~{})", a.to_decimal(6));
    for row in &report.rows {
        let _ = writeln!(
            out,
            "  {:<6} degree {} order {}: ratio {} (~{})",
            row.name,
            row.degree,
            row.order,
            row.ratio,
            row.ratio.to_decimal(6)
        );
    }
    let _ = writeln!(
        out,
        "maximum {} attained at {:?}; equals a: {}; unique at O'N: {}",
        report.max_ratio, report.argmax, report.max_is_a, report.unique_at_on
    );
    let _ = writeln!(
        out,
        "Fi22 (excluded row): ratio {} (~{}); exceeds a: {}",
        report.fi22_ratio,
        report.fi22_ratio.to_decimal(6),
        report.fi22_exceeds_a
    );
    let verdict = if report.all_assertions_hold() { "pass" } else { "FINDINGS" };
    let _ = writeln!(out, "result: {verdict}");
    out
}

fn sharpness_json(report: &SharpnessReport) -> Result<String, String> {
    #[derive(serde::Serialize)]
    struct RowJson {
        name: String,
        degree: String,
        order: String,
        ratio: String,
        decimal: String,
    }
    #[derive(serde::Serialize)]
    struct ReportJson {
        constant_a: String,
        rows: Vec<RowJson>,
        max_ratio: String,
        argmax: Vec<String>,
        max_is_a: bool,
        unique_at_on: bool,
        fi22_ratio: String,
        fi22_exceeds_a: bool,
    }
    let json = ReportJson {
        constant_a: constant_a().to_string(),
        rows: report
            .rows
            .iter()
            .map(|r| RowJson {
                name: r.name.clone(),
                degree: r.degree.to_string(),
                order: r.order.to_string(),
                ratio: r.ratio.to_string(),
                decimal: r.ratio.to_decimal(6),
            })
            .collect(),
        max_ratio: report.max_ratio.to_string(),
        argmax: report.argmax.clone(),
        max_is_a: report.max_is_a,
        unique_at_on: report.unique_at_on,
        fi22_ratio: report.fi22_ratio.to_string(),
        fi22_exceeds_a: report.fi22_exceeds_a,
    };
    serde_json::to_string_pretty(&json).map_err(|e| e.to_string())
}

fn group_report(
    catalog: &Catalog,
    descriptor: &GroupDescriptor,
    json: bool,
) -> Result<String, String> {
    let order = catalog.order(descriptor).map_err(|e| e.to_string())?;
    let order_value = catalog.order_value(descriptor).map_err(|e| e.to_string())?;
    let theta1 = catalog.theta1_degree(descriptor).ok();
    let steinberg = catalog.steinberg_degree(descriptor).ok();
    let out_bound = catalog.out_bound(descriptor).ok();
    let sporadic = descriptor
        .sporadic_name()
        .or(if descriptor.family() == Family::Tits { Some("Tits") } else { None })
        .and_then(|name| catalog.sporadic_row(name).ok());
    if json {
        let mut obj = serde_json::Map::new();
        obj.insert("group".into(), descriptor.to_string().into());
        obj.insert("order_factored".into(), order.to_string().into());
        obj.insert("order".into(), order_value.to_string().into());
        if let Some(theta1) = &theta1 {
            obj.insert("theta1_degree".into(), theta1.to_string().into());
        }
        if let Some(steinberg) = &steinberg {
            obj.insert("steinberg_degree".into(), steinberg.to_string().into());
        }
        if let Some(bound) = out_bound {
            obj.insert("out_bound".into(), bound.into());
        }
        if let Some(row) = sporadic {
            obj.insert("min_ext_degree".into(), row.min_ext_degree.to_string().into());
            obj.insert("char_label".into(), row.char_label.clone().into());
            obj.insert("out_exact".into(), row.out_exact.into());
        }
        serde_json::to_string_pretty(&serde_json::Value::Object(obj)).map_err(|e| e.to_string())
    } else {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "group: {descriptor}");
        let _ = writeln!(out, "order: {order} = {order_value}");
        if let Some(theta1) = &theta1 {
            let _ = writeln!(out, "tabulated degree theta1: {theta1}");
        }
        if let Some(steinberg) = &steinberg {
            let _ = writeln!(out, "Steinberg degree: {steinberg}");
        }
        if let Some(bound) = out_bound {
            let _ = writeln!(out, "outer bound used by the case analysis: {bound}");
        }
        if let Some(row) = sporadic {
            let _ = writeln!(
                out,
                "table row: degree {} ({}), |Out| = {}",
                row.min_ext_degree, row.char_label, row.out_exact
            );
        }
        Ok(out.trim_end().to_string())
    }
}

fn table_text(
    table: &chartab::CharacterTable,
    spectrum: &[(String, u64, u64)],
    verdict: &chartab::TheoremAVerdict,
    k: &Rational,
    s: u32,
) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "table: {} (order {})", table.name, table.order);
    let _ = writeln!(out, "k = {k} (constant a = {}), s = {s}", constant_a());
    let _ = writeln!(out, "codegree spectrum:");
    for (label, degree, cod) in spectrum {
        let _ = writeln!(out, "  {label}: degree {degree}, codegree {cod}");
    }
    if verdict.report.violations.is_empty() {
        let _ = writeln!(out, "hypothesis k*cod <= degree^{s}: holds");
    } else {
        let _ = writeln!(
            out,
            "hypothesis k*cod <= degree^{s}: fails ({} violation(s))",
            verdict.report.violations.len()
        );
        for v in &verdict.report.violations {
            let label = &spectrum[v.index].0;
            let _ = writeln!(
                out,
                "  violation {label}: degree {}, k*cod = {} > {}",
                v.entry.degree(),
                v.lhs,
                v.rhs
            );
        }
    }
    for &i in &verdict.report.equalities {
        let _ = writeln!(out, "  boundary equality at {}", spectrum[i].0);
    }
    let _ = writeln!(out, "solvable (from kernel lattice): {}", verdict.solvable);
    let _ = writeln!(
        out,
        "consistent with the solvability theorem: {}",
        verdict.consistent_with_theorem
    );
    out
}

fn table_json(
    table: &chartab::CharacterTable,
    spectrum: &[(String, u64, u64)],
    verdict: &chartab::TheoremAVerdict,
    k: &Rational,
    s: u32,
) -> Result<String, String> {
    #[derive(serde::Serialize)]
    struct SpectrumJson {
        label: String,
        degree: u64,
        codegree: u64,
    }
    #[derive(serde::Serialize)]
    struct ViolationJson {
        label: String,
        degree: String,
        lhs: String,
        rhs: String,
    }
    #[derive(serde::Serialize)]
    struct VerdictJson {
        table: String,
        order: u64,
        k: String,
        s: u32,
        spectrum: Vec<SpectrumJson>,
        hypothesis_holds: bool,
        violations: Vec<ViolationJson>,
        equalities: Vec<String>,
        solvable: bool,
        consistent_with_theorem: bool,
    }
    let json = VerdictJson {
        table: table.name.clone(),
        order: table.order,
        k: k.to_string(),
        s,
        spectrum: spectrum
            .iter()
            .map(|(label, degree, cod)| SpectrumJson {
                label: label.clone(),
                degree: *degree,
                codegree: *cod,
            })
            .collect(),
        hypothesis_holds: verdict.hypothesis_holds,
        violations: verdict
            .report
            .violations
            .iter()
            .map(|v| ViolationJson {
                label: spectrum[v.index].0.clone(),
                degree: v.entry.degree().to_string(),
                lhs: v.lhs.to_string(),
                rhs: v.rhs.to_string(),
            })
            .collect(),
        equalities: verdict.report.equalities.iter().map(|&i| spectrum[i].0.clone()).collect(),
        solvable: verdict.solvable,
        consistent_with_theorem: verdict.consistent_with_theorem,
    };
    serde_json::to_string_pretty(&json).map_err(|e| e.to_string())
}
