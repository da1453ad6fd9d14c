//! Batch command-line front end.
//!
//! Every library capability is exposed as one subcommand with three
//! renderings (`text`, `json`, `csv`). Reports are byte-deterministic for
//! fixed inputs regardless of worker count. Exit codes: 0 success or
//! confirmed, 1 verification discrepancy (including a negative `equiv`
//! verdict), 2 usage or constraint error.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chromatic::{chromatic_polynomial, essential_polynomial, DeletionContraction};
use crate::classify::verify::{verify_families, verify_theorem, FamiliesReport, TheoremReport};
use crate::classify::{equivalence_classes, ClassFilters, EquivalenceReport};
use crate::cubicfield::CubicElement;
use crate::k4homeo::K4Homeomorph;
use crate::polyring::IntPolynomial;
use crate::{Error, Result};

// ---- Argument grammar ----

/// Exact chromatic analysis of K4-homeomorphs.
#[derive(Parser, Debug)]
#[command(
    name = "k4chrom",
    version,
    about = "Exact chromatic and essential polynomials of K4-homeomorphs, \
             equivalence decisions, and exhaustive uniqueness verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for exhaustive sweeps (0 = process default pool).
    #[arg(long, global = true, env = "K4CHROM_WORKERS", default_value_t = 0)]
    workers: usize,

    /// Write the rendered report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the essential polynomial Q of a homeomorph.
    Qpoly {
        /// Parameter tuple, e.g. "K4(1,3,3,2,4,7)" or "1,3,3,2,4,7".
        tuple: String,
    },
    /// Print the chromatic polynomial (variable k).
    Chrompoly {
        /// Parameter tuple, e.g. "K4(1,1,1,1,1,1)".
        tuple: String,
        /// Re-derive the polynomial by deletion-contraction and compare.
        #[arg(long)]
        oracle: bool,
        /// Edge budget for the deletion-contraction oracle.
        #[arg(long, value_name = "EDGES", default_value_t = DeletionContraction::DEFAULT_BUDGET)]
        oracle_budget: usize,
    },
    /// Decide chromatic equivalence of two homeomorphs, with evidence.
    Equiv {
        /// Left tuple.
        left: String,
        /// Right tuple.
        right: String,
    },
    /// Print girth, girth-cycle count, and all seven cycle lengths.
    Girth {
        /// Parameter tuple.
        tuple: String,
    },
    /// Print the canonical relabeling and orbit size.
    Canon {
        /// Parameter tuple.
        tuple: String,
    },
    /// Group every homeomorph of one size into equivalence classes.
    Classes {
        /// Size (total path length) to enumerate exhaustively.
        #[arg(long)]
        size: u64,
        /// Keep only members with exactly this girth.
        #[arg(long)]
        girth: Option<u64>,
        /// Keep only members with at most this many undivided edges.
        #[arg(long, value_name = "N")]
        max_unit_paths: Option<usize>,
        /// Keep only classes with a relabeling matching this pattern,
        /// e.g. "4,2,1,_,_,_" (underscore = any length).
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Exhaustively verify the uniqueness classification up to a size.
    VerifyTheorem {
        /// Largest size to sweep (every size from 6 up is checked).
        #[arg(long)]
        max_size: u64,
    },
    /// Re-verify the cataloged families over a parameter ramp.
    VerifyFamilies {
        /// Check a single family by id instead of the whole catalog.
        #[arg(long, value_name = "ID")]
        family: Option<String>,
        /// Largest value for each family parameter.
        #[arg(long)]
        max_param: u64,
    },
    /// Replay the quotient-ring identity suite in Z[t]/(t^3 + t + 1).
    Identities,
}

// ---- Entry point ----

/// Parses `argv`, runs one subcommand, writes the rendered report, and
/// returns the process exit code. Everything the process prints goes
/// through `out`/`err`, so the whole surface is testable in memory.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; anything else is a
            // usage error.
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok((rendered, code)) => match &cli.out {
            Some(path) => {
                if let Err(io) = std::fs::write(path, rendered.as_bytes()) {
                    let _ = writeln!(err, "error: cannot write {}: {io}", path.display());
                    2
                } else {
                    code
                }
            }
            None => {
                let _ = out.write_all(rendered.as_bytes());
                code
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                // Internal mathematical invariants failing is a verification
                // discrepancy, not a usage problem.
                Error::Inconsistent(_) => 1,
                _ => 2,
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, u8)> {
    match &cli.command {
        Command::Qpoly { tuple } => qpoly(cli.format, tuple),
        Command::Chrompoly {
            tuple,
            oracle,
            oracle_budget,
        } => chrompoly(cli.format, tuple, *oracle, *oracle_budget),
        Command::Equiv { left, right } => equiv(cli.format, left, right),
        Command::Girth { tuple } => girth(cli.format, tuple),
        Command::Canon { tuple } => canon(cli.format, tuple),
        Command::Classes {
            size,
            girth,
            max_unit_paths,
            pattern,
        } => classes(cli.format, *size, *girth, *max_unit_paths, pattern.as_deref(), cli.workers),
        Command::VerifyTheorem { max_size } => theorem(cli.format, *max_size, cli.workers),
        Command::VerifyFamilies { family, max_param } => {
            families(cli.format, family.as_deref(), *max_param)
        }
        Command::Identities => identities(cli.format),
    }
}

// ---- Shared rendering helpers ----

fn to_json<T: Serialize>(payload: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(payload)
        .map_err(|e| Error::Inconsistent(format!("report serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_row(fields: &[String]) -> String {
    let mut row = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    row.push('\n');
    row
}

fn polynomial_csv(poly: &IntPolynomial) -> String {
    let mut s = String::from("exponent,coefficient\n");
    for (exp, coeff) in poly.terms().rev() {
        s.push_str(&csv_row(&[exp.to_string(), coeff.to_string()]));
    }
    s
}

fn parse_tuple(text: &str) -> Result<K4Homeomorph> {
    text.parse()
}

fn parse_pattern(text: &str) -> Result<[Option<u64>; 6]> {
    let inner = text
        .trim()
        .trim_start_matches("K4")
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')');
    let parts: Vec<&str> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.len() != 6 {
        return Err(Error::Parse(format!(
            "pattern needs six entries, got {}: {text:?}",
            parts.len()
        )));
    }
    let mut pattern = [None; 6];
    for (slot, part) in parts.iter().enumerate() {
        if *part == "_" || *part == "*" {
            continue;
        }
        let value: u64 = part
            .parse()
            .map_err(|_| Error::Parse(format!("pattern entry {part:?} is not a length or wildcard")))?;
        if value == 0 {
            return Err(Error::Parse("pattern lengths must be at least 1".into()));
        }
        pattern[slot] = Some(value);
    }
    Ok(pattern)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// ---- qpoly ----

#[derive(Serialize)]
struct QpolyReport {
    tuple: K4Homeomorph,
    size: u64,
    order: u64,
    essential: IntPolynomial,
}

fn qpoly(format: Format, tuple: &str) -> Result<(String, u8)> {
    let g = parse_tuple(tuple)?;
    let report = QpolyReport {
        tuple: g,
        size: g.size(),
        order: g.order(),
        essential: essential_polynomial(&g),
    };
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => polynomial_csv(&report.essential),
        Format::Text => format!(
            "graph: {}\nsize: {}\norder: {}\nQ = {}\n",
            report.tuple,
            report.size,
            report.order,
            report.essential.to_text()
        ),
    };
    Ok((rendered, 0))
}

// ---- chrompoly ----

#[derive(Serialize)]
struct ChrompolyReport {
    tuple: K4Homeomorph,
    size: u64,
    order: u64,
    chromatic: IntPolynomial,
    oracle_checked: bool,
    oracle_agrees: Option<bool>,
}

fn chrompoly(format: Format, tuple: &str, oracle: bool, budget: usize) -> Result<(String, u8)> {
    let g = parse_tuple(tuple)?;
    let chromatic = chromatic_polynomial(&g)?;
    let oracle_agrees = if oracle {
        let mut dc = DeletionContraction::with_budget(budget);
        Some(dc.chromatic_of_homeomorph(&g)? == chromatic)
    } else {
        None
    };
    let report = ChrompolyReport {
        tuple: g,
        size: g.size(),
        order: g.order(),
        chromatic,
        oracle_checked: oracle,
        oracle_agrees,
    };
    let code = u8::from(report.oracle_agrees == Some(false));
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => polynomial_csv(&report.chromatic),
        Format::Text => {
            let mut s = format!(
                "graph: {}\nsize: {}\norder: {}\nP = {}\n",
                report.tuple,
                report.size,
                report.order,
                report.chromatic.to_text_var("k")
            );
            match report.oracle_agrees {
                Some(true) => {
                    let _ = writeln!(s, "oracle: agrees (deletion-contraction, budget {budget})");
                }
                Some(false) => {
                    let _ = writeln!(s, "oracle: DISAGREES (deletion-contraction, budget {budget})");
                }
                None => {}
            }
            s
        }
    };
    Ok((rendered, code))
}

// ---- equiv ----

#[derive(Serialize)]
struct EquivReport {
    left: K4Homeomorph,
    right: K4Homeomorph,
    left_size: u64,
    right_size: u64,
    left_essential: IntPolynomial,
    right_essential: IntPolynomial,
    equivalent: bool,
    isomorphic: bool,
}

fn equiv(format: Format, left: &str, right: &str) -> Result<(String, u8)> {
    let a = parse_tuple(left)?;
    let b = parse_tuple(right)?;
    let qa = essential_polynomial(&a);
    let qb = essential_polynomial(&b);
    let report = EquivReport {
        left: a,
        right: b,
        left_size: a.size(),
        right_size: b.size(),
        equivalent: a.size() == b.size() && qa == qb,
        isomorphic: a.is_isomorphic(&b),
        left_essential: qa,
        right_essential: qb,
    };
    let code = u8::from(!report.equivalent);
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("left,right,left_size,right_size,equivalent,isomorphic\n");
            s.push_str(&csv_row(&[
                report.left.to_string(),
                report.right.to_string(),
                report.left_size.to_string(),
                report.right_size.to_string(),
                report.equivalent.to_string(),
                report.isomorphic.to_string(),
            ]));
            s
        }
        Format::Text => format!(
            "left:  {}  size {}\nright: {}  size {}\nQ(left)  = {}\nQ(right) = {}\nequivalent: {}\nisomorphic: {}\n",
            report.left,
            report.left_size,
            report.right,
            report.right_size,
            report.left_essential.to_text(),
            report.right_essential.to_text(),
            yes_no(report.equivalent),
            yes_no(report.isomorphic),
        ),
    };
    Ok((rendered, code))
}

// ---- girth ----

#[derive(Serialize)]
struct GirthReport {
    tuple: K4Homeomorph,
    girth: u64,
    girth_cycles: usize,
    /// Four triangle images then three quadrilateral images.
    cycle_lengths: [u64; 7],
    unit_paths: usize,
}

fn girth(format: Format, tuple: &str) -> Result<(String, u8)> {
    let g = parse_tuple(tuple)?;
    let report = GirthReport {
        tuple: g,
        girth: g.girth(),
        girth_cycles: g.girth_cycle_count(),
        cycle_lengths: g.cycle_lengths(),
        unit_paths: g.unit_path_count(),
    };
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from(
                "tuple,girth,girth_cycles,unit_paths,triangle_1,triangle_2,triangle_3,triangle_4,quad_1,quad_2,quad_3\n",
            );
            let mut fields = vec![
                report.tuple.to_string(),
                report.girth.to_string(),
                report.girth_cycles.to_string(),
                report.unit_paths.to_string(),
            ];
            fields.extend(report.cycle_lengths.iter().map(|c| c.to_string()));
            s.push_str(&csv_row(&fields));
            s
        }
        Format::Text => {
            let c = &report.cycle_lengths;
            format!(
                "graph: {}\ngirth: {}\ngirth cycles: {}\ntriangles: {}, {}, {}, {}\nquadrilaterals: {}, {}, {}\nundivided edges: {}\n",
                report.tuple,
                report.girth,
                report.girth_cycles,
                c[0], c[1], c[2], c[3], c[4], c[5], c[6],
                report.unit_paths,
            )
        }
    };
    Ok((rendered, 0))
}

// ---- canon ----

#[derive(Serialize)]
struct CanonReport {
    tuple: K4Homeomorph,
    canonical: K4Homeomorph,
    orbit_size: usize,
}

fn canon(format: Format, tuple: &str) -> Result<(String, u8)> {
    let g = parse_tuple(tuple)?;
    let report = CanonReport {
        tuple: g,
        canonical: g.canonical(),
        orbit_size: g.orbit_size(),
    };
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("tuple,canonical,orbit_size\n");
            s.push_str(&csv_row(&[
                report.tuple.to_string(),
                report.canonical.to_string(),
                report.orbit_size.to_string(),
            ]));
            s
        }
        Format::Text => format!(
            "graph: {}\ncanonical: {}\norbit size: {}\n",
            report.tuple, report.canonical, report.orbit_size
        ),
    };
    Ok((rendered, 0))
}

// ---- classes ----

fn classes(
    format: Format,
    size: u64,
    girth: Option<u64>,
    max_unit_paths: Option<usize>,
    pattern: Option<&str>,
    workers: usize,
) -> Result<(String, u8)> {
    let filters = ClassFilters {
        girth,
        max_unit_paths,
        pattern: pattern.map(parse_pattern).transpose()?,
    };
    let report = equivalence_classes(size, &filters, workers)?;
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => classes_csv(&report),
        Format::Text => classes_text(&report),
    };
    Ok((rendered, 0))
}

fn families_label(families: &[String]) -> String {
    if families.is_empty() {
        "uncataloged".to_string()
    } else {
        families.join(" ")
    }
}

fn classes_text(report: &EquivalenceReport) -> String {
    let mut s = format!(
        "size: {}\ntuples enumerated: {}\nisomorphism classes: {}\nmembers matching filters: {}\nequivalence classes: {}\n",
        report.size,
        report.tuples_enumerated,
        report.isomorphism_classes,
        report.members_matching,
        report.classes.len(),
    );
    for (index, class) in report.classes.iter().enumerate() {
        let _ = writeln!(
            s,
            "class {} ({} member{})",
            index + 1,
            class.members.len(),
            if class.members.len() == 1 { "" } else { "s" }
        );
        let _ = writeln!(s, "  Q = {}", class.essential.to_text());
        for member in &class.members {
            let _ = writeln!(
                s,
                "  {}  girth {} ({} cycle{}), {} undivided  [{}]",
                member.tuple,
                member.girth,
                member.girth_cycles,
                if member.girth_cycles == 1 { "" } else { "s" },
                member.unit_paths,
                families_label(&member.families),
            );
        }
    }
    s
}

fn classes_csv(report: &EquivalenceReport) -> String {
    let mut s = String::from(
        "class,members,essential,tuple,girth,girth_cycles,unit_paths,families\n",
    );
    for (index, class) in report.classes.iter().enumerate() {
        for member in &class.members {
            s.push_str(&csv_row(&[
                (index + 1).to_string(),
                class.members.len().to_string(),
                class.essential.to_text(),
                member.tuple.to_string(),
                member.girth.to_string(),
                member.girth_cycles.to_string(),
                member.unit_paths.to_string(),
                member.families.join(";"),
            ]));
        }
    }
    s
}

// ---- verify-theorem ----

fn theorem(format: Format, max_size: u64, workers: usize) -> Result<(String, u8)> {
    let report = verify_theorem(max_size, workers)?;
    let code = u8::from(!report.confirmed);
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => theorem_csv(&report),
        Format::Text => theorem_text(&report),
    };
    Ok((rendered, code))
}

fn theorem_text(report: &TheoremReport) -> String {
    let mut s = format!(
        "hypotheses: girth 7, at most 1 undivided edge\nsizes: 6..={}\n",
        report.max_size
    );
    let _ = writeln!(s, "{:>4}  {:>10}  {:>9}  {:>9}  {:>7}", "size", "population", "nonunique", "predicted", "matched");
    for audit in &report.sizes {
        let _ = writeln!(
            s,
            "{:>4}  {:>10}  {:>9}  {:>9}  {:>7}",
            audit.size, audit.population, audit.nonunique, audit.predicted, audit.matched
        );
        for missing in &audit.missing_from_catalog {
            let partners = missing
                .partners
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(
                s,
                "      MISSING from catalog: {} with partner(s) {}",
                missing.tuple, partners
            );
        }
        for unconfirmed in &audit.not_confirmed {
            let _ = writeln!(
                s,
                "      NOT CONFIRMED: {} predicted by [{}] but found unique",
                unconfirmed.tuple,
                unconfirmed.families.join(" ")
            );
        }
    }
    let _ = writeln!(
        s,
        "total population: {}\ntotal non-unique: {}",
        report.total_population, report.total_nonunique
    );
    let _ = writeln!(
        s,
        "verdict: {}",
        if report.confirmed {
            "CONFIRMED — the non-unique set equals the catalog prediction at every size"
        } else {
            "FAILED — see the discrepancies above"
        }
    );
    let _ = writeln!(s, "reading notes:");
    for note in &report.reading_notes {
        let _ = writeln!(s, "- {note}");
    }
    s
}

fn theorem_csv(report: &TheoremReport) -> String {
    let mut s = String::from("size,population,nonunique,predicted,matched,missing,unconfirmed\n");
    for audit in &report.sizes {
        let missing = audit
            .missing_from_catalog
            .iter()
            .map(|m| m.tuple.to_string())
            .collect::<Vec<_>>()
            .join(";");
        let unconfirmed = audit
            .not_confirmed
            .iter()
            .map(|u| u.tuple.to_string())
            .collect::<Vec<_>>()
            .join(";");
        s.push_str(&csv_row(&[
            audit.size.to_string(),
            audit.population.to_string(),
            audit.nonunique.to_string(),
            audit.predicted.to_string(),
            audit.matched.to_string(),
            missing,
            unconfirmed,
        ]));
    }
    s
}

// ---- verify-families ----

fn role_label(role: crate::classify::catalog::Role) -> &'static str {
    use crate::classify::catalog::Role;
    match role {
        Role::ConfirmedPair => "confirmed-pair",
        Role::RejectedPairing => "rejected-pairing",
        Role::Context => "context",
    }
}

fn params_label(params: &[Vec<u64>]) -> String {
    params
        .iter()
        .map(|p| {
            let inner = p
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            format!("[{inner}]")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn families(format: Format, only: Option<&str>, max_param: u64) -> Result<(String, u8)> {
    let report = verify_families(max_param, only)?;
    let code = u8::from(!report.all_passed);
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => families_csv(&report),
        Format::Text => families_text(&report),
    };
    Ok((rendered, code))
}

fn families_text(report: &FamiliesReport) -> String {
    let mut s = format!("max parameter: {}\n", report.max_param);
    let _ = writeln!(
        s,
        "{:<22} {:<17} {:>7} {:>9}  notes",
        "family", "role", "checked", "verified"
    );
    for audit in &report.families {
        let mut notes = Vec::new();
        if !audit.degenerate.is_empty() {
            notes.push(format!("degenerate at {}", params_label(&audit.degenerate)));
        }
        if !audit.coincidences.is_empty() {
            notes.push(format!("coincidence at {}", params_label(&audit.coincidences)));
        }
        if !audit.passed {
            notes.push("FAILED".to_string());
        }
        let _ = writeln!(
            s,
            "{:<22} {:<17} {:>7} {:>9}  {}",
            audit.id,
            role_label(audit.role),
            audit.instances_checked,
            audit.verified,
            notes.join("; "),
        );
        for failure in &audit.failures {
            let _ = writeln!(s, "    failure: {failure}");
        }
    }
    let _ = writeln!(
        s,
        "verdict: {}",
        if report.all_passed { "ALL PASSED" } else { "FAILED" }
    );
    s
}

fn families_csv(report: &FamiliesReport) -> String {
    let mut s = String::from(
        "family,role,instances_checked,verified,degenerate,coincidences,failures,passed\n",
    );
    for audit in &report.families {
        s.push_str(&csv_row(&[
            audit.id.clone(),
            role_label(audit.role).to_string(),
            audit.instances_checked.to_string(),
            audit.verified.to_string(),
            params_label(&audit.degenerate),
            params_label(&audit.coincidences),
            audit.failures.join(";"),
            audit.passed.to_string(),
        ]));
    }
    s
}

// ---- identities ----

/// One replayed quotient-ring fact.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdentityCheck {
    pub claim: String,
    pub holds: bool,
}

/// Transcript of the quotient-ring identity suite.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdentityReport {
    pub modulus: String,
    pub checks: Vec<IdentityCheck>,
    pub all_hold: bool,
}

/// Replays every identity and exponent equation used by the case analysis:
/// five reduction identities, two scaled power equations, one nonexistence
/// fact, and distinctness of the first 201 powers of t.
pub fn identity_suite() -> IdentityReport {
    let p = |text: &str| {
        IntPolynomial::parse_text(text).expect("suite polynomials are well-formed")
    };
    let mut checks = Vec::new();
    for (lhs, rhs) in [
        ("x^4 + x^2 + 1", "1 - x"),
        ("x^2 + x + 1", "x^2 - x^3"),
        ("1 + 2x", "x - x^3"),
        ("2 + x", "1 - x^3"),
        ("1 + x", "0 - x^3"),
    ] {
        checks.push(IdentityCheck {
            claim: format!("{lhs} reduces to {rhs}"),
            holds: CubicElement::verify_identity(&p(lhs), &p(rhs)),
        });
    }
    let one_minus_t = CubicElement::reduce(&p("x^4 + x^2 + 1"));
    checks.push(IdentityCheck {
        claim: "t^n (1 - t) = t^3 - t^4 has the unique solution n = 3 (bound 200)".into(),
        holds: CubicElement::solve_power_scaled(
            &one_minus_t,
            &CubicElement::reduce(&p("x^3 - x^4")),
            200,
        ) == Some(3),
    });
    checks.push(IdentityCheck {
        claim: "t^n (1 - t) = -t^4 - 2t^5 has the unique solution n = 8 (bound 200)".into(),
        holds: CubicElement::solve_power_scaled(
            &one_minus_t,
            &CubicElement::reduce(&p("0 - x^4 - 2x^5")),
            200,
        ) == Some(8),
    });
    checks.push(IdentityCheck {
        claim: "-t^5 is not a power of t (bound 200)".into(),
        holds: CubicElement::solve_power(&CubicElement::reduce(&p("0 - x^5")), 200).is_none(),
    });
    let powers: Vec<CubicElement> = (0..=200u64)
        .map(|n| CubicElement::t().pow_u64(n))
        .collect();
    let distinct = powers
        .iter()
        .enumerate()
        .all(|(i, a)| powers.iter().skip(i + 1).all(|b| a != b));
    checks.push(IdentityCheck {
        claim: "t^0 .. t^200 are pairwise distinct".into(),
        holds: distinct,
    });
    let all_hold = checks.iter().all(|c| c.holds);
    IdentityReport {
        modulus: "t^3 + t + 1".into(),
        checks,
        all_hold,
    }
}

fn identities(format: Format) -> Result<(String, u8)> {
    let report = identity_suite();
    let code = u8::from(!report.all_hold);
    let rendered = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("claim,holds\n");
            for check in &report.checks {
                s.push_str(&csv_row(&[check.claim.clone(), check.holds.to_string()]));
            }
            s
        }
        Format::Text => {
            let mut s = format!("modulus: {}\n", report.modulus);
            for check in &report.checks {
                let _ = writeln!(
                    s,
                    "[{}] {}",
                    if check.holds { "ok" } else { "FAIL" },
                    check.claim
                );
            }
            let _ = writeln!(
                s,
                "verdict: {}",
                if report.all_hold { "ALL HOLD" } else { "FAILED" }
            );
            s
        }
    };
    Ok((rendered, code))
}

// ---- Section: tests ----

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn help_is_a_success() {
        let (code, out, _) = run_capture(&["k4chrom", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("qpoly"));
        assert!(out.contains("verify-theorem"));
    }

    #[test]
    fn malformed_tuple_is_a_usage_error() {
        let (code, out, err) = run_capture(&["k4chrom", "qpoly", "K4(1,2,3)"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("error"));
    }

    #[test]
    fn equivalence_verdict_drives_the_exit_code() {
        let (code, out, _) =
            run_capture(&["k4chrom", "equiv", "K4(4,2,1,2,5,3)", "K4(3,2,2,3,6,1)"]);
        assert_eq!(code, 0);
        assert!(out.contains("equivalent: yes"));
        assert!(out.contains("isomorphic: no"));
        let (code, out, _) =
            run_capture(&["k4chrom", "equiv", "K4(1,1,1,1,1,1)", "K4(2,1,1,1,1,1)"]);
        assert_eq!(code, 1);
        assert!(out.contains("equivalent: no"));
    }

    #[test]
    fn girth_reports_the_pinned_values() {
        let (code, out, _) = run_capture(&["k4chrom", "girth", "K4(1,3,3,2,4,7)"]);
        assert_eq!(code, 0);
        assert!(out.contains("girth: 7"));
        assert!(out.contains("girth cycles: 1"));
        let (code, out, _) = run_capture(&["k4chrom", "girth", "1,1,1,1,1,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("girth: 3"));
        assert!(out.contains("girth cycles: 4"));
    }

    #[test]
    fn chrompoly_renders_in_k_and_oracle_agrees() {
        let (code, out, _) = run_capture(&["k4chrom", "chrompoly", "K4(1,1,1,1,1,1)", "--oracle"]);
        assert_eq!(code, 0);
        assert!(out.contains("P = k^4 - 6k^3 + 11k^2 - 6k"));
        assert!(out.contains("oracle: agrees"));
    }

    #[test]
    fn oracle_budget_violation_is_a_usage_error() {
        let (code, _, err) = run_capture(&[
            "k4chrom",
            "chrompoly",
            "K4(9,9,9,9,9,9)",
            "--oracle",
            "--oracle-budget",
            "10",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("budget"));
    }

    #[test]
    fn theorem_at_minimum_size_is_trivially_confirmed() {
        let (code, out, _) = run_capture(&["k4chrom", "verify-theorem", "--max-size", "6"]);
        assert_eq!(code, 0);
        assert!(out.contains("verdict: CONFIRMED"));
    }

    #[test]
    fn identities_all_hold() {
        let (code, out, _) = run_capture(&["k4chrom", "identities"]);
        assert_eq!(code, 0);
        assert!(out.contains("verdict: ALL HOLD"));
        assert_eq!(out.matches("[ok]").count(), 9);
    }

    #[test]
    fn json_reports_are_worker_count_invariant() {
        let (code1, a, _) = run_capture(&[
            "k4chrom", "classes", "--size", "15", "--format", "json", "--workers", "1",
        ]);
        let (code4, b, _) = run_capture(&[
            "k4chrom", "classes", "--size", "15", "--format", "json", "--workers", "4",
        ]);
        assert_eq!((code1, code4), (0, 0));
        assert_eq!(a, b);
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let (code, out, _) = run_capture(&[
            "k4chrom", "canon", "K4(3,1,1,2,1,2)", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("tuple,canonical,orbit_size"));
        let row = lines.next().unwrap();
        assert!(row.starts_with("\"K4(3,1,1,2,1,2)\",\"K4("));
    }

    #[test]
    fn out_flag_writes_the_report_to_a_file() {
        let dir = std::env::temp_dir().join("k4chrom-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("qpoly.json");
        let (code, out, _) = run_capture(&[
            "k4chrom",
            "qpoly",
            "K4(1,1,1,1,1,1)",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let written = std::fs::read_to_string(&path).unwrap();
        assert!(written.contains("\"essential\""));
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn pattern_filter_narrows_classes() {
        let (code, out, _) = run_capture(&[
            "k4chrom", "classes", "--size", "17", "--girth", "7",
            "--pattern", "4,2,1,_,_,_",
        ]);
        assert_eq!(code, 0);
        // The known size-17 pair sits in a pattern-matching class; members
        // print canonically.
        assert!(out.contains("K4(1,2,4,4,4,2)"));
        assert!(out.contains("case-2.3.3 case-3.5.1.2"));
        let (code, _, err) = run_capture(&[
            "k4chrom", "classes", "--size", "17", "--pattern", "4,2,oops,_,_,_",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("pattern"));
    }

    #[test]
    fn families_command_reports_per_family_rows() {
        let (code, out, _) = run_capture(&[
            "k4chrom", "verify-families", "--family", "case-2.1", "--max-param", "6",
            "--format", "csv",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("family,role,instances_checked"));
        assert!(out.contains("case-2.1,confirmed-pair,4"));
    }
}
