//! Command-line front end: one subcommand per capability, plain text by
//! default, byte-stable JSON with `--json`.
//!
//! Exit codes: 0 when a result or verdict is produced (a `non-realizable`
//! verdict is still a success), 1 when an input fails to parse or validate,
//! 2 for usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num::Zero;
use serde_json::{json, Map, Value};

use crate::catalog::{self, Catalog, RealizabilityReport, Verdict};
use crate::cayley_dickson::{
    fixed_subalgebra_basis, fixed_subalgebra_isomorphism, hopf, multiplication_table, CDElement,
    ProjectivePoint,
};
use crate::constructions::{build_presentation_complex, realize_four_complex};
use crate::error::{Error, Result};
use crate::formats::{alg, cd_expr, hermitian, intersection, presentation, steenrod_expr};
use crate::jordan::{classify_stratum, jordan_product, StratumTag};
use crate::sampling;
use crate::steenrod::{adem_normalize, normalize_with_strategy, Element, RewriteStrategy};
use crate::unstable::{check_double_pair, CompatMode, UnstableAlgebra, ValidationReport};

#[derive(Parser)]
#[command(
    name = "conjspaces",
    version,
    about = "Exact-arithmetic workbench for involutive algebras, degree doubling, and realizability checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Seed for the randomized checks run by `selftest`.
    #[arg(long, global = true, value_name = "N", default_value_t = sampling::DEFAULT_SEED)]
    seed: u64,

    /// Degree cap for expanding untruncated `quotient` inputs.
    #[arg(long, global = true, value_name = "N")]
    max_degree: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Cayley-Dickson arithmetic up to the octonions.
    Cd {
        #[command(subcommand)]
        op: CdOp,
    },
    /// Hermitian 3x3 matrices over a Cayley-Dickson algebra.
    Jordan {
        #[command(subcommand)]
        op: JordanOp,
    },
    /// Rewrite a Steenrod expression into admissible form.
    Adem {
        /// Expression such as "Sq3 Sq2 + Sq4 Sq1".
        expr: String,
    },
    /// Check an `.alg` file against the unstable-algebra axioms.
    Check {
        file: PathBuf,
        /// Check only the graded-ring axioms, ignoring the Sq-action.
        #[arg(long)]
        ring_only: bool,
    },
    /// Double all degrees of an `.alg` file (Sq^k becomes Sq^2k).
    Double {
        file: PathBuf,
        /// Double the ring structure only, without a modeled Sq-action.
        #[arg(long)]
        ring_only: bool,
    },
    /// Halve all degrees of an evenly graded `.alg` file.
    Halve { file: PathBuf },
    /// Wu classes of a Poincare-duality `.alg` file.
    Wu { file: PathBuf },
    /// Stiefel-Whitney classes of a Poincare-duality `.alg` file.
    Sw { file: PathBuf },
    /// Conjugation complex of a group presentation with square relators.
    Present { file: PathBuf },
    /// Doubled 8-complex of a 4-complex given by an intersection form.
    Realize4 { file: PathBuf },
    /// Run the obstruction rules against a candidate fixed-space algebra.
    Realizable { file: PathBuf },
    /// Browse or re-verify the built-in example catalog.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
    /// Seeded randomized spot-checks of the core identities.
    Selftest {
        /// Samples per suite.
        #[arg(long, value_name = "N", default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum CdOp {
    /// Multiply two elements written as "q0 + q1*e1 + ...".
    Mul {
        left: String,
        right: String,
        /// Force a level instead of inferring the smallest one that fits.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        level: Option<u8>,
    },
    /// Apply the involution tau (negates the odd-indexed coordinates).
    Tau {
        expr: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        level: Option<u8>,
    },
    /// Conjugate (negates the imaginary part).
    Conj {
        expr: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        level: Option<u8>,
    },
    /// Print the full basis multiplication table at a level.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(0..=3))]
        level: u8,
    },
    /// Fixed subalgebra of tau and its isomorphism onto one level down.
    Fixed {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        level: u8,
    },
}

#[derive(Subcommand)]
enum JordanOp {
    /// Report trace, tau-fixedness, and projective-plane membership.
    Check { file: PathBuf },
    /// Classify the tau-stratum of a projective-plane point.
    Stratum { file: PathBuf },
}

#[derive(Subcommand)]
enum CatalogOp {
    /// List every entry and pair with its provenance note.
    List,
    /// Recompute the expected facts for one entry, or for all of them.
    Verify {
        /// Entry or pair name; omitted or "all" verifies everything.
        name: Option<String>,
    },
}

struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: 0,
        }
    }
}

enum Failure {
    /// Bad input data: exit 1.
    Input(Error),
    /// Bad invocation: exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&cli).and_then(|out| emit(&cli, out)) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, out: Outcome) -> std::result::Result<u8, Failure> {
    let body = if cli.json {
        let mut s = serde_json::to_string_pretty(&out.json).expect("serializable report");
        s.push('\n');
        s
    } else {
        out.text
    };
    match &cli.output {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Input(Error::Io(e)))?,
        None => print!("{body}"),
    }
    Ok(out.code)
}

fn run(cli: &Cli) -> std::result::Result<Outcome, Failure> {
    match &cli.command {
        Command::Cd { op } => Ok(run_cd(op)?),
        Command::Jordan { op } => Ok(run_jordan(op)?),
        Command::Adem { expr } => Ok(run_adem(expr)?),
        Command::Check { file, ring_only } => Ok(run_check(file, *ring_only, cli.max_degree)?),
        Command::Double { file, ring_only } => Ok(run_double(file, *ring_only, cli.max_degree)?),
        Command::Halve { file } => Ok(run_halve(file, cli.max_degree)?),
        Command::Wu { file } => Ok(run_wu_sw(file, cli.max_degree, "v")?),
        Command::Sw { file } => Ok(run_wu_sw(file, cli.max_degree, "w")?),
        Command::Present { file } => Ok(run_present(file)?),
        Command::Realize4 { file } => Ok(run_realize4(file)?),
        Command::Realizable { file } => Ok(run_realizable(file, cli.max_degree)?),
        Command::Catalog { op } => run_catalog(op),
        Command::Selftest { samples } => Ok(run_selftest(cli.seed, *samples, cli.max_degree)),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

// ---- cd ----------------------------------------------------------------------

fn parse_cd(expr: &str, level: Option<u8>) -> Result<CDElement> {
    cd_expr::parse(expr, level)
}

/// Parse two expressions at a common level: the forced one, or the smallest
/// level containing both.
fn parse_cd_pair(left: &str, right: &str, level: Option<u8>) -> Result<(CDElement, CDElement)> {
    let a = parse_cd(left, level)?;
    let b = parse_cd(right, level)?;
    let k = a.level().max(b.level());
    Ok((parse_cd(left, Some(k))?, parse_cd(right, Some(k))?))
}

fn run_cd(op: &CdOp) -> Result<Outcome> {
    match op {
        CdOp::Mul { left, right, level } => {
            let (a, b) = parse_cd_pair(left, right, *level)?;
            let p = a.mul(&b)?;
            let (fa, fb, fp) = (cd_expr::format(&a), cd_expr::format(&b), cd_expr::format(&p));
            Ok(Outcome::ok(
                format!("({fa}) * ({fb}) = {fp}\n"),
                json!({"level": a.level(), "left": fa, "right": fb, "product": fp}),
            ))
        }
        CdOp::Tau { expr, level } => {
            let a = parse_cd(expr, *level)?;
            let t = a.tau();
            let (fa, ft) = (cd_expr::format(&a), cd_expr::format(&t));
            Ok(Outcome::ok(
                format!("tau({fa}) = {ft}\n"),
                json!({"level": a.level(), "input": fa, "output": ft}),
            ))
        }
        CdOp::Conj { expr, level } => {
            let a = parse_cd(expr, *level)?;
            let c = a.conj();
            let (fa, fc) = (cd_expr::format(&a), cd_expr::format(&c));
            Ok(Outcome::ok(
                format!("conj({fa}) = {fc}\n"),
                json!({"level": a.level(), "input": fa, "output": fc}),
            ))
        }
        CdOp::Table { level } => run_cd_table(*level),
        CdOp::Fixed { level } => run_cd_fixed(*level),
    }
}

fn unit_name(index: usize) -> String {
    if index == 0 {
        "1".to_string()
    } else {
        format!("e{index}")
    }
}

fn run_cd_table(level: u8) -> Result<Outcome> {
    let table = multiplication_table(level)?;
    let names: Vec<Vec<String>> = table
        .iter()
        .map(|row| {
            row.iter()
                .map(|u| {
                    let sign = if u.negative { "-" } else { "" };
                    format!("{sign}{}", unit_name(u.index))
                })
                .collect()
        })
        .collect();
    let n = names.len();
    let width = names
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(1)
        .max(unit_name(n - 1).len());

    let mut lines = vec![format!("level {level} multiplication table")];
    let header: Vec<String> = (0..n).map(|j| format!("{:>width$}", unit_name(j))).collect();
    lines.push(format!("{:>width$} | {}", "", header.join("  ")));
    for (i, row) in names.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        lines.push(format!("{:>width$} | {}", unit_name(i), cells.join("  ")));
    }
    Ok(Outcome::ok(
        lines.join("\n") + "\n",
        json!({"level": level, "table": names}),
    ))
}

fn run_cd_fixed(level: u8) -> Result<Outcome> {
    let basis = fixed_subalgebra_basis(level)?;
    let labels: Vec<String> = basis
        .iter()
        .map(|e| {
            let i = e
                .coords()
                .iter()
                .position(|c| !c.is_zero())
                .expect("fixed basis units are nonzero");
            unit_name(i)
        })
        .collect();
    let iso = fixed_subalgebra_isomorphism(level)?;
    let mapping: Vec<(String, String)> = iso
        .images
        .iter()
        .enumerate()
        .map(|(i, (target, negate))| {
            let sign = if *negate { "-" } else { "" };
            (
                unit_name(2 * (i + 1)),
                format!("{sign}{}", unit_name(target + 1)),
            )
        })
        .collect();

    let mut lines = vec![
        format!("fixed subalgebra at level {level}: dimension {}", basis.len()),
        format!("basis: {}", labels.join(", ")),
        format!("isomorphism onto level {}:", level - 1),
        "  1 -> 1".to_string(),
    ];
    for (from, to) in &mapping {
        lines.push(format!("  {from} -> {to}"));
    }
    Ok(Outcome::ok(
        lines.join("\n") + "\n",
        json!({
            "level": level,
            "dimension": basis.len(),
            "basis": labels,
            "isomorphism": mapping.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        }),
    ))
}

// ---- jordan ------------------------------------------------------------------

fn run_jordan(op: &JordanOp) -> Result<Outcome> {
    match op {
        JordanOp::Check { file } => {
            let m = hermitian::parse(&read(file)?)?;
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            let text = format!(
                "hermitian matrix at level {}\ntrace: {}\ntau-fixed: {}\nprojector: {}\npoint of the projective plane: {}\n",
                m.level(),
                m.trace(),
                yes_no(m.is_tau_fixed()),
                yes_no(m.is_projector()),
                yes_no(m.in_projective_plane()),
            );
            Ok(Outcome::ok(
                text,
                json!({
                    "level": m.level(),
                    "trace": m.trace().to_string(),
                    "tau_fixed": m.is_tau_fixed(),
                    "projector": m.is_projector(),
                    "in_projective_plane": m.in_projective_plane(),
                }),
            ))
        }
        JordanOp::Stratum { file } => {
            let m = hermitian::parse(&read(file)?)?;
            let s = classify_stratum(&m)?;
            let tag = match s.tag {
                StratumTag::OpenTopCell => "open-top-cell",
                StratumTag::SphereCell => "sphere-cell",
                StratumTag::ZeroCell => "zero-cell",
            };
            Ok(Outcome::ok(
                format!("stratum: {tag}, dimension {}\n", s.dimension),
                json!({"level": m.level(), "stratum": tag, "dimension": s.dimension}),
            ))
        }
    }
}

// ---- adem --------------------------------------------------------------------

fn run_adem(expr: &str) -> Result<Outcome> {
    let input = steenrod_expr::parse(expr)?;
    let normal = adem_normalize(&input);
    let terms: Vec<String> = normal.terms().map(|m| m.to_string()).collect();
    Ok(Outcome::ok(
        format!("{normal}\n"),
        json!({
            "input": input.to_string(),
            "admissible": normal.to_string(),
            "degree": normal.degree(),
            "terms": terms,
        }),
    ))
}

// ---- alg-file commands -------------------------------------------------------

fn load_algebra(path: &Path, max_degree: Option<u32>) -> Result<UnstableAlgebra> {
    alg::parse_with_cap(&read(path)?, max_degree)
}

fn validation_json(name: &str, mode: &str, report: &ValidationReport) -> Value {
    let violations: Vec<Value> = report
        .failures
        .iter()
        .map(|v| json!({"axiom": v.axiom.to_string(), "witness": v.witness}))
        .collect();
    json!({
        "name": name,
        "mode": mode,
        "valid": report.is_valid(),
        "violations": violations,
    })
}

fn run_check(file: &Path, ring_only: bool, max_degree: Option<u32>) -> Result<Outcome> {
    let a = load_algebra(file, max_degree)?;
    let (mode, report) = if ring_only {
        ("ring", a.validate_ring())
    } else {
        ("full", a.validate())
    };
    let mut lines = Vec::new();
    if report.is_valid() {
        let what = if ring_only { "ring axioms" } else { "all axioms" };
        lines.push(format!("algebra {}: {what} hold", a.name()));
    } else {
        lines.push(format!(
            "algebra {}: {} violation(s)",
            a.name(),
            report.failures.len()
        ));
        for v in &report.failures {
            lines.push(format!("  {}: {}", v.axiom, v.witness));
        }
    }
    Ok(Outcome {
        text: lines.join("\n") + "\n",
        json: validation_json(a.name(), mode, &report),
        code: u8::from(!report.is_valid()),
    })
}

fn algebra_outcome(a: &UnstableAlgebra) -> Outcome {
    let text = alg::print(a);
    Outcome::ok(text.clone(), json!({"name": a.name(), "algebra": text}))
}

fn run_double(file: &Path, ring_only: bool, max_degree: Option<u32>) -> Result<Outcome> {
    let a = load_algebra(file, max_degree)?;
    let doubled = if ring_only {
        a.double_ring()?
    } else {
        a.double()?
    };
    Ok(algebra_outcome(&doubled))
}

fn run_halve(file: &Path, max_degree: Option<u32>) -> Result<Outcome> {
    let a = load_algebra(file, max_degree)?;
    Ok(algebra_outcome(&a.halve()?))
}

fn run_wu_sw(file: &Path, max_degree: Option<u32>, letter: &str) -> Result<Outcome> {
    let a = load_algebra(file, max_degree)?;
    let graded = if letter == "v" {
        a.wu_classes()?
    } else {
        a.sw_classes()?
    };
    let total = a.format_graded(&graded);
    let by_degree: Vec<String> = graded.iter().map(|c| a.format_sum(c)).collect();

    let kind = if letter == "v" { "Wu" } else { "Stiefel-Whitney" };
    let mut lines = vec![format!("total {kind} class of {}: {total}", a.name())];
    for (k, sum) in by_degree.iter().enumerate() {
        if sum != "0" {
            lines.push(format!("  {letter}{k} = {sum}"));
        }
    }
    Ok(Outcome::ok(
        lines.join("\n") + "\n",
        json!({"name": a.name(), "total": total, "by_degree": by_degree}),
    ))
}

// ---- constructions -----------------------------------------------------------

fn betti_line(label: &str, betti: &[u32]) -> String {
    let parts: Vec<String> = betti.iter().map(u32::to_string).collect();
    format!("{label}: {}", parts.join(" "))
}

fn run_present(file: &Path) -> Result<Outcome> {
    let p = presentation::parse(&read(file)?)?;
    let c = build_presentation_complex(&p)?;

    let mut lines = vec![format!("conjugation complex {}", c.name)];
    lines.push(betti_line("fixed betti (mod 2)", &c.fixed_betti));
    lines.push(betti_line("total betti (mod 2)", &c.total_betti()));
    lines.push("conjugation cells:".to_string());
    for cell in &c.cells {
        lines.push(format!("  {}rho: {}", cell.rho_multiple, cell.attaching));
    }
    lines.push("fixed cells:".to_string());
    for cell in &c.fixed_cells {
        lines.push(format!("  dim {}: {}", cell.dimension, cell.attaching));
    }

    let cells: Vec<Value> = c
        .cells
        .iter()
        .map(|cell| json!({"rho_multiple": cell.rho_multiple, "attaching": cell.attaching}))
        .collect();
    let fixed_cells: Vec<Value> = c
        .fixed_cells
        .iter()
        .map(|cell| json!({"dimension": cell.dimension, "attaching": cell.attaching}))
        .collect();
    Ok(Outcome::ok(
        lines.join("\n") + "\n",
        json!({
            "name": c.name,
            "fixed_betti": c.fixed_betti,
            "total_betti": c.total_betti(),
            "cells": cells,
            "fixed_cells": fixed_cells,
            "half_dimension_invariant": c.half_dimension_invariant(),
        }),
    ))
}

fn run_realize4(file: &Path) -> Result<Outcome> {
    let form = intersection::parse(&read(file)?)?;
    let attach = form.attaching_element()?;
    let c = realize_four_complex(form.sphere_count(), &attach)?;
    let pair = c.double_pair()?;
    let compat = check_double_pair(&pair, CompatMode::Full);

    let fixed_text = alg::print(&pair.fixed);
    let total_text = alg::print(&pair.total);
    let mut lines = vec![format!("conjugation complex {}", c.name)];
    lines.push(betti_line("fixed betti (mod 2)", &c.fixed_betti));
    lines.push("conjugation cells:".to_string());
    for cell in &c.cells {
        lines.push(format!("  {}rho: {}", cell.rho_multiple, cell.attaching));
    }
    lines.push("fixed cohomology:".to_string());
    lines.push(fixed_text.trim_end().to_string());
    lines.push("total cohomology:".to_string());
    lines.push(total_text.trim_end().to_string());
    lines.push(format!(
        "double pair: {}",
        if compat.is_compatible() {
            "compatible"
        } else {
            "INCOMPATIBLE"
        }
    ));

    let kappa: Vec<Value> = pair.kappa.iter().map(|(t, f)| json!([t, f])).collect();
    Ok(Outcome {
        text: lines.join("\n") + "\n",
        json: json!({
            "name": c.name,
            "fixed_betti": c.fixed_betti,
            "fixed_algebra": fixed_text,
            "total_algebra": total_text,
            "kappa": kappa,
            "compatible": compat.is_compatible(),
        }),
        code: u8::from(!compat.is_compatible()),
    })
}

// ---- realizability -----------------------------------------------------------

fn report_json(report: &RealizabilityReport) -> Value {
    let mut map = Map::new();
    map.insert("verdict".into(), json!(report.verdict.word()));
    match &report.verdict {
        Verdict::Realizable { witness } => {
            map.insert("witness".into(), json!(witness));
        }
        Verdict::NonRealizable { rule, evidence } => {
            map.insert("rule".into(), json!(rule));
            map.insert("evidence".into(), json!(evidence));
        }
        Verdict::Undetermined { passed } => {
            map.insert("passed".into(), json!(passed));
        }
    }
    let trail: Vec<Value> = report
        .trail
        .iter()
        .map(|s| json!({"rule": s.rule, "outcome": s.outcome, "detail": s.detail}))
        .collect();
    map.insert("trail".into(), json!(trail));
    Value::Object(map)
}

fn report_text(report: &RealizabilityReport) -> String {
    let mut lines = vec![format!("verdict: {}", report.verdict.word())];
    match &report.verdict {
        Verdict::Realizable { witness } => lines.push(format!("witness: {witness}")),
        Verdict::NonRealizable { rule, evidence } => {
            lines.push(format!("rule: {rule}"));
            lines.push(format!("evidence: {evidence}"));
        }
        Verdict::Undetermined { passed } => lines.push(format!("passed: {}", passed.join(", "))),
    }
    lines.push("trail:".to_string());
    for step in &report.trail {
        lines.push(format!("  {}: {} ({})", step.rule, step.outcome, step.detail));
    }
    lines.join("\n") + "\n"
}

fn run_realizable(file: &Path, max_degree: Option<u32>) -> Result<Outcome> {
    let a = load_algebra(file, max_degree)?;
    let report = a.validate();
    if !report.is_valid() {
        return Err(Error::InvalidAlgebra(report));
    }
    let report = catalog::check_realizable(&a);
    Ok(Outcome::ok(report_text(&report), report_json(&report)))
}

// ---- catalog -----------------------------------------------------------------

fn entry_kind(entry: &catalog::CatalogEntry) -> &'static str {
    match entry {
        catalog::CatalogEntry::Algebra(e) if e.ring_only => "ring",
        catalog::CatalogEntry::Algebra(_) => "algebra",
        catalog::CatalogEntry::Presentation(_) => "presentation",
    }
}

fn run_catalog(op: &CatalogOp) -> std::result::Result<Outcome, Failure> {
    let cat = Catalog::standard();
    match op {
        CatalogOp::List => Ok(catalog_list(&cat)),
        CatalogOp::Verify { name } => catalog_verify(&cat, name.as_deref()),
    }
}

fn catalog_list(cat: &Catalog) -> Outcome {
    let width = cat
        .entries()
        .iter()
        .map(|e| e.name().len())
        .chain(cat.pairs().iter().map(|p| p.name.len() + 5))
        .max()
        .unwrap_or(0);

    let mut lines = vec!["entries:".to_string()];
    let mut entries_json = Vec::new();
    for entry in cat.entries() {
        lines.push(format!(
            "  {:width$}  [{}]  {}",
            entry.name(),
            entry_kind(entry),
            entry.note()
        ));
        entries_json.push(json!({
            "name": entry.name(),
            "kind": entry_kind(entry),
            "note": entry.note(),
        }));
    }
    lines.push("pairs:".to_string());
    let mut pairs_json = Vec::new();
    for p in cat.pairs() {
        lines.push(format!("  {:width$}  [pair]  {}", format!("pair:{}", p.name), p.note));
        pairs_json.push(json!({
            "name": p.name,
            "total": p.total,
            "fixed": p.fixed,
            "conjugation_space": p.conjugation_space,
            "note": p.note,
        }));
    }
    lines.push("rules:".to_string());
    let mut rules_json = Vec::new();
    for rule in catalog::rules_table() {
        lines.push(format!("  {} ({}; {})", rule.name, rule.kind, rule.source));
        rules_json.push(json!({
            "name": rule.name,
            "kind": rule.kind,
            "statement": rule.statement,
            "source": rule.source,
        }));
    }
    Outcome::ok(
        lines.join("\n") + "\n",
        json!({"entries": entries_json, "pairs": pairs_json, "rules": rules_json}),
    )
}

fn catalog_verify(cat: &Catalog, name: Option<&str>) -> std::result::Result<Outcome, Failure> {
    let results = match name {
        None | Some("all") => cat.verify_all(),
        Some(n) => {
            let plain = n.strip_prefix("pair:").unwrap_or(n);
            if let Ok(v) = cat.verify_entry(n) {
                vec![v]
            } else if let Some(p) = cat.pair(plain) {
                vec![cat.verify_pair(p)]
            } else {
                return Err(Failure::Usage(format!("unknown catalog entry `{n}`")));
            }
        }
    };

    let failures = results.iter().filter(|r| !r.passed).count();
    let mut lines = Vec::new();
    for r in &results {
        let word = if r.passed { "pass" } else { "FAIL" };
        lines.push(format!("{word}  {} - {}", r.name, r.detail));
    }
    lines.push(format!("{} checks, {failures} failures", results.len()));

    let results_json: Vec<Value> = results
        .iter()
        .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
        .collect();
    Ok(Outcome {
        text: lines.join("\n") + "\n",
        json: json!({
            "results": results_json,
            "checks": results.len(),
            "failures": failures,
        }),
        code: u8::from(failures > 0),
    })
}

// ---- selftest ----------------------------------------------------------------

struct Suite {
    name: &'static str,
    checks: usize,
    passed: bool,
}

fn run_selftest(seed: u64, samples: usize, max_degree: Option<u32>) -> Outcome {
    let mut rng = sampling::rng(seed);
    let mut suites = Vec::new();

    // Conjugation, tau, and norm identities at every level.
    {
        let mut checks = 0;
        let mut passed = true;
        for level in 0..=3u8 {
            for _ in 0..samples / 4 + 1 {
                let a = sampling::cd_element(&mut rng, level);
                let b = sampling::cd_element(&mut rng, level);
                let ab = a.mul(&b).unwrap();
                passed &= ab.conj() == b.conj().mul(&a.conj()).unwrap();
                passed &= ab.tau() == a.tau().mul(&b.tau()).unwrap();
                passed &= a.tau().tau() == a;
                passed &= a.tau().conj() == a.conj().tau();
                passed &= ab.norm() == a.norm() * b.norm();
                checks += 5;
            }
        }
        suites.push(Suite {
            name: "cayley-dickson identities",
            checks,
            passed,
        });
    }

    // The octonions are not associative; pin one witness.
    {
        let e = |i| CDElement::basis_unit(3, i);
        let left = e(1).mul(&e(2)).unwrap().mul(&e(4)).unwrap();
        let right = e(1).mul(&e(2).mul(&e(4)).unwrap()).unwrap();
        suites.push(Suite {
            name: "octonion associativity failure",
            checks: 1,
            passed: left != right,
        });
    }

    // Tau-fixedness of [x, y] is equivalent to x^-1 y landing in the fixed
    // subalgebra, over both the quaternions and the octonions.
    {
        let mut checks = 0;
        let mut passed = true;
        for level in 2..=3u8 {
            for _ in 0..samples / 2 + 1 {
                let x = sampling::nonzero_cd_element(&mut rng, level);
                let y = sampling::nonzero_cd_element(&mut rng, level);
                let point = ProjectivePoint::normalize(&x, &y).unwrap();
                let ratio = x.inverse().unwrap().mul(&y).unwrap();
                passed &= point.is_tau_fixed() == ratio.is_tau_fixed();
                checks += 1;
            }
        }
        suites.push(Suite {
            name: "projective-line fixed criterion",
            checks,
            passed,
        });
    }

    // The quotient map to the projective line is tau-equivariant.
    {
        let mut checks = 0;
        let mut passed = true;
        for level in 2..=3u8 {
            for _ in 0..samples / 2 + 1 {
                let (x, y) = sampling::projective_pair(&mut rng, level);
                passed &= hopf(&x.tau(), &y.tau()).unwrap() == hopf(&x, &y).unwrap().tau();
                checks += 1;
            }
        }
        suites.push(Suite {
            name: "hopf map tau-equivariance",
            checks,
            passed,
        });
    }

    // Tau commutes with the Jordan product.
    {
        let mut checks = 0;
        let mut passed = true;
        for level in 0..=3u8 {
            for _ in 0..samples / 4 + 1 {
                let a = sampling::hermitian(&mut rng, level);
                let b = sampling::hermitian(&mut rng, level);
                let prod = jordan_product(&a, &b).unwrap();
                passed &= prod.tau() == jordan_product(&a.tau(), &b.tau()).unwrap();
                checks += 1;
            }
        }
        suites.push(Suite {
            name: "jordan product commutes with tau",
            checks,
            passed,
        });
    }

    // Adem normalization: idempotent, degree-preserving, strategy-independent.
    {
        let cap = max_degree.unwrap_or(16).min(20);
        let mut checks = 0;
        let mut passed = true;
        for _ in 0..samples {
            let word = sampling::steenrod_word(&mut rng, cap);
            let e = Element::from_monomial(word.clone());
            let normal = adem_normalize(&e);
            passed &= normal.is_admissible();
            passed &= adem_normalize(&normal) == normal;
            passed &= normalize_with_strategy(&e, RewriteStrategy::RightmostFirst) == normal;
            if !normal.is_zero() {
                passed &= normal.degree() == Some(word.degree());
            }
            checks += 4;
        }
        suites.push(Suite {
            name: "adem normalization",
            checks,
            passed,
        });
    }

    let all_passed = suites.iter().all(|s| s.passed);
    let mut lines = vec![format!("selftest: seed {seed}, {samples} samples per suite")];
    for s in &suites {
        let word = if s.passed { "ok  " } else { "FAIL" };
        lines.push(format!("{word}  {} ({} checks)", s.name, s.checks));
    }
    lines.push(if all_passed {
        "all suites passed".to_string()
    } else {
        "some suites FAILED".to_string()
    });

    let suites_json: Vec<Value> = suites
        .iter()
        .map(|s| json!({"name": s.name, "checks": s.checks, "passed": s.passed}))
        .collect();
    Outcome {
        text: lines.join("\n") + "\n",
        json: json!({
            "seed": seed,
            "samples": samples,
            "suites": suites_json,
            "passed": all_passed,
        }),
        code: u8::from(!all_passed),
    }
}
