//! The `mrn` command line. [`run`] returns the process exit code:
//! 0 for a definitive answer, 2 when a budget ran out first, 1 for usage or
//! data errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::crosscheck::{cross_check, Query};
use crate::detect::verify_coloring;
use crate::dot::to_dot;
use crate::error::{invalid, Error, Result};
use crate::formula::{mrn_formula_c3c3, mrn_formula_c3c3_multi, mrn_formula_c3c4, RamseyValue};
use crate::graph::{format_targets, parse_targets, Coloring, PartStructure, TargetSpec};
use crate::mrc::{read_mrc, write_mrc};
use crate::search::{
    arrows_exhaustive, arrows_randomized, compute_mrn_search, ArrowInstance, ArrowVerdict, Budget,
    MrnStatus, SearchConfig,
};
use crate::witness::{witness_search_fallback, FallbackResult, WitnessFamily};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Clone, Debug)]
struct TargetList(Vec<TargetSpec>);

impl FromStr for TargetList {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_targets(s).map(TargetList)
    }
}

/// `3,3,4` or `7x2` (seven parts of size two).
#[derive(Clone, Debug)]
struct PartList(Vec<usize>);

impl FromStr for PartList {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
        if let Some((j, t)) = s.split_once('x') {
            return Ok(PartList(vec![num(t)?; num(j)?]));
        }
        s.split(',')
            .map(num)
            .collect::<std::result::Result<_, _>>()
            .map(PartList)
    }
}

/// Inclusive `A..B`, or a single `A`.
#[derive(Clone, Debug)]
struct Span(RangeInclusive<usize>);

impl FromStr for Span {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        Ok(Span(a..=b))
    }
}

/// Comma-separated positive integers.
#[derive(Clone, Debug)]
struct NumberList(Vec<usize>);

impl FromStr for NumberList {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}")))
            .collect::<std::result::Result<_, _>>()
            .map(NumberList)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "mrn",
    version,
    about = "Multipartite Ramsey numbers: witnesses, verification, search, formulas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a witness coloring, verify it and write it as `.mrc`.
    Witness(WitnessArgs),
    /// Check a `.mrc` coloring against targets.
    Verify(VerifyArgs),
    /// Decide arrowing by exhaustive search.
    Arrows(ArrowsArgs),
    /// Look for a good coloring by random sampling.
    Falsify(FalsifyArgs),
    /// Scan part sizes for the smallest arrowing one.
    Compute(ComputeArgs),
    /// Evaluate a closed-form value.
    Formula(FormulaArgs),
    /// Tabulate closed-form values (rows j, columns n).
    Table(TableArgs),
    /// Compare a closed-form value with witnesses and search.
    CrossCheck(CrossCheckArgs),
    /// Convert a `.mrc` coloring to Graphviz.
    ExportDot(ExportDotArgs),
}

#[derive(Args, Debug, Clone)]
struct BudgetArgs {
    /// Node budget for exhaustive search.
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    budget_secs: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        let mut b = Budget::nodes(self.budget_nodes);
        if let Some(s) = self.budget_secs {
            if !(s.is_finite() && s > 0.0) {
                return Err(invalid(format!("--budget-secs must be positive, got {s}")));
            }
            b = b.with_time(Duration::from_secs_f64(s));
        }
        Ok(b)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WitnessKind {
    C5pair,
    T2,
    T3,
    T4,
    L5,
    T5t6,
    T10,
    T8,
    Search,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[arg(long, value_enum)]
    family: WitnessKind,
    /// Number of parts (c5pair, t2, l5, t5t6).
    #[arg(long)]
    j: Option<usize>,
    /// Part size (c5pair, t2, t5t6, t8).
    #[arg(long)]
    t: Option<usize>,
    /// Stripe size (t3, t10).
    #[arg(long)]
    n: Option<usize>,
    /// Stripe sizes, comma separated (t4).
    #[arg(long)]
    n_list: Option<NumberList>,
    /// Number of stripe colors (t2).
    #[arg(long)]
    extra: Option<usize>,
    /// Host parts for `search`.
    #[arg(long)]
    parts: Option<PartList>,
    /// Targets: required for `search`, overrides the family's own otherwise.
    #[arg(long)]
    targets: Option<TargetList>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(short = 'o', long)]
    output: PathBuf,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    #[arg(long)]
    targets: TargetList,
}

#[derive(Args, Debug)]
struct ArrowsArgs {
    #[arg(long)]
    parts: PartList,
    #[arg(long)]
    targets: TargetList,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Disable symmetry pruning.
    #[arg(long)]
    no_symmetry: bool,
    /// Run a seeded random-sampling pass before the exhaustive search.
    #[arg(long)]
    seed: Option<u64>,
    /// Samples drawn by the seeded pass.
    #[arg(long, default_value_t = 10_000, requires = "seed")]
    presamples: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// With several workers, return the certificate a single worker finds.
    #[arg(long)]
    deterministic: bool,
    #[arg(long)]
    split_depth: Option<usize>,
    /// Periodic progress on stderr.
    #[arg(long)]
    progress: bool,
    /// Write the good coloring, if one is found, to this `.mrc` file.
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FalsifyArgs {
    #[arg(long)]
    parts: PartList,
    #[arg(long)]
    targets: TargetList,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Number of parts.
    #[arg(long)]
    j: usize,
    #[arg(long)]
    targets: TargetList,
    /// Part sizes to scan, `A..B` inclusive.
    #[arg(long)]
    t_range: Span,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormulaFamily {
    C3c3,
    C3c3multi,
    C3c4,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    #[arg(long, value_enum)]
    family: FormulaFamily,
    #[arg(long)]
    j: usize,
    #[arg(long, required_unless_present = "n_list")]
    n: Option<usize>,
    /// Stripe sizes, comma separated (c3c3multi).
    #[arg(long)]
    n_list: Option<NumberList>,
    /// Print the full JSON report instead of the bare value.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Md,
    Json,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: FormulaFamily,
    #[arg(long)]
    j: Span,
    #[arg(long)]
    n: Span,
    /// For c3c3multi: number of equal stripes per cell.
    #[arg(long, default_value_t = 2)]
    stripes: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Md)]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct CrossCheckArgs {
    #[arg(long, value_enum)]
    family: FormulaFamily,
    #[arg(long)]
    j: usize,
    #[arg(long, required_unless_present = "n_list")]
    n: Option<usize>,
    #[arg(long)]
    n_list: Option<NumberList>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct ExportDotArgs {
    file: PathBuf,
    /// Output path; stdout when absent.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

/// One JSON document per invocation. Apart from `elapsed_ms` fields it is
/// a function of the command line.
#[derive(Serialize)]
struct RunReport {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    instance: Option<String>,
    outcome: Value,
    elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<String>,
}

struct Ctx {
    echo: String,
    start: Instant,
    out: Vec<u8>,
}

impl Ctx {
    fn report(
        &mut self,
        instance: Option<String>,
        outcome: Value,
        certificate: Option<&Path>,
    ) -> Result<()> {
        let report = RunReport {
            command: self.echo.clone(),
            instance,
            outcome,
            elapsed_ms: self.start.elapsed().as_millis(),
            certificate: certificate.map(|p| p.display().to_string()),
        };
        serde_json::to_writer_pretty(&mut self.out, &report)?;
        self.out.push(b'\n');
        Ok(())
    }

    fn line(&mut self, text: &str) {
        self.out.extend_from_slice(text.as_bytes());
        self.out.push(b'\n');
    }
}

/// Runs the CLI on `argv` (including the program name), writing to
/// stdout/stderr.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let (code, out, err) = run_captured(argv);
    let _ = std::io::stdout().write_all(&out);
    let _ = std::io::stderr().write_all(err.as_bytes());
    code
}

/// Like [`run`], returning `(exit code, stdout bytes, stderr text)`.
pub fn run_captured<I, S>(argv: I) -> (i32, Vec<u8>, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (EXIT_ERROR, Vec::new(), text)
            } else {
                (EXIT_OK, text.into_bytes(), String::new())
            };
        }
    };
    let mut ctx = Ctx {
        echo: argv.join(" "),
        start: Instant::now(),
        out: Vec::new(),
    };
    let mut err = String::new();
    let code = match dispatch(cli.command, &mut ctx, &mut err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    };
    (code, ctx.out, err)
}

fn dispatch(command: Command, ctx: &mut Ctx, err: &mut String) -> Result<i32> {
    match command {
        Command::Witness(a) => cmd_witness(a, ctx),
        Command::Verify(a) => cmd_verify(a, ctx),
        Command::Arrows(a) => cmd_arrows(a, ctx),
        Command::Falsify(a) => cmd_falsify(a, ctx),
        Command::Compute(a) => cmd_compute(a, ctx),
        Command::Formula(a) => cmd_formula(a, ctx, err),
        Command::Table(a) => cmd_table(a, ctx),
        Command::CrossCheck(a) => cmd_cross_check(a, ctx),
        Command::ExportDot(a) => cmd_export_dot(a, ctx),
    }
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| invalid(format!("--{flag} is required for family {family}")))
}

fn witness_family(a: &WitnessArgs) -> Result<WitnessFamily> {
    let name = a
        .family
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let name = name.as_str();
    Ok(match a.family {
        WitnessKind::C5pair => WitnessFamily::C5Pair {
            parts: need(a.j, "j", name)?,
            t: need(a.t, "t", name)?,
        },
        WitnessKind::T2 => WitnessFamily::T2 {
            parts: need(a.j, "j", name)?,
            t: need(a.t, "t", name)?,
            extra: a.extra.unwrap_or(1),
        },
        WitnessKind::T3 => WitnessFamily::T3 {
            n: need(a.n, "n", name)?,
        },
        WitnessKind::T4 => WitnessFamily::T4 {
            n_list: need(a.n_list.clone(), "n-list", name)?.0,
        },
        WitnessKind::L5 => WitnessFamily::L5 {
            j: need(a.j, "j", name)?,
        },
        WitnessKind::T5t6 => WitnessFamily::T5T6 {
            j: need(a.j, "j", name)?,
            t: need(a.t, "t", name)?,
        },
        WitnessKind::T10 => WitnessFamily::T10 {
            n: need(a.n, "n", name)?,
        },
        WitnessKind::T8 => WitnessFamily::T8 {
            t: need(a.t, "t", name)?,
        },
        WitnessKind::Search => unreachable!("search has no closed-form family"),
    })
}

fn cmd_witness(a: WitnessArgs, ctx: &mut Ctx) -> Result<i32> {
    let (coloring, targets, family_json): (Coloring, Vec<TargetSpec>, Value) = match a.family {
        WitnessKind::Search => {
            let parts = need(a.parts.clone(), "parts", "search")?.0;
            let targets = need(a.targets.clone(), "targets", "search")?.0;
            let host = PartStructure::new(&parts)?;
            match witness_search_fallback(host, targets.clone(), a.budget.budget()?)? {
                FallbackResult::Found(c) => {
                    (c, targets, json!({ "family": "search", "parts": parts }))
                }
                FallbackResult::NotFound { exhaustive } => {
                    let outcome =
                        json!({ "family": "search", "found": false, "exhaustive": exhaustive });
                    ctx.report(Some(instance_label(&parts, &targets)?), outcome, None)?;
                    return Ok(if exhaustive {
                        EXIT_ERROR
                    } else {
                        EXIT_INCONCLUSIVE
                    });
                }
            }
        }
        _ => {
            let family = witness_family(&a)?;
            let coloring = family.build()?;
            let targets = a.targets.clone().map_or_else(|| family.targets(), |t| t.0);
            (coloring, targets, serde_json::to_value(&family)?)
        }
    };
    let report = verify_coloring(&coloring, &targets)?;
    write_mrc(&coloring, &a.output)?;
    let good = report.is_good();
    let outcome = json!({
        "witness": family_json,
        "targets": format_targets(&targets),
        "verification": report,
    });
    let label = format!(
        "{} -> [{}]",
        coloring.host().label(),
        format_targets(&targets)
    );
    ctx.report(Some(label), outcome, Some(&a.output))?;
    Ok(if good { EXIT_OK } else { EXIT_ERROR })
}

fn instance_label(parts: &[usize], targets: &[TargetSpec]) -> Result<String> {
    Ok(format!(
        "{} -> [{}]",
        PartStructure::new(parts)?.label(),
        format_targets(targets)
    ))
}

fn cmd_verify(a: VerifyArgs, ctx: &mut Ctx) -> Result<i32> {
    let coloring = read_mrc(&a.file)?;
    let report = verify_coloring(&coloring, &a.targets.0)?;
    let label = format!(
        "{} -> [{}]",
        coloring.host().label(),
        format_targets(&a.targets.0)
    );
    ctx.report(Some(label), serde_json::to_value(&report)?, None)?;
    Ok(EXIT_OK)
}

fn cmd_arrows(a: ArrowsArgs, ctx: &mut Ctx) -> Result<i32> {
    if a.workers == 0 {
        return Err(invalid("--workers must be at least 1"));
    }
    let inst = ArrowInstance::new(PartStructure::new(&a.parts.0)?, a.targets.0)?;
    let mut outcome = serde_json::Map::new();
    if let Some(seed) = a.seed {
        let sampled = arrows_randomized(&inst, a.presamples, seed);
        let found = sampled.counterexample.clone();
        outcome.insert("presample".into(), serde_json::to_value(&sampled)?);
        if let Some(c) = found {
            outcome.insert("verdict".into(), json!(ArrowVerdict::NotArrows));
            outcome.insert("arrows".into(), json!(false));
            if let Some(path) = &a.certificate {
                write_mrc(&c, path)?;
            }
            ctx.report(
                Some(inst.describe()),
                Value::Object(outcome),
                a.certificate.as_deref(),
            )?;
            return Ok(EXIT_OK);
        }
    }
    let config = SearchConfig {
        budget: a.budget.budget()?,
        symmetry: !a.no_symmetry,
        workers: a.workers,
        deterministic: a.deterministic,
        split_depth: a.split_depth,
        progress: a.progress,
    };
    let result = arrows_exhaustive(&inst, &config);
    let mut written = None;
    if let (Some(path), Some(c)) = (&a.certificate, &result.certificate) {
        write_mrc(c, path)?;
        written = Some(path.as_path());
    }
    if let Value::Object(search) = serde_json::to_value(&result)? {
        outcome.extend(search);
    }
    ctx.report(Some(inst.describe()), Value::Object(outcome), written)?;
    Ok(match result.verdict {
        ArrowVerdict::Inconclusive => EXIT_INCONCLUSIVE,
        _ => EXIT_OK,
    })
}

fn cmd_falsify(a: FalsifyArgs, ctx: &mut Ctx) -> Result<i32> {
    let inst = ArrowInstance::new(PartStructure::new(&a.parts.0)?, a.targets.0)?;
    let result = arrows_randomized(&inst, a.samples, a.seed);
    let mut written = None;
    if let (Some(path), Some(c)) = (&a.certificate, &result.counterexample) {
        write_mrc(c, path)?;
        written = Some(path.as_path());
    }
    ctx.report(
        Some(inst.describe()),
        serde_json::to_value(&result)?,
        written,
    )?;
    Ok(if result.counterexample.is_some() {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    })
}

fn cmd_compute(a: ComputeArgs, ctx: &mut Ctx) -> Result<i32> {
    if a.workers == 0 {
        return Err(invalid("--workers must be at least 1"));
    }
    let config = SearchConfig {
        workers: a.workers,
        deterministic: true,
        ..SearchConfig::with_budget(a.budget.budget()?)
    };
    let result = compute_mrn_search(a.j, &a.targets.0, a.t_range.0, &config)?;
    let label = format!("K_{{{}xt}} -> [{}]", a.j, format_targets(&a.targets.0));
    let code = match result.status {
        MrnStatus::Resolved { .. } | MrnStatus::NoArrowingFound { .. } => EXIT_OK,
        MrnStatus::LowerBoundOnly { .. } => EXIT_INCONCLUSIVE,
    };
    ctx.report(Some(label), serde_json::to_value(&result)?, None)?;
    Ok(code)
}

fn evaluate(
    family: FormulaFamily,
    j: usize,
    n: Option<usize>,
    n_list: Option<&[usize]>,
) -> Result<RamseyValue> {
    let n_or = |flag| n.ok_or_else(|| invalid(format!("--n is required for {flag}")));
    match family {
        FormulaFamily::C3c3 => mrn_formula_c3c3(j, n_or("c3c3")?),
        FormulaFamily::C3c4 => mrn_formula_c3c4(j, n_or("c3c4")?),
        FormulaFamily::C3c3multi => match (n_list, n) {
            (Some(list), _) => mrn_formula_c3c3_multi(list, j),
            (None, Some(n)) => mrn_formula_c3c3_multi(&[n], j),
            (None, None) => Err(invalid("--n-list is required for c3c3multi")),
        },
    }
}

fn cmd_formula(a: FormulaArgs, ctx: &mut Ctx, err: &mut String) -> Result<i32> {
    let value = evaluate(
        a.family,
        a.j,
        a.n,
        a.n_list.as_ref().map(|l| l.0.as_slice()),
    )?;
    if a.json {
        let label = format!("j = {}", a.j);
        ctx.report(Some(label), serde_json::to_value(&value)?, None)?;
    } else {
        ctx.line(&value.value.to_string());
        for c in &value.caveats {
            let _ = writeln!(err, "warning: {}", c.code());
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TableCell {
    j: usize,
    n: usize,
    #[serde(flatten)]
    result: CellResult,
}

#[derive(Serialize)]
#[serde(untagged)]
enum CellResult {
    Value(RamseyValue),
    Unsupported { unsupported: String },
}

fn cmd_table(a: TableArgs, ctx: &mut Ctx) -> Result<i32> {
    if a.stripes == 0 {
        return Err(invalid("--stripes must be at least 1"));
    }
    let mut cells = Vec::new();
    for j in a.j.0.clone() {
        for n in a.n.0.clone() {
            let list = vec![n; a.stripes];
            let result = match evaluate(a.family, j, Some(n), Some(&list)) {
                Ok(v) => CellResult::Value(v),
                Err(Error::Unsupported(msg)) => CellResult::Unsupported { unsupported: msg },
                Err(e) => return Err(e),
            };
            cells.push(TableCell { j, n, result });
        }
    }
    match a.format {
        TableFormat::Json => {
            serde_json::to_writer_pretty(&mut ctx.out, &cells)?;
            ctx.out.push(b'\n');
        }
        TableFormat::Md => {
            let text = markdown_table(&cells, &a.n.0);
            ctx.out.extend_from_slice(text.as_bytes());
        }
    }
    Ok(EXIT_OK)
}

fn markdown_table(cells: &[TableCell], ns: &RangeInclusive<usize>) -> String {
    let width = ns.clone().count();
    let mut s = String::from("| j |");
    for n in ns.clone() {
        let _ = write!(s, " n={n} |");
    }
    s.push_str(" rule |\n|---|");
    s.push_str(&"---|".repeat(width + 1));
    s.push('\n');
    for row in cells.chunks(width) {
        let _ = write!(s, "| {} |", row[0].j);
        let mut rule = "";
        for cell in row {
            match &cell.result {
                CellResult::Value(v) => {
                    rule = v.rule;
                    let flags: Vec<&str> = v.caveats.iter().map(|c| c.code()).collect();
                    if flags.is_empty() {
                        let _ = write!(s, " {} |", v.value);
                    } else {
                        let _ = write!(s, " {} ({}) |", v.value, flags.join(", "));
                    }
                }
                CellResult::Unsupported { .. } => s.push_str(" n/a |"),
            }
        }
        let _ = writeln!(s, " {rule} |");
    }
    s
}

fn cmd_cross_check(a: CrossCheckArgs, ctx: &mut Ctx) -> Result<i32> {
    let n_or = || a.n.ok_or_else(|| invalid("--n is required"));
    let query = match a.family {
        FormulaFamily::C3c3 => Query::C3C3 { j: a.j, n: n_or()? },
        FormulaFamily::C3c4 => Query::C3C4 { j: a.j, n: n_or()? },
        FormulaFamily::C3c3multi => Query::C3C3Multi {
            j: a.j,
            n_list: a
                .n_list
                .clone()
                .map(|l| l.0)
                .or(a.n.map(|n| vec![n]))
                .ok_or_else(|| invalid("--n-list is required"))?,
        },
    };
    let report = cross_check(&query, a.budget.budget()?)?;
    let consistent = report.consistent();
    ctx.report(
        Some(format!("j = {}, [{}]", a.j, report.targets)),
        serde_json::to_value(&report)?,
        None,
    )?;
    Ok(if consistent { EXIT_OK } else { EXIT_ERROR })
}

fn cmd_export_dot(a: ExportDotArgs, ctx: &mut Ctx) -> Result<i32> {
    let dot = to_dot(&read_mrc(&a.file)?);
    match &a.output {
        Some(path) => std::fs::write(path, dot)?,
        None => ctx.out.extend_from_slice(dot.as_bytes()),
    }
    Ok(EXIT_OK)
}
