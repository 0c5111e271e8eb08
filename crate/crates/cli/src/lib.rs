//! Command-line front end. [`run`] does all the work so it can be driven
//! from tests with in-memory writers.

pub mod expr;
pub mod facts;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use icosa::chartab::IrrepName;
use icosa::icostruct::{irrep_records, trivial_constituent_scan, CenterParam};
use icosa::isobaric::{both_routes, Context};
use icosa::report::Report;
use icosa::siegel::{icosahedral_context, siegel_report, siegel_scan, SiegelReport};
use icosa::verify::verify_all;
use icosa::Table;
use serde::Serialize;
use serde_json::{json, Value};

pub use expr::{parse_rep_expr, RepExpr};
pub use facts::FactsDocument;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{line}:{column}: {message}\n  in `{text}`")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
        text: String,
    },
    #[error("{0}")]
    Semantic(String),
    #[error("facts file: {0}")]
    Facts(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] icosa::Error),
}

#[derive(Parser, Debug)]
#[command(name = "icosa", version, about = "Characters of SL2(F5) and icosahedral symmetric powers")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the character table.
    Chartab,
    /// List the conjugacy classes with representatives.
    Classes,
    /// Run self-checks.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Decompose a representation into irreducibles.
    Decompose {
        #[arg(long)]
        rep: String,
    },
    /// Irreducibles of the central extension with center of order 2m.
    Irreps {
        #[arg(long)]
        m: u32,
    },
    /// Multiplicity of the trivial representation in sym^n(X') for n ≤ max.
    ScanTrivial {
        #[arg(long)]
        max: u32,
    },
    /// Decide cuspidality of π ⊠ π' both by cases and by pole orders.
    Cuspidality {
        #[arg(long)]
        facts: PathBuf,
        #[arg(long)]
        pi: String,
        #[arg(long = "pi-prime")]
        pi_prime: String,
    },
    /// Landau–Siegel zero report for sym^m(π) ⊗ χ.
    Siegel {
        #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
        m: Option<u32>,
        /// Inclusive range `a..b`.
        #[arg(long)]
        scan: Option<String>,
        #[arg(long)]
        facts: Option<PathBuf>,
        #[arg(long, default_value = "pi")]
        pi: String,
        /// Character word, e.g. `chi` or `chi^2·omega_pi`.
        #[arg(long, default_value = "chi")]
        chi: String,
        /// Order of `chi` when no facts file is given.
        #[arg(long)]
        chi_order: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyWhat {
    Table,
    Identities,
    All {
        #[arg(long, default_value_t = 0x1c05a)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_m: u32,
    },
}

/// What a command produced: the JSON document, its text rendering, and
/// whether it counts as a pass.
struct Output {
    command: &'static str,
    inputs: Value,
    results: Value,
    citations: Vec<String>,
    text: String,
    passed: bool,
}

impl Output {
    fn new(command: &'static str, inputs: Value, results: impl Serialize, text: String) -> Result<Self, CliError> {
        Ok(Output {
            command,
            inputs,
            results: serde_json::to_value(results).map_err(|e| CliError::Io(e.to_string()))?,
            citations: Vec::new(),
            text,
            passed: true,
        })
    }

    fn document(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "citations": self.citations,
        })
    }
}

fn chartab(table: &Table) -> Result<Output, CliError> {
    let classes = table.group().classes();
    let header: Vec<String> = classes
        .iter()
        .map(|c| format!("{}/{}", c.size, c.element_order))
        .collect();
    let cells: Vec<(IrrepName, Vec<String>)> = table
        .rows()
        .map(|(n, r)| (n, r.values().iter().map(ToString::to_string).collect()))
        .collect();
    let width = cells
        .iter()
        .flat_map(|(_, v)| v.iter().map(|s| s.chars().count()))
        .chain(header.iter().map(String::len))
        .max()
        .unwrap_or(0)
        + 2;
    let mut text = String::new();
    let line = |label: &str, vals: &[String]| {
        let body: String = vals.iter().map(|v| format!("{v:>width$}")).collect();
        format!("{label:<4}{body}\n")
    };
    text.push_str(&line("", &header));
    let mut rows = Vec::new();
    for (name, vals) in &cells {
        text.push_str(&line(name.as_str(), vals));
        rows.push(json!({ "name": name, "values": vals }));
    }
    text.push_str("(columns: class size / element order)");
    let results = json!({
        "class_sizes": classes.iter().map(|c| c.size).collect::<Vec<_>>(),
        "element_orders": classes.iter().map(|c| c.element_order).collect::<Vec<_>>(),
        "rows": rows,
    });
    Output::new("chartab", json!({}), results, text)
}

fn classes(table: &Table) -> Result<Output, CliError> {
    let classes = table.group().classes();
    let mut text = String::new();
    for c in classes {
        writeln!(
            text,
            "{:>2}  size {:>2}  order {:>2}  representative {}",
            c.index, c.size, c.element_order, c.representative
        )
        .unwrap();
    }
    let results: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "index": c.index,
                "size": c.size,
                "element_order": c.element_order,
                "representative": c.representative.to_string(),
            })
        })
        .collect();
    Output::new("classes", json!({}), results, text.trim_end().to_string())
}

fn report_output(command: &'static str, inputs: Value, report: Report) -> Result<Output, CliError> {
    let text = report.to_string();
    let passed = report.passed();
    let mut out = Output::new(command, inputs, &report, text)?;
    out.passed = passed;
    Ok(out)
}

fn decompose(table: &Table, rep: &str) -> Result<Output, CliError> {
    let e = parse_rep_expr(rep)?;
    let d = table.decompose(&e.eval(table)?)?;
    let parts: Vec<Value> = d
        .iter()
        .map(|(n, m)| json!({ "irrep": n, "multiplicity": m }))
        .collect();
    let results = json!({ "expression": e.to_string(), "dimension": d.dim(), "decomposition": parts });
    Output::new("decompose", json!({ "rep": rep }), results, format!("{e} = {d}"))
}

fn irreps(table: &Table, m: u32) -> Result<Output, CliError> {
    let records = irrep_records(table, CenterParam::new(m)?)?;
    let mut text = String::new();
    for r in &records {
        writeln!(
            text,
            "({}, {:>2})  dim {}{}",
            r.base,
            r.exponent,
            r.dim,
            if r.self_dual { "  self-dual" } else { "" }
        )
        .unwrap();
    }
    let classes: std::collections::BTreeSet<IrrepName> = records.iter().map(|r| r.base).collect();
    write!(text, "{} irreducibles in {} twist classes", records.len(), classes.len()).unwrap();
    Output::new("irreps", json!({ "m": m }), &records, text)
}

fn scan_trivial(table: &Table, max: u32) -> Result<Output, CliError> {
    let scan = trivial_constituent_scan(table, max)?;
    let first = scan.iter().find(|(n, k)| *n > 0 && *k > 0).map(|(n, _)| *n);
    let mut text = String::new();
    for (n, k) in &scan {
        writeln!(text, "{n:>3}  {k}").unwrap();
    }
    match first {
        Some(n) => write!(text, "first nonzero at n = {n}").unwrap(),
        None => write!(text, "no trivial constituent for 1 ≤ n ≤ {max}").unwrap(),
    }
    let rows: Vec<Value> = scan.iter().map(|(n, k)| json!({ "n": n, "multiplicity": k })).collect();
    Output::new(
        "scan-trivial",
        json!({ "max": max }),
        json!({ "scan": rows, "first_nonzero": first }),
        text,
    )
}

fn cuspidality(table: &Table, facts: &PathBuf, pi: &str, pi_prime: &str) -> Result<Output, CliError> {
    let ctx = FactsDocument::load(facts)?.context()?;
    let (by_cases, by_poles) = both_routes(&ctx, table, pi, pi_prime)?;
    let agree = by_cases.verdict == by_poles.verdict;
    let mut text = format!("{pi} ⊠ {pi_prime}: {}", by_cases.verdict);
    for (label, v) in [("case analysis", &by_cases), ("pole orders", &by_poles)] {
        write!(text, "\n  {label}: {}", v.verdict).unwrap();
        for w in &v.witness_conditions {
            write!(text, "\n    because {w}").unwrap();
        }
        for m in &v.missing_facts {
            write!(text, "\n    missing: {m}").unwrap();
        }
    }
    if !agree {
        text.push_str("\n  the two routes disagree");
    }
    let mut out = Output::new(
        "cuspidality",
        json!({ "facts": facts, "pi": pi, "pi_prime": pi_prime }),
        json!({ "verdict": by_cases.verdict.to_string(), "by_cases": by_cases, "by_poles": by_poles, "agree": agree }),
        text,
    )?;
    out.passed = agree;
    Ok(out)
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u32>, CliError> {
    let bad = || CliError::Usage(format!("expected a range `a..b`, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn siegel_text(r: &SiegelReport) -> String {
    let mut text = format!("m = {}: {}  [{}]", r.m, r.verdict, r.target);
    for d in &r.constituents {
        write!(
            text,
            "\n    {} × {} via {} ({:?}): {}",
            d.multiplicity, d.base, d.generator, d.rule, d.outcome
        )
        .unwrap();
    }
    text
}

#[allow(clippy::too_many_arguments)]
fn siegel(
    table: &Table,
    m: Option<u32>,
    scan: Option<&str>,
    facts: Option<&PathBuf>,
    pi: &str,
    chi: &str,
    chi_order: Option<u32>,
) -> Result<Output, CliError> {
    let ctx: Context = match facts {
        Some(path) => FactsDocument::load(path)?.context()?,
        None => icosahedral_context(chi_order)?,
    };
    let chi_sym = facts::parse_char_word(&ctx, chi)?;
    let reports = match (m, scan) {
        (Some(m), _) => vec![siegel_report(&ctx, table, m, pi, &chi_sym)?],
        (None, Some(s)) => siegel_scan(&ctx, table, parse_range(s)?, pi, &chi_sym)?,
        (None, None) => return Err(CliError::Usage("give --m or --scan".into())),
    };
    let mut citations: Vec<String> = Vec::new();
    for r in &reports {
        for c in &r.citations {
            if !citations.contains(c) {
                citations.push(c.clone());
            }
        }
    }
    let mut text: Vec<String> = reports.iter().map(siegel_text).collect();
    if !citations.is_empty() {
        text.push(format!("rules used:\n  {}", citations.join("\n  ")));
    }
    let mut out = Output::new(
        "siegel",
        json!({ "m": m, "scan": scan, "facts": facts, "pi": pi, "chi": chi, "chi_order": chi_order }),
        &reports,
        text.join("\n"),
    )?;
    out.citations = citations;
    Ok(out)
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let table = Table::standard()?;
    match &cli.command {
        Command::Chartab => chartab(&table),
        Command::Classes => classes(&table),
        Command::Verify { what } => match what {
            VerifyWhat::Table => report_output("verify table", json!({}), table.verify_table()),
            VerifyWhat::Identities => report_output("verify identities", json!({}), table.verify_identities()),
            VerifyWhat::All { seed, max_m } => report_output(
                "verify all",
                json!({ "seed": seed, "max_m": max_m }),
                verify_all(*seed, *max_m)?,
            ),
        },
        Command::Decompose { rep } => decompose(&table, rep),
        Command::Irreps { m } => irreps(&table, *m),
        Command::ScanTrivial { max } => scan_trivial(&table, *max),
        Command::Cuspidality { facts, pi, pi_prime } => cuspidality(&table, facts, pi, pi_prime),
        Command::Siegel {
            m,
            scan,
            facts,
            pi,
            chi,
            chi_order,
        } => siegel(&table, *m, scan.as_deref(), facts.as_ref(), pi, chi, *chi_order),
    }
}

/// Runs the command line `args` (including the program name). Returns the
/// exit code: 0 on success, 1 when a verification fails, 2 on usage or
/// parse errors.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let written = if cli.json {
                serde_json::to_string_pretty(&o.document())
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}"))
            } else {
                writeln!(out, "{}", o.text)
            };
            if written.is_err() {
                return 2;
            }
            if o.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if cli.json {
                let doc = json!({ "error": e.to_string() });
                let _ = writeln!(err, "{doc}");
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            2
        }
    }
}
