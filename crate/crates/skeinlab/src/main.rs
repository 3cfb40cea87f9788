use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skeinlab::parallel::ParallelMemo;
use skeinlab::pd::{parse_pd, write_pd};
use skeinlab::poly_io::poly_to_json;
use skeinlab::report_json::report_to_json;
use skeinlab::spec::{apply_double, parse_spec};
use skeinlab::tree_io::{ledger_to_json, tree_to_dot, tree_to_json, TreeJson};
use skeinlab::verify::{failures, format_table, run_suite, SuiteOptions};
use skeinlab::{CliError, ParseError};
use skeinlab_core::bounds::{ledger_check, ledger_transcript, ledger_tree, propagate, LedgerError, LedgerVariant};
use skeinlab_core::constructors::{Clasp, DoubleOptions};
use skeinlab_core::homfly::{SequentialMemo, DEFAULT_BUDGET};
use skeinlab_core::report::invariant_report_in;
use skeinlab_core::Diagram;

#[derive(Parser)]
#[command(name = "skeinlab", version, about = "Build link diagrams and compute HOMFLY polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the PD text of a spec string such as `pretzel:3,1,1`.
    Build { spec: String },
    /// Compute the invariant report of a diagram.
    Invariant {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        engine: EngineArgs,
        /// Print only the polynomial, in this format.
        #[arg(long, value_enum)]
        emit_poly: Option<PolyFormat>,
    },
    /// Double a knot diagram and print its PD text (or its report with --report).
    Double {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Signed number of full twists.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i32,
        /// Clasp handedness for Whitehead doubles.
        #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_clasp)]
        clasp: Clasp,
        /// Put the twists inside the square of a doubled crossing.
        #[arg(long)]
        hidden_twists: bool,
        /// Arc whose parallel pair carries the twists and clasp.
        #[arg(long)]
        site: Option<u32>,
        /// Print the invariant report instead of the PD text.
        #[arg(long)]
        report: bool,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Include the large examples, with a larger budget.
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Propagate degree bounds through the ledger tree or a tree file.
    Ledger {
        /// Crossing number of the knot.
        #[arg(long, required_unless_present = "tree")]
        c: Option<i64>,
        /// Read a skein tree from a JSON file instead.
        #[arg(long, conflicts_with_all = ["c", "degraded", "split_unknot"])]
        tree: Option<PathBuf>,
        #[arg(long, conflicts_with = "split_unknot")]
        degraded: bool,
        #[arg(long)]
        split_unknot: bool,
        #[arg(long, conflicts_with = "emit_dot")]
        json: bool,
        #[arg(long)]
        emit_dot: bool,
        /// Print the tree itself as JSON.
        #[arg(long, conflicts_with_all = ["json", "emit_dot"])]
        emit_tree: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Spec string, e.g. `torus2:3`.
    #[arg(long)]
    spec: Option<String>,
    /// PD text file.
    #[arg(long)]
    pd: Option<PathBuf>,
    /// Read PD text from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Args)]
struct EngineArgs {
    /// Skein node budget; defaults to $KNOT_BUDGET or the built-in default.
    #[arg(long)]
    budget: Option<u64>,
    /// Evaluate skein branches on all cores.
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Flat,
    Wh,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
}

fn parse_clasp(s: &str) -> Result<Clasp, String> {
    match s {
        "+" | "pos" => Ok(Clasp::Positive),
        "-" | "neg" => Ok(Clasp::Negative),
        _ => Err(format!("clasp must be + or -, found {s:?}")),
    }
}

fn budget(explicit: Option<u64>) -> Result<u64, CliError> {
    if let Some(b) = explicit {
        return Ok(b);
    }
    match std::env::var("KNOT_BUDGET") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("KNOT_BUDGET must be a node count, found {s:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// A parse error annotated with where the text came from.
fn located(origin: &str, e: ParseError) -> CliError {
    CliError::Parse(ParseError::new(e.line, e.col, format!("{origin}: {}", e.message)))
}

fn load(src: &Source) -> Result<Diagram, CliError> {
    if let Some(s) = &src.spec {
        return parse_spec(s).map_err(|e| located("spec", e));
    }
    let (origin, text) = match &src.pd {
        Some(path) => (path.display().to_string(), std::fs::read_to_string(path)?),
        None => {
            let mut t = String::new();
            std::io::stdin().read_to_string(&mut t)?;
            ("stdin".to_string(), t)
        }
    };
    parse_pd(&text).map_err(|e| located(&origin, e))
}

fn report(d: &Diagram, engine: &EngineArgs) -> Result<skeinlab_core::report::InvariantReport, CliError> {
    let b = budget(engine.budget)?;
    let r = if engine.parallel {
        invariant_report_in(d, &ParallelMemo::default(), b)?
    } else {
        invariant_report_in(d, &SequentialMemo::new(), b)?
    };
    Ok(r)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Build { spec } => {
            let d = parse_spec(&spec).map_err(|e| located("spec", e))?;
            write!(out, "{}", write_pd(&d))?;
        }
        Command::Invariant { source, engine, emit_poly } => {
            let r = report(&load(&source)?, &engine)?;
            match emit_poly {
                None => writeln!(out, "{}", report_to_json(&r))?,
                Some(PolyFormat::Text) => writeln!(out, "{}", r.homfly)?,
                Some(PolyFormat::Json) => writeln!(out, "{}", poly_to_json(&r.homfly))?,
            }
        }
        Command::Double { source, kind, n, clasp, hidden_twists, site, report: want_report, engine } => {
            let d = load(&source)?;
            let opts = DoubleOptions { full_twists: n, clasp: (kind == Kind::Wh).then_some(clasp), hidden_twists, site };
            let dd = apply_double(&d, &opts)?;
            if want_report {
                writeln!(out, "{}", report_to_json(&report(&dd, &engine)?))?;
            } else {
                write!(out, "{}", write_pd(&dd))?;
            }
        }
        Command::Verify { suite: Suite::Paper, extended, budget: b } => {
            let checks = run_suite(&SuiteOptions { budget: budget(b)?, extended });
            write!(out, "{}", format_table(&checks))?;
            let failed = failures(&checks);
            if failed > 0 {
                return Err(CliError::Verification(failed));
            }
        }
        Command::Ledger { c, tree, degraded, split_unknot, json, emit_dot, emit_tree } => {
            if let Some(path) = tree {
                let text = std::fs::read_to_string(&path)?;
                let tj: TreeJson = serde_json::from_str(&text).map_err(|e| {
                    located(&path.display().to_string(), ParseError::new(e.line(), e.column(), e.to_string()))
                })?;
                let t = tj.to_tree().map_err(|m| located(&path.display().to_string(), ParseError::new(1, 1, m)))?;
                let bounds = propagate(&t)?;
                if emit_dot {
                    write!(out, "{}", tree_to_dot(&t, &bounds))?;
                } else if json {
                    let m: std::collections::BTreeMap<_, skeinlab::tree_io::BoundJson> =
                        bounds.iter().map(|(k, &b)| (k.clone(), b.into())).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&m)?)?;
                } else if emit_tree {
                    writeln!(out, "{}", tree_to_json(&t))?;
                } else {
                    for n in &t.nodes {
                        writeln!(out, "{n:<8} {}", bounds[n])?;
                    }
                }
                return Ok(());
            }
            let c = c.expect("clap requires --c without --tree");
            let variant = match (degraded, split_unknot) {
                (true, _) => LedgerVariant::Degraded,
                (_, true) => LedgerVariant::SplitUnknot,
                _ => LedgerVariant::Standard,
            };
            let name = match variant {
                LedgerVariant::Standard => "standard",
                LedgerVariant::Degraded => "degraded",
                LedgerVariant::SplitUnknot => "split-unknot",
            };
            let t = ledger_tree(c, variant);
            if emit_tree {
                writeln!(out, "{}", tree_to_json(&t))?;
                return Ok(());
            }
            if emit_dot {
                let bounds = propagate(&t)?;
                write!(out, "{}", tree_to_dot(&t, &bounds))?;
            }
            let (lines, mismatch) = match variant {
                LedgerVariant::Standard => match ledger_check(c) {
                    Ok(l) => (l, None),
                    Err(LedgerError::Mismatch(d)) => (ledger_transcript(c, variant)?, Some(d)),
                    Err(e) => return Err(e.into()),
                },
                _ => (ledger_transcript(c, variant)?, None),
            };
            if json {
                writeln!(out, "{}", ledger_to_json(c, name, &lines))?;
            } else if !emit_dot {
                for l in &lines {
                    writeln!(out, "{:<5} {}", l.node, l.bound)?;
                }
            }
            if let Some(d) = mismatch {
                return Err(LedgerError::Mismatch(d).into());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("skeinlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
