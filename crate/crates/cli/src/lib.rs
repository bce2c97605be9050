//! The `knotrep` command line: argument parsing, dispatch and exit codes.
//!
//! [`run`] takes the argument list and two sinks, which keeps the whole tool
//! testable in-process; the binary only wires it to stdout and stderr.

mod render;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use knotrep::tanglecalc::MAX_INPUT_MAGNITUDE;
use knotrep::{
    enumerate_solutions, parse_expr, pretzel_diagram, representativity_bounds, scan_assignments,
    Error, ErrorClass, PretzelTriple, TangleExpr,
};
use rayon::prelude::*;

pub use render::RangeEntry;

/// Largest `--max` accepted by `lemma`.
pub const MAX_LEMMA_BOUND: u64 = 1_000_000;
/// Most integers a `--range A:B` may span.
pub const MAX_RANGE_WIDTH: i64 = 201;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "knotrep",
    version,
    about = "Representativity bounds for pretzel, Montesinos and algebraic knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report representativity bounds for a knot expression.
    Classify {
        /// Knot expression, e.g. `P(-2,3,5)` or `C((1/3+1/5)+(1/2+1/7))`.
        #[arg(
            allow_hyphen_values = true,
            required_unless_present = "range",
            conflicts_with = "range"
        )]
        expr: Option<String>,
        /// Classify every knot P(p,q,r) with p <= q <= r in [A,B].
        #[arg(long, value_name = "A:B", value_parser = parse_range)]
        range: Option<(i64, i64)>,
        #[arg(long)]
        json: bool,
    },
    /// List the eight tangle-type assignments for a pretzel knot.
    Surfaces {
        /// Pretzel knot `P(p,q,r)`.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Enumerate solutions of -1/a + 1/b + 1/c = 0 with c <= N.
    Lemma {
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(..=MAX_LEMMA_BOUND))]
        max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print the PD code and component count of a pretzel diagram.
    Trace {
        /// Pretzel link `P(p,q,r)`.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Parse an expression and print its canonical form.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcommandKind {
    Classify,
    Surfaces,
    Lemma,
    Trace,
    Parse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// A fully parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub subcommand: SubcommandKind,
    pub input: Option<String>,
    pub format: Format,
    pub max: Option<u64>,
    pub range: Option<(i64, i64)>,
}

impl CliConfig {
    pub fn parse_from<I, T>(args: I) -> Result<CliConfig, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        Cli::try_parse_from(args).map(CliConfig::from)
    }
}

fn format(json: bool, csv: bool) -> Format {
    match (json, csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    }
}

impl From<Cli> for CliConfig {
    fn from(cli: Cli) -> Self {
        let base = |subcommand, input, format| CliConfig {
            subcommand,
            input,
            format,
            max: None,
            range: None,
        };
        match cli.command {
            Command::Classify { expr, range, json } => CliConfig {
                range,
                ..base(SubcommandKind::Classify, expr, format(json, false))
            },
            Command::Surfaces { expr, json, csv } => {
                base(SubcommandKind::Surfaces, Some(expr), format(json, csv))
            }
            Command::Lemma { max, json } => CliConfig {
                max: Some(max),
                ..base(SubcommandKind::Lemma, None, format(json, false))
            },
            Command::Trace { expr, json } => {
                base(SubcommandKind::Trace, Some(expr), format(json, false))
            }
            Command::Parse { expr, json } => {
                base(SubcommandKind::Parse, Some(expr), format(json, false))
            }
        }
    }
}

fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got `{text}`"))?;
    let bound = |s: &str| -> Result<i64, String> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| format!("`{s}` is not an integer"))?;
        if v.abs() > MAX_INPUT_MAGNITUDE {
            return Err(format!("{v} exceeds the input bound {MAX_INPUT_MAGNITUDE}"));
        }
        Ok(v)
    };
    let (a, b) = (bound(a)?, bound(b)?);
    if a > b {
        return Err(format!("empty range {a}:{b}"));
    }
    if b - a + 1 > MAX_RANGE_WIDTH {
        return Err(format!(
            "range {a}:{b} spans {} integers; at most {MAX_RANGE_WIDTH} are allowed",
            b - a + 1
        ));
    }
    Ok((a, b))
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) => match e.class() {
                ErrorClass::Usage => EXIT_USAGE,
                ErrorClass::Domain => EXIT_DOMAIN,
                ErrorClass::Internal => EXIT_INTERNAL,
            },
            Failure::Io(_) => EXIT_DOMAIN,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "writing output: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::parse_from(args) {
        Ok(config) => config,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out
                        .write_all(rendered.as_bytes())
                        .and_then(|()| out.flush());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&config, out).and_then(|()| out.flush().map_err(Failure::Io)) {
        Ok(()) => EXIT_OK,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            failure.exit_code()
        }
    }
}

fn input(config: &CliConfig) -> &str {
    config.input.as_deref().unwrap_or_default()
}

/// Reads `P(p,q,r)`, optionally wrapped in `C(...)`.
fn pretzel_arg(text: &str) -> Result<PretzelTriple, Error> {
    match parse_expr(text)? {
        TangleExpr::Pretzel(t) => Ok(t),
        TangleExpr::Closure(inner) => match *inner {
            TangleExpr::Pretzel(t) => Ok(t),
            other => Err(Error::Unsupported(format!(
                "expected a pretzel knot P(p,q,r), got C({other})"
            ))),
        },
        other => Err(Error::Unsupported(format!(
            "expected a pretzel knot P(p,q,r), got {other}"
        ))),
    }
}

fn execute(config: &CliConfig, out: &mut dyn Write) -> Result<(), Failure> {
    match config.subcommand {
        SubcommandKind::Classify => match config.range {
            Some((a, b)) => {
                let entries = classify_range(a, b)?;
                match config.format {
                    Format::Json => render::json(&entries, out)?,
                    _ => render::range_text(&entries, out)?,
                }
            }
            None => {
                let report = representativity_bounds(&parse_expr(input(config))?)?;
                match config.format {
                    Format::Json => render::json(&report, out)?,
                    _ => render::report_text(&report, out)?,
                }
            }
        },
        SubcommandKind::Surfaces => {
            let scan = scan_assignments(pretzel_arg(input(config))?)?;
            match config.format {
                Format::Json => render::json(&scan, out)?,
                Format::Csv => render::surfaces_csv(&scan.rows, out)?,
                Format::Text => render::surfaces_text(&scan, out)?,
            }
        }
        SubcommandKind::Lemma => {
            let solutions = enumerate_solutions(config.max.unwrap_or_default())?;
            match config.format {
                Format::Json => render::json(&solutions, out)?,
                _ => render::lemma_text(&solutions, out)?,
            }
        }
        SubcommandKind::Trace => {
            let t = pretzel_arg(input(config))?;
            if t.has_zero() {
                return Err(Error::DegenerateTangle(format!(
                    "{t} has a twist region with no crossings"
                ))
                .into());
            }
            let pd = pretzel_diagram(&t.to_array())?;
            let components = knotrep::component_count(&pd)?;
            match config.format {
                Format::Json => render::json(&render::Trace::new(t, &pd, components), out)?,
                _ => render::trace_text(t, &pd, components, out)?,
            }
        }
        SubcommandKind::Parse => {
            let expr = parse_expr(input(config))?;
            match config.format {
                Format::Json => render::json(&expr, out)?,
                _ => writeln!(out, "{expr}")?,
            }
        }
    }
    Ok(())
}

/// Reports for every knot `P(p,q,r)` with `a <= p <= q <= r <= b`, in
/// lexicographic order of the triple.
pub fn classify_range(a: i64, b: i64) -> Result<Vec<RangeEntry>, Error> {
    let mut triples = Vec::new();
    for p in a..=b {
        for q in p..=b {
            for r in q..=b {
                triples.push(PretzelTriple::new(p, q, r));
            }
        }
    }
    let results: Vec<Result<Option<RangeEntry>, Error>> = triples
        .into_par_iter()
        .map(|t| match representativity_bounds(&TangleExpr::Pretzel(t)) {
            Ok(report) => Ok(Some(RangeEntry::from(&report))),
            Err(Error::NotAKnot { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect();
    results.into_iter().filter_map(Result::transpose).collect()
}
