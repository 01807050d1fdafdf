//! The `vrhom` command line: argument parsing, dispatch and exit codes.
//!
//! Exit status 0 means success, 1 a failed verification (the result
//! document still goes to standard output), 2 bad input.

mod commands;
mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vrhom::field::Coefficients;
use vrhom::io::ResultDocument;
use vrhom::relations::ScaleMode;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "vrhom", version, about = "Vietoris-Rips homology of finite semi-uniform spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology of a space at one scale.
    Homology(HomologyArgs),
    /// Clique-complex homology of a graph, as the limit over the base {E ∪ Δ}.
    Graph(GraphArgs),
    /// Homology of the Vietoris or interior-inclusion relation of a cover.
    Closure(ClosureArgs),
    /// Betti numbers over a range of scales, as TSV.
    Sweep(SweepArgs),
    /// Run axiom checks on built-in and random instances.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// CSV distance matrix.
    #[arg(long, conflicts_with = "space", required_unless_present = "space")]
    dist: Option<PathBuf>,
    /// Space document (format from --format or the file extension).
    #[arg(long)]
    space: Option<PathBuf>,
    /// csv-dist, edge-list or json.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct Algebra {
    /// z, q or zp:P.
    #[arg(long = "coeff", default_value = "z", value_parser = parse_coefficients)]
    coeffs: Coefficients,
    /// Complexes are enumerated to this dimension; groups below it are reported.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=8))]
    max_dim: u32,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Mode {
    Closed,
    Strict,
}

impl From<Mode> for ScaleMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Closed => ScaleMode::Closed,
            Mode::Strict => ScaleMode::Strict,
        }
    }
}

#[derive(Args, Debug)]
struct HomologyArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    algebra: Algebra,
    /// Scale q; required for distance matrices.
    #[arg(long)]
    scale: Option<f64>,
    #[arg(long, value_enum, default_value_t = Mode::Closed)]
    mode: Mode,
    /// Comma-separated labels of a subspace A, for relative homology.
    #[arg(long)]
    subset: Option<String>,
    /// Reduced homology (absolute only).
    #[arg(long)]
    reduced: bool,
    /// Include cycle representatives.
    #[arg(long)]
    generators: bool,
    /// Also report cohomology (field coefficients).
    #[arg(long)]
    cohomology: bool,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Edge list, or a JSON graph document.
    #[arg(long)]
    edges: PathBuf,
    #[arg(long)]
    format: Option<String>,
    #[command(flatten)]
    algebra: Algebra,
    #[arg(long)]
    generators: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CoverRelation {
    Vietoris,
    Ii,
}

#[derive(Args, Debug)]
struct ClosureArgs {
    /// JSON closure document with at least one cover.
    #[arg(long)]
    space: PathBuf,
    /// Which cover of the document to use.
    #[arg(long, default_value_t = 0)]
    cover: usize,
    #[arg(long, value_enum, default_value_t = CoverRelation::Vietoris)]
    relation: CoverRelation,
    #[command(flatten)]
    algebra: Algebra,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    algebra: Algebra,
    /// LO:HI:STEP in plain decimals.
    #[arg(long)]
    scales: String,
    #[arg(long, value_enum, default_value_t = Mode::Closed)]
    mode: Mode,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Dimension,
    Excision,
    Homotopy,
    Dowker,
    Interval,
    Functoriality,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Seed for the random instances.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random instances per randomized suite.
    #[arg(long, default_value_t = 50)]
    trials: usize,
}

fn parse_coefficients(s: &str) -> Result<Coefficients, String> {
    s.parse().map_err(|e: vrhom::Error| e.to_string())
}

/// How a command ended.
pub(crate) enum Outcome {
    /// Write to standard output; exit 0.
    Done(String),
    /// Write to standard output; exit 1.
    Failed(String),
}

/// A message for standard error; exit 2.
#[derive(Debug)]
pub(crate) struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        Self(e.to_string())
    }
}

pub(crate) fn document_outcome(doc: &ResultDocument) -> Outcome {
    if doc.verdicts.iter().all(|v| v.pass) {
        Outcome::Done(doc.to_json())
    } else {
        Outcome::Failed(doc.to_json())
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Homology(a) => commands::homology_cmd(a),
        Command::Graph(a) => commands::graph(a),
        Command::Closure(a) => commands::closure(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Verify(a) => suites::verify(a),
    };
    match result {
        Ok(Outcome::Done(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Outcome::Failed(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            let _ = writeln!(stderr, "vrhom: verification failed");
            EXIT_FAILED
        }
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "vrhom: {msg}");
            EXIT_INPUT
        }
    }
}
