//! Argument parsing and dispatch for the `qahom` binary, callable in-process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{CommandKind, Options};
use crate::report::Format;

#[derive(Parser)]
#[command(
    name = "qahom",
    version,
    about = "Exact homological algebra over filtered rational vector spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Total-degree cutoff for resolve-koszul (default 6) and crit (default 8).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    degree_bound: Option<u64>,
    /// Weight cutoff for resolve-ce and derived-quotient (default 4).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    weight_bound: Option<u64>,
    /// Word-length cutoff for pbw (default 6).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pbw_bound: Option<u64>,
    /// Seed for the randomized suites of selftest.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced cohomology of a complex.
    Cohomology { input: PathBuf },
    /// Classify a chain map (or a single morphism in degree 0).
    ClassifyMap { input: PathBuf },
    /// Solve a lifting problem in a commuting square.
    CheckLift { input: PathBuf },
    /// Both canonical factorizations of a morphism.
    Factor { input: PathBuf },
    /// Verify the Chevalley-Eilenberg resolution weight by weight.
    ResolveCe { input: PathBuf },
    /// Verify the Koszul resolution, optionally base-changed to a point.
    ResolveKoszul { input: PathBuf },
    /// Compare the associated graded of the enveloping algebra with Sym.
    Pbw { input: PathBuf },
    /// Check the dg-Lie axioms on basis elements.
    LieCheck { input: PathBuf },
    /// Cohomology of the derived quotient of a polynomial algebra.
    DerivedQuotient { input: PathBuf },
    /// Cohomology of the derived critical locus of a polynomial.
    Crit { input: PathBuf },
    /// Run the bundled fixtures and randomized property suites.
    Selftest,
}

/// What one invocation prints and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name). Usage errors
/// exit 2, like malformed input; help and version text exit 0.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Invocation { code, stdout, stderr };
        }
    };
    let opts = Options {
        degree_bound: cli.degree_bound.map(|n| n as usize),
        weight_bound: cli.weight_bound.map(|n| n as usize),
        pbw_bound: cli.pbw_bound.map(|n| n as usize),
        seed: cli.seed,
    };
    let (kind, input) = match cli.command {
        Command::Cohomology { input } => (CommandKind::Cohomology, Some(input)),
        Command::ClassifyMap { input } => (CommandKind::ClassifyMap, Some(input)),
        Command::CheckLift { input } => (CommandKind::CheckLift, Some(input)),
        Command::Factor { input } => (CommandKind::Factor, Some(input)),
        Command::ResolveCe { input } => (CommandKind::ResolveCe, Some(input)),
        Command::ResolveKoszul { input } => (CommandKind::ResolveKoszul, Some(input)),
        Command::Pbw { input } => (CommandKind::Pbw, Some(input)),
        Command::LieCheck { input } => (CommandKind::LieCheck, Some(input)),
        Command::DerivedQuotient { input } => (CommandKind::DerivedQuotient, Some(input)),
        Command::Crit { input } => (CommandKind::Crit, Some(input)),
        Command::Selftest => (CommandKind::Selftest, None),
    };
    let format = match cli.format {
        OutputFormat::Human => Format::Human,
        OutputFormat::Machine => Format::Machine,
    };
    let report = crate::run_path(kind, input.as_deref(), &opts);
    Invocation {
        code: report.exit_code(),
        stdout: report.render(format),
        stderr: String::new(),
    }
}
