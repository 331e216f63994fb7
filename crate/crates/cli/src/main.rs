//! Command-line front end for the `qcanon` library.

mod commands;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcanon::tableaux::LinearExtension;

/// Exact computations with standard monomials, dual standard monomial bases
/// and canonical bases of U_q^-(sl_n).
///
/// Input grammar: a weight mu is comma-separated coefficients of the simple
/// roots (`2,1` is 2 alpha_1 + alpha_2); a shape is comma-separated
/// multiplicities m_1,...,m_{n-1} of the fundamental weights, optionally in
/// parentheses; a tableau is a JSON list of columns, leftmost first
/// (`[[1,3],[2]]` is not valid as heights must weakly increase: `[[2],[1,3]]`);
/// a standard monomial is a JSON list of levels, each listed from the
/// diagonal down (`[[1],[1,0]]` is F_1 F_2).
///
/// Exit status: 0 when every check passes, 1 for usage or input errors,
/// 2 when a verification check fails.
#[derive(Debug, Parser)]
#[command(name = "qcanon", version)]
pub struct Cli {
    /// Rank n of sl_n.
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Stop a sweep at the first failing suite.
    #[arg(long, global = true)]
    pub fail_fast: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Lex,
    Colex,
}

impl From<Order> for LinearExtension {
    fn from(o: Order) -> Self {
        match o {
            Order::Lex => LinearExtension::Lex,
            Order::Colex => LinearExtension::Colex,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand F(sigma) v_lambda or F~(sigma) v_lambda in tableau vectors.
    Expand(ExpandArgs),
    /// Emit one matrix of a weight space with its verification report.
    Basis(BasisArgs),
    /// Run the verification suites within the given bounds.
    Verify(VerifyArgs),
    /// Emit the closed-form sl_3 matrices for the family (k-s, b, s).
    Sl3Table(Sl3Args),
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// A standard tableau.
    #[arg(long, conflicts_with = "monomial", required_unless_present = "monomial")]
    pub tableau: Option<String>,
    /// A standard monomial.
    #[arg(long)]
    pub monomial: Option<String>,
    /// Shape of the module (default: the shape of the tableau).
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = FlavorArg::Divided)]
    pub flavor: FlavorArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Divided,
    Kashiwara,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Expansions of F(sigma) v_lambda in all tableau vectors.
    Smt,
    /// Expansions of F~(sigma) v_lambda in all tableau vectors.
    Kashiwara,
    /// Coordinates of the dual basis in the monomial basis.
    DualSmt,
    /// Coordinates of F~(sigma) in the monomial basis.
    Bprime,
    /// Coordinates of the canonical basis in the monomial basis.
    Canonical,
    /// Coordinates of the canonical basis in the dual basis.
    Theorem52,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    /// The weight, as coefficients of the simple roots.
    #[arg(long)]
    pub mu: String,
    #[arg(long, value_enum)]
    pub which: Which,
    /// Shape realizing the weight space (default: the smallest sufficient one).
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = Order::Lex)]
    pub order: Order,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest height |mu| of the weight spaces swept.
    #[arg(long)]
    pub max_mu: Option<usize>,
    /// Largest number of boxes of the shapes swept.
    #[arg(long)]
    pub max_boxes: Option<usize>,
    /// Largest number of columns for the operator checks.
    #[arg(long)]
    pub max_cols: Option<usize>,
    /// Also compare the sl_3 closed forms with the general pipeline.
    #[arg(long)]
    pub sl3: bool,
    /// Bound on b and k for the sl_3 comparison.
    #[arg(long, default_value_t = 4)]
    pub max_bk: u32,
}

#[derive(Debug, Args)]
pub struct Sl3Args {
    #[arg(long)]
    pub b: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Sl3Which::A)]
    pub which: Sl3Which,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sl3Which {
    A,
    AInverse,
}

/// What a command produced: text to emit and whether its checks passed.
pub struct Output {
    pub text: String,
    pub passed: bool,
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match &cli.command {
        Command::Expand(a) => commands::expand(&cli, a),
        Command::Basis(a) => commands::basis(&cli, a),
        Command::Verify(a) => verify::run(&cli, a),
        Command::Sl3Table(a) => commands::sl3_table(&cli, a),
    };
    match result {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(qcanon::Error::TheoremViolation { check, witness }) => {
            eprintln!("verification failed in {check}: {witness}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
