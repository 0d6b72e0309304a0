use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfgk::ncpoly::DEFAULT_STEP_BUDGET;
use hopfgk_cli::{CliError, Invocation, Outcome};

#[derive(Parser)]
#[command(
    name = "hopfgk",
    version,
    about = "Exact computations with pointed Hopf algebras of GK-dimension two"
)]
struct Cli {
    /// Bound on rewriting and search steps.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining conditions of a parameter file.
    Validate { file: PathBuf },
    /// Normal form of an expression.
    Nf { file: PathBuf, expr: String },
    /// Resolve every ambiguity of the rewriting system.
    PbwCheck {
        file: PathBuf,
        /// Replace the y1*x coefficient q1 by q1^2.
        #[arg(long)]
        corrupt: bool,
    },
    /// Verify the Hopf axioms on all normal monomials up to a degree cap.
    HopfCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        cap: u32,
        /// Range of x-exponents; defaults to twice the cap.
        #[arg(long, allow_negative_numbers = true)]
        window: Option<i64>,
        /// Bound the plain y-degree instead of the weighted degree.
        #[arg(long)]
        total_degree: bool,
    },
    /// Skew primitives of weight x^g.
    Primitives {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        weight: i64,
        #[arg(long, default_value_t = 6)]
        cap: u32,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Dimension of Ext^1(k, k).
    Ext1 { file: PathBuf },
    /// Domain, Ext, global dimension, invariants and B-form.
    Classify { file: PathBuf },
    /// Isomorphism test between two K/B domains.
    Iso { a: PathBuf, b: PathBuf },
    /// Case verdicts for rank-two diagonal data.
    Nichols { batch: PathBuf },
    /// Seeded zero-divisor search.
    Zerodiv {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        cap: u32,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let budget = cli.budget;
    match cli.command {
        Command::Validate { file } => {
            let mut inv = Invocation::new("validate");
            let text = inv.read(&file)?;
            hopfgk_cli::validate(inv, &text)
        }
        Command::Nf { file, expr } => {
            let mut inv = Invocation::new("nf");
            let text = inv.read(&file)?;
            inv.arg(&expr);
            hopfgk_cli::normal_form(inv, &text, &expr, budget)
        }
        Command::PbwCheck { file, corrupt } => {
            let mut inv = Invocation::new("pbw-check");
            let text = inv.read(&file)?;
            inv.arg(&corrupt.to_string());
            hopfgk_cli::pbw_check(inv, &text, corrupt, budget)
        }
        Command::HopfCheck {
            file,
            cap,
            window,
            total_degree,
        } => {
            let mut inv = Invocation::new("hopf-check");
            let text = inv.read(&file)?;
            inv.arg(&format!("{cap} {window:?} {total_degree}"));
            hopfgk_cli::hopf_check(inv, &text, cap, window, total_degree, budget)
        }
        Command::Primitives {
            file,
            weight,
            cap,
            window,
        } => {
            let mut inv = Invocation::new("primitives");
            let text = inv.read(&file)?;
            inv.arg(&format!("{weight} {cap} {window:?}"));
            hopfgk_cli::primitives(inv, &text, weight, cap, window, budget)
        }
        Command::Ext1 { file } => {
            let mut inv = Invocation::new("ext1");
            let text = inv.read(&file)?;
            hopfgk_cli::ext1(inv, &text)
        }
        Command::Classify { file } => {
            let mut inv = Invocation::new("classify");
            let text = inv.read(&file)?;
            hopfgk_cli::classify_cmd(inv, &text)
        }
        Command::Iso { a, b } => {
            let mut inv = Invocation::new("iso");
            let ta = inv.read(&a)?;
            let tb = inv.read(&b)?;
            hopfgk_cli::iso(inv, &ta, &tb)
        }
        Command::Nichols { batch } => {
            let mut inv = Invocation::new("nichols");
            let text = inv.read(&batch)?;
            hopfgk_cli::nichols(inv, &text)
        }
        Command::Zerodiv { file, cap } => {
            let mut inv = Invocation::new("zerodiv");
            let text = inv.read(&file)?;
            inv.arg(&cap.to_string());
            hopfgk_cli::zerodiv(inv, &text, cap, budget)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.render());
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
