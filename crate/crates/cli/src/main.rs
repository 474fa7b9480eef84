use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use drinfeld_cli::bench::{parse_grid, BenchConfig};
use drinfeld_cli::commands::{
    cmd_bench, cmd_charpoly, cmd_random, cmd_verify, CharpolyArgs, EndoChoice, Format, Outcome, RandomArgs,
    VerifyArgs,
};
use drinfeld_core::Algorithm;

#[derive(Parser)]
#[command(name = "drinfeld", version, about = "Characteristic polynomials of Drinfeld module endomorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute CharPoly(u) for an endomorphism u.
    Charpoly {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = AlgArg::Auto)]
        algorithm: AlgArg,
        /// Truncation order; defaults to the smallest valid one.
        #[arg(long)]
        k: Option<usize>,
        /// Also check the annihilation identity and, when small enough, the linear system.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Cross-check all methods, or check a claimed polynomial.
    Verify {
        #[command(flatten)]
        target: Target,
        /// JSON output of `charpoly --format json` to check.
        #[arg(long)]
        claimed: Option<PathBuf>,
    },
    /// Emit a reproducible random instance.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Degree of the characteristic 𝔭 (must divide n); defaults to n.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the Frobenius characteristic polynomial on an (n, r) grid; CSV on stdout.
    Bench {
        /// `N1,N2,...:R1,R2,...`
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Degree of 𝔭; defaults to n.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = AlgArg::Bsgs)]
        algorithm: AlgArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
    },
}

#[derive(Args)]
struct Target {
    /// Instance file (JSON).
    #[arg(long)]
    module: PathBuf,
    /// `"frobenius"`, an inline τ-coefficient list, or a file holding either.
    #[arg(long, conflicts_with = "frobenius")]
    endo: Option<String>,
    /// Use τ^n.
    #[arg(long)]
    frobenius: bool,
}

impl Target {
    fn choice(&self) -> EndoChoice {
        match (&self.endo, self.frobenius) {
            (Some(e), _) => EndoChoice::Given(e.clone()),
            (None, true) => EndoChoice::Frobenius,
            (None, false) => EndoChoice::FromInstance,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgArg {
    Auto,
    Recurrence,
    Euclidean,
    Bsgs,
}

impl From<AlgArg> for Algorithm {
    fn from(a: AlgArg) -> Self {
        match a {
            AlgArg::Auto => Algorithm::Auto,
            AlgArg::Recurrence => Algorithm::Recurrence,
            AlgArg::Euclidean => Algorithm::Euclidean,
            AlgArg::Bsgs => Algorithm::Bsgs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Charpoly {
            target,
            algorithm,
            k,
            verify,
            format,
        } => cmd_charpoly(&CharpolyArgs {
            endo: target.choice(),
            module: target.module,
            algorithm: algorithm.into(),
            k,
            verify,
            format: match format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            },
        }),
        Command::Verify { target, claimed } => cmd_verify(&VerifyArgs {
            endo: target.choice(),
            module: target.module,
            claimed,
        }),
        Command::Random { seed, q, n, r, m, out } => cmd_random(&RandomArgs { seed, q, n, r, m, out }),
        Command::Bench {
            grid,
            q,
            m,
            algorithm,
            seed,
            repeats,
        } => {
            let (ns, rs) = parse_grid(&grid).map_err(anyhow::Error::msg)?;
            cmd_bench(&BenchConfig {
                ns,
                rs,
                q,
                m,
                algorithm: algorithm.into(),
                seed,
                repeats,
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification failed");
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
