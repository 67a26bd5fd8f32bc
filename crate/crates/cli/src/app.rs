use clap::{Parser, Subcommand};

use crate::commands::{self, MethodArg, Output};
use crate::error::CliError;
use crate::render::{OutputFormat, DEFAULT_MAX_DEGREE};

/// Binary cyclotomic polynomials and the factorization of X^ab - 1.
#[derive(Debug, Parser)]
#[command(name = "phipq", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print Φ_pq for two distinct primes.
    Phi {
        p: u64,
        q: u64,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Largest degree printed in dense or json form.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u64,
    },
    /// Print the four factors of X^ab - 1 for coprime a, b.
    Factor {
        a: u64,
        b: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u64,
    },
    /// Print the inverse parameters lambda, mu, r, s.
    Params { p: u64, q: u64 },
    /// Check every prime pair with pq <= N; exits 2 on any failure.
    Verify {
        #[arg(long = "max-pq")]
        max_pq: u64,
        /// Worker threads (default: one per core).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Time each construction on every pair with pq <= N, as CSV.
    Bench {
        #[arg(long = "max-pq")]
        max_pq: u64,
        #[arg(long, default_value_t = 5)]
        reps: u32,
    },
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Phi {
            p,
            q,
            method,
            format,
            max_degree,
        } => commands::cmd_phi(p, q, method, format, max_degree),
        Command::Factor {
            a,
            b,
            format,
            max_degree,
        } => commands::cmd_factor(a, b, format, max_degree),
        Command::Params { p, q } => commands::cmd_params(p, q),
        Command::Verify { max_pq, jobs } => commands::cmd_verify(max_pq, jobs),
        Command::Bench { max_pq, reps } => commands::cmd_bench(max_pq, reps),
    }
}
