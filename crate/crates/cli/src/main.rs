//! `riordan`: build Riordan arrays of `(1/(1 - t^(d+1)), t p(t))`, dump
//! orbits, classify dynamics, compute A/Z sequences and run the checks.
//!
//! Exit codes: 0 success, 1 a checked claim failed, 2 usage or domain
//! error, 3 an external service was unavailable.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use render::Format;

#[derive(Parser, Debug)]
#[command(name = "riordan", version, about = "Exact Riordan arrays, circulant orbits and A/Z sequences")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table")]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// Coefficients `a0,a1,...,ad` as integers or `p/q`.
#[derive(Args, Debug, Clone)]
struct PolyArg {
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Leading corner of the array.
    Array {
        #[command(flatten)]
        p: PolyArg,
        #[arg(long, default_value_t = 7)]
        rows: usize,
        #[arg(long, default_value_t = 7)]
        cols: usize,
    },
    /// One column with its periodic tail.
    Column {
        #[command(flatten)]
        p: PolyArg,
        #[arg(long)]
        k: usize,
        /// Periods of the tail to verify.
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Orbit of the coefficient vector under the circulant matrix.
    Orbit {
        #[command(flatten)]
        p: PolyArg,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Rotated coordinates (degree 1 and 2).
        #[arg(long)]
        rotated: bool,
        /// Sample the power curve (degree 1) or helix (degree 2) through the orbit.
        #[arg(long)]
        curve: bool,
        /// Curve samples per unit parameter.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Long-run behaviour of the orbit (degree 1 and 2).
    Classify {
        #[command(flatten)]
        p: PolyArg,
    },
    /// Abbreviated array: periodic blocks only.
    Abbreviated {
        #[command(flatten)]
        p: PolyArg,
        #[arg(long, default_value_t = 8)]
        cols: usize,
        #[arg(long, default_value_t = 2)]
        reps: usize,
    },
    /// A- and Z-sequences.
    Az {
        /// Polynomial; omit with --csum.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Coefficient table of A for p = 1 + t + c t^2 instead.
        #[arg(long)]
        csum: bool,
        /// Number of powers of c kept with --csum (1..=8).
        #[arg(long, default_value_t = 4)]
        cdeg: usize,
    },
    /// Run one of the built-in checks.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[command(subcommand)]
        which: Check,
    },
    /// Compare a sequence with an OEIS b-file.
    Oeis {
        #[arg(long)]
        id: String,
        /// Generate the terms instead of passing --terms.
        #[arg(long, value_enum)]
        from: Option<Source>,
        /// Comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        terms: Option<String>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum Check {
    /// Eventual periodicity of columns 0..=kmax.
    Theorem1 {
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Orbit points against periodic blocks.
    Theorem2 {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
    /// Head-sum periodicity for p = (-1 + 2t + 2t^2)/3.
    Prop5 {
        #[arg(long, default_value_t = 3)]
        nmax: usize,
    },
    /// Row recurrences through the A- and Z-sequences.
    Rogers {
        #[arg(long, default_value_t = 10)]
        rows: usize,
    },
    /// c-derivative of A for p = a + bt + ct^2, with a, b from --poly.
    Theorem6 {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// Catalan closed forms of A and Z for p = a + bt.
    Catalan {
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Fourier diagonalization of the circulant matrix.
    Fourier {
        /// Tolerance as p/q.
        #[arg(long, default_value = "1/1000000000")]
        tol: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Source {
    Theorem6,
    Csum1,
    Csum2,
    Catalan,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli.command, cli.format);
    match result {
        Ok(outcome) => {
            if let Err(e) = commands::emit(&outcome.text, cli.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if let Some(msg) = &outcome.failure {
                eprintln!("FAIL: {msg}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
