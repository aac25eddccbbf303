//! Command-line front end for the transform library.
//!
//! Subcommands: `transform`, `convolve`, `hermite`, `verify`, `bench`.
//! Diagnostics go to stderr; data goes to the output path (or stdout when
//! the path is `-`).
//!
//! Exit codes: 0 success, 1 check failure, 2 parse/validation error,
//! 3 non-finite data, 4 I/O failure, 5 precondition failure (spectral-even
//! convolution with no even input).

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub mod commands;
pub mod io;

#[derive(Debug, Error)]
pub enum CliError {
    /// A numeric check did not hold (failing verify suite, bench agreement).
    #[error("{0}")]
    Failed(String),
    /// Malformed input file, flag value, or incompatible shapes.
    #[error("{0}")]
    Parse(String),
    /// Input data contains NaN or infinity.
    #[error("{0}")]
    NonFinite(String),
    /// Filesystem or stream failure.
    #[error("{0}")]
    Io(String),
    /// Operation precondition not met.
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::NonFinite(_) => 3,
            CliError::Io(_) => 4,
            CliError::Precondition(_) => 5,
        }
    }
}

pub(crate) fn map_core(err: rft_core::Error) -> CliError {
    match err {
        rft_core::Error::NonFinite { .. } => CliError::NonFinite(err.to_string()),
        rft_core::Error::NeitherInputEven => CliError::Precondition(err.to_string()),
        other => CliError::Parse(other.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rft",
    version,
    about = "Involutive real-to-real Fourier transform toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply the transform to an array file (text or binary).
    ///
    /// The output keeps the input's format; applying the command twice
    /// reproduces the input (the transform is an involution).
    Transform {
        /// Input array file.
        input: PathBuf,
        /// Output path, or `-` for stdout.
        output: PathBuf,
        /// Accepted alias: the transform is its own inverse, so this
        /// changes nothing.
        #[arg(long)]
        inverse: bool,
    },
    /// Convolve two arrays of the same shape.
    Convolve {
        /// First input array.
        a: PathBuf,
        /// Second input array.
        b: PathBuf,
        /// Output path, or `-` for stdout (format follows the first input).
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Spectral)]
        method: Method,
        /// Linear convolution: zero-pad each axis to the next power of two
        /// >= Na+Nb-1, convolve circularly, trim to Na+Nb-1.
        #[arg(long)]
        pad: bool,
    },
    /// Sample the k-th Hermite function on a symmetric grid.
    Hermite {
        /// Hermite order (0..=60).
        #[arg(value_parser = clap::value_parser!(u64).range(0..=60))]
        k: u64,
        /// Grid half-width L; nodes span [-L, L].
        #[arg(long, default_value_t = 16.0)]
        half_width: f64,
        /// Number of grid nodes.
        #[arg(long, default_value_t = 2048)]
        count: usize,
        /// Apply the quadrature transform and print the fitted eigenvalue
        /// sign and relative residual instead of the samples.
        #[arg(long)]
        check: bool,
        /// Write samples here; default is stdout. With --check, samples are
        /// only written when this is given.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the property-verification suite and emit a JSON report.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Comma-separated shapes, `x` separating extents: `1024,64x64`.
        #[arg(long)]
        sizes: Option<String>,
        /// Trials per property and size.
        #[arg(long, default_value_t = 8)]
        trials: usize,
        /// Write the JSON report here (summary always prints to stdout).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Time the fast transform against the direct kernel sum.
    Bench {
        /// Comma-separated 1-D sizes.
        #[arg(long, default_value = "256,1024,4096,8192")]
        sizes: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the CSV here; default is stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Convolution evaluation strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Direct O(N^2) summation.
    Direct,
    /// Four-term spectral identity, valid for any inputs.
    Spectral,
    /// Two-term spectral shortcut; requires a parity-even input.
    SpectralEven,
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Transform {
            input,
            output,
            inverse,
        } => commands::transform(&input, &output, inverse),
        Command::Convolve {
            a,
            b,
            output,
            method,
            pad,
        } => commands::convolve(&a, &b, &output, method, pad),
        Command::Hermite {
            k,
            half_width,
            count,
            check,
            output,
        } => commands::hermite(k as usize, half_width, count, check, output.as_deref()),
        Command::Verify {
            seed,
            sizes,
            trials,
            report,
        } => commands::verify(seed, sizes.as_deref(), trials, report.as_deref()),
        Command::Bench {
            sizes,
            seed,
            report,
        } => commands::bench(&sizes, seed, report.as_deref()),
    }
}

/// Parses a size list like `1024,64x64` into shapes.
pub fn parse_sizes(spec: &str) -> Result<Vec<Vec<usize>>, CliError> {
    spec.split(',')
        .map(|token| {
            token
                .trim()
                .split('x')
                .map(|ext| {
                    ext.trim()
                        .parse::<usize>()
                        .map_err(|_| CliError::Parse(format!("bad size token `{token}`")))
                })
                .collect::<Result<Vec<usize>, _>>()
        })
        .collect()
}
