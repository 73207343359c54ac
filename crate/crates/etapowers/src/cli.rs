use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Expand powers of Euler's q-series and reproduce their coefficient
/// statistics, limiting constants, and L-values.
#[derive(Debug, Parser)]
#[command(name = "etapowers", version)]
pub struct Cli {
    /// Table output format (commands with free-form reports ignore this)
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print coefficients a_0 .. a_N of a series
    Expand {
        /// One of L1, L2, L2V1, L2V2, L3, L4, L4V1, L4V2, L6, L8, L10, L14,
        /// L12, L24, L26
        #[arg(long)]
        family: String,
        /// Last coefficient index N
        #[arg(long, value_parser = parse_count)]
        terms: u64,
    },
    /// Cross-check the expansion against the multiplicative formula
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = parse_count, default_value = "20000")]
        terms: u64,
    },
    /// Prefix statistics normalized by their predicted growth laws
    Moments {
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = parse_count)]
        terms: u64,
        /// Comma-separated checkpoint list; default is powers of 10
        #[arg(long, value_delimiter = ',', value_parser = parse_count)]
        checkpoints: Option<Vec<u64>>,
    },
    /// Evaluate the limiting constants as truncated Euler products
    Constants {
        /// One of C2, D2, E2, C4, D4, E4; all six when omitted
        #[arg(long)]
        which: Option<String>,
        #[arg(long, value_parser = parse_count, default_value = "10000000")]
        prime_limit: u64,
    },
    /// Weight-3 L-values at s = 2 via the smoothed functional equation
    Lvalue {
        /// Cusp form level: 12, 16, or 27; all three when omitted
        #[arg(long)]
        level: Option<u32>,
        /// Coefficient count; the root-number consistency check needs
        /// roughly 20000 or more
        #[arg(long, value_parser = parse_count, default_value = "20000")]
        terms: u64,
    },
    /// Scan coefficients for a vanishing entry
    Lehmer {
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = parse_count)]
        terms: u64,
    },
    /// Fit the open 12th-power mean-square constant from checkpoint ratios
    EstimateA {
        #[arg(long, value_parser = parse_count, default_value = "100000")]
        terms: u64,
    },
}

/// Accepts plain integers and scientific notation such as `1e7`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    let f: f64 = s
        .parse()
        .map_err(|_| format!("`{s}` is not a count (try 20000 or 1e7)"))?;
    if !f.is_finite() || !(0.0..=9e15).contains(&f) || f.fract() != 0.0 {
        return Err(format!("`{s}` is not a whole non-negative count"));
    }
    Ok(f as u64)
}
