//! Command-line front end over `etapowers-core`: expansion, verification,
//! moment tables, Euler-product constants, L-values, and zero scans.
//!
//! Exit codes: 0 success, 1 verification mismatch (or an ordinary runtime
//! error), 2 usage error, 3 internal assertion failure (a divisibility,
//! purity, or residue-sign invariant of the coefficient formulas was
//! violated, or the L-value root-number check failed).

use std::panic::{self, AssertUnwindSafe};

use clap::Parser;

pub mod cli;
pub mod commands;
pub mod output;
pub mod primes;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ASSERTION: i32 = 3;

pub fn run() -> i32 {
    let parsed = match cli::Cli::try_parse() {
        Ok(parsed) => parsed,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    match panic::catch_unwind(AssertUnwindSafe(|| commands::dispatch(&parsed))) {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            EXIT_MISMATCH
        }
        Err(_) => {
            eprintln!("internal assertion failed; see the panic message above");
            EXIT_ASSERTION
        }
    }
}
