//! Runs every verification suite the `verify` subcommand offers and prints a
//! one-line summary per suite. Pass a seed as the first argument to change
//! the sampled states.
//!
//! cargo run --release --example verify_all -- 0x2a

use fuzzybit::fuzzylogic::System;
use fuzzybit::sampling::DEFAULT_SEED;
use fuzzybit::verify::{run_suite, Suite};

fn main() -> fuzzybit::Result<()> {
    let seed = match std::env::args().nth(1) {
        Some(s) => match s.strip_prefix("0x") {
            Some(hex) => u64::from_str_radix(hex, 16),
            None => s.parse(),
        }
        .map_err(|e| fuzzybit::Error::Parse(format!("seed `{s}`: {e}")))?,
        None => DEFAULT_SEED,
    };
    let mut all = true;
    for suite in Suite::ALL {
        for system in [System::Qubit, System::TwoQubit] {
            let fuzzy = matches!(suite, Suite::Orthogonality | Suite::Pykacz | Suite::Laws);
            if system == System::TwoQubit && !fuzzy {
                continue;
            }
            let report = run_suite(suite, system, None, seed)?;
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
            all &= failed.is_empty();
            println!(
                "{:<14} {:<9} {:>2} checks  {}",
                suite.name(),
                if fuzzy { system.to_string() } else { String::new() },
                report.checks.len(),
                if failed.is_empty() { "PASS".to_string() } else { format!("FAIL {}", failed.join(",")) }
            );
        }
    }
    if !all {
        std::process::exit(1);
    }
    Ok(())
}
