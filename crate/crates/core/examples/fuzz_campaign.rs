//! Seeded fuzzing campaign over Haar-random four-qubit states.
//!
//! ```bash
//! cargo run --release --example fuzz_campaign -- 5000 7
//! ```

use monogamy::harness::{cmd_fuzz, RunConfig};

fn main() -> monogamy::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);

    let summary = cmd_fuzz(&RunConfig::fuzz(4, samples, seed))?;
    println!(
        "{} samples, seed {}, {:.2?}",
        summary.samples, summary.seed, summary.wall_time
    );
    println!(
        "{:<22} {:>7} {:>9} {:>8} {:>12} {:>12}",
        "checker", "holds", "saturated", "violated", "min slack", "max slack"
    );
    for c in &summary.checkers {
        println!(
            "{:<22} {:>7} {:>9} {:>8} {:>12.3e} {:>12.3e}",
            c.name, c.holds, c.saturated, c.violated, c.min_slack, c.max_slack
        );
    }
    if summary.any_violation() {
        eprintln!("{} violations recorded", summary.violations.len());
        std::process::exit(1);
    }
    Ok(())
}
