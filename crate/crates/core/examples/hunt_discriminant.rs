//! Random-restart search for five- and six-qubit states with extreme
//! discriminants. A negative minimum would break the sharper bound
//! `Σ_k S_L(A:B_k) ≤ (N-1) S_L(ρ^A)` beyond four qubits.

use monogamy::harness::{cmd_hunt, HuntMode, HuntParams, RunConfig};

fn main() -> monogamy::Result<()> {
    for n in [5, 6] {
        for mode in [HuntMode::Min, HuntMode::Max] {
            let params = HuntParams {
                restarts: 8,
                iters: 1000,
                mode,
                ..HuntParams::default()
            };
            let s = cmd_hunt(&RunConfig::hunt(n, params, 3))?;
            println!(
                "N={n} {mode}: best {:+.9}  floor [{}]  ceiling [{}]  negative found: {}",
                s.best_value, s.floor.verdict, s.ceiling.verdict, s.negative_found
            );
        }
    }
    Ok(())
}
