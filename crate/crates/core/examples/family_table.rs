//! GHZ, W and product states side by side.

use monogamy::harness::cmd_family;
use monogamy::inequalities::DEFAULT_TOLERANCE;

fn main() -> monogamy::Result<()> {
    let table = cmd_family(7, DEFAULT_TOLERANCE)?;
    println!(
        "{:<8} {:>2} {:>9} {:>9} {:>9} {:>7} {:>7} {:>7}  dual",
        "family", "N", "S_L(A)", "Σ tau", "Σ tau_a", "D", "tau1", "tau2"
    );
    for r in &table.rows {
        println!(
            "{:<8} {:>2} {:>9.5} {:>9.5} {:>9.5} {:>7.3} {:>7.3} {:>7.3}  {}",
            r.family.name(),
            r.n_qubits,
            r.s_lin_a,
            r.sum_tangle,
            r.sum_tangle_a,
            r.discriminant,
            r.tau1,
            r.tau2,
            r.verdicts["dual_monogamy"]
        );
    }
    Ok(())
}
