//! Pairwise measures of the three-qubit W state and the monogamy chain
//! `Σ τ ≤ S_L(ρ^A) ≤ Σ τ_a`, which it saturates at both ends.
//!
//! ```bash
//! cargo run --example measure_w_state
//! ```

use monogamy::inequalities::Checker;
use monogamy::measures::tangles;
use monogamy::qlinalg::{state_family, Reduce, StateFamily};

fn main() -> monogamy::Result<()> {
    let w = state_family(StateFamily::W, 3)?;
    for k in 1..3 {
        let m = tangles(&w.reduce(&[0, k])?)?;
        println!(
            "A-B{k}: C = {:.6}  C_a = {:.6}  tau = {:.6}  tau_a = {:.6}  S_L(A:B) = {:.6}",
            m.concurrence, m.coa, m.tangle, m.tangle_a, m.s_mutual
        );
        println!("       R spectrum {:?}", m.spectrum.lambdas);
    }

    let (ckw, dual) = Checker::default().chain(&w)?;
    println!(
        "{:<14} {:.12} <= {:.12}  [{}]",
        ckw.name, ckw.lhs, ckw.rhs, ckw.verdict
    );
    println!(
        "{:<14} {:.12} <= {:.12}  [{}]",
        dual.name, dual.lhs, dual.rhs, dual.verdict
    );
    Ok(())
}
