//! One-qubit and two-qubit cut tangles of a random state and the bounds
//! relating their sums.

use monogamy::inequalities::{bipartition_tangles, Checker};
use monogamy::qlinalg::haar_random_pure;

fn main() -> monogamy::Result<()> {
    let psi = haar_random_pure(5, 99)?;
    let b = bipartition_tangles(&psi)?;
    println!("single-qubit cuts {:.4?}", b.single);
    println!("tau1 = {:.6}  tau2 = {:.6}", b.tau1, b.tau2);

    let checker = Checker::default();
    for k in 0..b.n_qubits {
        let (lo, hi) = checker.corollary(&psi, k)?;
        println!(
            "qubit {k}: {:+.5} <= tau2_k - tau1_k = {:+.5} <= {:+.5}",
            lo.lhs, lo.rhs, hi.rhs
        );
    }
    let (lo, hi) = checker.aggregate_bound(&psi)?;
    println!("{:.5} <= tau2 = {:.5} <= {:.5}", lo.lhs, lo.rhs, hi.rhs);
    Ok(())
}
