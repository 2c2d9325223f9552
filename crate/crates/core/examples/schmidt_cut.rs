//! Splits a state into its Schmidt form across qubit 0 and rebuilds it.

use monogamy::qlinalg::{state_family, StateFamily};
use monogamy::schmidt::{schmidt_cut, sigma_matrices};

fn main() -> monogamy::Result<()> {
    let psi = state_family(StateFamily::W, 4)?;
    let sf = schmidt_cut(&psi)?;
    println!(
        "p0 = {:.6}  p1 = {:.6}  S_L(A) = {:.6}",
        sf.p0,
        sf.p1,
        sf.linear_entropy_a()
    );
    println!("psi0 = {:.4?}", sf.psi0.amplitudes());
    println!("psi1 = {:.4?}", sf.psi1.amplitudes());

    let rebuilt = sf.reassemble();
    println!("|<psi|rebuilt>| = {:.15}", psi.inner(&rebuilt).norm());

    for (k, block) in sigma_matrices(&sf).blocks.iter().enumerate() {
        println!("B{}: D_k = {:+.6}", k + 1, block.discriminant().re);
    }
    Ok(())
}
