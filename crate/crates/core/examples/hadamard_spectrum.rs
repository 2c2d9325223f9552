//! Exact integer check that the Sylvester-Hadamard columns diagonalize the
//! Hamming-neighbour matrix `V`, whose top eigenvalue caps the
//! discriminant at `M - 2`.

use monogamy::schmidt::{p_matrix, v_matrix, v_spectrum_check};

fn main() -> monogamy::Result<()> {
    let v = v_matrix(4)?;
    println!("V for Δ = 4:");
    for x in 0..v.dim() {
        let row: Vec<String> = (0..v.dim())
            .map(|y| format!("{:>2}", v.get(x, y)))
            .collect();
        println!("  {}", row.join(" "));
    }
    for delta in 3..=7 {
        let r = v_spectrum_check(delta)?;
        let mut spectrum = r.eigenvalues.clone();
        spectrum.sort_unstable();
        spectrum.dedup();
        println!(
            "Δ = {delta}: distinct eigenvalues {spectrum:?}, max {}",
            r.max_eigenvalue
        );
    }
    let p = p_matrix(3)?;
    let sq = p.mul(&p);
    println!(
        "P_3² diagonal = {:?}",
        (0..8).map(|i| sq.get(i, i)).collect::<Vec<_>>()
    );
    Ok(())
}
