//! The discriminant of a random state computed three ways: from the σ
//! blocks of the Schmidt cut, from the α expansion, and (four qubits) from
//! the closed form. Then checks the bridge to the linear mutual entropies.

use monogamy::measures::linear_mutual_entropy;
use monogamy::qlinalg::haar_random_pure;
use monogamy::schmidt::{
    alpha_table, discriminant4_closed_form, discriminant_direct, discriminant_via_alpha,
    mutual_entropies_from_discriminant, schmidt_cut,
};

fn main() -> monogamy::Result<()> {
    for n in 3..=6 {
        let psi = haar_random_pure(n, 2024 + n as u64)?;
        let sf = schmidt_cut(&psi)?;
        let direct = discriminant_direct(&sf);
        let at = alpha_table(&sf);
        let via_alpha = discriminant_via_alpha(&at);
        print!(
            "N={n}  p0={:.4}  D direct {:+.12}  via alpha {:+.12}",
            sf.p0, direct.total, via_alpha
        );
        if n == 4 {
            print!("  closed form {:+.12}", discriminant4_closed_form(&at)?);
        }
        println!();

        let bridged = mutual_entropies_from_discriminant(&sf, &direct);
        for (k, s) in bridged.iter().enumerate() {
            let raw = linear_mutual_entropy(&psi, 0, k + 1)?;
            println!("    S_L(A:B{}) = {raw:.12}  bridge {s:.12}", k + 1);
        }
    }
    Ok(())
}
