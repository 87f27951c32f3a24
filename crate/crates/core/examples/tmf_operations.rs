// Stable Adams operations on the homotopy of Tmf: free classes scale by
// n^ceil(|x|/2), ledger torsion is fixed.
//
// `cargo run --example tmf_operations`

use tmf_adams::adams::{psi, verify_theorem_b};
use tmf_adams::exactmath::InvertedSet;
use tmf_adams::models::{Element, SpectrumModel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tmf = SpectrumModel::tmf(InvertedSet::inverting(30));
    for k in [8, 12, 24, -21, -29] {
        for class in tmf.homotopy_group(k)?.basis {
            let x = Element::basis(&class, tmf.base());
            println!("psi^5({:>14}) = {}", class.label, tmf.render(&psi(&tmf, 5, &x)?));
        }
    }

    let free = verify_theorem_b(5, (-48, 48))?;
    println!("{}", free.summary());
    // ledger torsion first shows up in degree 75
    let torsion = verify_theorem_b(5, (0, 400))?;
    println!("{}", torsion.summary());
    assert!(free.passed() && torsion.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
