// Anderson self-duality of KU, KO, Tmf[1/6] and Tmf(2) at the level of
// homotopy groups.
//
// `cargo run --example anderson_duality`

use tmf_adams::adams::{anderson_dual_group, diagram_check, verify_self_duality};
use tmf_adams::exactmath::InvertedSet;
use tmf_adams::models::{witness, SpectrumModel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = InvertedSet::integers();
    let ko = SpectrumModel::ko(z.clone());
    for k in -8..=0 {
        println!("pi_{k} I_Z KO = {}", anderson_dual_group(&ko, &z, k)?);
    }

    for model in [
        SpectrumModel::ku(z.clone()),
        ko,
        SpectrumModel::tmf(InvertedSet::new([2, 3])?),
        SpectrumModel::tmf2(z.clone()),
    ] {
        let d = witness(model.id())?;
        let report = verify_self_duality(&model, model.base(), (-60, 60))?;
        println!("d = {:>2}, D = {:<20} {}", d.shift, d.element, report.summary());
        assert!(report.passed());
    }

    let tmf = SpectrumModel::tmf(InvertedSet::inverting(30));
    let diagram = diagram_check(&tmf, 5, -21)?;
    println!("{}", diagram.summary());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
