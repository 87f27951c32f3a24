// psi_dual psi = lambda for the self-dual theories, and the Tmf_1(m) table.
//
// `cargo run --example conjecture`

use tmf_adams::adams::verify_conjecture;
use tmf_adams::exactmath::InvertedSet;
use tmf_adams::models::{witness, ModelId, SpectrumModel, TMF1_TABLE};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = InvertedSet::integers();
    for n in [5, 7] {
        for model in [
            SpectrumModel::ku(z.clone()),
            SpectrumModel::ko(z.clone()),
            SpectrumModel::tmf(InvertedSet::new([2, 3])?),
            SpectrumModel::tmf2(z.clone()),
        ] {
            let lambda = witness(model.id())?.lambda(n, &z)?;
            let report = verify_conjecture(&model, n, (-48, 48))?;
            println!("n = {n}, lambda = {lambda:<12} {}", report.summary());
        }
    }
    for (m, _) in TMF1_TABLE {
        let w = witness(ModelId::Tmf1(m))?;
        println!("Tmf_1({m:>2}): l = {:>2}, lambda(n) = n^{}", w.shift, w.lambda_exponent);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
