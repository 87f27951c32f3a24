// The dual Adams operation on Tmf, including powers of the discriminant.
//
// `cargo run --example dual_operation`

use tmf_adams::adams::{psi_dual, verify_dual_operation};
use tmf_adams::exactmath::InvertedSet;
use tmf_adams::models::{Element, SpectrumModel};
use tmf_adams::wpsline::discriminant;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tmf = SpectrumModel::tmf(InvertedSet::inverting(30));
    let cfg = tmf.wps().expect("Tmf is a sheaf model");
    let delta = discriminant(&cfg)?;
    for k in [1, 3] {
        let x = Element::from_graded(&delta.pow(k, &cfg)?);
        let y = psi_dual(&tmf, 5, &x)?;
        let ratio = y.free_coeffs().values().next().expect("nonzero").checked_div(x.free_coeffs().values().next().expect("nonzero"))?;
        println!("psi_dual^5(Delta^{k}) = {ratio} * Delta^{k}");
    }

    let report = verify_dual_operation(5, (-48, 48))?;
    for c in report.checks.iter().filter(|c| c.got.starts_with("skipped")) {
        println!("degree {}: {}", c.degree, c.got);
    }
    println!("{}", report.summary());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
