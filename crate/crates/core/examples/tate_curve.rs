// q-expansions of the Tate curve and the discriminant identities.
//
// `cargo run --example tate_curve`

use tmf_adams::qseries::{eta_product_delta, weierstrass_invariants, verify_tate_identities, QSeries, WeierstrassData};

fn show(s: &QSeries) -> String {
    let c: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    c.join(", ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let curve = WeierstrassData::tate_curve(8)?;
    let inv = weierstrass_invariants(&curve)?;
    println!("a4    = [{}]", show(&curve.a4));
    println!("c4    = [{}]", show(&inv.c4));
    println!("c6    = [{}]", show(&inv.c6));
    println!("Delta = [{}]", show(&inv.delta));
    assert_eq!(inv.delta, eta_product_delta(8)?);

    let report = verify_tate_identities(200)?;
    println!("{}", report.summary());
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
