// Sheaf cohomology of the weighted projective line P(4, 6) and its Serre
// duality pairing.
//
// `cargo run --example serre_duality`

use tmf_adams::exactmath::InvertedSet;
use tmf_adams::wpsline::{koszul_cohomology, pairing_matrix, WpsConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = WpsConfig::elliptic(InvertedSet::new([2, 3])?);
    for w in [-12, -10, -5, 0, 6, 12] {
        // errors if the Cech matrix disagrees with the monomial bases
        let h = koszul_cohomology(&cfg, w)?;
        println!("{h}");
    }

    let m = pairing_matrix(&cfg, 12)?;
    println!("H0(w^12) basis {:?} vs H1(w^-22) basis {:?}", m.rows, m.cols);
    for row in &m.entries {
        let r: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", r.join(" "));
    }
    assert!(m.is_permutation());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
