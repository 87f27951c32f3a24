// Smith normal form, and Hom/Ext into a localization of Z.
//
// `cargo run --example smith_form`

use tmf_adams::exactmath::{ext1_to, hom_to, smith_normal_form, FinAbGroup, IntMatrix, InvertedSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m)?;
    println!("invariant factors: {:?}", snf.invariant_factors());
    assert_eq!(snf.u.checked_mul(&m)?.checked_mul(&snf.v)?, snf.d);

    // cokernel of m as an abstract group
    let g = FinAbGroup::from_presentation(&m)?;
    println!("coker = {g}");

    let z6 = InvertedSet::new([2, 3])?;
    let h = FinAbGroup::new(2, [2, 3, 5, 4]);
    println!("Hom({h}, {z6}) = {}", hom_to(&h, &z6));
    println!("Ext({h}, {z6}) = {}", ext1_to(&h, &z6));
    assert_eq!(ext1_to(&h, &z6), FinAbGroup::cyclic(5));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
