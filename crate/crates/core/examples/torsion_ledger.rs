// The torsion ledger: built-in Hurewicz families plus user data.
//
// `cargo run --example torsion_ledger`

use tmf_adams::ledger::{ledger_lookup, TorsionLedger};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (p, k) in [(3, 75), (3, 76), (2, 193), (2, 195), (3, 147)] {
        let hits: Vec<String> = ledger_lookup(p, k).iter().map(|e| format!("{} ({})", e.family, e.group())).collect();
        println!("p = {p}, k = {k}: {hits:?}");
    }

    let extra = r#"[{"family": "kappa*Delta^{8(l+1)}", "prime": 2,
                     "degree_offset": 206, "degree_period": 192, "orders": [4]}]"#;
    let mut ledger = TorsionLedger::builtin();
    ledger.extend(TorsionLedger::from_json(extra)?);
    println!("{} entries, degree 206 -> {} hit(s)", ledger.entries().len(), ledger.lookup(2, 206).len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
