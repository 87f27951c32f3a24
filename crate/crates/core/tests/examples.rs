macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(tate_curve, "tate_curve.rs");
example!(smith_form, "smith_form.rs");
example!(serre_duality, "serre_duality.rs");
example!(tmf_operations, "tmf_operations.rs");
example!(anderson_duality, "anderson_duality.rs");
example!(dual_operation, "dual_operation.rs");
example!(conjecture, "conjecture.rs");
example!(torsion_ledger, "torsion_ledger.rs");
example!(homotopy_table, "homotopy_table.rs");

#[test]
fn tate_curve_runs() {
    tate_curve::run_example().unwrap();
}

#[test]
fn smith_form_runs() {
    smith_form::run_example().unwrap();
}

#[test]
fn serre_duality_runs() {
    serre_duality::run_example().unwrap();
}

#[test]
fn tmf_operations_runs() {
    tmf_operations::run_example().unwrap();
}

#[test]
fn anderson_duality_runs() {
    anderson_duality::run_example().unwrap();
}

#[test]
fn dual_operation_runs() {
    dual_operation::run_example().unwrap();
}

#[test]
fn conjecture_runs() {
    conjecture::run_example().unwrap();
}

#[test]
fn torsion_ledger_runs() {
    torsion_ledger::run_example().unwrap();
}

#[test]
fn homotopy_table_runs() {
    homotopy_table::run_example().unwrap();
}
