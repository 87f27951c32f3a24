// Driving the command-line front end from code.
//
// `cargo run --example homotopy_table`

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let argv = ["tmf-adams", "homotopy", "--model", "tmf", "--invert", "2,3,5", "--window", "-24..24"];
    let code = tmf_adams::cli::run(argv);
    if code != 0 {
        return Err(format!("exit code {code}").into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
