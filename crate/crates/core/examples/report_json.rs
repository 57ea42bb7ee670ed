//! Builds the full analysis report for a spec and prints it as JSON.
//!
//! Run with `cargo run --example report_json -- Z3xZ5`.

use braidcryst::group_spec::GroupSpec;
use braidcryst::report::{analyze, Options};

fn main() -> braidcryst::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "Z5".to_string());
    let spec = GroupSpec::parse(&text)?;
    let report = analyze(&spec, Options::default())?;
    println!("{}", report.to_json());
    if !report.passed() {
        eprintln!("failed checks: {:?}", report.failures);
        std::process::exit(2);
    }
    Ok(())
}
