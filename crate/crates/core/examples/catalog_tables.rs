// Recomputing the low-dimensional classification tables.

use jordan_flow::catalog::{reproduce_tables, strata};
use jordan_flow::flow::FlowOptions;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = reproduce_tables(&[1, 2, 3], 2, &FlowOptions::default())?;
    print!("{}", report.to_markdown());
    for s in strata(3) {
        println!("{} {}", s.soliton_type, s.label);
    }
    if !report.passed() {
        return Err(format!("{} rows failed", report.failures().len()).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
