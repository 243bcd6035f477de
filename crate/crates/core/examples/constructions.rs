// Products, unitalization and the regular representation.

use jordan_flow::algebra::regular_representation;
use jordan_flow::catalog::builtin;
use jordan_flow::flow::{run_flow, FlowOptions};
use jordan_flow::moment::{energy, soliton_product, soliton_type, soliton_unitalize};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let heis = builtin("A_2_3")?.tensor;
    let point = builtin("A_1_1")?.tensor;

    let prod = soliton_product(&heis, &point)?;
    println!("A_2_3 x A_1_1: e1^2 coefficient {:.12}, type {}", prod.get(2, 2, 2).re, soliton_type(&prod)?);

    let hat = soliton_unitalize(&heis)?;
    println!("unitalized A_2_3: E = {:.12}, type {}", energy(&hat)?, soliton_type(&hat)?);

    let rr = regular_representation(&builtin("A_2_4")?.tensor);
    let trace = run_flow(&rr, &FlowOptions::default())?;
    let ty = trace.terminal_type.ok_or("unsnapped")?;
    println!("regular representation of A_2_4 flows to {ty}");
    if (prod.get(2, 2, 2).re - 5f64.sqrt()).abs() > 1e-9 || (energy(&hat)? - 5.0 / 6.0).abs() > 1e-9 {
        return Err("constants off".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
