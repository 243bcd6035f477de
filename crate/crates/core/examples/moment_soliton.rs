// Moment map, energy and the soliton test.

use jordan_flow::catalog::{builtin, heisenberg};
use jordan_flow::moment::{energy, moment_matrix, soliton_check, soliton_type, SOLITON_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let heis = heisenberg(4)?;
    println!("E(heis4) = {}", energy(&heis)?);
    let m = moment_matrix(&heis)?;
    println!("M diagonal = {:?}", (0..4).map(|i| m[(i, i)].re).collect::<Vec<_>>());

    let a468 = builtin("A_4_68")?;
    let report = soliton_check(&a468.tensor, SOLITON_TOL)?;
    let ty = soliton_type(&a468.tensor)?;
    println!("A_4_68: residual {:.2e}, type {ty}, beta {:?}", report.soliton_residual, ty.beta_text());

    let a463 = builtin("A_4_63")?;
    let report = soliton_check(&a463.tensor, SOLITON_TOL)?;
    println!("A_4_63: soliton = {}", report.is_soliton);
    if report.is_soliton || (energy(&heis)? - 5.0).abs() > 1e-12 {
        return Err("unexpected soliton data".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
