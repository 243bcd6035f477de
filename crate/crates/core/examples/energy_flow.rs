// Flowing a scrambled semisimple algebra down to its minimum 1/n.

use jordan_flow::algebra::act;
use jordan_flow::catalog::builtin;
use jordan_flow::flow::{random_group_element, run_flow, FlowOptions};
use jordan_flow::moment::sl_residual;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a32 = builtin("A_3_2")?;
    let g = random_group_element(3, 7);
    let start = act(&g, &a32.tensor)?;
    let trace = run_flow(&start, &FlowOptions::default())?;
    let e = trace.terminal_energy();
    println!("E: {:.6} -> {:.12} in {} steps ({})", trace.energies[0], e, trace.steps_taken, trace.stop);
    let mut csv = Vec::new();
    trace.write_csv(&mut csv)?;
    println!("trace: {} csv lines", String::from_utf8(csv)?.lines().count());
    if (e - 1.0 / 3.0).abs() > 1e-6 || sl_residual(&trace.terminal)? > 1e-6 {
        return Err("flow missed the semisimple minimum".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
