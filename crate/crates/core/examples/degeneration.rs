// Degeneration curves g_t^{-1} . mu.

use jordan_flow::algebra::act;
use jordan_flow::catalog::{builtin, heisenberg};
use jordan_flow::flow::{apply_curve, heisenberg_frame, DegenerationCurve};
use jordan_flow::moment::energy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a37 = builtin("A_3_7")?.tensor;
    let frame = heisenberg_frame(&a37).ok_or("no adapted basis")?;
    let adapted = act(&frame, &a37)?;
    let heis = heisenberg(3)?;
    let curve = DegenerationCurve::heisenberg(3);
    for t in [1e-1, 1e-2, 1e-3] {
        let mu_t = apply_curve(&adapted, &curve, t)?;
        let d = mu_t.scale(jordan_flow::linalg::re(1.0 / mu_t.norm())).distance(&heis);
        println!("t = {t:e}: distance to heis = {d:.3e}");
    }

    let a463 = builtin("A_4_63")?.tensor;
    let limit = apply_curve(&a463, &DegenerationCurve::new(vec![0.0, 1.0, 1.0, 1.0]), 1e-6)?;
    let a464 = builtin("A_4_64")?.tensor;
    println!("A_4_63 -> A_4_64 pattern: distance {:.2e}", limit.distance(&a464));
    println!("energies: {} <= {}", energy(&a37)?, energy(&heis)?);
    if limit.distance(&a464) > 1e-5 {
        return Err("curve did not reach the limit".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
