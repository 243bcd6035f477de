// Minimum-norm points, beta_mu and the stratum of a non-distinguished orbit.

use jordan_flow::catalog::builtin;
use jordan_flow::flow::FlowOptions;
use jordan_flow::stratify::{beta_mu, min_norm_point, stratum_of};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = min_norm_point(&[vec![-1.0, 0.0], vec![0.0, -1.0]])?;
    println!("min norm of (-1,0),(0,-1): {:?}, gap {:.1e}", p.point, p.certificate_gap);

    let a468 = builtin("A_4_68")?;
    let b = beta_mu(&a468.tensor)?;
    println!("beta_mu(A_4_68) = {}", b.label.as_ref().ok_or("unsnapped")?);

    let a463 = builtin("A_4_63")?;
    let bound = beta_mu(&a463.tensor)?;
    let label = stratum_of(&a463.tensor, &FlowOptions::default())?;
    println!("A_4_63: beta_mu norm^2 {:.6}, stratum {label}", bound.norm_sq);
    if label.beta_text() != ["-1", "-1/2", "0", "1/2"] {
        return Err("wrong stratum".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
