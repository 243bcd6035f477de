// Structure tensors and the invariants behind the table flags.

use jordan_flow::algebra::{derivation_algebra, flags, is_jordan, power_dims, product_rank, radical, StructureTensor};
use jordan_flow::linalg::re;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // e1 e1 = e1, e1 n1 = n1, e1 n2 = n2, n1 n1 = n2
    let mu = StructureTensor::from_products(3, &[(0, 0, 0, re(1.0)), (0, 1, 1, re(1.0)), (0, 2, 2, re(1.0)), (1, 1, 2, re(1.0))]);
    assert!(is_jordan(&mu, 1e-9));
    let f = flags(&mu);
    println!("flags: {f}");
    println!("dim Der = {}, dim Rad = {}", derivation_algebra(&mu).dim, radical(&mu).dim());
    println!("powers = {:?}, product rank = {}", power_dims(&mu).dims, product_rank(&mu));
    if !(f.associative && f.unital && !f.decomposable) {
        return Err("unexpected flags".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
