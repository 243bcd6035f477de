// Invariant fingerprints and candidate matching against the catalog.

use jordan_flow::algebra::act;
use jordan_flow::catalog::{builtin, fingerprint, match_tensor};
use jordan_flow::flow::random_group_element;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a37 = builtin("A_3_7")?.tensor;
    let scrambled = act(&random_group_element(3, 11), &a37)?;
    let fp = fingerprint(&scrambled)?;
    println!("{fp:?}");
    let names = match_tensor(&scrambled)?;
    println!("candidates: {names:?}");
    if !names.iter().any(|n| n == "A_3_7") {
        return Err("A_3_7 not among candidates".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
