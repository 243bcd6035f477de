// The tensor JSON format.

use jordan_flow::algebra::io::{from_json, to_json};
use jordan_flow::catalog::builtin;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a32 = builtin("A_3_2")?;
    let text = to_json(&a32.tensor);
    println!("{text}");
    let back = from_json(&text)?;
    if back != a32.tensor {
        return Err("round trip changed the tensor".into());
    }
    let bad = r#"{"dim": 2, "products": [{"i": 2, "j": 1, "k": 1, "re": 1.0}]}"#;
    println!("rejected: {}", from_json(bad).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
