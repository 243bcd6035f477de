//! JSON form: `{"dim": n, "products": [{"i": 1, "im": 0.0, "j": 1, "k": 2, "re": 1.0}, ...]}`,
//! 1-based with i <= j. Keys are emitted sorted and floats in shortest
//! round-trip form.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::StructureTensor;
use crate::error::{Error, Result};
use crate::linalg::C;

// Field order is alphabetical so the derived serializer emits sorted keys.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Product {
    i: usize,
    #[serde(default)]
    im: f64,
    j: usize,
    k: usize,
    re: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorFile {
    dim: usize,
    products: Vec<Product>,
}

pub fn from_json(text: &str) -> Result<StructureTensor> {
    let file: TensorFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let n = file.dim;
    if n == 0 {
        return Err(Error::Format("dim must be positive".into()));
    }
    let mut seen = BTreeSet::new();
    let mut t = StructureTensor::zeros(n);
    for p in &file.products {
        for (name, v) in [("i", p.i), ("j", p.j), ("k", p.k)] {
            if v < 1 || v > n {
                return Err(Error::Format(format!("index {name}={v} outside 1..={n}")));
            }
        }
        if p.i > p.j {
            return Err(Error::Format(format!("entry ({}, {}, {}) has i > j", p.i, p.j, p.k)));
        }
        if !seen.insert((p.i, p.j, p.k)) {
            return Err(Error::Format(format!("duplicate entry ({}, {}, {})", p.i, p.j, p.k)));
        }
        if !p.re.is_finite() || !p.im.is_finite() {
            return Err(Error::Format(format!("non-finite coefficient at ({}, {}, {})", p.i, p.j, p.k)));
        }
        t.set(p.i - 1, p.j - 1, p.k - 1, C::new(p.re, p.im));
    }
    Ok(t)
}

pub fn to_json(mu: &StructureTensor) -> String {
    let products = mu
        .entries()
        .into_iter()
        .map(|(i, j, k, v)| Product { i: i + 1, im: v.im, j: j + 1, k: k + 1, re: v.re })
        .collect();
    let file = TensorFile { dim: mu.dim(), products };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

pub fn load(path: &Path) -> Result<StructureTensor> {
    from_json(&std::fs::read_to_string(path)?)
}

pub fn save(mu: &StructureTensor, path: &Path) -> Result<()> {
    std::fs::write(path, to_json(mu) + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let t = StructureTensor::from_products(
            3,
            &[(0, 0, 0, C::new(1.0, 0.0)), (0, 1, 2, C::new(0.1f64.sqrt(), -1.0 / 3.0)), (2, 2, 1, C::new(5f64.sqrt() / 2.0, 0.0))],
        );
        let back = from_json(&to_json(&t)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn keys_sorted() {
        let t = StructureTensor::from_products(1, &[(0, 0, 0, C::new(1.0, 0.0))]);
        let s = to_json(&t);
        let pos: Vec<usize> = ["\"i\"", "\"im\"", "\"j\"", "\"k\"", "\"re\""].iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(s.find("\"dim\"").unwrap() < s.find("\"products\"").unwrap());
    }

    #[test]
    fn rejects_lower_triangle() {
        let e = from_json(r#"{"dim": 2, "products": [{"i": 2, "j": 1, "k": 1, "re": 1.0, "im": 0.0}]}"#);
        assert!(matches!(e, Err(Error::Format(_))));
    }

    #[test]
    fn rejects_duplicates_and_range() {
        let dup = r#"{"dim": 2, "products": [{"i": 1, "j": 1, "k": 1, "re": 1.0}, {"i": 1, "j": 1, "k": 1, "re": 2.0}]}"#;
        assert!(from_json(dup).is_err());
        assert!(from_json(r#"{"dim": 2, "products": [{"i": 1, "j": 3, "k": 1, "re": 1.0}]}"#).is_err());
        assert!(from_json(r#"{"dim": 0, "products": []}"#).is_err());
    }
}
