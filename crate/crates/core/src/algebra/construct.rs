use super::{find_unit, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::ONE;

/// The zero multiplication on C^n.
pub fn trivial(n: usize) -> StructureTensor {
    StructureTensor::zeros(n)
}

/// Block direct sum on C^{n+m}: the first n coordinates carry mu.
pub fn direct_product(mu: &StructureTensor, nu: &StructureTensor) -> StructureTensor {
    let (n, m) = (mu.dim(), nu.dim());
    let mut out = StructureTensor::zeros(n + m);
    for (i, j, k, v) in mu.entries() {
        out.set(i, j, k, v);
    }
    for (i, j, k, v) in nu.entries() {
        out.set(n + i, n + j, n + k, v);
    }
    out
}

/// Adjoins a unit as the last basis vector u, with u x = x and u^2 = u.
pub fn adjoin_unit(mu: &StructureTensor) -> Result<StructureTensor> {
    if find_unit(mu).is_some() {
        return Err(Error::AlreadyUnital);
    }
    let n = mu.dim();
    let mut out = StructureTensor::zeros(n + 1);
    for (i, j, k, v) in mu.entries() {
        out.set(i, j, k, v);
    }
    for i in 0..=n {
        out.set(n, i, i, ONE);
    }
    Ok(out)
}

/// S + N where N is a copy of the underlying space with e_i n_j = mu(e_i, e_j)
/// read in N, and N N = 0.
pub fn regular_representation(mu: &StructureTensor) -> StructureTensor {
    let n = mu.dim();
    let mut out = StructureTensor::zeros(2 * n);
    for (i, j, k, v) in mu.entries() {
        out.set(i, j, k, v);
        out.set(i, n + j, n + k, v);
        out.set(j, n + i, n + k, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_jordan;
    use crate::linalg::re;

    fn a11() -> StructureTensor {
        StructureTensor::from_products(1, &[(0, 0, 0, re(1.0))])
    }

    #[test]
    fn product_of_idempotents() {
        let p = direct_product(&a11(), &a11());
        let a24 = StructureTensor::from_products(2, &[(0, 0, 0, re(1.0)), (1, 1, 1, re(1.0))]);
        assert_eq!(p, a24);
        let q = direct_product(&a11(), &trivial(1));
        assert_eq!(q, StructureTensor::from_products(2, &[(0, 0, 0, re(1.0))]));
    }

    #[test]
    fn unitalization() {
        let z = adjoin_unit(&trivial(2)).unwrap();
        assert_eq!(z.get(2, 2, 2), ONE);
        assert_eq!(z.get(0, 2, 0), ONE);
        assert!(is_jordan(&z, 1e-12));
        let a24 = direct_product(&a11(), &a11());
        assert!(matches!(adjoin_unit(&a24), Err(Error::AlreadyUnital)));
    }

    #[test]
    fn regular_rep_of_idempotent() {
        let r = regular_representation(&a11());
        let a21 = StructureTensor::from_products(2, &[(0, 0, 0, re(1.0)), (0, 1, 1, re(1.0))]);
        assert_eq!(r, a21);
    }
}
