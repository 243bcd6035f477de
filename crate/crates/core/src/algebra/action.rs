use super::StructureTensor;
use crate::error::{Error, Result};
use crate::linalg::{cond, CMat, ZERO};

/// An invertible n x n complex matrix together with its inverse.
#[derive(Clone, Debug)]
pub struct GroupElement {
    mat: CMat,
    inv: CMat,
    cond: f64,
}

impl GroupElement {
    pub fn new(mat: CMat) -> Result<Self> {
        assert!(mat.is_square(), "group elements are square");
        let c = cond(&mat);
        if !c.is_finite() || c > 1e14 {
            return Err(Error::SingularGroupElement(c));
        }
        let inv = mat.clone().try_inverse().ok_or(Error::SingularGroupElement(c))?;
        Ok(GroupElement { mat, inv, cond: c })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { mat: CMat::identity(n, n), inv: CMat::identity(n, n), cond: 1.0 }
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &CMat {
        &self.inv
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { mat: self.inv.clone(), inv: self.mat.clone(), cond: self.cond }
    }

    pub fn condition_number(&self) -> f64 {
        self.cond
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            mat: &self.mat * &other.mat,
            inv: &other.inv * &self.inv,
            cond: cond(&(&self.mat * &other.mat)),
        }
    }
}

/// (g . mu)(a, b) = g mu(g^-1 a, g^-1 b).
pub fn act(g: &GroupElement, mu: &StructureTensor) -> Result<StructureTensor> {
    let n = mu.dim();
    if g.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: g.dim() });
    }
    Ok(act_with(g.matrix(), g.inverse_matrix(), mu))
}

/// Coordinates: out[i,j,k] = sum g[k,l] h[p,i] h[q,j] mu[p,q,l], with h = g^-1.
pub(crate) fn act_with(g: &CMat, h: &CMat, mu: &StructureTensor) -> StructureTensor {
    let n = mu.dim();
    let t = mu.raw();
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    // u[i,q,l] = sum_p h[p,i] t[p,q,l]
    let mut u = vec![ZERO; n * n * n];
    for p in 0..n {
        for i in 0..n {
            let hpi = h[(p, i)];
            if hpi == ZERO {
                continue;
            }
            for q in 0..n {
                for l in 0..n {
                    u[at(i, q, l)] += hpi * t[at(p, q, l)];
                }
            }
        }
    }
    // v[i,j,l] = sum_q h[q,j] u[i,q,l]
    let mut v = vec![ZERO; n * n * n];
    for i in 0..n {
        for q in 0..n {
            for j in 0..n {
                let hqj = h[(q, j)];
                if hqj == ZERO {
                    continue;
                }
                for l in 0..n {
                    v[at(i, j, l)] += hqj * u[at(i, q, l)];
                }
            }
        }
    }
    // out[i,j,k] = sum_l g[k,l] v[i,j,l]
    let mut out = vec![ZERO; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = ZERO;
                for l in 0..n {
                    s += g[(k, l)] * v[at(i, j, l)];
                }
                out[at(i, j, k)] = s;
            }
        }
    }
    StructureTensor::from_raw(n, out)
}

/// (A . mu)(x, y) = A mu(x, y) - mu(A x, y) - mu(x, A y).
pub fn inf_act(a: &CMat, mu: &StructureTensor) -> Result<StructureTensor> {
    let n = mu.dim();
    if a.nrows() != n || a.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: a.nrows() });
    }
    Ok(inf_act_unchecked(a, mu))
}

pub(crate) fn inf_act_unchecked(a: &CMat, mu: &StructureTensor) -> StructureTensor {
    let n = mu.dim();
    let t = mu.raw();
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut out = vec![ZERO; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = ZERO;
                for l in 0..n {
                    s += a[(k, l)] * t[at(i, j, l)];
                    s -= a[(l, i)] * t[at(l, j, k)];
                    s -= a[(l, j)] * t[at(i, l, k)];
                }
                out[at(i, j, k)] = s;
            }
        }
    }
    StructureTensor::from_raw(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{re, C};

    fn sample() -> StructureTensor {
        StructureTensor::from_products(
            3,
            &[
                (0, 0, 0, re(1.0)),
                (0, 1, 1, re(1.0)),
                (0, 2, 2, re(1.0)),
                (1, 1, 2, C::new(0.3, -0.7)),
            ],
        )
    }

    #[test]
    fn identity_acts_trivially() {
        let mu = sample();
        let out = act(&GroupElement::identity(3), &mu).unwrap();
        assert!(out.distance(&mu) < 1e-15);
    }

    #[test]
    fn inf_act_identity_is_minus_mu() {
        let mu = sample();
        let out = inf_act(&CMat::identity(3, 3), &mu).unwrap();
        assert!(out.add_scaled(&mu, re(1.0)).norm() < 1e-15);
    }

    #[test]
    fn scalar_action() {
        // (tI) . mu = t^{-1} mu
        let mu = sample();
        let g = GroupElement::new(CMat::identity(3, 3) * re(2.0)).unwrap();
        let out = act(&g, &mu).unwrap();
        assert!(out.distance(&mu.scale(re(0.5))) < 1e-15);
    }

    #[test]
    fn singular_rejected() {
        let m = CMat::zeros(2, 2);
        assert!(matches!(GroupElement::new(m), Err(Error::SingularGroupElement(_))));
    }

    #[test]
    fn composition_law() {
        let mu = sample();
        let g = CMat::from_row_slice(3, 3, &[re(1.0), re(2.0), ZERO, ZERO, re(1.0), C::new(0.0, 1.0), re(0.5), ZERO, re(1.0)]);
        let h = CMat::from_row_slice(3, 3, &[re(2.0), ZERO, ZERO, C::new(1.0, 1.0), re(1.0), ZERO, ZERO, re(-1.0), re(3.0)]);
        let g = GroupElement::new(g).unwrap();
        let h = GroupElement::new(h).unwrap();
        let lhs = act(&g, &act(&h, &mu).unwrap()).unwrap();
        let rhs = act(&g.compose(&h), &mu).unwrap();
        assert!(lhs.distance(&rhs) < 1e-12);
        let back = act(&g.inverse(), &act(&g, &mu).unwrap()).unwrap();
        assert!(back.distance(&mu) < 1e-12);
    }
}
