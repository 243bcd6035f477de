use crate::error::{Error, Result};
use crate::linalg::{CMat, CVec, C, ZERO};

/// Structure constants of a commutative multiplication on C^n:
/// e_i e_j = sum_k mu[i][j][k] e_k.
///
/// Stored densely and always symmetric in (i, j); setters write both slots.
/// Indices here are 0-based; the JSON form is 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTensor {
    n: usize,
    data: Vec<C>,
}

impl StructureTensor {
    pub fn zeros(n: usize) -> Self {
        StructureTensor { n, data: vec![ZERO; n * n * n] }
    }

    /// Builds from (i, j, k, value) with 0-based indices in any order;
    /// repeated keys accumulate.
    pub fn from_products(n: usize, products: &[(usize, usize, usize, C)]) -> Self {
        let mut t = Self::zeros(n);
        for &(i, j, k, v) in products {
            t.add(i, j, k, v);
        }
        t
    }

    pub(crate) fn from_raw(n: usize, data: Vec<C>) -> Self {
        debug_assert_eq!(data.len(), n * n * n);
        let mut t = StructureTensor { n, data };
        t.symmetrize();
        t
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> C {
        self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: C) {
        let a = self.idx(i, j, k);
        let b = self.idx(j, i, k);
        self.data[a] = v;
        self.data[b] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, k: usize, v: C) {
        let cur = self.get(i, j, k);
        self.set(i, j, k, cur + v);
    }

    pub(crate) fn raw(&self) -> &[C] {
        &self.data
    }

    /// Averages the (i,j) and (j,i) slots so rounding never breaks commutativity.
    pub(crate) fn symmetrize(&mut self) {
        let n = self.n;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    let a = self.idx(i, j, k);
                    let b = self.idx(j, i, k);
                    let v = (self.data[a] + self.data[b]) * 0.5;
                    self.data[a] = v;
                    self.data[b] = v;
                }
            }
        }
    }

    /// Stored coefficients (i <= j) that are exactly nonzero.
    pub fn entries(&self) -> Vec<(usize, usize, usize, C)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if v != ZERO {
                        out.push((i, j, k, v));
                    }
                }
            }
        }
        out
    }

    /// Sum over ordered pairs, so off-diagonal coefficients count twice.
    pub fn norm_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| *z == ZERO)
    }

    pub fn scale(&self, c: C) -> Self {
        StructureTensor { n: self.n, data: self.data.iter().map(|z| z * c).collect() }
    }

    pub fn normalized(&self) -> Result<Self> {
        let r = self.norm();
        if r == 0.0 {
            return Err(Error::ZeroTensor);
        }
        Ok(self.scale(C::new(1.0 / r, 0.0)))
    }

    /// Real part of the full-tensor pairing sum mu conj(nu).
    pub fn inner(&self, other: &Self) -> C {
        self.data.iter().zip(&other.data).map(|(a, b)| a * b.conj()).sum()
    }

    pub fn add_scaled(&self, other: &Self, c: C) -> Self {
        assert_eq!(self.n, other.n);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b * c).collect();
        StructureTensor { n: self.n, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, C::new(-1.0, 0.0))
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).norm()
    }

    fn check_len(&self, v: &CVec) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: v.len() });
        }
        Ok(())
    }

    /// mu(x, y), bilinear and symmetric.
    pub fn evaluate(&self, x: &CVec, y: &CVec) -> Result<CVec> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.eval_unchecked(x, y))
    }

    pub(crate) fn eval_unchecked(&self, x: &CVec, y: &CVec) -> CVec {
        let n = self.n;
        let mut out = CVec::zeros(n);
        for i in 0..n {
            if x[i] == ZERO {
                continue;
            }
            for j in 0..n {
                let w = x[i] * y[j];
                if w == ZERO {
                    continue;
                }
                for k in 0..n {
                    out[k] += w * self.get(i, j, k);
                }
            }
        }
        out
    }

    /// Matrix of L_x, columns mu(x, e_j).
    pub fn left_mult(&self, x: &CVec) -> Result<CMat> {
        self.check_len(x)?;
        let n = self.n;
        let mut l = CMat::zeros(n, n);
        for i in 0..n {
            if x[i] == ZERO {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    l[(k, j)] += x[i] * self.get(i, j, k);
                }
            }
        }
        Ok(l)
    }

    /// L_{e_i}: entry (k, j) is mu_ij^k.
    pub fn left_mult_basis(&self, i: usize) -> CMat {
        let n = self.n;
        CMat::from_fn(n, n, |k, j| self.get(i, j, k))
    }

    pub fn left_mults(&self) -> Vec<CMat> {
        (0..self.n).map(|i| self.left_mult_basis(i)).collect()
    }

    /// Product of basis vectors as a vector.
    pub fn basis_product(&self, i: usize, j: usize) -> CVec {
        CVec::from_iterator(self.n, (0..self.n).map(|k| self.get(i, j, k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{re, unit_vector};

    fn heis2() -> StructureTensor {
        StructureTensor::from_products(2, &[(0, 0, 1, re(1.0))])
    }

    fn hyp2() -> StructureTensor {
        StructureTensor::from_products(2, &[(0, 0, 0, re(1.0)), (0, 1, 1, re(0.5))])
    }

    #[test]
    fn evaluate_heis() {
        let t = heis2();
        let v = t.evaluate(&unit_vector(2, 0), &unit_vector(2, 0)).unwrap();
        assert_eq!(v, unit_vector(2, 1));
    }

    #[test]
    fn evaluate_hyp_mixed() {
        let t = hyp2();
        let v = t.evaluate(&unit_vector(2, 0), &unit_vector(2, 1)).unwrap();
        assert_eq!(v, unit_vector(2, 1) * re(0.5));
        let w = t.evaluate(&unit_vector(2, 1), &unit_vector(2, 0)).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn evaluate_zero_argument() {
        let t = hyp2();
        let v = t.evaluate(&CVec::zeros(2), &unit_vector(2, 1)).unwrap();
        assert_eq!(v, CVec::zeros(2));
    }

    #[test]
    fn evaluate_dimension_mismatch() {
        assert!(matches!(
            heis2().evaluate(&CVec::zeros(3), &CVec::zeros(2)),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn left_mult_examples() {
        let l = hyp2().left_mult(&unit_vector(2, 0)).unwrap();
        assert_eq!(l, crate::linalg::diag_real(&[1.0, 0.5]));
        assert_eq!(heis2().left_mult(&unit_vector(2, 1)).unwrap(), CMat::zeros(2, 2));
        let l1 = heis2().left_mult(&unit_vector(2, 0)).unwrap();
        assert_eq!(l1[(1, 0)], re(1.0));
        assert_eq!(l1[(0, 0)] + l1[(0, 1)] + l1[(1, 1)], ZERO);
    }

    #[test]
    fn off_diagonal_counts_twice() {
        let t = StructureTensor::from_products(2, &[(0, 1, 1, re(1.0))]);
        assert_eq!(t.norm_sq(), 2.0);
    }
}
