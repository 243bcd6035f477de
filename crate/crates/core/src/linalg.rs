//! Small dense complex linear algebra on top of nalgebra.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type C = Complex64;
pub type CMat = DMatrix<C>;
pub type CVec = DVector<C>;

/// Hermitian matrices share the dense representation; the contract of each
/// producing function says when the output is Hermitian.
pub type HermitianMatrix = CMat;

pub const ZERO: C = C::new(0.0, 0.0);
pub const ONE: C = C::new(1.0, 0.0);

pub fn re(x: f64) -> C {
    C::new(x, 0.0)
}

/// Frobenius pairing Tr(A B*).
pub fn inner(a: &CMat, b: &CMat) -> C {
    a.iter().zip(b.iter()).map(|(x, y)| x * y.conj()).sum()
}

pub fn norm_sq(a: &CMat) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum()
}

pub fn norm(a: &CMat) -> f64 {
    norm_sq(a).sqrt()
}

pub fn hermitian_defect(a: &CMat) -> f64 {
    (a - a.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn diag_real(values: &[f64]) -> CMat {
    CMat::from_diagonal(&CVec::from_iterator(values.len(), values.iter().map(|&v| re(v))))
}

/// Outcome of a singular-value rank decision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RankInfo {
    pub rank: usize,
    /// sigma_rank / sigma_(rank+1); infinite when there is nothing on one side of the cut.
    pub gap_ratio: f64,
}

impl RankInfo {
    /// Decisions with a gap below 1e3 are flagged as borderline.
    pub fn is_borderline(&self) -> bool {
        self.gap_ratio < 1e3
    }
}

/// Singular values sorted descending with the right singular vectors as
/// rows of `vt` and the left ones as columns of `u`. `vt` is a full n x n
/// basis when `full_v` is set, otherwise min(m, n) rows.
struct FullSvd {
    sigma: Vec<f64>,
    vt: CMat,
    u: CMat,
}

fn to_faer(a: &CMat) -> faer::Mat<C> {
    faer::Mat::from_fn(a.nrows(), a.ncols(), |i, j| a[(i, j)])
}

fn from_faer(a: faer::MatRef<'_, C>) -> CMat {
    CMat::from_fn(a.nrows(), a.ncols(), |i, j| a[(i, j)])
}

fn full_svd(a: &CMat, full_v: bool) -> FullSvd {
    let fa = to_faer(a);
    let svd = if full_v && a.nrows() < a.ncols() { fa.svd() } else { fa.thin_svd() };
    let svd = svd.expect("svd of a finite matrix converges");
    let k = a.nrows().min(a.ncols());
    let sigma = (0..k).map(|i| svd.S()[i].re).collect();
    FullSvd { sigma, vt: from_faer(svd.V()).adjoint(), u: from_faer(svd.U()) }
}

fn cut(sigma: &[f64], rel_tol: f64, scale: f64) -> RankInfo {
    let top = sigma.first().copied().unwrap_or(0.0).max(scale);
    if top == 0.0 {
        return RankInfo { rank: 0, gap_ratio: f64::INFINITY };
    }
    let thresh = rel_tol * top;
    let rank = sigma.iter().take_while(|&&s| s > thresh).count();
    let below = sigma.get(rank).copied().unwrap_or(0.0);
    let gap_ratio = if rank == 0 || below == 0.0 { f64::INFINITY } else { sigma[rank - 1] / below };
    RankInfo { rank, gap_ratio }
}

pub fn singular_values(a: &CMat) -> Vec<f64> {
    if a.is_empty() {
        return Vec::new();
    }
    to_faer(a).singular_values().expect("svd of a finite matrix converges")
}

/// Numerical rank with threshold `rel_tol * max(sigma_max, scale)`.
pub fn rank(a: &CMat, rel_tol: f64, scale: f64) -> RankInfo {
    cut(&singular_values(a), rel_tol, scale)
}

/// Orthonormal basis of the kernel of `a`.
pub fn nullspace(a: &CMat, rel_tol: f64, scale: f64) -> (Vec<CVec>, RankInfo) {
    let n = a.ncols();
    if a.nrows() == 0 {
        let basis = (0..n).map(|i| unit_vector(n, i)).collect();
        return (basis, RankInfo { rank: 0, gap_ratio: f64::INFINITY });
    }
    let svd = full_svd(a, true);
    let info = cut(&svd.sigma, rel_tol, scale);
    let basis = (info.rank..n)
        .map(|r| CVec::from_iterator(n, svd.vt.row(r).iter().map(|z| z.conj())))
        .collect();
    (basis, info)
}

/// Orthonormal basis of the column span of `a`.
pub fn column_span(a: &CMat, rel_tol: f64, scale: f64) -> (Vec<CVec>, RankInfo) {
    if a.ncols() == 0 {
        return (Vec::new(), RankInfo { rank: 0, gap_ratio: f64::INFINITY });
    }
    let svd = full_svd(a, false);
    let info = cut(&svd.sigma, rel_tol, scale);
    let basis = (0..info.rank).map(|c| svd.u.column(c).into_owned()).collect();
    (basis, info)
}

pub fn unit_vector(n: usize, i: usize) -> CVec {
    let mut v = CVec::zeros(n);
    v[i] = ONE;
    v
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn eigh(a: &CMat) -> (Vec<f64>, CMat) {
    let h = (a + a.adjoint()).scale(0.5);
    let eig = to_faer(&h).self_adjoint_eigen(faer::Side::Lower).expect("hermitian eigensolver converges");
    let values = (0..a.nrows()).map(|i| eig.S()[i].re).collect();
    (values, from_faer(eig.U()))
}

pub fn eigvalsh(a: &CMat) -> Vec<f64> {
    let h = (a + a.adjoint()).scale(0.5);
    to_faer(&h).self_adjoint_eigenvalues(faer::Side::Lower).expect("hermitian eigensolver converges")
}

pub fn cond(a: &CMat) -> f64 {
    let s = singular_values(a);
    match (s.first(), s.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
        _ => f64::INFINITY,
    }
}

/// Dense complex least squares `min ||a x - b||` through the pseudo-inverse,
/// returning x and the residual norm.
pub fn lstsq(a: &CMat, b: &CVec) -> (CVec, f64) {
    let svd = full_svd(a, false);
    let top = svd.sigma.first().copied().unwrap_or(0.0);
    let eps = 1e-13 * top.max(f64::MIN_POSITIVE);
    let mut x = CVec::zeros(a.ncols());
    for (r, &s) in svd.sigma.iter().enumerate() {
        if s > eps {
            let c = svd.u.column(r).dotc(b) / re(s);
            x += svd.vt.row(r).adjoint() * c;
        }
    }
    let r = (a * &x - b).norm();
    (x, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one() {
        let a = CMat::from_row_slice(1, 3, &[ONE, ONE, ZERO]);
        let (basis, info) = nullspace(&a, 1e-8, 0.0);
        assert_eq!(info.rank, 1);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!((&a * v).norm() < 1e-12);
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let a = CMat::zeros(4, 3);
        let (basis, info) = nullspace(&a, 1e-8, 0.0);
        assert_eq!(info.rank, 0);
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn eigh_sorts_ascending() {
        let a = diag_real(&[3.0, -1.0, 2.0]);
        let (w, v) = eigh(&a);
        assert_eq!(w, vec![-1.0, 2.0, 3.0]);
        assert!((v[(1, 0)].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rank_deficient_wide_matrix() {
        // Rank one, with most rows zero.
        let mut a = CMat::zeros(4, 8);
        for j in 0..8 {
            a[(0, j)] = C::new(0.3 * j as f64 - 1.0, 0.1 * j as f64);
            a[(2, j)] = a[(0, j)] * C::new(0.5, -2.0);
        }
        let (span, info) = column_span(&a, 1e-8, 0.0);
        assert_eq!(info.rank, 1);
        let (kernel, _) = nullspace(&a, 1e-8, 0.0);
        assert_eq!(kernel.len(), 7);
        for v in &kernel {
            assert!((&a * v).norm() < 1e-12);
        }
        for j in 0..8 {
            let col = a.column(j).into_owned();
            let proj = &span[0] * span[0].dotc(&col);
            assert!((col - proj).norm() < 1e-12);
        }
        let b = a.column(3).into_owned();
        let (x, r) = lstsq(&a, &b);
        assert!(r < 1e-12 && (&a * x - b).norm() < 1e-12);
    }

    #[test]
    fn gap_ratio_reports_cut() {
        let a = diag_real(&[1.0, 1e-3, 1e-12]);
        let info = rank(&a, 1e-8, 0.0);
        assert_eq!(info.rank, 2);
        assert!((info.gap_ratio - 1e9).abs() / 1e9 < 1e-6);
    }
}
