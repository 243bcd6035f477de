use std::fmt;

use super::{inf_act_unchecked, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::{column_span, lstsq, nullspace, rank, CMat, CVec, RankInfo, C, ONE, ZERO};

/// Relative singular-value threshold for every rank decision in this module.
pub const RANK_TOL: f64 = 1e-8;

/// A subspace of C^n carried by an orthonormal basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<CVec>,
    pub rank_info: RankInfo,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Distance from v to the subspace.
    pub fn residual(&self, v: &CVec) -> f64 {
        let mut r = v.clone();
        for b in &self.basis {
            let c = b.dotc(v);
            r -= b * c;
        }
        r.norm()
    }

    pub fn projector(&self) -> CMat {
        let n = self.ambient_dim;
        let mut p = CMat::zeros(n, n);
        for b in &self.basis {
            p += b * b.adjoint();
        }
        p
    }
}

fn basis_products(mu: &StructureTensor) -> Vec<Vec<CVec>> {
    let n = mu.dim();
    (0..n).map(|i| (0..n).map(|j| mu.basis_product(i, j)).collect()).collect()
}

fn linear_left_mult(ls: &[CMat], v: &CVec) -> CMat {
    let n = v.len();
    let mut out = CMat::zeros(n, n);
    for (i, l) in ls.iter().enumerate() {
        if v[i] != ZERO {
            out += l * v[i];
        }
    }
    out
}

/// Largest norm of (ab,c,d)+(bd,c,a)+(da,c,b) over basis quadruples.
pub fn jordan_defect(mu: &StructureTensor) -> f64 {
    let n = mu.dim();
    let ls = mu.left_mults();
    let p = basis_products(mu);
    // k[c][d] x = (x c) d - x (c d), i.e. the associator (x, c, d).
    let k: Vec<Vec<CMat>> = (0..n)
        .map(|c| (0..n).map(|d| &ls[d] * &ls[c] - linear_left_mult(&ls, &p[c][d])).collect())
        .collect();
    let mut worst = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            for kc in &k {
                for d in 0..n {
                    let v = &kc[d] * &p[a][b] + &kc[a] * &p[b][d] + &kc[b] * &p[d][a];
                    worst = worst.max(v.norm());
                }
            }
        }
    }
    worst
}

/// The defect is cubic in mu, so the tolerance is applied after dividing by
/// max(1, ||mu||)^3.
pub fn is_jordan(mu: &StructureTensor, tol: f64) -> bool {
    let s = mu.norm().max(1.0);
    jordan_defect(mu) / (s * s * s) <= tol
}

/// Largest norm of (e_a e_b) e_c - e_a (e_b e_c).
pub fn associator_defect(mu: &StructureTensor) -> f64 {
    let n = mu.dim();
    let ls = mu.left_mults();
    let p = basis_products(mu);
    let mut worst = 0.0f64;
    for (a, pa) in p.iter().enumerate() {
        for (b, pb) in p.iter().enumerate() {
            for c in 0..n {
                let v = &ls[c] * &pa[b] - &ls[a] * &pb[c];
                worst = worst.max(v.norm());
            }
        }
    }
    worst
}

pub fn is_associative(mu: &StructureTensor, tol: f64) -> bool {
    let s = mu.norm().max(1.0);
    associator_defect(mu) / (s * s) <= tol
}

/// tau[i][j] = Tr L_{e_i e_j}; complex symmetric.
pub fn trace_form(mu: &StructureTensor) -> CMat {
    let n = mu.dim();
    let tr: Vec<C> = (0..n).map(|k| (0..n).map(|j| mu.get(k, j, j)).sum()).collect();
    CMat::from_fn(n, n, |i, j| (0..n).map(|k| mu.get(i, j, k) * tr[k]).sum())
}

/// Kernel of the trace form.
pub fn radical(mu: &StructureTensor) -> Subspace {
    let n = mu.dim();
    let (basis, rank_info) = nullspace(&trace_form(mu), RANK_TOL, mu.norm_sq());
    Subspace { ambient_dim: n, basis, rank_info }
}

pub fn is_semisimple(mu: &StructureTensor) -> bool {
    radical(mu).is_zero()
}

#[derive(Clone, Debug)]
pub struct DerivationAlgebra {
    pub dim: usize,
    pub basis: Vec<CMat>,
    pub rank_info: RankInfo,
}

/// Column (a, b) is vec(E_ab . mu).
pub(crate) fn inf_act_matrix(mu: &StructureTensor) -> CMat {
    let n = mu.dim();
    let n3 = n * n * n;
    let mut m = CMat::zeros(n3, n * n);
    for a in 0..n {
        for b in 0..n {
            let mut e = CMat::zeros(n, n);
            e[(a, b)] = ONE;
            let v = inf_act_unchecked(&e, mu);
            m.column_mut(a * n + b).copy_from_slice(v.raw());
        }
    }
    m
}

pub(crate) fn unvec(n: usize, v: &CVec) -> CMat {
    CMat::from_fn(n, n, |a, b| v[a * n + b])
}

pub(crate) fn vec_of(a: &CMat) -> CVec {
    let n = a.nrows();
    CVec::from_iterator(n * n, (0..n * n).map(|i| a[(i / n, i % n)]))
}

/// Numerical kernel of A -> A . mu.
pub fn derivation_algebra(mu: &StructureTensor) -> DerivationAlgebra {
    let n = mu.dim();
    let (kernel, rank_info) = nullspace(&inf_act_matrix(mu), RANK_TOL, mu.norm());
    let basis: Vec<CMat> = kernel.iter().map(|v| unvec(n, v)).collect();
    DerivationAlgebra { dim: basis.len(), basis, rank_info }
}

/// {x : L_x = 0}.
pub fn annihilator(mu: &StructureTensor) -> Subspace {
    let n = mu.dim();
    let mut m = CMat::zeros(n * n, n);
    for i in 0..n {
        let l = mu.left_mult_basis(i);
        m.column_mut(i).copy_from(&vec_of(&l));
    }
    let (basis, rank_info) = nullspace(&m, RANK_TOL, mu.norm());
    Subspace { ambient_dim: n, basis, rank_info }
}

/// dims[k-1] = dim A^k, where A^{k+1} is spanned by all A^i A^j with i + j = k + 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerChain {
    pub dims: Vec<usize>,
    pub is_nilpotent: bool,
}

pub fn power_dims(mu: &StructureTensor) -> PowerChain {
    let n = mu.dim();
    let scale = mu.norm();
    let mut levels: Vec<Vec<CVec>> = vec![(0..n).map(|i| crate::linalg::unit_vector(n, i)).collect()];
    let mut dims = vec![n];
    for k in 2..=n + 1 {
        let mut cols = Vec::new();
        for i in 1..=k / 2 {
            let j = k - i;
            for u in &levels[i - 1] {
                for v in &levels[j - 1] {
                    cols.push(mu.eval_unchecked(u, v));
                }
            }
        }
        let basis = if cols.is_empty() {
            Vec::new()
        } else {
            column_span(&CMat::from_columns(&cols), RANK_TOL, scale).0
        };
        let d = basis.len();
        let prev = *dims.last().unwrap();
        dims.push(d);
        levels.push(basis);
        if d == 0 || d == prev {
            break;
        }
    }
    let is_nilpotent = *dims.last().unwrap() == 0;
    PowerChain { dims, is_nilpotent }
}

/// dim mu(C^n, C^n).
pub fn product_rank(mu: &StructureTensor) -> usize {
    let n = mu.dim();
    let cols: Vec<CVec> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| mu.basis_product(i, j)).collect();
    rank(&CMat::from_columns(&cols), RANK_TOL, mu.norm()).rank
}

/// Solves sum u_i L_{e_i} = I in the least-squares sense; a unit exists when
/// the residual is below 1e-9.
pub fn find_unit(mu: &StructureTensor) -> Option<CVec> {
    let n = mu.dim();
    let mut m = CMat::zeros(n * n, n);
    for i in 0..n {
        m.column_mut(i).copy_from(&vec_of(&mu.left_mult_basis(i)));
    }
    let (u, resid) = lstsq(&m, &vec_of(&CMat::identity(n, n)));
    (resid < 1e-9).then_some(u)
}

/// Centroid {phi : phi(xy) = phi(x) y}; returns its basis as matrices.
fn centroid(mu: &StructureTensor) -> Vec<CMat> {
    let n = mu.dim();
    let mut m = CMat::zeros(n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                let row = (i * n + j) * n + r;
                for b in 0..n {
                    m[(row, r * n + b)] += mu.get(i, j, b);
                }
                for a in 0..n {
                    m[(row, a * n + i)] -= mu.get(a, j, r);
                }
            }
        }
    }
    let (kernel, _) = nullspace(&m, RANK_TOL, mu.norm());
    kernel.iter().map(|v| unvec(n, v)).collect()
}

/// Dimension of the centroid modulo its radical, read off as the rank of
/// the trace pairing Tr(phi psi) on the centroid.
pub fn centroid_dim(mu: &StructureTensor) -> usize {
    let gamma = centroid(mu);
    if gamma.is_empty() {
        return 0;
    }
    let k = gamma.len();
    let gram = CMat::from_fn(k, k, |a, b| (&gamma[a] * &gamma[b]).trace());
    rank(&gram, RANK_TOL, 1.0).rank
}

/// A direct product of two nonzero ideals splits the identity of the
/// centroid into two orthogonal idempotents.
pub fn is_decomposable(mu: &StructureTensor) -> bool {
    centroid_dim(mu) > 1
}

pub fn is_simple(mu: &StructureTensor) -> bool {
    is_semisimple(mu) && !is_decomposable(mu)
}

/// The six property markers used by the classification tables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub associative: bool,
    pub simple: bool,
    pub semisimple: bool,
    pub nilpotent: bool,
    pub unital: bool,
    pub decomposable: bool,
}

impl Flags {
    /// Parses a list such as "A, U, D"; "-" and "none" mean no flags.
    /// Simple implies semisimple implies unital.
    pub fn parse(s: &str) -> Result<Flags> {
        let mut f = Flags::default();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok {
                "-" | "none" => {}
                "A" => f.associative = true,
                "S" => f.simple = true,
                "SS" => f.semisimple = true,
                "N" => f.nilpotent = true,
                "U" => f.unital = true,
                "D" => f.decomposable = true,
                other => return Err(Error::Format(format!("unknown flag `{other}`"))),
            }
        }
        Ok(f.closure())
    }

    pub fn closure(mut self) -> Flags {
        self.semisimple |= self.simple;
        self.unital |= self.semisimple;
        self
    }

    /// Fields on which the two sets disagree.
    pub fn diff(&self, other: &Flags) -> Vec<&'static str> {
        let pairs = [
            ("A", self.associative, other.associative),
            ("S", self.simple, other.simple),
            ("SS", self.semisimple, other.semisimple),
            ("N", self.nilpotent, other.nilpotent),
            ("U", self.unital, other.unital),
            ("D", self.decomposable, other.decomposable),
        ];
        pairs.iter().filter(|(_, a, b)| a != b).map(|(t, _, _)| *t).collect()
    }
}

impl fmt::Display for Flags {
    /// Lists only the strongest of S, SS, U, as the tables do.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.associative {
            parts.push("A");
        }
        if self.simple {
            parts.push("S");
        } else if self.semisimple {
            parts.push("SS");
        } else if self.unital {
            parts.push("U");
        }
        if self.nilpotent {
            parts.push("N");
        }
        if self.decomposable {
            parts.push("D");
        }
        if parts.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

pub fn flags(mu: &StructureTensor) -> Flags {
    let semisimple = is_semisimple(mu);
    let decomposable = is_decomposable(mu);
    Flags {
        associative: is_associative(mu, 1e-9),
        simple: semisimple && !decomposable,
        semisimple,
        nilpotent: power_dims(mu).is_nilpotent,
        unital: find_unit(mu).is_some(),
        decomposable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::re;

    fn t(n: usize, p: &[(usize, usize, usize, f64)]) -> StructureTensor {
        let v: Vec<_> = p.iter().map(|&(i, j, k, c)| (i, j, k, re(c))).collect();
        StructureTensor::from_products(n, &v)
    }

    fn heis(n: usize) -> StructureTensor {
        t(n, &[(0, 0, 1, 1.0)])
    }

    fn hyp(n: usize) -> StructureTensor {
        let mut p = vec![(0, 0, 0, 1.0)];
        p.extend((1..n).map(|i| (0, i, i, 0.5)));
        t(n, &p)
    }

    #[test]
    fn jordan_defect_examples() {
        assert!(jordan_defect(&heis(4)) < 1e-14);
        assert!(jordan_defect(&hyp(3)) < 1e-14);
        // e1 e2 = e1, e2^2 = e2, e1^2 = e1 is C x C with unit e2.
        let split = t(2, &[(0, 1, 0, 1.0), (1, 1, 1, 1.0), (0, 0, 0, 1.0)]);
        assert!(jordan_defect(&split) < 1e-14);
        // e1 e2 = e1, e1^2 = e2: brute-force defect 3.
        let bad = t(2, &[(0, 1, 0, 1.0), (0, 0, 1, 1.0)]);
        assert!((jordan_defect(&bad) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn trace_form_examples() {
        let a24 = t(2, &[(0, 0, 0, 1.0), (1, 1, 1, 1.0)]);
        assert_eq!(trace_form(&a24), crate::linalg::diag_real(&[1.0, 1.0]));
        assert_eq!(trace_form(&heis(2)), CMat::zeros(2, 2));
        let a22 = t(2, &[(0, 0, 0, 1.0), (0, 1, 1, 0.5)]);
        assert_eq!(trace_form(&a22), crate::linalg::diag_real(&[1.5, 0.0]));
    }

    #[test]
    fn radical_examples() {
        let a24 = t(2, &[(0, 0, 0, 1.0), (1, 1, 1, 1.0)]);
        assert!(radical(&a24).is_zero());
        assert_eq!(radical(&heis(3)).dim(), 3);
        let a25 = t(2, &[(0, 0, 0, 1.0)]);
        let r = radical(&a25);
        assert_eq!(r.dim(), 1);
        assert!(r.residual(&crate::linalg::unit_vector(2, 1)) < 1e-12);
    }

    #[test]
    fn derivation_dims() {
        for n in 2..6 {
            assert_eq!(derivation_algebra(&hyp(n)).dim, n * n - n);
            assert_eq!(derivation_algebra(&heis(n)).dim, n * n - 2 * n + 2);
        }
        assert_eq!(derivation_algebra(&StructureTensor::zeros(3)).dim, 9);
    }

    #[test]
    fn annihilator_examples() {
        let a = annihilator(&heis(3));
        assert_eq!(a.dim(), 2);
        assert!(a.residual(&crate::linalg::unit_vector(3, 0)) > 0.99);
        assert!(annihilator(&hyp(3)).is_zero());
        assert!(annihilator(&t(2, &[(0, 0, 0, 1.0), (1, 1, 1, 1.0)])).is_zero());
    }

    #[test]
    fn power_chains() {
        let a63 = t(4, &[(0, 1, 2, 1.0), (0, 2, 3, 1.0), (1, 1, 3, 1.0)]);
        assert_eq!(power_dims(&a63), PowerChain { dims: vec![4, 2, 1, 0], is_nilpotent: true });
        assert_eq!(power_dims(&heis(3)).dims, vec![3, 1, 0]);
        let a64 = t(4, &[(0, 1, 2, 1.0), (0, 2, 3, 1.0)]);
        assert_eq!(power_dims(&a64).dims, vec![4, 2, 1, 0]);
        assert_eq!(product_rank(&a63), 2);
        assert_eq!(power_dims(&hyp(2)).dims, vec![2, 2]);
    }

    #[test]
    fn units_and_flags() {
        let a24 = t(2, &[(0, 0, 0, 1.0), (1, 1, 1, 1.0)]);
        let u = find_unit(&a24).unwrap();
        assert!((u[0] - ONE).norm() < 1e-12 && (u[1] - ONE).norm() < 1e-12);
        assert!(find_unit(&heis(2)).is_none());
        assert_eq!(flags(&a24), Flags::parse("A, SS, D").unwrap());
        assert_eq!(flags(&t(1, &[(0, 0, 0, 1.0)])), Flags::parse("A, S").unwrap());
        assert_eq!(flags(&hyp(2)), Flags::parse("-").unwrap());
        assert_eq!(flags(&t(2, &[(0, 0, 0, 1.0)])), Flags::parse("A, D").unwrap());
        assert_eq!(flags(&heis(2)), Flags::parse("A, N").unwrap());
    }

    #[test]
    fn flag_text_round_trip() {
        let f = Flags::parse("D, U, A").unwrap();
        assert_eq!(f.to_string(), "A, U, D");
        assert!(Flags::parse("Q").is_err());
    }
}
