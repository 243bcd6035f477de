//! Weight vectors, minimum-norm points and stratum labels.

use std::fmt;

use nalgebra::DVector;
use num_rational::Rational64;

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::flow::{run_flow, FlowOptions};
use crate::linalg::{eigvalsh, lstsq, re, CMat, CVec};
use crate::moment::moment_map;
use crate::rational::{fmt_rational, snap_all, to_f64, MAX_DENOMINATOR, SNAP_TOL};

/// Diagonal of alpha_ij^k = -E_ii - E_jj + E_kk (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub indices: (usize, usize, usize),
    pub diag: Vec<i32>,
}

impl WeightVector {
    pub fn new(n: usize, i: usize, j: usize, k: usize) -> Self {
        let mut diag = vec![0i32; n];
        diag[i] -= 1;
        diag[j] -= 1;
        diag[k] += 1;
        WeightVector { indices: (i, j, k), diag }
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.diag.iter().map(|&x| x as f64).collect()
    }
}

/// Distinct weights of the coefficients with |mu_ij^k| > tol * max |coeff|.
pub fn support_weights(mu: &StructureTensor, tol: f64) -> Result<Vec<WeightVector>> {
    let mx = mu.max_abs();
    if mx == 0.0 {
        return Err(Error::EmptySupport);
    }
    let n = mu.dim();
    let mut out: Vec<WeightVector> = Vec::new();
    for (i, j, k, v) in mu.entries() {
        if v.norm() > tol * mx {
            let w = WeightVector::new(n, i, j, k);
            if !out.iter().any(|o| o.diag == w.diag) {
                out.push(w);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct MinNormPoint {
    pub point: Vec<f64>,
    /// Barycentric coefficients, one per input vector.
    pub coefficients: Vec<f64>,
    /// min_v <point, v> - ||point||^2; nonnegative up to rounding.
    pub certificate_gap: f64,
    pub iterations: usize,
}

impl MinNormPoint {
    pub fn norm_sq(&self) -> f64 {
        dot(&self.point, &self.point)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Minimizes ||sum l_i s_i|| subject to sum l_i = 1 (no sign constraint),
/// from the KKT system of the affine hull.
fn affine_min(points: &[DVector<f64>], set: &[usize]) -> Vec<f64> {
    let k = set.len();
    let mut a = CMat::zeros(k + 1, k + 1);
    for (r, &i) in set.iter().enumerate() {
        for (c, &j) in set.iter().enumerate() {
            a[(r, c)] = re(points[i].dot(&points[j]));
        }
        a[(r, k)] = re(1.0);
        a[(k, r)] = re(1.0);
    }
    let mut b = CVec::zeros(k + 1);
    b[k] = re(1.0);
    let (x, _) = lstsq(&a, &b);
    let mut lam: Vec<f64> = (0..k).map(|i| x[i].re).collect();
    // Renormalize so the barycentric sum is exact.
    let s: f64 = lam.iter().sum();
    for l in &mut lam {
        *l /= s;
    }
    lam
}

fn combine(points: &[DVector<f64>], set: &[usize], lam: &[f64]) -> DVector<f64> {
    let mut x = DVector::zeros(points[0].len());
    for (&i, &l) in set.iter().zip(lam) {
        x += &points[i] * l;
    }
    x
}

/// Wolfe's minimum-norm-point algorithm on the convex hull of `vectors`.
pub fn min_norm_point(vectors: &[Vec<f64>]) -> Result<MinNormPoint> {
    if vectors.is_empty() {
        return Err(Error::EmptySupport);
    }
    let dim = vectors[0].len();
    if vectors.iter().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, got: vectors.iter().map(Vec::len).find(|&l| l != dim).unwrap() });
    }
    let points: Vec<DVector<f64>> = vectors.iter().map(|v| DVector::from_column_slice(v)).collect();
    let start = (0..points.len()).min_by(|&a, &b| points[a].norm_squared().total_cmp(&points[b].norm_squared())).unwrap();
    let mut set = vec![start];
    let mut lam = vec![1.0];
    let mut x = points[start].clone();
    let scale = points.iter().map(|p| p.norm_squared()).fold(0.0, f64::max);
    let mut iterations = 0;
    let cap = 1000;
    loop {
        iterations += 1;
        if iterations > cap {
            return Err(Error::MinNormNoConvergence);
        }
        // Major cycle: the input point most opposed to x.
        let (j, best) = points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, x.dot(p)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        let xx = x.norm_squared();
        if best >= xx - 1e-12 * scale || set.contains(&j) {
            break;
        }
        let prev = (set.clone(), lam.clone(), x.clone());
        set.push(j);
        lam.push(0.0);
        // Minor cycles.
        loop {
            iterations += 1;
            if iterations > cap {
                return Err(Error::MinNormNoConvergence);
            }
            let alpha = affine_min(&points, &set);
            if alpha.iter().all(|&a| a > 1e-14) {
                lam = alpha;
                x = combine(&points, &set, &lam);
                break;
            }
            let mut theta = 1.0f64;
            for (l, a) in lam.iter().zip(&alpha) {
                if *a <= 1e-14 {
                    let d = l - a;
                    if d > 0.0 {
                        theta = theta.min(l / d);
                    }
                }
            }
            for (l, a) in lam.iter_mut().zip(&alpha) {
                *l = theta * a + (1.0 - theta) * *l;
            }
            let keep: Vec<bool> = lam.iter().map(|&l| l > 1e-14).collect();
            let mut nset = Vec::new();
            let mut nlam = Vec::new();
            for ((&i, &l), k) in set.iter().zip(&lam).zip(keep) {
                if k {
                    nset.push(i);
                    nlam.push(l);
                }
            }
            let s: f64 = nlam.iter().sum();
            set = nset;
            lam = nlam.iter().map(|l| l / s).collect();
            x = combine(&points, &set, &lam);
            if set.len() <= 1 {
                break;
            }
        }
        if x.norm_squared() >= xx {
            // No strict descent: rounding has taken over, keep the previous iterate.
            (set, lam, x) = prev;
            break;
        }
    }
    let mut coefficients = vec![0.0; vectors.len()];
    for (&i, &l) in set.iter().zip(&lam) {
        coefficients[i] += l;
    }
    let point: Vec<f64> = x.iter().copied().collect();
    let xx = dot(&point, &point);
    let certificate_gap = vectors.iter().map(|v| dot(&point, v)).fold(f64::INFINITY, f64::min) - xx;
    Ok(MinNormPoint { point, coefficients, certificate_gap, iterations })
}

/// Ascending rational beta with trace -1, plus ||beta||^2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StratumLabel {
    pub beta: Vec<Rational64>,
    pub norm_sq: Rational64,
}

impl StratumLabel {
    pub fn new(mut beta: Vec<Rational64>) -> Self {
        beta.sort();
        let norm_sq = beta.iter().map(|b| b * b).sum();
        StratumLabel { beta, norm_sq }
    }

    pub fn from_f64(values: &[f64]) -> Result<Self> {
        let mut v = values.to_vec();
        v.sort_by(f64::total_cmp);
        Ok(StratumLabel::new(snap_all(&v, MAX_DENOMINATOR, SNAP_TOL)?))
    }

    pub fn beta_f64(&self) -> Vec<f64> {
        self.beta.iter().map(to_f64).collect()
    }

    pub fn beta_text(&self) -> Vec<String> {
        self.beta.iter().map(fmt_rational).collect()
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) E={}", self.beta_text().join(", "), fmt_rational(&self.norm_sq))
    }
}

#[derive(Clone, Debug)]
pub struct BetaMu {
    /// Ascending coordinates of the minimum-norm point.
    pub point: Vec<f64>,
    pub norm_sq: f64,
    pub label: Option<StratumLabel>,
    pub support: Vec<WeightVector>,
    pub certificate_gap: f64,
}

/// beta_mu: minimum-norm point of the support weights of mu, sorted.
pub fn beta_mu(mu: &StructureTensor) -> Result<BetaMu> {
    let support = support_weights(mu, 1e-10)?;
    let vecs: Vec<Vec<f64>> = support.iter().map(WeightVector::as_f64).collect();
    let mnp = min_norm_point(&vecs)?;
    let mut point = mnp.point.clone();
    point.sort_by(f64::total_cmp);
    let label = StratumLabel::from_f64(&point).ok();
    Ok(BetaMu { norm_sq: mnp.norm_sq(), point, label, support, certificate_gap: mnp.certificate_gap })
}

/// Stratum of mu: the sorted spectrum of m at the terminal soliton of the flow.
pub fn stratum_of(mu: &StructureTensor, opts: &FlowOptions) -> Result<StratumLabel> {
    let trace = run_flow(mu, opts)?;
    if !trace.terminal_report.is_soliton {
        return Err(Error::NotSoliton(trace.terminal_report.soliton_residual));
    }
    StratumLabel::from_f64(&eigvalsh(&moment_map(&trace.terminal)?))
}
