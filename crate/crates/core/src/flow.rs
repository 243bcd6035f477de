//! Negative gradient flow of the energy, terminal soliton extraction and
//! one-parameter degeneration curves.
//!
//! The iterate is always g . mu0 for a group element g built from
//! exponentials, so it never leaves the orbit through rounding. Each step
//! moves g along exp(-4h A) where A is the moment map with its component
//! along the stabilizer (derivations plus scalars) removed; that component
//! does not move the point and only inflates the conditioning of g.

use std::io::Write;

use nalgebra::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::algebra::{act, act_with, inf_act_matrix, is_jordan, jordan_defect, unvec, vec_of, GroupElement, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::{cond, eigh, nullspace, re, CMat, CVec, C};
use crate::moment::{energy_unchecked, gradient_unchecked, moment_unchecked, soliton_check, soliton_residual, soliton_type_with, MomentReport, SolitonType};
use crate::rational::{snap_all, MAX_DENOMINATOR, SNAP_TOL};

#[derive(Clone, Debug)]
pub struct FlowOptions {
    pub max_steps: usize,
    pub step0: f64,
    pub grad_tol: f64,
    pub energy_plateau_tol: f64,
    /// Consecutive steps under `energy_plateau_tol` that end the run.
    pub plateau_window: usize,
    pub renormalize: bool,
    pub seed: u64,
    /// Start from a seeded random basis change of the input.
    pub random_start: bool,
    pub soliton_tol: f64,
    /// Step budget for polishing a terminal that is not yet a soliton.
    pub polish_steps: usize,
    /// Try to recover the limit soliton when the orbit has none.
    pub extract_limit: bool,
}

impl Default for FlowOptions {
    fn default() -> Self {
        FlowOptions {
            max_steps: 200_000,
            step0: 1e-2,
            grad_tol: 1e-9,
            energy_plateau_tol: 1e-12,
            plateau_window: 500,
            renormalize: true,
            seed: 0,
            random_start: false,
            soliton_tol: 1e-8,
            polish_steps: 5000,
            extract_limit: true,
        }
    }
}

impl FlowOptions {
    pub fn validate(&self) -> Result<()> {
        let positive = [self.step0, self.grad_tol, self.energy_plateau_tol, self.soliton_tol];
        if positive.iter().any(|t| t.is_nan() || *t <= 0.0 || !t.is_finite()) {
            return Err(Error::Format("flow tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    Gradient,
    Plateau,
    Stall,
    MaxSteps,
}

impl std::fmt::Display for StopReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StopReason::Gradient => "gradient",
            StopReason::Plateau => "plateau",
            StopReason::Stall => "stall",
            StopReason::MaxSteps => "max-steps",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct FlowTrace {
    /// Energy of the start and after every accepted step, polishing included.
    pub energies: Vec<f64>,
    pub grad_norms: Vec<f64>,
    /// Last iterate inside the orbit of the start.
    pub orbit_terminal: StructureTensor,
    /// The terminal soliton: the orbit terminal, or the extracted limit
    /// when the orbit holds no soliton.
    pub terminal: StructureTensor,
    pub steps_taken: usize,
    pub converged: bool,
    pub stop: StopReason,
    pub extracted: bool,
    pub terminal_report: MomentReport,
    pub terminal_type: Option<SolitonType>,
    /// Jordan defect of the input when it is not a Jordan algebra.
    pub jordan_warning: Option<f64>,
}

impl FlowTrace {
    pub fn terminal_energy(&self) -> f64 {
        self.terminal_report.energy
    }

    /// CSV rows `step,energy,grad_norm`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "step,energy,grad_norm")?;
        for (s, (e, g)) in self.energies.iter().zip(&self.grad_norms).enumerate() {
            writeln!(w, "{s},{e:.17e},{g:.17e}")?;
        }
        Ok(())
    }
}

struct Descent {
    tensor: StructureTensor,
    /// Accumulated group element relative to the input (up to scale).
    total: CMat,
    energies: Vec<f64>,
    grad_norms: Vec<f64>,
    steps: usize,
    stop: StopReason,
}

fn normalized(t: StructureTensor) -> StructureTensor {
    let r = t.norm();
    t.scale(re(1.0 / r))
}

/// m(T) with its stabilizer component removed. The stabilizer
/// {X : X . T in C T} is the kernel of (I - t t^*) K, K[:, ab] = vec(E_ab . T).
fn generator(t: &StructureTensor) -> CMat {
    let n = t.dim();
    let n2 = t.norm_sq();
    let m = moment_unchecked(t) / re(n2);
    let mut k = inf_act_matrix(t);
    let tv = CVec::from_column_slice(t.raw()) / re(n2.sqrt());
    let proj = tv.adjoint() * &k;
    k -= &tv * proj;
    let (stab, _) = nullspace(&k, 1e-8, n2.sqrt());
    let mut v = vec_of(&m);
    for b in &stab {
        let c = b.dotc(&v);
        v -= b * c;
    }
    unvec(n, &v)
}

fn det_normalized(g: CMat) -> CMat {
    let n = g.nrows() as f64;
    let d = g.determinant().norm();
    g / re(d.powf(1.0 / n))
}

fn descend(start: &StructureTensor, opts: &FlowOptions, plateau: bool, max_steps: usize) -> Descent {
    let n = start.dim();
    let mut base = normalized(start.clone());
    let mut anchor = CMat::identity(n, n);
    let mut g = CMat::identity(n, n);
    let mut t = base.clone();
    let (grad, mut e) = gradient_unchecked(&t);
    let mut gn = grad.norm();
    let mut energies = vec![e];
    let mut grad_norms = vec![gn];
    let mut h = opts.step0;
    let mut flat = 0usize;
    let mut steps = 0usize;
    let stop = loop {
        if gn < opts.grad_tol {
            break StopReason::Gradient;
        }
        if steps >= max_steps {
            break StopReason::MaxSteps;
        }
        let a = generator(&t);
        let accepted = loop {
            let gnew = det_normalized((&a * re(-4.0 * h)).exp() * &g);
            let Some(ginv) = gnew.clone().try_inverse() else {
                h /= 2.0;
                if h < 1e-14 {
                    break None;
                }
                continue;
            };
            let tn = normalized(act_with(&gnew, &ginv, &base));
            let en = energy_unchecked(&tn);
            if en <= e - 1e-4 * h * gn * gn {
                let gnn = gradient_unchecked(&tn).0.norm();
                break Some((gnew, tn, en, gnn));
            }
            // Near a critical point the energy change drops under its own
            // rounding; accept a step within a few ulps that shrinks the gradient.
            if en <= e + 8.0 * f64::EPSILON * e {
                let gnn = gradient_unchecked(&tn).0.norm();
                if gnn < gn {
                    break Some((gnew, tn, en, gnn));
                }
            }
            h /= 2.0;
            if h < 1e-14 {
                break None;
            }
        };
        let Some((gnew, tn, en, gnn)) = accepted else {
            break StopReason::Stall;
        };
        flat = if e - en < opts.energy_plateau_tol { flat + 1 } else { 0 };
        g = gnew;
        t = tn;
        e = en;
        gn = gnn;
        energies.push(e);
        grad_norms.push(gn);
        steps += 1;
        h *= 1.1;
        if cond(&g) > 1e8 {
            anchor = &g * &anchor;
            base = t.clone();
            g = CMat::identity(n, n);
        }
        if plateau && flat >= opts.plateau_window {
            break StopReason::Plateau;
        }
    };
    let total = &g * &anchor;
    Descent { tensor: t, total, energies, grad_norms, steps, stop }
}

/// Recovers a soliton in the closure of the orbit of `t`: rotate to the
/// eigenbasis of m, drop small coefficients and flow the pruned tensor.
fn extract_limit(t: &StructureTensor, opts: &FlowOptions) -> Option<StructureTensor> {
    let n2 = t.norm_sq();
    let m = moment_unchecked(t) / re(n2);
    let (w, u) = eigh(&m);
    let beta = snap_all(&w, MAX_DENOMINATOR, 1e-3).ok()?;
    let e_beta: f64 = beta.iter().map(|b| crate::rational::to_f64(&(b * b))).sum();
    if (energy_unchecked(t) - e_beta).abs() > 1e-6 {
        return None;
    }
    let rotated = act_with(&u.adjoint(), &u, t);
    let mx = rotated.max_abs();
    for tau in [1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-3, 1e-2, 3e-2, 1e-1] {
        let entries: Vec<_> = rotated.entries().into_iter().filter(|e| e.3.norm() >= tau * mx).collect();
        let pruned = StructureTensor::from_products(t.dim(), &entries);
        if pruned.is_zero() {
            continue;
        }
        let d = descend(&pruned, opts, false, opts.polish_steps);
        let q = d.tensor;
        if soliton_residual(&q).ok()? > opts.soliton_tol {
            continue;
        }
        let wq = crate::linalg::eigvalsh(&(moment_unchecked(&q) / re(q.norm_sq())));
        match snap_all(&wq, MAX_DENOMINATOR, SNAP_TOL) {
            Ok(b) if b == beta => return Some(q),
            _ => continue,
        }
    }
    None
}

/// Runs the flow from mu and classifies its terminal point.
pub fn run_flow(mu: &StructureTensor, opts: &FlowOptions) -> Result<FlowTrace> {
    opts.validate()?;
    if mu.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let jordan_warning = (!is_jordan(mu, 1e-9)).then(|| jordan_defect(mu));
    let input_norm = mu.norm();
    let start = if opts.random_start {
        let g = random_group_element(mu.dim(), opts.seed);
        act(&g, mu)?
    } else {
        mu.clone()
    };
    let mut d = descend(&start, opts, true, opts.max_steps);
    let mut report = soliton_check(&d.tensor, opts.soliton_tol)?;
    if !report.is_soliton && d.stop != StopReason::MaxSteps {
        let p = descend(&d.tensor, opts, false, opts.polish_steps);
        d.energies.extend_from_slice(&p.energies[1..]);
        d.grad_norms.extend_from_slice(&p.grad_norms[1..]);
        d.steps += p.steps;
        d.total = &p.total * &d.total;
        d.tensor = p.tensor;
        if p.stop == StopReason::Gradient {
            d.stop = StopReason::Gradient;
        }
        report = soliton_check(&d.tensor, opts.soliton_tol)?;
    }
    let mut orbit_terminal = d.tensor.clone();
    if !opts.renormalize {
        // Same point of the orbit, at the scale fixed by |det g| = 1.
        let g = det_normalized(d.total.clone());
        if let Some(ginv) = g.clone().try_inverse() {
            orbit_terminal = act_with(&g, &ginv, &start);
        } else {
            orbit_terminal = d.tensor.scale(re(input_norm));
        }
    }
    let mut terminal = orbit_terminal.clone();
    let mut extracted = false;
    if !report.is_soliton && opts.extract_limit && d.stop != StopReason::MaxSteps {
        if let Some(limit) = extract_limit(&d.tensor, opts) {
            report = soliton_check(&limit, opts.soliton_tol)?;
            terminal = limit;
            extracted = true;
        }
    }
    let terminal_type = soliton_type_with(&terminal, opts.soliton_tol).ok();
    Ok(FlowTrace {
        energies: d.energies,
        grad_norms: d.grad_norms,
        orbit_terminal,
        terminal,
        steps_taken: d.steps,
        converged: d.stop != StopReason::MaxSteps,
        stop: d.stop,
        extracted,
        terminal_report: report,
        terminal_type,
        jordan_warning,
    })
}

/// Gaussian complex matrix from a seeded ChaCha stream, rejected until its
/// condition number is below 1e3.
pub fn random_group_element(n: usize, seed: u64) -> GroupElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = CMat::from_fn(n, n, |_, _| {
            let re_part: f64 = StandardNormal.sample(&mut rng);
            let im_part: f64 = StandardNormal.sample(&mut rng);
            C::new(re_part, im_part)
        });
        if cond(&m) < 1e3 {
            if let Ok(g) = GroupElement::new(m) {
                return g;
            }
        }
    }
}

/// Haar-like unitary from the QR factor of a Gaussian matrix.
pub fn random_unitary(n: usize, seed: u64) -> GroupElement {
    let g = random_group_element(n, seed);
    let q = g.matrix().clone().qr().q();
    GroupElement::new(q).expect("unitary matrices are invertible")
}

/// g_t = diag(t^{a_1}, ..., t^{a_n}).
#[derive(Clone, Debug, PartialEq)]
pub struct DegenerationCurve {
    pub exponents: Vec<f64>,
}

impl DegenerationCurve {
    pub fn new(exponents: Vec<f64>) -> Self {
        DegenerationCurve { exponents }
    }

    /// (1, 2, ..., 2): in a basis x, x^2, ... it degenerates to mu_Heis.
    pub fn heisenberg(n: usize) -> Self {
        let mut a = vec![2.0; n];
        a[0] = 1.0;
        DegenerationCurve { exponents: a }
    }
}

/// g_t^{-1} . mu, i.e. mu_ij^k scaled by t^{a_i + a_j - a_k}.
pub fn apply_curve(mu: &StructureTensor, curve: &DegenerationCurve, t: f64) -> Result<StructureTensor> {
    if t == 0.0 {
        return Err(Error::ZeroParameter);
    }
    let n = mu.dim();
    if curve.exponents.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: curve.exponents.len() });
    }
    let a = &curve.exponents;
    let tc = Complex::new(t, 0.0);
    let mut out = StructureTensor::zeros(n);
    for (i, j, k, v) in mu.entries() {
        let s = if t > 0.0 { re(t.powf(a[i] + a[j] - a[k])) } else { tc.powf(a[i] + a[j] - a[k]) };
        out.set(i, j, k, v * s);
    }
    Ok(out)
}

/// A basis change putting mu in a basis x, x^2, w_3, ..., w_n with x and x^2
/// independent, so that the Heisenberg curve applies. None when every
/// candidate x has x^2 dependent on x.
pub fn heisenberg_frame(mu: &StructureTensor) -> Option<GroupElement> {
    let n = mu.dim();
    if n < 2 {
        return None;
    }
    let mut candidates: Vec<CVec> = (0..n).map(|i| crate::linalg::unit_vector(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            candidates.push(crate::linalg::unit_vector(n, i) + crate::linalg::unit_vector(n, j));
        }
    }
    candidates.push(CVec::from_element(n, re(1.0)));
    for x in candidates {
        let x2 = mu.eval_unchecked(&x, &x);
        let pair = CMat::from_columns(&[x.clone(), x2.clone()]);
        let sv = crate::linalg::singular_values(&pair);
        if sv[1] <= 1e-6 * sv[0] {
            continue;
        }
        let (rest, _) = nullspace(&pair.adjoint(), 1e-10, 0.0);
        let mut cols = vec![x, x2];
        cols.extend(rest);
        let b = CMat::from_columns(&cols);
        let binv = b.clone().try_inverse()?;
        return GroupElement::new(binv).ok();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moment::energy;

    fn t(n: usize, p: &[(usize, usize, usize, f64)]) -> StructureTensor {
        let v: Vec<_> = p.iter().map(|&(i, j, k, c)| (i, j, k, re(c))).collect();
        StructureTensor::from_products(n, &v)
    }

    #[test]
    fn heis_is_fixed() {
        let h = t(3, &[(0, 0, 1, 1.0)]);
        let tr = run_flow(&h, &FlowOptions::default()).unwrap();
        assert_eq!(tr.steps_taken, 0);
        assert_eq!(tr.stop, StopReason::Gradient);
        assert!((tr.terminal_energy() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn hyperbolic_from_random_basis() {
        let a22 = t(2, &[(0, 0, 0, 1.0), (0, 1, 1, 0.5)]);
        let g = random_group_element(2, 7);
        let start = act(&g, &a22).unwrap();
        let tr = run_flow(&start, &FlowOptions::default()).unwrap();
        assert!((tr.terminal_energy() - 1.0).abs() < 1e-6);
        assert!(tr.energies.windows(2).all(|w| w[1] <= w[0]));
        assert!(tr.terminal_report.is_soliton);
    }

    #[test]
    fn curve_identity_and_errors() {
        let mu = t(2, &[(0, 0, 0, 1.0), (0, 1, 1, 0.5)]);
        let c = DegenerationCurve::new(vec![0.0, 0.0]);
        assert_eq!(apply_curve(&mu, &c, 0.3).unwrap(), mu);
        assert!(matches!(apply_curve(&mu, &c, 0.0), Err(Error::ZeroParameter)));
        let bad = DegenerationCurve::new(vec![0.0]);
        assert!(apply_curve(&mu, &bad, 0.5).is_err());
    }

    #[test]
    fn curve_kills_tail() {
        let a63 = t(4, &[(0, 1, 2, 1.0), (0, 2, 3, 1.0), (1, 1, 3, 1.0)]);
        let a64 = t(4, &[(0, 1, 2, 1.0), (0, 2, 3, 1.0)]);
        let c = DegenerationCurve::new(vec![0.0, 1.0, 1.0, 1.0]);
        let d1 = apply_curve(&a63, &c, 1e-2).unwrap().distance(&a64);
        let d2 = apply_curve(&a63, &c, 1e-4).unwrap().distance(&a64);
        assert!((d1 - 1e-2).abs() < 1e-12 && (d2 - 1e-4).abs() < 1e-12);
    }

    #[test]
    fn trace_csv_shape() {
        let a22 = t(2, &[(0, 0, 0, 1.0), (0, 1, 1, 0.3)]);
        let tr = run_flow(&a22, &FlowOptions::default()).unwrap();
        let mut buf = Vec::new();
        tr.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.starts_with("step,energy,grad_norm\n"));
        assert_eq!(s.lines().count(), tr.energies.len() + 1);
        assert!(energy(&tr.terminal).unwrap() <= tr.energies[0] + 1e-12);
    }
}
