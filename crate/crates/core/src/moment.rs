//! Moment matrix, energy, soliton detection and typing.

use std::fmt;

use num_rational::Rational64;

use crate::algebra::{adjoin_unit, derivation_algebra, direct_product, inf_act_unchecked, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::{eigvalsh, inner, norm_sq, re, CMat, HermitianMatrix};
use crate::rational::{fmt_rational, snap_all, to_f64, MAX_DENOMINATOR, SNAP_TOL};

/// Default relative soliton residual.
pub const SOLITON_TOL: f64 = 1e-8;

fn nonzero(mu: &StructureTensor) -> Result<()> {
    if mu.is_zero() {
        Err(Error::ZeroTensor)
    } else {
        Ok(())
    }
}

/// M = sum_i (-2 L_i^* L_i + L_i L_i^*) over the standard basis.
pub fn moment_matrix(mu: &StructureTensor) -> Result<HermitianMatrix> {
    nonzero(mu)?;
    Ok(moment_unchecked(mu))
}

pub(crate) fn moment_unchecked(mu: &StructureTensor) -> HermitianMatrix {
    let n = mu.dim();
    let mut m = CMat::zeros(n, n);
    for l in mu.left_mults() {
        let la = l.adjoint();
        m += &l * &la - (&la * &l) * re(2.0);
    }
    (&m + m.adjoint()) * re(0.5)
}

/// m(mu) = M / ||mu||^2.
pub fn moment_map(mu: &StructureTensor) -> Result<HermitianMatrix> {
    Ok(moment_matrix(mu)? / re(mu.norm_sq()))
}

pub fn energy(mu: &StructureTensor) -> Result<f64> {
    nonzero(mu)?;
    Ok(energy_unchecked(mu))
}

pub(crate) fn energy_unchecked(mu: &StructureTensor) -> f64 {
    let n2 = mu.norm_sq();
    norm_sq(&moment_unchecked(mu)) / (n2 * n2)
}

/// grad E = 4/||mu||^2 (m . mu - E mu).
pub fn energy_gradient(mu: &StructureTensor) -> Result<StructureTensor> {
    nonzero(mu)?;
    Ok(gradient_unchecked(mu).0)
}

pub(crate) fn gradient_unchecked(mu: &StructureTensor) -> (StructureTensor, f64) {
    let n2 = mu.norm_sq();
    let m = moment_unchecked(mu) / re(n2);
    let e = norm_sq(&m);
    let g = inf_act_unchecked(&m, mu).add_scaled(mu, re(-e)).scale(re(4.0 / n2));
    (g, e)
}

#[derive(Clone, Debug)]
pub struct MomentReport {
    pub moment: HermitianMatrix,
    pub m: HermitianMatrix,
    pub energy: f64,
    /// c = -||M||^2 / ||mu||^2.
    pub c: f64,
    /// D = M - c I.
    pub d: HermitianMatrix,
    /// ||D . mu|| / ||mu||.
    pub soliton_residual: f64,
    pub is_soliton: bool,
    /// Largest |(M, D)| over the computed derivation basis.
    pub derivation_pairing: f64,
    pub tol: f64,
}

pub fn soliton_check(mu: &StructureTensor, tol: f64) -> Result<MomentReport> {
    nonzero(mu)?;
    let n = mu.dim();
    let n2 = mu.norm_sq();
    let moment = moment_unchecked(mu);
    let m = &moment / re(n2);
    let energy = norm_sq(&m);
    let c = -norm_sq(&moment) / n2;
    let d = &moment - CMat::identity(n, n) * re(c);
    let soliton_residual = inf_act_unchecked(&d, mu).norm() / n2.sqrt();
    let derivation_pairing = derivation_algebra(mu)
        .basis
        .iter()
        .map(|der| inner(&moment, der).norm())
        .fold(0.0, f64::max);
    Ok(MomentReport {
        moment,
        m,
        energy,
        c,
        d,
        soliton_residual,
        is_soliton: soliton_residual <= tol,
        derivation_pairing,
        tol,
    })
}

/// Relative residual only, without the derivation pairing.
pub fn soliton_residual(mu: &StructureTensor) -> Result<f64> {
    nonzero(mu)?;
    let n = mu.dim();
    let n2 = mu.norm_sq();
    let moment = moment_unchecked(mu);
    let c = -norm_sq(&moment) / n2;
    let d = &moment - CMat::identity(n, n) * re(c);
    Ok(inf_act_unchecked(&d, mu).norm() / n2.sqrt())
}

/// The type (d_1 < ... < d_r; m_1, ..., m_r) with its beta and energy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonType {
    pub degrees: Vec<i64>,
    pub multiplicities: Vec<usize>,
    /// Ascending eigenvalues of m(mu).
    pub beta: Vec<Rational64>,
    pub energy: Rational64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl SolitonType {
    /// Builds the type from an ascending rational beta with sum -1.
    pub fn from_beta(beta: Vec<Rational64>) -> SolitonType {
        let energy: Rational64 = beta.iter().map(|b| b * b).sum();
        let shifted: Vec<Rational64> = beta.iter().map(|b| b + energy).collect();
        let mut values: Vec<Rational64> = Vec::new();
        let mut multiplicities = Vec::new();
        for v in shifted {
            if values.last() == Some(&v) {
                *multiplicities.last_mut().unwrap() += 1;
            } else {
                values.push(v);
                multiplicities.push(1);
            }
        }
        let lcm = values.iter().fold(1i64, |acc, v| acc / gcd(acc, *v.denom()) * v.denom());
        let ints: Vec<i64> = values.iter().map(|v| (v * lcm).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &x| gcd(acc, x));
        let degrees = if g == 0 { ints } else { ints.iter().map(|x| x / g).collect() };
        SolitonType { degrees, multiplicities, beta, energy }
    }

    pub fn dim(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn beta_f64(&self) -> Vec<f64> {
        self.beta.iter().map(to_f64).collect()
    }

    pub fn beta_text(&self) -> Vec<String> {
        self.beta.iter().map(fmt_rational).collect()
    }
}

impl fmt::Display for SolitonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.degrees.iter().map(i64::to_string).collect();
        let m: Vec<String> = self.multiplicities.iter().map(usize::to_string).collect();
        write!(f, "({};{})", d.join("<"), m.join(","))
    }
}

/// Snaps the eigenvalues of m(mu) of a soliton to rationals.
pub fn soliton_type(mu: &StructureTensor) -> Result<SolitonType> {
    soliton_type_with(mu, SOLITON_TOL)
}

pub fn soliton_type_with(mu: &StructureTensor, tol: f64) -> Result<SolitonType> {
    let r = soliton_residual(mu)?;
    if r > tol {
        return Err(Error::NotSoliton(r));
    }
    let w = eigvalsh(&moment_map(mu)?);
    let beta = snap_all(&w, MAX_DENOMINATOR, SNAP_TOL)?;
    // Eigenvalues that agree to the multiplicity gap must snap to one value.
    for (pair, wpair) in beta.windows(2).zip(w.windows(2)) {
        if (wpair[1] - wpair[0]).abs() < 1e-6 && pair[0] != pair[1] {
            return Err(Error::SnapFailed(wpair[1]));
        }
    }
    Ok(SolitonType::from_beta(beta))
}

/// ||m(mu) + I/n||.
pub fn sl_residual(mu: &StructureTensor) -> Result<f64> {
    let m = moment_map(mu)?;
    let n = mu.dim();
    Ok(norm_sq(&(m + CMat::identity(n, n) * re(1.0 / n as f64))).sqrt())
}

/// c_mu = -||M||^2 / ||mu||^2, so that M = c_mu I + D at a soliton.
pub fn soliton_constant(mu: &StructureTensor) -> Result<f64> {
    let m = moment_matrix(mu)?;
    Ok(-norm_sq(&m) / mu.norm_sq())
}

/// mu x c nu with c = sqrt(c_mu / c_nu); the result is a soliton when both
/// factors are.
pub fn soliton_product(mu: &StructureTensor, nu: &StructureTensor) -> Result<StructureTensor> {
    let c = (soliton_constant(mu)? / soliton_constant(nu)?).sqrt();
    Ok(direct_product(mu, &nu.scale(re(c))))
}

/// Unitalization of sqrt(c) mu with c = (2n+1)/(-c_mu).
pub fn soliton_unitalize(mu: &StructureTensor) -> Result<StructureTensor> {
    let n = mu.dim() as f64;
    let c = (2.0 * n + 1.0) / -soliton_constant(mu)?;
    adjoin_unit(&mu.scale(re(c.sqrt())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::diag_real;

    fn t(n: usize, p: &[(usize, usize, usize, f64)]) -> StructureTensor {
        let v: Vec<_> = p.iter().map(|&(i, j, k, c)| (i, j, k, re(c))).collect();
        StructureTensor::from_products(n, &v)
    }

    fn close(a: &CMat, b: &CMat) -> bool {
        norm_sq(&(a - b)).sqrt() < 1e-12
    }

    #[test]
    fn moment_examples() {
        assert!(close(&moment_matrix(&t(2, &[(0, 0, 1, 1.0)])).unwrap(), &diag_real(&[-2.0, 1.0])));
        assert!(close(&moment_matrix(&t(2, &[(0, 0, 0, 1.0), (0, 1, 1, 0.5)])).unwrap(), &diag_real(&[-1.5, 0.0])));
        assert!(close(&moment_matrix(&t(1, &[(0, 0, 0, 1.0)])).unwrap(), &diag_real(&[-1.0])));
        assert!(matches!(moment_matrix(&StructureTensor::zeros(2)), Err(Error::ZeroTensor)));
    }

    #[test]
    fn heis_energy_and_type() {
        let h = t(2, &[(0, 0, 1, 1.0)]);
        assert!((energy(&h).unwrap() - 5.0).abs() < 1e-14);
        let ty = soliton_type(&h).unwrap();
        assert_eq!(ty.to_string(), "(1<2;1,1)");
        assert_eq!(ty.energy, Rational64::from_integer(5));
        assert_eq!(ty.beta, vec![Rational64::from_integer(-2), Rational64::from_integer(1)]);
    }

    #[test]
    fn semisimple_type() {
        let a24 = t(2, &[(0, 0, 0, 1.0), (1, 1, 1, 1.0)]);
        let ty = soliton_type(&a24).unwrap();
        assert_eq!(ty.to_string(), "(0;2)");
        assert_eq!(ty.energy, Rational64::new(1, 2));
        assert!(sl_residual(&a24).unwrap() < 1e-14);
    }

    #[test]
    fn type_from_beta() {
        let b = |p, q| Rational64::new(p, q);
        let ty = SolitonType::from_beta(vec![b(-5, 6), b(-1, 3), b(1, 6)]);
        assert_eq!(ty.to_string(), "(0<1<2;1,1,1)");
        assert_eq!(ty.energy, b(5, 6));
        let ty = SolitonType::from_beta(vec![b(-2, 1), b(0, 1), b(1, 1)]);
        assert_eq!(ty.to_string(), "(3<5<6;1,1,1)");
        let ty = SolitonType::from_beta(vec![b(-1, 1), b(-1, 7), b(-4, 7), b(5, 7)].into_iter().collect());
        assert_eq!(ty.energy, b(13, 7));
    }

    #[test]
    fn lambda_family_point() {
        // n1 n2 = n3, n1 n3 = n4 (b = c = 1, a = d = 0)
        let l = t(4, &[(0, 1, 2, 1.0), (0, 2, 3, 1.0)]);
        assert!(close(&moment_matrix(&l).unwrap(), &diag_real(&[-4.0, -2.0, 0.0, 2.0])));
        assert!(soliton_check(&l, SOLITON_TOL).unwrap().is_soliton);
    }

    #[test]
    fn heis_sl_residual() {
        let h = t(2, &[(0, 0, 1, 1.0)]);
        // m + I/2 = diag(-3/2, 3/2)
        assert!((sl_residual(&h).unwrap() - (4.5f64).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn product_constant() {
        let a23 = t(2, &[(0, 0, 1, 1.0)]);
        let a11 = t(1, &[(0, 0, 0, 1.0)]);
        let p = soliton_product(&a23, &a11).unwrap();
        assert!((p.get(2, 2, 2).re - 5f64.sqrt()).abs() < 1e-12);
        assert!(soliton_check(&p, SOLITON_TOL).unwrap().is_soliton);
    }

    #[test]
    fn unitalize_block_moment() {
        let z = crate::algebra::trivial(2);
        let u = adjoin_unit(&z).unwrap();
        let m = moment_matrix(&u).unwrap();
        assert!((m[(2, 2)].re + 5.0).abs() < 1e-12);
        let a23 = t(2, &[(0, 0, 1, 1.0)]);
        let h = soliton_unitalize(&a23).unwrap();
        assert!((energy(&h).unwrap() - 5.0 / 6.0).abs() < 1e-12);
    }
}
