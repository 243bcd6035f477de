//! Rational snapping of floating-point eigenvalues.

use num_rational::Rational64;

use crate::error::{Error, Result};

pub const MAX_DENOMINATOR: i64 = 64;
pub const SNAP_TOL: f64 = 1e-6;

/// Smallest-denominator continued-fraction convergent p/q of x with
/// q <= max_den and |x - p/q| <= tol.
pub fn snap(x: f64, max_den: i64, tol: f64) -> Result<Rational64> {
    if !x.is_finite() {
        return Err(Error::SnapFailed(x));
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i64;
        let h = a.checked_mul(h1).and_then(|v| v.checked_add(h0));
        let k = a.checked_mul(k1).and_then(|v| v.checked_add(k0));
        let (Some(h), Some(k)) = (h, k) else { break };
        if k > max_den {
            break;
        }
        if (x - h as f64 / k as f64).abs() <= tol {
            return Ok(Rational64::new(h, k));
        }
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let frac = r - a as f64;
        if frac == 0.0 {
            break;
        }
        r = 1.0 / frac;
    }
    Err(Error::SnapFailed(x))
}

pub fn snap_default(x: f64) -> Result<Rational64> {
    snap(x, MAX_DENOMINATOR, SNAP_TOL)
}

pub fn snap_all(xs: &[f64], max_den: i64, tol: f64) -> Result<Vec<Rational64>> {
    xs.iter().map(|&x| snap(x, max_den, tol)).collect()
}

pub fn to_f64(r: &Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// "p/q", or "p" when q = 1.
pub fn fmt_rational(r: &Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a fraction: `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
