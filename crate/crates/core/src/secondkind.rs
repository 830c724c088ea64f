//! Functions of the second kind `F_n(c) = ∫ P_n(x) / (x - c) dμ(x)` for a
//! real shift outside the support.
//!
//! `F_n` is the minimal solution of the three-term recurrence at `c`, so it is
//! computed through the ratios `r_{n-1} = F_n / F_{n-1}` obtained by the
//! backward continued fraction `r_{n-1} = γ_n / ((c - β_n) - r_n)` started from
//! a zero tail. The depth is doubled until two successive tables agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::{Family, MeasureSpec};

/// Minimum distance between the shift and the support.
pub const SUPPORT_MARGIN: f64 = 1e-10;
/// Extra depth added to the requested degree before the first pass.
const INITIAL_EXTRA_DEPTH: usize = 60;
const MAX_DOUBLINGS: usize = 4;
const RATIO_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Serialize)]
pub struct SecondKindTable {
    pub c: f64,
    /// `f[k] = F_{k-1}`, so `f[0] = F_{-1} = 1`.
    pub f: Vec<f64>,
    /// `r[k] = r_{k-1} = F_k / F_{k-1}`, so `r[0] = F_0`.
    pub r: Vec<f64>,
    /// Continued-fraction depth at which the table was certified.
    pub depth: usize,
}

impl SecondKindTable {
    pub fn max_degree(&self) -> usize {
        self.f.len() - 2
    }

    /// `F_n` for `n >= -1`.
    pub fn value(&self, n: isize) -> f64 {
        self.f[(n + 1) as usize]
    }

    /// `r_m = F_{m+1} / F_m` for `m >= -1`.
    pub fn ratio(&self, m: isize) -> f64 {
        self.r[(m + 1) as usize]
    }
}

/// Checks `c` against the support of `spec` with the standard margin.
pub fn check_shift(spec: &MeasureSpec, c: f64) -> Result<()> {
    if c.is_finite() && spec.distance_to_support(c) > SUPPORT_MARGIN {
        Ok(())
    } else {
        let (a, b) = spec.support();
        Err(Error::ShiftInsideSupport { c, a, b })
    }
}

/// Additional starting depth for shifts close to the support, where the
/// minimal solution decays slowly: `~ exp(-4√(n·d))` on `[0, ∞)` and
/// `~ exp(-2n√(2d))` on `[-1, 1]`, `d` being the distance to the support.
fn proximity_depth(spec: &MeasureSpec, c: f64) -> usize {
    let d = spec.distance_to_support(c);
    let extra = match spec.family() {
        Family::Laguerre => 20.0 / d,
        Family::Jacobi => 20.0 / d.sqrt(),
    };
    extra.min(1e6).ceil() as usize
}

/// `r_0, …, r_{count-1}` from a continued fraction of the given depth.
fn backward_ratios(spec: &MeasureSpec, c: f64, depth: usize, count: usize) -> Vec<f64> {
    let mut out = vec![0.0; count];
    let mut r = 0.0;
    for k in (1..=depth).rev() {
        let (beta_k, gamma_k) = spec.coefficients(k);
        r = gamma_k / ((c - beta_k) - r);
        if k - 1 < count {
            out[k - 1] = r;
        }
    }
    out
}

fn max_relative_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = (x - y).abs();
            if d == 0.0 {
                0.0
            } else {
                d / x.abs().max(y.abs())
            }
        })
        .fold(0.0, f64::max)
}

/// `F_n(c)` for `n = -1..=n_max` together with the ratios `r_{n-1}`.
pub fn second_kind(spec: &MeasureSpec, c: f64, n_max: usize) -> Result<SecondKindTable> {
    check_shift(spec, c)?;
    let count = n_max.max(1);
    let mut depth = n_max + INITIAL_EXTRA_DEPTH + proximity_depth(spec, c);
    let mut prev = backward_ratios(spec, c, depth, count);
    let mut converged = None;
    for _ in 0..MAX_DOUBLINGS {
        depth *= 2;
        let cur = backward_ratios(spec, c, depth, count);
        let diff = max_relative_diff(&prev, &cur);
        prev = cur;
        if diff <= RATIO_TOL {
            converged = Some(depth);
            break;
        }
    }
    let depth = converged.ok_or_else(|| {
        Error::NumericalFailure(format!(
            "continued fraction for F_n({c}) not converged at depth {depth}"
        ))
    })?;

    let (beta0, _) = spec.coefficients(0);
    let f0 = spec.total_mass() / (beta0 - c + prev[0]);
    let mut r = Vec::with_capacity(n_max + 1);
    r.push(f0);
    r.extend_from_slice(&prev[..n_max]);
    let mut f = Vec::with_capacity(n_max + 2);
    f.push(1.0);
    for k in 0..=n_max {
        let last = f[k];
        f.push(last * r[k]);
    }
    Ok(SecondKindTable { c, f, r, depth })
}

/// `F_0(c) = ∫ dμ(x) / (x - c)`.
pub fn f0(spec: &MeasureSpec, c: f64) -> Result<f64> {
    Ok(second_kind(spec, c, 0)?.value(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn legendre_closed_forms() {
        let leg = MeasureSpec::jacobi(0.0, 0.0).unwrap();
        let t = second_kind(&leg, -2.0, 3).unwrap();
        let ln3 = 3f64.ln();
        assert_relative_eq!(t.value(0), ln3, max_relative = 1e-14);
        assert_relative_eq!(t.value(1), 2.0 - 2.0 * ln3, max_relative = 1e-13);
        assert_relative_eq!(t.ratio(0), (2.0 - 2.0 * ln3) / ln3, max_relative = 1e-13);
        assert_relative_eq!(t.ratio(0), -0.17952155, epsilon = 1e-8);
        assert_eq!(t.ratio(-1), t.value(0));
        assert_eq!(t.value(-1), 1.0);
    }

    #[test]
    fn rejects_shift_in_support() {
        let lag = MeasureSpec::laguerre(0.0).unwrap();
        assert!(matches!(f0(&lag, 0.5), Err(Error::ShiftInsideSupport { .. })));
        assert!(f0(&lag, -1e-12).is_err());
        assert!(f0(&lag, 0.0).is_err());
        let jac = MeasureSpec::jacobi(0.5, 1.0).unwrap();
        assert!(f0(&jac, 1.0 + 1e-11).is_err());
        assert!(f0(&jac, f64::NAN).is_err());
    }

    #[test]
    fn sign_below_and_above_support() {
        let jac = MeasureSpec::jacobi(2.0, -0.5).unwrap();
        assert!(f0(&jac, -1.5).unwrap() > 0.0);
        assert!(f0(&jac, 1.5).unwrap() < 0.0);
    }

    #[test]
    fn ratios_reconstruct_values() {
        let lag = MeasureSpec::laguerre(0.5).unwrap();
        let t = second_kind(&lag, -0.1, 30).unwrap();
        for n in 0..=30isize {
            let lhs = t.ratio(n - 1) * t.value(n - 1);
            assert_relative_eq!(lhs, t.value(n), max_relative = 1e-13);
        }
    }
}
