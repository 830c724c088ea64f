//! Gauss rules with respect to the classical measures (Golub–Welsch).

use crate::error::Result;
use crate::measures::{classical_recurrence, MeasureSpec};
use crate::tridiag;

/// Number of nodes used by the reference quadrature oracles.
pub const ORACLE_NODES: usize = 200;

#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// `n`-point Gauss rule for `μ`: exact for polynomials of degree `2n - 1`.
    pub fn new(spec: &MeasureSpec, n: usize) -> Result<Self> {
        let table = classical_recurrence(spec, n);
        let (diag, off) = table.jacobi_matrix(n);
        let eig = tridiag::eigen(&diag, &off, true)?;
        let weights = eig.first.iter().map(|z| table.mu0 * z * z).collect();
        Ok(Self {
            nodes: eig.values,
            weights,
        })
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_point_laguerre() {
        let r = GaussRule::new(&MeasureSpec::laguerre(0.0).unwrap(), 3).unwrap();
        let expected = [0.4157745568, 2.2942803603, 6.2899450829];
        for (x, e) in r.nodes.iter().zip(expected) {
            assert!((x - e).abs() < 1e-9);
        }
        // ∫ x^5 e^{-x} = 120
        assert!((r.integrate(|x| x.powi(5)) - 120.0).abs() < 1e-10);
    }

    #[test]
    fn legendre_moments() {
        let r = GaussRule::new(&MeasureSpec::jacobi(0.0, 0.0).unwrap(), 10).unwrap();
        assert!((r.integrate(|x| x.powi(18)) - 2.0 / 19.0).abs() < 1e-14);
        assert!(r.integrate(|x| x.powi(7)).abs() < 1e-15);
    }
}
