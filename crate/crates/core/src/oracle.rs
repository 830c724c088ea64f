//! Independent construction of the monic orthogonal polynomials of `ν_N` by
//! Gram–Schmidt with a Gauss quadrature inner product.
//!
//! `⟨f, g⟩ = ∫ f g / |x - c| dμ + N f(c) g(c)`, with the integral taken by the
//! 200-node Gauss rule of `μ`. Polynomials are represented in the basis
//! `P_0, …, P_n` of monic `μ`-orthogonal polynomials, which keeps the Gram
//! matrix far better conditioned than the monomial basis.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geronimus::GeronimusContext;
use crate::measures::monomial_coefficients;
use crate::quadrature::{GaussRule, ORACLE_NODES};

/// Largest degree the oracle accepts.
pub const ORACLE_MAX_DEGREE: usize = 8;
/// Condition number of the diagonally scaled Gram matrix above which the
/// oracle refuses to answer.
pub const CONDITION_LIMIT: f64 = 1e12;

#[derive(Debug, Clone, Serialize)]
pub struct OracleFamily {
    /// `basis[n][k]`: coefficient of `P_k` in the degree-`n` polynomial.
    pub basis: Vec<Vec<f64>>,
    /// Ascending monomial coefficients.
    pub monomial: Vec<Vec<f64>>,
    /// Squared `ν_N`-norms.
    pub norms: Vec<f64>,
    pub condition: f64,
}

fn gram_matrix(ctx: &GeronimusContext, n_max: usize) -> Result<DMatrix<f64>> {
    let rule = GaussRule::new(ctx.spec(), ORACLE_NODES)?;
    let c = ctx.shift();
    let t = ctx.recurrence();
    let values = |x: f64| -> Vec<f64> { (0..=n_max).map(|k| t.eval(k, x).value).collect() };
    let mut g = DMatrix::<f64>::zeros(n_max + 1, n_max + 1);
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let p = values(x);
        let wx = w / (x - c).abs();
        for i in 0..=n_max {
            for j in 0..=i {
                g[(i, j)] += wx * p[i] * p[j];
            }
        }
    }
    if ctx.mass() > 0.0 {
        let p = values(c);
        for i in 0..=n_max {
            for j in 0..=i {
                g[(i, j)] += ctx.mass() * p[i] * p[j];
            }
        }
    }
    for i in 0..=n_max {
        for j in 0..i {
            g[(j, i)] = g[(i, j)];
        }
    }
    Ok(g)
}

fn scaled_condition(g: &DMatrix<f64>) -> f64 {
    let d: Vec<f64> = (0..g.nrows()).map(|i| 1.0 / g[(i, i)].sqrt()).collect();
    let s = DMatrix::from_fn(g.nrows(), g.ncols(), |i, j| g[(i, j)] * d[i] * d[j]);
    let eig = s.symmetric_eigenvalues();
    let (lo, hi) = eig
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    if lo <= 0.0 {
        f64::INFINITY
    } else {
        hi / lo
    }
}

/// Monic orthogonal polynomials of `ν_N` up to degree `n_max ≤ 8`.
pub fn gram_schmidt_oracle(ctx: &GeronimusContext, n_max: usize) -> Result<OracleFamily> {
    if n_max > ORACLE_MAX_DEGREE || n_max > ctx.n_max() {
        return Err(Error::DegreeOutOfRange {
            requested: n_max,
            available: ORACLE_MAX_DEGREE.min(ctx.n_max()),
        });
    }
    let g = gram_matrix(ctx, n_max)?;
    let condition = scaled_condition(&g);
    if condition > CONDITION_LIMIT {
        return Err(Error::IllConditioned {
            condition,
            limit: CONDITION_LIMIT,
        });
    }
    let inner = |u: &[f64], v: &[f64]| -> f64 {
        let mut s = 0.0;
        for (i, &a) in u.iter().enumerate() {
            for (j, &b) in v.iter().enumerate() {
                s += a * b * g[(i, j)];
            }
        }
        s
    };

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n_max + 1);
    let mut norms = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut q = vec![0.0; n + 1];
        q[n] = 1.0;
        // modified Gram–Schmidt, two passes
        for _ in 0..2 {
            for (k, prev) in basis.iter().enumerate() {
                let proj = inner(&q, prev) / norms[k];
                for (qi, pi) in q.iter_mut().zip(prev) {
                    *qi -= proj * pi;
                }
            }
        }
        norms.push(inner(&q, &q));
        basis.push(q);
    }

    let t = ctx.recurrence();
    let p_mono = monomial_coefficients(&t.beta, &t.gamma, n_max);
    let monomial = basis
        .iter()
        .map(|q| {
            let mut out = vec![0.0; q.len()];
            for (k, &a) in q.iter().enumerate() {
                for (i, &m) in p_mono[k].iter().enumerate() {
                    out[i] += a * m;
                }
            }
            out
        })
        .collect();
    Ok(OracleFamily {
        basis,
        monomial,
        norms,
        condition,
    })
}

/// Monomial coefficients of `P_n + Λ_n^c P_{n-1}`.
pub fn connection_monomials(ctx: &GeronimusContext, n: usize) -> Vec<f64> {
    let t = ctx.recurrence();
    let p = monomial_coefficients(&t.beta, &t.gamma, n);
    let mut out = p[n].clone();
    if n > 0 {
        let lam = ctx.lambda(n);
        for (o, &c) in out.iter_mut().zip(&p[n - 1]) {
            *o += lam * c;
        }
    }
    out
}

/// Largest coefficientwise relative difference between the oracle and the
/// connection formula, for each degree `0..=n_max`. Coefficients smaller than
/// `1e-12` times the largest one of their degree are compared against that
/// largest one instead.
pub fn oracle_discrepancy(ctx: &GeronimusContext, oracle: &OracleFamily) -> Vec<f64> {
    oracle
        .monomial
        .iter()
        .enumerate()
        .map(|(n, q)| {
            let p = connection_monomials(ctx, n);
            let scale = p.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            q.iter()
                .zip(&p)
                .fold(0.0f64, |m, (a, b)| {
                    m.max((a - b).abs() / b.abs().max(1e-12 * scale))
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::MeasureSpec;

    #[test]
    fn degree_one_is_centre_of_mass() {
        let ctx = GeronimusContext::new(MeasureSpec::laguerre(0.0).unwrap(), -1.0, 0.05, 8).unwrap();
        let o = gram_schmidt_oracle(&ctx, 1).unwrap();
        let rule = GaussRule::new(ctx.spec(), ORACLE_NODES).unwrap();
        let m0 = rule.integrate(|x| 1.0 / (x + 1.0)) + 0.05;
        let m1 = rule.integrate(|x| x / (x + 1.0)) - 0.05;
        let q1 = &o.monomial[1];
        assert!((q1[1] - 1.0).abs() < 1e-14);
        assert!((q1[0] + m1 / m0).abs() < 1e-12 * (m1 / m0).abs());
    }

    #[test]
    fn rejects_high_degree() {
        let ctx = GeronimusContext::new(MeasureSpec::laguerre(0.0).unwrap(), -1.0, 0.05, 12).unwrap();
        assert!(matches!(
            gram_schmidt_oracle(&ctx, 9),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }
}
