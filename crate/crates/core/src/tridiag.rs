//! Symmetric tridiagonal eigenvalues by the implicit QL method, optionally
//! tracking the first component of each normalized eigenvector (enough for
//! Golub–Welsch quadrature weights).

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// Eigen-decomposition output, sorted by ascending eigenvalue.
#[derive(Debug, Clone)]
pub struct TridiagEigen {
    pub values: Vec<f64>,
    /// First eigenvector components; empty unless requested.
    pub first: Vec<f64>,
}

/// `diag` has length `n`, `off` has length `n - 1` (`off[i]` couples `i`, `i+1`).
pub fn eigen(diag: &[f64], off: &[f64], want_first: bool) -> Result<TridiagEigen> {
    let n = diag.len();
    if n == 0 {
        return Ok(TridiagEigen {
            values: vec![],
            first: vec![],
        });
    }
    assert_eq!(off.len() + 1, n, "off-diagonal length must be n - 1");
    let mut d = diag.to_vec();
    let mut e: Vec<f64> = off.iter().copied().chain(std::iter::once(0.0)).collect();
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::NumericalFailure(format!(
                    "tridiagonal QL did not converge for eigenvalue {l} after {MAX_SWEEPS} sweeps"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = idx.iter().map(|&i| d[i]).collect();
    let first = if want_first {
        idx.iter().map(|&i| z[i]).collect()
    } else {
        vec![]
    };
    Ok(TridiagEigen { values, first })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        // [[2, 1], [1, 2]] → {1, 3}, eigenvectors (1,∓1)/√2
        let r = eigen(&[2.0, 2.0], &[1.0], true).unwrap();
        assert!((r.values[0] - 1.0).abs() < 1e-15);
        assert!((r.values[1] - 3.0).abs() < 1e-15);
        assert!((r.first[0].powi(2) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn discrete_laplacian() {
        // tridiag(-1, 2, -1): λ_k = 2 - 2 cos(kπ/(n+1))
        let n = 40;
        let r = eigen(&vec![2.0; n], &vec![-1.0; n - 1], true).unwrap();
        for (k, v) in r.values.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((v - exact).abs() < 1e-13, "{v} vs {exact}");
        }
        let s: f64 = r.first.iter().map(|z| z * z).sum();
        assert!((s - 1.0).abs() < 1e-13);
    }

    #[test]
    fn single_and_empty() {
        assert_eq!(eigen(&[4.5], &[], false).unwrap().values, vec![4.5]);
        assert!(eigen(&[], &[], false).unwrap().values.is_empty());
    }
}
