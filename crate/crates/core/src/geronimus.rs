//! Families generated by the Geronimus transformation
//! `dν_N = dμ / |x - c| + N δ(x - c)`:
//!
//! * `Q_n^c`: monic orthogonal polynomials of `ν = ν_0`,
//! * `P_n^{c,[1]}`: monic kernel polynomials (orthogonal w.r.t. `|x - c| dμ`),
//! * `Q_n^{c,N}`: monic orthogonal polynomials of `ν_N`.
//!
//! The measure is oriented so that `ν` is positive on both sides of the
//! support: `s = +1` for `c < a` and `s = -1` for `c > b`, with
//! `dν = s·dμ/(x - c)`. Monic polynomials do not depend on `s`; the
//! formulas for `B_n^c` in terms of `μ`-quantities carry the factor `s`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::{
    classical_recurrence, eval_three_term, eval_three_term_pair, MeasureSpec, PolyEval,
    RecurrenceTable, CONFLUENT_SWITCH,
};
use crate::secondkind::{second_kind, SecondKindTable};

/// Width of the removable-singularity branch of `P_n^{c,[1]}` around `c`.
pub const REMOVABLE_SWITCH: f64 = 1e-8;

/// Which side of the support the shift sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `c < a`: zeros decrease with `N`, the smallest one is attracted by `c`.
    Below,
    /// `c > b`: zeros increase with `N`, the largest one is attracted by `c`.
    Above,
}

impl Side {
    pub fn orientation(self) -> f64 {
        match self {
            Side::Below => 1.0,
            Side::Above => -1.0,
        }
    }
}

#[derive(Debug)]
struct ShiftTables {
    spec: MeasureSpec,
    c: f64,
    n_max: usize,
    side: Side,
    recurrence: RecurrenceTable,
    second_kind: SecondKindTable,
    /// `P_k(c)`, `k = 0..=n_max + 3`.
    p_at_c: Vec<f64>,
    /// `π_k = P_{k+1}(c) / P_k(c)`, `k = 0..=n_max + 2`.
    pi: Vec<f64>,
    beta_c: Vec<f64>,
    gamma_c: Vec<f64>,
    /// `‖Q_k^c‖²_ν`.
    norm_c: Vec<f64>,
    /// `Q_k^c(c)`.
    qc_at_c: Vec<f64>,
    /// `B_k^c`, index 0 unused.
    b_coef: Vec<f64>,
    /// Recurrence of the kernel polynomials `P_k^{c,[1]}`.
    beta_k: Vec<f64>,
    gamma_k: Vec<f64>,
}

/// Shift-dependent tables plus the mass `N`. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct GeronimusContext {
    tables: Arc<ShiftTables>,
    mass: f64,
}

/// Per-degree connection quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConnectionData {
    pub n: usize,
    /// `π_{n-1}`
    pub pi_prev: f64,
    /// `r_{n-1}`
    pub r_prev: f64,
    /// `B_n^c = K_{n-1}^c(c, c)`
    pub b: f64,
    /// `Λ_n^c(N)`
    pub lambda: f64,
    /// `κ_n = 1 + N B_n^c`
    pub kappa: f64,
    /// `Q_n^{c,N}(c)`
    pub qcn_at_c: f64,
}

/// Coefficients of `(x-c)² P_n^{c,[1]} = Q_{n+2}^c - d_n Q_{n+1}^c + e_n Q_n^c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelConnection {
    pub d: f64,
    pub e: f64,
    /// `e_n^c - γ_{n+2}^c`
    pub gap: f64,
}

fn check_mass(mass: f64) -> Result<()> {
    if mass.is_finite() && mass >= 0.0 {
        Ok(())
    } else {
        Err(Error::ParameterDomain {
            name: "N",
            value: mass,
            bound: ">= 0",
        })
    }
}

impl GeronimusContext {
    /// Prepares every table needed for degrees up to `n_max`.
    pub fn new(spec: MeasureSpec, c: f64, mass: f64, n_max: usize) -> Result<Self> {
        check_mass(mass)?;
        let top = n_max + 3;
        let second_kind = second_kind(&spec, c, top)?;
        let recurrence = classical_recurrence(&spec, top);
        let (a, _) = spec.support();
        let side = if c < a { Side::Below } else { Side::Above };
        let s = side.orientation();

        let p_at_c: Vec<f64> = (0..=top).map(|k| recurrence.eval(k, c).value).collect();
        if let Some(k) = p_at_c.iter().position(|&p| p == 0.0 || !p.is_finite()) {
            return Err(Error::DivisionHazard(format!("P_{k}(c) = {} at c = {c}", p_at_c[k])));
        }
        let pi: Vec<f64> = (0..top).map(|k| p_at_c[k + 1] / p_at_c[k]).collect();
        let r = |m: isize| second_kind.ratio(m);

        // β_n^c = β_n + r_n - r_{n-1} (n ≥ 1), β_0^c = β_0 + r_0
        let beta_c: Vec<f64> = (0..top)
            .map(|n| {
                let n_i = n as isize;
                if n == 0 {
                    recurrence.beta[0] + r(0)
                } else {
                    recurrence.beta[n] + r(n_i) - r(n_i - 1)
                }
            })
            .collect();
        // γ_0^c = ∫dν = s·F_0; γ_1^c = mu0·r_0 / (-F_0); γ_n^c = γ_{n-1} r_{n-1} / r_{n-2}
        let mut gamma_c = Vec::with_capacity(top);
        gamma_c.push(s * second_kind.value(0));
        for n in 1..top {
            let n_i = n as isize;
            let prev_gamma = if n == 1 {
                -recurrence.mu0
            } else {
                recurrence.gamma[n - 1]
            };
            gamma_c.push(prev_gamma * r(n_i - 1) / r(n_i - 2));
        }
        let mut norm_c = Vec::with_capacity(top);
        norm_c.push(gamma_c[0]);
        for n in 1..top {
            norm_c.push(norm_c[n - 1] * gamma_c[n]);
        }

        let qc_at_c: Vec<f64> = (0..top)
            .map(|n| {
                if n == 0 {
                    1.0
                } else {
                    p_at_c[n] - r(n as isize - 1) * p_at_c[n - 1]
                }
            })
            .collect();
        let b_coef: Vec<f64> = (0..top)
            .map(|n| {
                if n == 0 {
                    f64::NAN
                } else {
                    -s * qc_at_c[n] * p_at_c[n - 1] / recurrence.norm_sq[n - 1]
                }
            })
            .collect();

        // P_k^{c,[1]}: β'_k = β_{k+1} + π_{k+1} - π_k, γ'_k = γ_k π_k / π_{k-1}
        let beta_k: Vec<f64> = (0..top - 1)
            .map(|k| recurrence.beta[k + 1] + pi[k + 1] - pi[k])
            .collect();
        let gamma_k: Vec<f64> = (0..top - 1)
            .map(|k| {
                if k == 0 {
                    0.0
                } else {
                    recurrence.gamma[k] * pi[k] / pi[k - 1]
                }
            })
            .collect();

        Ok(Self {
            tables: Arc::new(ShiftTables {
                spec,
                c,
                n_max,
                side,
                recurrence,
                second_kind,
                p_at_c,
                pi,
                beta_c,
                gamma_c,
                norm_c,
                qc_at_c,
                b_coef,
                beta_k,
                gamma_k,
            }),
            mass,
        })
    }

    /// Same shift tables, different mass.
    pub fn with_mass(&self, mass: f64) -> Result<Self> {
        check_mass(mass)?;
        Ok(Self {
            tables: Arc::clone(&self.tables),
            mass,
        })
    }

    pub fn spec(&self) -> &MeasureSpec {
        &self.tables.spec
    }

    pub fn shift(&self) -> f64 {
        self.tables.c
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn n_max(&self) -> usize {
        self.tables.n_max
    }

    pub fn side(&self) -> Side {
        self.tables.side
    }

    pub fn recurrence(&self) -> &RecurrenceTable {
        &self.tables.recurrence
    }

    pub fn second_kind(&self) -> &SecondKindTable {
        &self.tables.second_kind
    }

    /// Density of `ν` with respect to Lebesgue measure on the support.
    pub fn nu_density(&self, x: f64) -> f64 {
        self.tables.spec.weight(x) / (x - self.tables.c).abs()
    }

    /// `1 / |x - c|`, the factor turning `dμ` into `dν`.
    pub fn nu_factor(&self, x: f64) -> f64 {
        1.0 / (x - self.tables.c).abs()
    }

    /// `π_k = P_{k+1}(c) / P_k(c)`.
    pub fn pi(&self, k: usize) -> f64 {
        self.tables.pi[k]
    }

    /// `r_m = F_{m+1}(c) / F_m(c)`, `m >= -1`.
    pub fn r(&self, m: isize) -> f64 {
        self.tables.second_kind.ratio(m)
    }

    /// `P_k(c)`.
    pub fn p_at_c(&self, k: usize) -> f64 {
        self.tables.p_at_c[k]
    }

    /// `(β_n^c, γ_n^c)` tables, `γ_0^c = ∫dν`.
    pub fn geronimus_recurrence(&self) -> (&[f64], &[f64]) {
        (&self.tables.beta_c, &self.tables.gamma_c)
    }

    /// Recurrence coefficients of the kernel polynomials `P_k^{c,[1]}`.
    pub fn christoffel_recurrence(&self) -> (&[f64], &[f64]) {
        (&self.tables.beta_k, &self.tables.gamma_k)
    }

    /// `‖Q_n^c‖²_ν`.
    pub fn norm_sq_c(&self, n: usize) -> f64 {
        self.tables.norm_c[n]
    }

    /// `Q_n^c(c)`.
    pub fn qc_at_c(&self, n: usize) -> f64 {
        self.tables.qc_at_c[n]
    }

    /// `Q_n^c = P_n - r_{n-1} P_{n-1}`.
    pub fn eval_qc(&self, n: usize, x: f64) -> PolyEval {
        if n == 0 {
            return PolyEval::ONE;
        }
        let (p, q) = self.tables.recurrence.eval_pair(n, x);
        p.add(q.scale(-self.r(n as isize - 1)))
    }

    /// `Q_n^c` through the modified three-term recurrence.
    pub fn eval_qc_recurrence(&self, n: usize, x: f64) -> PolyEval {
        eval_three_term(&self.tables.beta_c, &self.tables.gamma_c, n, x)
    }

    /// `P_n^{c,[1]}(x) = (P_{n+1}(x) - π_n P_n(x)) / (x - c)`.
    pub fn christoffel_kernel_poly(&self, n: usize, x: f64) -> PolyEval {
        let h = x - self.tables.c;
        if h.abs() < REMOVABLE_SWITCH {
            return self.christoffel_kernel_poly_recurrence(n, x);
        }
        let (p1, p) = self.tables.recurrence.eval_pair(n + 1, x);
        let f = p1.add(p.scale(-self.tables.pi[n]));
        let value = f.value / h;
        let d1 = (f.d1 - value) / h;
        let d2 = (f.d2 - 2.0 * d1) / h;
        PolyEval { value, d1, d2 }
    }

    /// `P_n^{c,[1]}` through its own three-term recurrence.
    pub fn christoffel_kernel_poly_recurrence(&self, n: usize, x: f64) -> PolyEval {
        eval_three_term(&self.tables.beta_k, &self.tables.gamma_k, n, x)
    }

    /// `K_n^c(x, y)` in Christoffel–Darboux form.
    pub fn kernel_c(&self, n: usize, x: f64, y: f64) -> f64 {
        let (qx1, qx) = eval_three_term_pair(&self.tables.beta_c, &self.tables.gamma_c, n + 1, x);
        if (x - y).abs() < CONFLUENT_SWITCH * (1.0 + x.abs()) {
            return (qx1.d1 * qx.value - qx1.value * qx.d1) / self.tables.norm_c[n];
        }
        let (qy1, qy) = eval_three_term_pair(&self.tables.beta_c, &self.tables.gamma_c, n + 1, y);
        (qx1.value * qy.value - qy1.value * qx.value) / ((x - y) * self.tables.norm_c[n])
    }

    /// `K_n^c(x, y)` by direct summation.
    pub fn kernel_c_sum(&self, n: usize, x: f64, y: f64) -> f64 {
        (0..=n)
            .map(|k| {
                self.eval_qc_recurrence(k, x).value * self.eval_qc_recurrence(k, y).value
                    / self.tables.norm_c[k]
            })
            .sum()
    }

    /// Confluent form `K_n^c(c, c)`.
    pub fn kernel_c_confluent(&self, n: usize) -> f64 {
        let c = self.tables.c;
        let q1 = self.eval_qc(n + 1, c);
        let q = self.eval_qc(n, c);
        (q1.d1 * q.value - q.d1 * q1.value) / self.tables.norm_c[n]
    }

    /// `Σ_{k≤n} Q_k^c(c)² / ‖Q_k^c‖²`.
    pub fn kernel_c_confluent_sum(&self, n: usize) -> f64 {
        (0..=n)
            .map(|k| self.tables.qc_at_c[k].powi(2) / self.tables.norm_c[k])
            .sum()
    }

    /// `B_n^c = -s Q_n^c(c) P_{n-1}(c) / ‖P_{n-1}‖²_μ`, `n >= 1`.
    pub fn b_coefficient(&self, n: usize) -> f64 {
        assert!(n >= 1, "B_n^c is defined for n >= 1");
        self.tables.b_coef[n]
    }

    /// `B_n^c = s (r_{n-1} P_{n-1}(c)² - P_n(c) P_{n-1}(c)) / ‖P_{n-1}‖²_μ`.
    pub fn b_coefficient_second_kind(&self, n: usize) -> f64 {
        assert!(n >= 1, "B_n^c is defined for n >= 1");
        let t = &self.tables;
        let pm = t.p_at_c[n - 1];
        t.side.orientation() * (self.r(n as isize - 1) * pm * pm - t.p_at_c[n] * pm)
            / t.recurrence.norm_sq[n - 1]
    }

    /// `κ_n = 1 + N B_n^c`.
    pub fn kappa(&self, n: usize) -> f64 {
        1.0 + self.mass * self.b_coefficient(n)
    }

    /// `Λ_n^c(N) = (π_{n-1} - r_{n-1}) / (1 + N B_n^c) - π_{n-1}`.
    pub fn lambda(&self, n: usize) -> f64 {
        assert!(n >= 1, "Λ_n^c is defined for n >= 1");
        let pi = self.tables.pi[n - 1];
        let r = self.r(n as isize - 1);
        if self.mass == 0.0 {
            return -r;
        }
        (pi - r) / self.kappa(n) - pi
    }

    /// `Λ_n^c(N)` written with `μ`-quantities only.
    pub fn lambda_from_mu(&self, n: usize) -> f64 {
        assert!(n >= 1, "Λ_n^c is defined for n >= 1");
        let t = &self.tables;
        let pi = t.pi[n - 1];
        let r = self.r(n as isize - 1);
        let pm = t.p_at_c[n - 1];
        let inv = 1.0 / (pi - r)
            - t.side.orientation() * self.mass * pm * pm / t.recurrence.norm_sq[n - 1];
        1.0 / inv - pi
    }

    pub fn connection_data(&self, n: usize) -> ConnectionData {
        assert!(n >= 1, "connection data is defined for n >= 1");
        let b = self.b_coefficient(n);
        debug_assert!(
            {
                let k = self.kernel_c_confluent_sum(n - 1);
                (b - k).abs() <= 1e-6 * b.abs().max(k.abs())
            },
            "B_{n}^c disagrees with K_{{n-1}}^c(c,c)"
        );
        let kappa = self.kappa(n);
        let lambda = self.lambda(n);
        debug_assert!(
            {
                let alt = self.lambda_from_mu(n);
                (lambda - alt).abs() <= 1e-6 * (lambda.abs() + self.tables.pi[n - 1].abs())
            },
            "Λ_{n}^c disagrees with its μ-only form"
        );
        ConnectionData {
            n,
            pi_prev: self.tables.pi[n - 1],
            r_prev: self.r(n as isize - 1),
            b,
            lambda,
            kappa,
            qcn_at_c: self.tables.qc_at_c[n] / (1.0 + self.mass * b),
        }
    }

    /// `Q_n^{c,N} = P_n + Λ_n^c P_{n-1}`.
    pub fn eval_qcn(&self, n: usize, x: f64) -> PolyEval {
        if n == 0 {
            return PolyEval::ONE;
        }
        let (p, q) = self.tables.recurrence.eval_pair(n, x);
        p.add(q.scale(self.lambda(n)))
    }

    /// `Q_n^{c,N} = (Q_n^c + N B_n^c (x - c) P_{n-1}^{c,[1]}) / κ_n`, with `Q_n^c`
    /// and `P_{n-1}^{c,[1]}` taken from their own recurrences.
    pub fn eval_qcn_connection(&self, n: usize, x: f64) -> PolyEval {
        if n == 0 {
            return PolyEval::ONE;
        }
        let q = self.eval_qc_recurrence(n, x);
        if self.mass == 0.0 {
            return q;
        }
        let k = self.christoffel_kernel_poly_recurrence(n - 1, x);
        let h = x - self.tables.c;
        let g = PolyEval {
            value: h * k.value,
            d1: k.value + h * k.d1,
            d2: 2.0 * k.d1 + h * k.d2,
        };
        let nb = self.mass * self.b_coefficient(n);
        q.add(g.scale(nb)).scale(1.0 / (1.0 + nb))
    }

    /// `d_n^c`, `e_n^c` and `e_n^c - γ_{n+2}^c`.
    ///
    /// `γ_{n+2}^c` is the coefficient of `Q_n^c` in the recurrence step that
    /// produces `Q_{n+2}^c`, stored here as `gamma_c[n + 1]`.
    pub fn kernel_connection_coeffs(&self, n: usize) -> KernelConnection {
        let t = &self.tables;
        let (q0, q1, q2) = (t.qc_at_c[n], t.qc_at_c[n + 1], t.qc_at_c[n + 2]);
        let pi = t.pi[n];
        let e = pi * q1 / q0;
        let d = q2 / q1 + pi;
        KernelConnection {
            d,
            e,
            gap: e - t.gamma_c[n + 1],
        }
    }

    /// `e_n^c - γ_{n+2}^c = Q_{n+1}^c(c)² / (‖Q_n^c‖² K_n^c(c,c))`.
    pub fn kernel_connection_gap_from_kernel(&self, n: usize) -> f64 {
        let t = &self.tables;
        t.qc_at_c[n + 1].powi(2) / (t.norm_c[n] * self.kernel_c_confluent_sum(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn legendre_ctx(mass: f64) -> GeronimusContext {
        GeronimusContext::new(MeasureSpec::jacobi(0.0, 0.0).unwrap(), -2.0, mass, 6).unwrap()
    }

    #[test]
    fn legendre_modified_coefficients_from_moments() {
        // ν = dx / (x + 2) on [-1, 1]: m0 = ln 3, m1 = 2 - 2 ln 3, m2 = 4 ln 3 - 4
        let ctx = legendre_ctx(0.0);
        let ln3 = 3f64.ln();
        let (m0, m1, m2) = (ln3, 2.0 - 2.0 * ln3, 4.0 * ln3 - 4.0);
        let (b, g) = ctx.geronimus_recurrence();
        assert_relative_eq!(g[0], m0, max_relative = 1e-14);
        assert_relative_eq!(b[0], m1 / m0, max_relative = 1e-13);
        assert_relative_eq!(g[1], m2 / m0 - (m1 / m0).powi(2), max_relative = 1e-12);
        assert_eq!(b[0], ctx.recurrence().beta[0] + ctx.r(0));
    }

    #[test]
    fn degree_zero_and_one() {
        let ctx = legendre_ctx(0.3);
        assert_eq!(ctx.eval_qc(0, 0.7), PolyEval::ONE);
        assert_eq!(ctx.eval_qcn(0, 0.7), PolyEval::ONE);
        assert_eq!(ctx.christoffel_kernel_poly(0, 0.2).value, 1.0);
        let x = 0.37;
        let (b, _) = ctx.geronimus_recurrence();
        assert_relative_eq!(ctx.eval_qc(1, x).value, x - b[0], max_relative = 1e-14);
        assert_relative_eq!(ctx.kernel_c_confluent(0), 1.0 / ctx.norm_sq_c(0), max_relative = 1e-13);
    }

    #[test]
    fn zero_mass_reduces_to_rational_modification() {
        let ctx = legendre_ctx(0.0);
        for n in 1..=6 {
            let d = ctx.connection_data(n);
            assert_eq!(d.lambda, -d.r_prev);
            assert_eq!(d.kappa, 1.0);
            for x in [-0.9, 0.1, 0.8] {
                assert_relative_eq!(ctx.eval_qcn(n, x).value, ctx.eval_qc(n, x).value, max_relative = 1e-14);
            }
        }
    }

    #[test]
    fn rejects_negative_mass() {
        let spec = MeasureSpec::laguerre(0.0).unwrap();
        assert!(GeronimusContext::new(spec, -1.0, -0.1, 3).is_err());
        let ctx = GeronimusContext::new(spec, -1.0, 0.0, 3).unwrap();
        assert!(ctx.with_mass(f64::INFINITY).is_err());
    }

    #[test]
    fn removable_singularity_branch() {
        let ctx = GeronimusContext::new(MeasureSpec::laguerre(0.0).unwrap(), -1.0, 0.0, 5).unwrap();
        let at = ctx.christoffel_kernel_poly(3, -1.0);
        let near = ctx.christoffel_kernel_poly(3, -1.0 + 1e-6);
        assert!(at.value != 0.0);
        assert_relative_eq!(at.value, near.value, max_relative = 1e-5);
    }

    #[test]
    fn above_support_has_positive_b() {
        let ctx = GeronimusContext::new(MeasureSpec::jacobi(2.0, -0.5).unwrap(), 1.5, 1.0, 10).unwrap();
        assert_eq!(ctx.side(), Side::Above);
        for n in 1..=10 {
            assert!(ctx.b_coefficient(n) > 0.0);
            assert!(ctx.norm_sq_c(n) > 0.0);
        }
    }

    #[test]
    fn kernel_connection_gap_matches_kernel_form() {
        for (spec, c) in [
            (MeasureSpec::laguerre(-0.5).unwrap(), -0.1),
            (MeasureSpec::laguerre(0.0).unwrap(), -5.0),
            (MeasureSpec::jacobi(0.5, 1.0).unwrap(), 3.0),
        ] {
            let ctx = GeronimusContext::new(spec, c, 0.0, 8).unwrap();
            for n in 0..=8 {
                let k = ctx.kernel_connection_coeffs(n);
                assert!(k.gap > 0.0);
                assert_relative_eq!(k.gap, ctx.kernel_connection_gap_from_kernel(n), max_relative = 1e-10);
                // (x - c)² P_n^{c,[1]} = Q_{n+2}^c - d Q_{n+1}^c + e Q_n^c
                for x in [0.3, 0.9] {
                    let lhs = (x - c).powi(2) * ctx.christoffel_kernel_poly_recurrence(n, x).value;
                    let rhs = ctx.eval_qc_recurrence(n + 2, x).value
                        - k.d * ctx.eval_qc_recurrence(n + 1, x).value
                        + k.e * ctx.eval_qc_recurrence(n, x).value;
                    assert_relative_eq!(lhs, rhs, max_relative = 1e-10, epsilon = 1e-12);
                }
            }
        }
    }
}
