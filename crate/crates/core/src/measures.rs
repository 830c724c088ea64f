//! Classical Laguerre and Jacobi measures: three-term recurrence, norms,
//! structure relation, monic evaluation and Christoffel–Darboux kernels.
//!
//! Laguerre: `dμ = x^α e^{-x} dx` on `[0, ∞)`.
//! Jacobi: `dμ = (1-x)^α (1+x)^β dx` on `[-1, 1]`.
//!
//! All polynomials are monic and satisfy
//! `x P_n = P_{n+1} + β_n P_n + γ_n P_{n-1}`, `P_{-1} = 0`, `P_0 = 1`.

use serde::{Deserialize, Serialize};
use statrs::function::{beta::ln_beta, gamma::ln_gamma};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Below this separation the Christoffel–Darboux quotient is replaced by
/// its confluent (derivative) form.
pub const CONFLUENT_SWITCH: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Laguerre,
    Jacobi,
}

/// A classical measure together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureSpec {
    family: Family,
    alpha: f64,
    beta: f64,
}

impl MeasureSpec {
    pub fn laguerre(alpha: f64) -> Result<Self> {
        check_exponent("alpha", alpha)?;
        Ok(Self {
            family: Family::Laguerre,
            alpha,
            beta: 0.0,
        })
    }

    pub fn jacobi(alpha: f64, beta: f64) -> Result<Self> {
        check_exponent("alpha", alpha)?;
        check_exponent("beta", beta)?;
        Ok(Self {
            family: Family::Jacobi,
            alpha,
            beta,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Second Jacobi exponent; zero for Laguerre.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Support endpoints `(a, b)`; `b` is `+∞` for Laguerre.
    pub fn support(&self) -> (f64, f64) {
        match self.family {
            Family::Laguerre => (0.0, f64::INFINITY),
            Family::Jacobi => (-1.0, 1.0),
        }
    }

    /// Signed distance from `c` to the support: negative inside.
    pub fn distance_to_support(&self, c: f64) -> f64 {
        let (a, b) = self.support();
        if c < a {
            a - c
        } else if c > b {
            c - b
        } else {
            -(c - a).min(b - c)
        }
    }

    /// Weight function (density of μ with respect to Lebesgue measure).
    pub fn weight(&self, x: f64) -> f64 {
        match self.family {
            Family::Laguerre => x.powf(self.alpha) * (-x).exp(),
            Family::Jacobi => (1.0 - x).powf(self.alpha) * (1.0 + x).powf(self.beta),
        }
    }

    /// Total mass `∫dμ`, computed through log-Gamma / log-Beta.
    pub fn total_mass(&self) -> f64 {
        match self.family {
            Family::Laguerre => ln_gamma(self.alpha + 1.0).exp(),
            Family::Jacobi => {
                let (a, b) = (self.alpha, self.beta);
                ((a + b + 1.0) * std::f64::consts::LN_2 + ln_beta(a + 1.0, b + 1.0)).exp()
            }
        }
    }

    /// Closed-form `(β_n, γ_n)`, with `γ_0 = 0`.
    pub fn coefficients(&self, n: usize) -> (f64, f64) {
        let nf = n as f64;
        let (a, b) = (self.alpha, self.beta);
        match self.family {
            Family::Laguerre => (2.0 * nf + a + 1.0, nf * (nf + a)),
            Family::Jacobi => {
                let s = 2.0 * nf + a + b;
                let beta_n = if n == 0 {
                    (b - a) / (a + b + 2.0)
                } else {
                    (b * b - a * a) / (s * (s + 2.0))
                };
                let gamma_n = match n {
                    0 => 0.0,
                    // (s - 1) cancels against (n + α + β) when α + β = -1
                    1 => 4.0 * (1.0 + a) * (1.0 + b) / ((a + b + 2.0).powi(2) * (a + b + 3.0)),
                    _ => {
                        4.0 * nf * (nf + a) * (nf + b) * (nf + a + b)
                            / ((s - 1.0) * s * s * (s + 1.0))
                    }
                };
                (beta_n, gamma_n)
            }
        }
    }

    pub fn structure_relation(&self) -> StructureRelation {
        StructureRelation { spec: *self }
    }
}

fn check_exponent(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > -1.0 {
        Ok(())
    } else {
        Err(Error::ParameterDomain {
            name,
            value: v,
            bound: "> -1",
        })
    }
}

/// Polynomial with ascending coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn eval<T: Scalar>(&self, x: T) -> T {
        self.0
            .iter()
            .rev()
            .fold(T::cst(0.0), |acc, &c| acc * x + T::cst(c))
    }

    pub fn degree(&self) -> usize {
        self.0
            .iter()
            .rposition(|&c| c != 0.0)
            .unwrap_or(0)
    }
}

/// `σ(x) P_n'(x) = a(x;n) P_n(x) + b(x;n) P_{n-1}(x)`.
#[derive(Debug, Clone, Copy)]
pub struct StructureRelation {
    spec: MeasureSpec,
}

impl StructureRelation {
    pub fn sigma(&self) -> Poly {
        match self.spec.family {
            Family::Laguerre => Poly(vec![0.0, 1.0]),
            Family::Jacobi => Poly(vec![1.0, 0.0, -1.0]),
        }
    }

    pub fn a(&self, n: usize) -> Poly {
        let nf = n as f64;
        match self.spec.family {
            Family::Laguerre => Poly(vec![nf]),
            Family::Jacobi => {
                if n == 0 {
                    return Poly(vec![0.0]);
                }
                let (a, b) = (self.spec.alpha, self.spec.beta);
                let s = 2.0 * nf + a + b;
                Poly(vec![-nf + 2.0 * nf * (nf + a) / s, -nf])
            }
        }
    }

    pub fn b(&self, n: usize) -> Poly {
        let nf = n as f64;
        match self.spec.family {
            Family::Laguerre => Poly(vec![nf * (nf + self.spec.alpha)]),
            Family::Jacobi => {
                let (a, b) = (self.spec.alpha, self.spec.beta);
                let s = 2.0 * nf + a + b;
                let v = match n {
                    0 => 0.0,
                    1 => 4.0 * (1.0 + a) * (1.0 + b) / ((a + b + 2.0).powi(2)),
                    _ => 4.0 * nf * (nf + a) * (nf + b) * (nf + a + b) / ((s - 1.0) * s * s),
                };
                Poly(vec![v])
            }
        }
    }
}

/// Value and first two derivatives of a polynomial at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct PolyEval {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

impl PolyEval {
    pub const ONE: PolyEval = PolyEval {
        value: 1.0,
        d1: 0.0,
        d2: 0.0,
    };

    pub fn scale(self, k: f64) -> Self {
        Self {
            value: k * self.value,
            d1: k * self.d1,
            d2: k * self.d2,
        }
    }

    pub fn add(self, o: Self) -> Self {
        Self {
            value: self.value + o.value,
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
        }
    }
}

/// Evaluates the monic three-term family defined by `beta`, `gamma` at degree
/// `n` and `n - 1` (the latter is zero for `n = 0`).
pub fn eval_three_term_pair(beta: &[f64], gamma: &[f64], n: usize, x: f64) -> (PolyEval, PolyEval) {
    let mut prev = PolyEval::default();
    let mut cur = PolyEval::ONE;
    for k in 0..n {
        let t = x - beta[k];
        let g = if k == 0 { 0.0 } else { gamma[k] };
        let next = PolyEval {
            value: t * cur.value - g * prev.value,
            d1: cur.value + t * cur.d1 - g * prev.d1,
            d2: 2.0 * cur.d1 + t * cur.d2 - g * prev.d2,
        };
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

pub fn eval_three_term(beta: &[f64], gamma: &[f64], n: usize, x: f64) -> PolyEval {
    eval_three_term_pair(beta, gamma, n, x).0
}

/// Monomial coefficients (ascending) of the monic family up to degree `n`.
pub fn monomial_coefficients(beta: &[f64], gamma: &[f64], n: usize) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = vec![vec![1.0]];
    for k in 0..n {
        let cur = &out[k];
        let mut next = vec![0.0; k + 2];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= beta[k] * c;
        }
        if k > 0 {
            for (i, &c) in out[k - 1].iter().enumerate() {
                next[i] -= gamma[k] * c;
            }
        }
        out.push(next);
    }
    out
}

/// Recurrence coefficients and norms of a classical measure up to `n_max`.
#[derive(Debug, Clone, Serialize)]
pub struct RecurrenceTable {
    pub spec: MeasureSpec,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
    /// `‖P_n‖²_μ = mu0·γ_1⋯γ_n`.
    pub norm_sq: Vec<f64>,
    pub mu0: f64,
}

impl RecurrenceTable {
    pub fn max_degree(&self) -> usize {
        self.beta.len() - 1
    }

    pub fn eval(&self, n: usize, x: f64) -> PolyEval {
        self.eval_pair(n, x).0
    }

    /// `(P_n, P_{n-1})` at `x`.
    pub fn eval_pair(&self, n: usize, x: f64) -> (PolyEval, PolyEval) {
        assert!(
            n <= self.max_degree() + 1,
            "degree {n} beyond recurrence table"
        );
        eval_three_term_pair(&self.beta, &self.gamma, n, x)
    }

    /// `K_n(x, y) = Σ_{k≤n} P_k(x) P_k(y) / ‖P_k‖²`, Christoffel–Darboux form.
    pub fn kernel(&self, n: usize, x: f64, y: f64) -> f64 {
        let (px1, px) = self.eval_pair(n + 1, x);
        if (x - y).abs() < CONFLUENT_SWITCH * (1.0 + x.abs()) {
            return (px1.d1 * px.value - px1.value * px.d1) / self.norm_sq[n];
        }
        let (py1, py) = self.eval_pair(n + 1, y);
        (px1.value * py.value - py1.value * px.value) / ((x - y) * self.norm_sq[n])
    }

    /// Kernel by direct summation.
    pub fn kernel_sum(&self, n: usize, x: f64, y: f64) -> f64 {
        (0..=n)
            .map(|k| self.eval(k, x).value * self.eval(k, y).value / self.norm_sq[k])
            .sum()
    }

    /// Diagonal and off-diagonal of the symmetric `n × n` Jacobi matrix.
    pub fn jacobi_matrix(&self, n: usize) -> (Vec<f64>, Vec<f64>) {
        let diag = self.beta[..n].to_vec();
        let off = (1..n).map(|k| self.gamma[k].sqrt()).collect();
        (diag, off)
    }
}

/// Builds the recurrence table of `spec` for degrees `0..=n_max`.
pub fn classical_recurrence(spec: &MeasureSpec, n_max: usize) -> RecurrenceTable {
    let (beta, gamma): (Vec<f64>, Vec<f64>) = (0..=n_max).map(|n| spec.coefficients(n)).unzip();
    let mu0 = spec.total_mass();
    let mut norm_sq = Vec::with_capacity(n_max + 1);
    norm_sq.push(mu0);
    for k in 1..=n_max {
        norm_sq.push(norm_sq[k - 1] * gamma[k]);
    }
    RecurrenceTable {
        spec: *spec,
        beta,
        gamma,
        norm_sq,
        mu0,
    }
}

/// `(P_n(x), P_n'(x))` for the monic family of `spec`.
pub fn eval_monic(spec: &MeasureSpec, n: usize, x: f64) -> (f64, f64) {
    let e = classical_recurrence(spec, n).eval(n, x);
    (e.value, e.d1)
}

/// Christoffel–Darboux kernel `K_n(x, y)` for `spec`.
pub fn kernel(spec: &MeasureSpec, n: usize, x: f64, y: f64) -> f64 {
    classical_recurrence(spec, n + 1).kernel(n, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_bad_exponents() {
        assert!(matches!(
            MeasureSpec::laguerre(-1.0),
            Err(Error::ParameterDomain { name: "alpha", .. })
        ));
        assert!(MeasureSpec::jacobi(0.0, -1.5).is_err());
        assert!(MeasureSpec::jacobi(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn laguerre_coefficients() {
        let s = MeasureSpec::laguerre(0.0).unwrap();
        assert_eq!(s.coefficients(2), (5.0, 4.0));
        assert_relative_eq!(s.total_mass(), 1.0, max_relative = 1e-14);
        let s = MeasureSpec::laguerre(2.0).unwrap();
        assert_relative_eq!(s.total_mass(), 2.0, max_relative = 1e-13);
    }

    #[test]
    fn jacobi_coefficients() {
        let s = MeasureSpec::jacobi(0.5, 1.0).unwrap();
        assert_relative_eq!(s.coefficients(1).0, 0.75 / (3.5 * 5.5), max_relative = 1e-15);
        assert_relative_eq!(s.coefficients(1).0, 0.0389610, epsilon = 1e-7);
        let sym = MeasureSpec::jacobi(0.7, 0.7).unwrap();
        for n in 0..10 {
            assert_eq!(sym.coefficients(n).0, 0.0);
        }
        // Legendre: γ_n = n² / (4n² - 1), mass 2
        let leg = MeasureSpec::jacobi(0.0, 0.0).unwrap();
        for n in 1..8 {
            let nf = n as f64;
            assert_relative_eq!(leg.coefficients(n).1, nf * nf / (4.0 * nf * nf - 1.0), max_relative = 1e-14);
        }
        assert_relative_eq!(leg.total_mass(), 2.0, max_relative = 1e-14);
    }

    #[test]
    fn jacobi_alpha_plus_beta_minus_one() {
        // γ_1 must stay finite when 2n + α + β - 1 = 0 at n = 1
        let s = MeasureSpec::jacobi(-0.5, -0.5).unwrap();
        let (_, g1) = s.coefficients(1);
        assert!(g1.is_finite() && g1 > 0.0);
        // Chebyshev first kind: monic γ_1 = 1/2
        assert_relative_eq!(g1, 0.5, max_relative = 1e-14);
    }

    #[test]
    fn monic_values() {
        let lag = MeasureSpec::laguerre(0.0).unwrap();
        assert_eq!(eval_monic(&lag, 1, 0.0).0, -1.0);
        assert_relative_eq!(eval_monic(&lag, 2, 0.0).0, 2.0, max_relative = 1e-15);
        let leg = MeasureSpec::jacobi(0.0, 0.0).unwrap();
        assert_relative_eq!(eval_monic(&leg, 2, 1.0).0, 2.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn kernel_degree_zero_is_inverse_mass() {
        let s = MeasureSpec::jacobi(0.5, 1.0).unwrap();
        let t = classical_recurrence(&s, 3);
        for (x, y) in [(0.1, 0.9), (-3.0, 2.0), (0.4, 0.4)] {
            assert_relative_eq!(t.kernel(0, x, y), 1.0 / t.mu0, max_relative = 1e-14);
        }
    }

    #[test]
    fn monomial_expansion_matches_evaluation() {
        let t = classical_recurrence(&MeasureSpec::laguerre(0.0).unwrap(), 4);
        let coeffs = monomial_coefficients(&t.beta, &t.gamma, 2);
        assert_eq!(coeffs[2], vec![2.0, -4.0, 1.0]);
    }

    #[test]
    fn structure_relation_degrees() {
        let sr = MeasureSpec::jacobi(0.5, 1.0).unwrap().structure_relation();
        assert_eq!(sr.sigma().degree(), 2);
        for n in 1..6 {
            assert_eq!(sr.a(n).degree(), 1);
            assert_eq!(sr.b(n).degree(), 0);
        }
    }
}
