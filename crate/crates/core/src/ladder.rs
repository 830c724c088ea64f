//! Ladder operators, the holonomic equation and the electrostatic model for
//! `Q_n^{c,N}`.
//!
//! With `Q_n = P_n + Λ_n P_{n-1}` and `Q_{n-1} = A_2 P_n + B_2 P_{n-1}`, the
//! structure relation gives `Q_n' = C_1 P_n + D_1 P_{n-1}` and
//! `Q_{n-1}' = C_2 P_n + D_2 P_{n-1}`. Inverting the 2×2 connection
//! (determinant `Δ`) yields
//!
//! ```text
//! Q_n'     = ξ1 Q_n + η1 Q_{n-1}
//! Q_{n-1}' = ξ2 Q_n + η2 Q_{n-1}
//! Q_n'' + R Q_n' + S Q_n = 0
//! ```

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geronimus::GeronimusContext;
use crate::measures::{Family, MeasureSpec, Poly, PolyEval, StructureRelation};
use crate::scalar::{Dual, Scalar};
use crate::zeros::zeros_geronimus;

/// Points closer than this (relative to `1 + |x|`) to a root of `σ`, `Δ` or
/// `η1` are treated as singular.
pub const SINGULAR_TOL: f64 = 1e-8;

const COLLISION_TOL: f64 = 1e-12;

/// Which structure-relation coefficient enters `C_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum C1Variant {
    /// `C_1 = (a(x;n) - Λ_n b(x;n-1)/γ_{n-1}) / σ`
    PreviousDegree,
    /// `C_1 = (a(x;n) - Λ_n b(x;n)/γ_{n-1}) / σ`
    SameDegree,
}

/// Outcome of testing both `C_1` variants against `Q_n' = C_1 P_n + D_1 P_{n-1}`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct C1Audit {
    pub family: Family,
    pub selected: C1Variant,
    pub residual_previous_degree: f64,
    pub residual_same_degree: f64,
}

static C1_LAGUERRE: OnceLock<C1Audit> = OnceLock::new();
static C1_JACOBI: OnceLock<C1Audit> = OnceLock::new();

/// The `C_1` variant used for `family`, chosen once by a pointwise check on a
/// reference configuration.
pub fn c1_audit(family: Family) -> C1Audit {
    let cell = match family {
        Family::Laguerre => &C1_LAGUERRE,
        Family::Jacobi => &C1_JACOBI,
    };
    *cell.get_or_init(|| select_c1(family))
}

fn select_c1(family: Family) -> C1Audit {
    let (spec, c) = match family {
        Family::Laguerre => (MeasureSpec::laguerre(0.5).expect("valid"), -1.0),
        Family::Jacobi => (MeasureSpec::jacobi(0.5, 1.0).expect("valid"), -1.5),
    };
    let ctx = GeronimusContext::new(spec, c, 0.3, 4).expect("reference context");
    let mut worst = [0.0f64; 2];
    for n in 2..=4 {
        let ladder = Ladder::with_variant(&ctx, n, C1Variant::PreviousDegree).expect("n >= 2");
        for x in sample_points(&ctx, n, 12).expect("sample points") {
            let q = ctx.eval_qcn(n, x);
            let (p, pm) = ctx.recurrence().eval_pair(n, x);
            let t: Terms<f64> = ladder.terms(x);
            for (slot, c1) in [(0, t.c1_previous), (1, t.c1_same)] {
                let rhs = c1 * p.value + t.d1 * pm.value;
                let scale = q.d1.abs().max((c1 * p.value).abs()).max((t.d1 * pm.value).abs());
                worst[slot] = worst[slot].max((q.d1 - rhs).abs() / scale);
            }
        }
    }
    let selected = if worst[0] <= worst[1] {
        C1Variant::PreviousDegree
    } else {
        C1Variant::SameDegree
    };
    C1Audit {
        family,
        selected,
        residual_previous_degree: worst[0],
        residual_same_degree: worst[1],
    }
}

/// Ladder coefficients at one point.
#[derive(Debug, Clone, Serialize)]
pub struct LadderCoefficientSet {
    pub n: usize,
    pub x: f64,
    pub variant: C1Variant,
    pub c1: f64,
    /// `C_1` with the variant not selected, kept for audit.
    pub c1_alternate: f64,
    pub d1: f64,
    pub a2: f64,
    pub b2: f64,
    pub c2: f64,
    pub d2: f64,
    pub delta: f64,
    pub xi1: f64,
    pub xi2: f64,
    pub eta1: f64,
    pub eta2: f64,
}

/// `R`, `S` of the holonomic equation, with the closed forms where printed.
#[derive(Debug, Clone, Serialize)]
pub struct OdeCoefficientSet {
    pub n: usize,
    pub x: f64,
    pub r: f64,
    pub s: f64,
    /// `R_L` (Laguerre) or `R_J` (Jacobi).
    pub r_closed: f64,
    /// `S_L`; no closed form is used for Jacobi.
    pub s_closed: Option<f64>,
    /// `u_L(x)` or `u_J(x)`.
    pub u: f64,
    /// Root of `u`.
    pub z: f64,
}

/// `V^ext(x) = ½ ln u(x) - ½ ln w⁺(x)` where `w⁺` is the weight with both
/// exponents raised by one.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExternalPotential {
    pub value: f64,
    pub u: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumReport {
    pub n: usize,
    pub zeros: Vec<f64>,
    /// `Σ_{j≠k} 1/(y_j - y_k) - ½ R(y_k)`, relative to the largest term.
    pub pairwise: Vec<f64>,
    /// `Q''(y_k)/Q'(y_k) + R(y_k)`, relative to the largest of `Q''/Q'` and the
    /// two terms of `R`.
    pub logarithmic_derivative: Vec<f64>,
}

impl EquilibriumReport {
    pub fn max_pairwise(&self) -> f64 {
        self.pairwise.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_logarithmic_derivative(&self) -> f64 {
        self.logarithmic_derivative.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Both routes below `tol` at every zero.
    pub fn holds(&self, tol: f64) -> bool {
        self.max_pairwise() < tol && self.max_logarithmic_derivative() < tol
    }
}

struct Terms<T> {
    c1_previous: T,
    c1_same: T,
    d1: T,
    b2: T,
    c2: T,
    d2: T,
    delta: T,
}

/// Everything needed to evaluate the ladder coefficients of degree `n`.
#[derive(Debug, Clone)]
pub struct Ladder {
    spec: MeasureSpec,
    n: usize,
    variant: C1Variant,
    lambda_n: f64,
    lambda_prev: f64,
    beta_prev: f64,
    gamma_prev: f64,
    sigma: Poly,
    a_n: Poly,
    b_n: Poly,
    a_prev: Poly,
    b_prev: Poly,
}

impl Ladder {
    pub fn new(ctx: &GeronimusContext, n: usize) -> Result<Self> {
        Self::with_variant(ctx, n, c1_audit(ctx.spec().family()).selected)
    }

    pub fn with_variant(ctx: &GeronimusContext, n: usize, variant: C1Variant) -> Result<Self> {
        if n < 2 {
            return Err(Error::ParameterDomain {
                name: "n",
                value: n as f64,
                bound: ">= 2 for ladder operators",
            });
        }
        if n > ctx.n_max() {
            return Err(Error::DegreeOutOfRange {
                requested: n,
                available: ctx.n_max(),
            });
        }
        let spec = *ctx.spec();
        let sr: StructureRelation = spec.structure_relation();
        let t = ctx.recurrence();
        Ok(Self {
            spec,
            n,
            variant,
            lambda_n: ctx.lambda(n),
            lambda_prev: ctx.lambda(n - 1),
            beta_prev: t.beta[n - 1],
            gamma_prev: t.gamma[n - 1],
            sigma: sr.sigma(),
            a_n: sr.a(n),
            b_n: sr.b(n),
            a_prev: sr.a(n - 1),
            b_prev: sr.b(n - 1),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> C1Variant {
        self.variant
    }

    /// `Λ_n^c(N)`, `Λ_{n-1}^c(N)`.
    pub fn lambdas(&self) -> (f64, f64) {
        (self.lambda_n, self.lambda_prev)
    }

    fn terms<T: Scalar>(&self, x: T) -> Terms<T> {
        let k = T::cst;
        let g = k(self.gamma_prev);
        let ln = k(self.lambda_n);
        let lp = k(self.lambda_prev);
        let sigma = self.sigma.eval(x);
        let a_n = self.a_n.eval(x);
        let b_n = self.b_n.eval(x);
        let a_p = self.a_prev.eval(x);
        let b_p = self.b_prev.eval(x);
        let shifted = x - k(self.beta_prev);

        let c1_previous = (a_n - ln * b_p / g) / sigma;
        let c1_same = (a_n - ln * b_n / g) / sigma;
        let d1 = (b_n + ln * (a_p + b_p * shifted / g)) / sigma;
        let b2 = k(1.0) + lp * shifted / g;
        let c2 = -(lp * a_n / g + b2 * b_p / g) / sigma;
        let d2 = (lp * (sigma - b_n) / g + b2 * (a_p + b_p * shifted / g)) / sigma;
        let delta = b2 + ln * lp / g;
        Terms {
            c1_previous,
            c1_same,
            d1,
            b2,
            c2,
            d2,
            delta,
        }
    }

    fn c1<T: Copy>(&self, t: &Terms<T>) -> T {
        match self.variant {
            C1Variant::PreviousDegree => t.c1_previous,
            C1Variant::SameDegree => t.c1_same,
        }
    }

    /// `(ξ1, ξ2, η1, η2)`.
    fn xi_eta<T: Scalar>(&self, x: T) -> (T, T, T, T) {
        let t = self.terms(x);
        let g = T::cst(self.gamma_prev);
        let lp = T::cst(self.lambda_prev);
        let ln = T::cst(self.lambda_n);
        let c1 = self.c1(&t);
        let xi1 = (c1 * t.b2 * g + t.d1 * lp) / (t.delta * g);
        let xi2 = (t.c2 * t.b2 * g + t.d2 * lp) / (t.delta * g);
        let eta1 = (t.d1 - c1 * ln) / t.delta;
        let eta2 = (t.d2 - t.c2 * ln) / t.delta;
        (xi1, xi2, eta1, eta2)
    }

    /// `Δ = B_2 + Λ_n Λ_{n-1}/γ_{n-1}` as ascending coefficients.
    pub fn delta_polynomial(&self) -> Poly {
        let r = self.lambda_prev / self.gamma_prev;
        Poly(vec![1.0 - r * self.beta_prev + self.lambda_n * r, r])
    }

    /// `(Λ_{n-1}/γ_{n-1})(x - β_{n-1} + Λ_n + γ_{n-1}/Λ_{n-1})` expanded.
    pub fn delta_polynomial_factored(&self) -> Poly {
        let lead = self.lambda_prev / self.gamma_prev;
        let root_shift = -self.beta_prev + self.lambda_n + self.gamma_prev / self.lambda_prev;
        Poly(vec![lead * root_shift, lead])
    }

    fn delta_root(&self) -> Option<f64> {
        let d = self.delta_polynomial();
        (d.0[1] != 0.0).then(|| -d.0[0] / d.0[1])
    }

    fn sigma_roots(&self) -> &'static [f64] {
        match self.spec.family() {
            Family::Laguerre => &[0.0],
            Family::Jacobi => &[-1.0, 1.0],
        }
    }

    /// Root of `σ Δ η1`, which is affine in `x` for both families.
    fn eta1_root(&self) -> Option<f64> {
        let f = |x: f64| {
            let t: Terms<f64> = self.terms(x);
            (t.d1 - self.c1(&t) * self.lambda_n) * self.sigma.eval(x)
        };
        let (f0, f1) = (f(0.5), f(1.5));
        let slope = f1 - f0;
        (slope != 0.0).then(|| 0.5 - f0 / slope)
    }

    fn check_regular(&self, x: f64, with_eta1: bool) -> Result<()> {
        let near = |r: f64| (x - r).abs() < SINGULAR_TOL * (1.0 + x.abs());
        if self.sigma_roots().iter().any(|&r| near(r)) {
            return Err(Error::RemovableSingularity { x, what: "σ" });
        }
        if self.delta_root().is_some_and(near) {
            return Err(Error::RemovableSingularity { x, what: "Δ" });
        }
        if with_eta1 && self.eta1_root().is_some_and(near) {
            return Err(Error::RemovableSingularity { x, what: "η1" });
        }
        Ok(())
    }

    /// True if `x` is away from the roots of `σ`, `Δ` and `η1`.
    pub fn is_regular(&self, x: f64) -> bool {
        self.check_regular(x, true).is_ok()
    }

    pub fn coefficients(&self, x: f64) -> Result<LadderCoefficientSet> {
        self.check_regular(x, false)?;
        let t: Terms<f64> = self.terms(x);
        let (xi1, xi2, eta1, eta2) = self.xi_eta(x);
        let (c1, c1_alternate) = match self.variant {
            C1Variant::PreviousDegree => (t.c1_previous, t.c1_same),
            C1Variant::SameDegree => (t.c1_same, t.c1_previous),
        };
        Ok(LadderCoefficientSet {
            n: self.n,
            x,
            variant: self.variant,
            c1,
            c1_alternate,
            d1: t.d1,
            a2: -self.lambda_prev / self.gamma_prev,
            b2: t.b2,
            c2: t.c2,
            d2: t.d2,
            delta: t.delta,
            xi1,
            xi2,
            eta1,
            eta2,
        })
    }

    /// `R = -(ξ1 + η2 + η1'/η1)`, `S = ξ1η2 - η1ξ2 + (ξ1η1' - ξ1'η1)/η1`.
    pub fn ode_generic(&self, x: f64) -> Result<(f64, f64)> {
        self.check_regular(x, true)?;
        let (xi1, xi2, eta1, eta2) = self.xi_eta(Dual::var(x));
        let r = -(xi1.re + eta2.re + eta1.du / eta1.re);
        let s = xi1.re * eta2.re - eta1.re * xi2.re + (xi1.re * eta1.du - xi1.du * eta1.re) / eta1.re;
        Ok((r, s))
    }

    /// `u(x)`, `u'(x)` and the root `z` of the closed-form short-range factor.
    pub fn short_range(&self, x: f64) -> (f64, f64, f64) {
        short_range(&self.spec, self.n, self.lambda_n, x)
    }

    fn raised_weight_log_derivative(&self, x: f64) -> f64 {
        raised_weight_log_derivative(&self.spec, x)
    }

    /// `R_L` or `R_J`: `-u'/u + (ln w⁺)'`.
    pub fn r_closed(&self, x: f64) -> f64 {
        let (u, du, _) = self.short_range(x);
        -du / u + self.raised_weight_log_derivative(x)
    }

    /// `S_L`; `None` for Jacobi.
    pub fn s_closed(&self, x: f64) -> Option<f64> {
        match self.spec.family() {
            Family::Laguerre => {
                let n = self.n as f64;
                let lam = self.lambda_n;
                let (u, _, _) = self.short_range(x);
                let alpha = self.spec.alpha();
                Some((lam * x + (n + alpha) * (n - lam)) / (x * u) + (n - 1.0) / x)
            }
            Family::Jacobi => None,
        }
    }

    pub fn ode(&self, x: f64) -> Result<OdeCoefficientSet> {
        let (r, s) = self.ode_generic(x)?;
        let (u, _, z) = self.short_range(x);
        Ok(OdeCoefficientSet {
            n: self.n,
            x,
            r,
            s,
            r_closed: self.r_closed(x),
            s_closed: self.s_closed(x),
            u,
            z,
        })
    }

    pub fn external_potential(&self, x: f64) -> Result<ExternalPotential> {
        let (u, _, z) = self.short_range(x);
        if !(u > 0.0) {
            return Err(Error::DomainViolation(format!(
                "short-range factor u({x}) = {u} is not positive"
            )));
        }
        let (alpha, beta) = (self.spec.alpha(), self.spec.beta());
        let log_w = match self.spec.family() {
            Family::Laguerre => (alpha + 1.0) * x.ln() - x,
            Family::Jacobi => (alpha + 1.0) * (1.0 - x).ln() + (beta + 1.0) * (1.0 + x).ln(),
        };
        if !log_w.is_finite() {
            return Err(Error::DomainViolation(format!("{x} is outside the open support")));
        }
        Ok(ExternalPotential {
            value: 0.5 * u.ln() - 0.5 * log_w,
            u,
            z,
        })
    }
}

fn short_range(spec: &MeasureSpec, n: usize, lam: f64, x: f64) -> (f64, f64, f64) {
    let n = n as f64;
    let (alpha, beta) = (spec.alpha(), spec.beta());
    match spec.family() {
        Family::Laguerre => {
            let k = (n - lam) * (n + alpha - lam);
            (lam * x + k, lam, -k / lam)
        }
        Family::Jacobi => {
            let s = 2.0 * n + alpha + beta;
            let g = 4.0 * n * (n + alpha) * (n + beta) * (n + alpha + beta);
            let m = (s - 1.0) * s * lam;
            let u = g + m * (s * s * x + (alpha + beta) * (alpha - beta) + m);
            let z = -((alpha * alpha - beta * beta) * s + g / ((s - 1.0) * lam)) / s.powi(3)
                - (s - 1.0) * s * s * lam / s.powi(3);
            (u, m * s * s, z)
        }
    }
}

/// Derivative of `ln w⁺`, the weight with both exponents raised by one.
fn raised_weight_log_derivative(spec: &MeasureSpec, x: f64) -> f64 {
    let (alpha, beta) = (spec.alpha(), spec.beta());
    match spec.family() {
        Family::Laguerre => (alpha + 1.0) / x - 1.0,
        Family::Jacobi => (beta + 1.0) / (1.0 + x) - (alpha + 1.0) / (1.0 - x),
    }
}

/// Root `z` of `u_L` or `u_J`, the location of the short-range unit charge.
pub fn short_range_root(ctx: &GeronimusContext, n: usize) -> f64 {
    short_range(ctx.spec(), n, ctx.lambda(n), 0.0).2
}

pub fn ladder_coefficients(ctx: &GeronimusContext, n: usize, x: f64) -> Result<LadderCoefficientSet> {
    Ladder::new(ctx, n)?.coefficients(x)
}

pub fn ode_coefficients(ctx: &GeronimusContext, n: usize, x: f64) -> Result<OdeCoefficientSet> {
    Ladder::new(ctx, n)?.ode(x)
}

pub fn external_potential(ctx: &GeronimusContext, n: usize, x: f64) -> Result<ExternalPotential> {
    Ladder::new(ctx, n)?.external_potential(x)
}

/// `Q_n''/Q_n'` from the differentiated recurrence.
fn log_derivative(q: PolyEval) -> f64 {
    q.d2 / q.d1
}

/// Residuals of the electrostatic equilibrium at the zeros of `Q_n^{c,N}`,
/// with the external field `-½ R` from the closed form of the family.
pub fn equilibrium_residual(ctx: &GeronimusContext, n: usize) -> Result<EquilibriumReport> {
    if n == 0 || n > ctx.n_max() {
        return Err(Error::DegreeOutOfRange {
            requested: n,
            available: ctx.n_max(),
        });
    }
    let spec = ctx.spec();
    let lam = ctx.lambda(n);
    let zeros = zeros_geronimus(ctx, n)?.zeros;
    for w in zeros.windows(2) {
        if (w[1] - w[0]).abs() < COLLISION_TOL {
            return Err(Error::SimplicityViolation {
                left: w[0],
                right: w[1],
            });
        }
    }
    let mut pairwise = Vec::with_capacity(n);
    let mut logarithmic_derivative = Vec::with_capacity(n);
    for (k, &y) in zeros.iter().enumerate() {
        let (u, du, _) = short_range(spec, n, lam, y);
        let wd = raised_weight_log_derivative(spec, y);
        let field = [0.5 * du / u, -0.5 * wd];
        let mut sum = 0.0;
        let mut scale = field.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (j, &yj) in zeros.iter().enumerate() {
            if j != k {
                let t = 1.0 / (yj - y);
                sum += t;
                scale = scale.max(t.abs());
            }
        }
        pairwise.push((sum + field[0] + field[1]) / scale);

        let r = -du / u + wd;
        let ld = log_derivative(ctx.eval_qcn(n, y));
        logarithmic_derivative.push((ld + r) / ld.abs().max((du / u).abs()).max(wd.abs()));
    }
    Ok(EquilibriumReport {
        n,
        zeros,
        pairwise,
        logarithmic_derivative,
    })
}

/// `count` Chebyshev points on `[a, min(b, a + 20)]` that avoid the roots of
/// `σ`, `Δ` and `η1`.
pub fn sample_points(ctx: &GeronimusContext, n: usize, count: usize) -> Result<Vec<f64>> {
    let ladder = Ladder::with_variant(ctx, n, C1Variant::PreviousDegree)?;
    let (a, b) = ctx.spec().support();
    let hi = b.min(a + 20.0);
    let (mid, half) = (0.5 * (a + hi), 0.5 * (hi - a));
    Ok((1..=count)
        .map(|k| {
            let theta = (2 * k - 1) as f64 * std::f64::consts::PI / (2 * count) as f64;
            mid + half * theta.cos()
        })
        .filter(|&x| ladder.is_regular(x))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::MeasureSpec;

    fn laguerre(mass: f64) -> GeronimusContext {
        GeronimusContext::new(MeasureSpec::laguerre(0.0).unwrap(), -1.0, mass, 16).unwrap()
    }

    fn jacobi(mass: f64) -> GeronimusContext {
        GeronimusContext::new(MeasureSpec::jacobi(0.5, 1.0).unwrap(), -1.5, mass, 16).unwrap()
    }

    #[test]
    fn c1_selection_prefers_previous_degree() {
        for family in [Family::Laguerre, Family::Jacobi] {
            let audit = c1_audit(family);
            assert_eq!(audit.selected, C1Variant::PreviousDegree, "{audit:?}");
            assert!(audit.residual_previous_degree < 1e-10, "{audit:?}");
            assert!(audit.residual_same_degree > 1e-4, "{audit:?}");
        }
    }

    #[test]
    fn printed_short_range_roots() {
        let z = external_potential(&laguerre(0.0), 3, 1.0).unwrap().z;
        assert!((z + 1.27309).abs() < 5e-6, "{z}");
        let l = Ladder::new(&jacobi(5.0), 4).unwrap();
        let z = l.short_range(0.0).2;
        assert!((z + 1.38587).abs() < 5e-6, "{z}");
        let (u, du, _) = l.short_range(z);
        assert!(u.abs() < 1e-10 * du.abs().max(1.0) * (1.0 + z.abs()));
    }

    #[test]
    fn delta_forms_agree_and_have_degree_one() {
        for ctx in [laguerre(0.05), jacobi(0.05)] {
            for n in 2..=15 {
                let l = Ladder::new(&ctx, n).unwrap();
                let (p, q) = (l.delta_polynomial(), l.delta_polynomial_factored());
                assert_eq!(p.degree(), 1);
                let (_, lp) = l.lambdas();
                assert!((p.0[1] - lp / ctx.recurrence().gamma[n - 1]).abs() <= 1e-15 * p.0[1].abs());
                for i in 0..2 {
                    assert!((p.0[i] - q.0[i]).abs() <= 1e-12 * p.0[i].abs().max(q.0[i].abs()));
                }
            }
        }
    }

    #[test]
    fn lowering_and_raising_identities() {
        let ctx = laguerre(0.05);
        for n in 2..=15 {
            let l = Ladder::new(&ctx, n).unwrap();
            for x in sample_points(&ctx, n, 50).unwrap() {
                let c = l.coefficients(x).unwrap();
                let q = ctx.eval_qcn(n, x);
                let qp = ctx.eval_qcn(n - 1, x);
                let lo = [q.d1, c.xi1 * q.value, c.eta1 * qp.value];
                let ra = [qp.d1, c.xi2 * q.value, c.eta2 * qp.value];
                for v in [lo, ra] {
                    let scale = v.iter().fold(0.0f64, |m, t| m.max(t.abs()));
                    assert!((v[0] - v[1] - v[2]).abs() < 1e-9 * scale, "n={n} x={x} {v:?}");
                }
            }
        }
    }

    #[test]
    fn generic_and_closed_laguerre_ode_agree() {
        for mass in [0.0, 0.05, 5.0] {
            let ctx = laguerre(mass);
            for n in [2, 3, 7] {
                let l = Ladder::new(&ctx, n).unwrap();
                for x in sample_points(&ctx, n, 100).unwrap() {
                    let o = l.ode(x).unwrap();
                    let s_closed = o.s_closed.unwrap();
                    assert!((o.r - o.r_closed).abs() < 1e-9 * o.r.abs().max(1.0), "{o:?}");
                    assert!((o.s - s_closed).abs() < 1e-9 * o.s.abs().max(1.0), "{o:?}");
                }
            }
        }
    }

    #[test]
    fn generic_and_closed_jacobi_r_agree() {
        let ctx = jacobi(0.05);
        for n in [2, 4, 9] {
            let l = Ladder::new(&ctx, n).unwrap();
            for x in sample_points(&ctx, n, 60).unwrap() {
                let o = l.ode(x).unwrap();
                assert!((o.r - o.r_closed).abs() < 1e-9 * o.r.abs().max(1.0), "{o:?}");
            }
        }
    }

    #[test]
    fn equilibrium_at_table_one_cell() {
        let rep = equilibrium_residual(&laguerre(0.05), 3).unwrap();
        assert!(rep.holds(1e-6), "{rep:?}");
    }

    #[test]
    fn single_zero_feels_only_the_external_field() {
        let rep = equilibrium_residual(&laguerre(0.05), 1).unwrap();
        assert_eq!(rep.zeros.len(), 1);
        assert!(rep.holds(1e-9), "{rep:?}");
    }

    #[test]
    fn degree_one_is_rejected() {
        assert!(Ladder::new(&laguerre(0.05), 1).is_err());
    }
}
