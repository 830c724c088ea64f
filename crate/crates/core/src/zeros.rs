//! Zeros of the classical, rational, kernel and Geronimus families, the
//! interlacing chains they obey, their large-mass limits and the minimum
//! mass that pushes an extreme zero out of the support.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::{self, Big, ExtendedFamily};
use crate::geronimus::{GeronimusContext, Side};
use crate::measures::PolyEval;
use crate::tridiag;

/// Zeros closer than this (relative to `1 + |z|`) are a simplicity violation.
pub const SIMPLICITY_TOL: f64 = 1e-13;
/// Relative separation below which a zero is re-solved in extended precision.
pub const EXTENDED_SWITCH: f64 = 1e-7;
const POLISH_STEPS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroFamily {
    /// `P_n`
    Classical,
    /// `Q_n^c`
    Rational,
    /// `P_n^{c,[1]}`
    Kernel,
    /// `Q_n^{c,N}`
    Geronimus,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroReport {
    pub n: usize,
    pub family: ZeroFamily,
    /// Strictly ascending.
    pub zeros: Vec<f64>,
    /// `|p(z) / p'(z)| / (1 + |z|)` after polishing.
    pub residuals: Vec<f64>,
    /// Largest move made by the Newton polish away from the eigenvalue.
    pub polish_shift: f64,
}

fn scaled_residual(z: f64, p: PolyEval) -> f64 {
    if p.value == 0.0 {
        0.0
    } else {
        (p.value / p.d1).abs() / (1.0 + z.abs())
    }
}

/// Newton steps on `eval`, kept only while the residual does not grow.
fn polish(z0: f64, eval: &impl Fn(f64) -> PolyEval) -> f64 {
    let mut z = z0;
    let mut p = eval(z);
    for _ in 0..POLISH_STEPS {
        if p.value == 0.0 || p.d1 == 0.0 {
            break;
        }
        let next = z - p.value / p.d1;
        let q = eval(next);
        if q.value.abs() > p.value.abs() {
            break;
        }
        let moved = (next - z).abs();
        z = next;
        p = q;
        if moved <= 4.0 * f64::EPSILON * z.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    z
}

fn finish(
    n: usize,
    family: ZeroFamily,
    eigenvalues: Vec<f64>,
    eval: impl Fn(f64) -> PolyEval,
) -> Result<ZeroReport> {
    let mut zeros = Vec::with_capacity(n);
    let mut polish_shift: f64 = 0.0;
    for e in eigenvalues {
        let z = polish(e, &eval);
        polish_shift = polish_shift.max((z - e).abs());
        zeros.push(z);
    }
    zeros.sort_by(f64::total_cmp);
    for w in zeros.windows(2) {
        if w[1] - w[0] <= SIMPLICITY_TOL * (1.0 + w[0].abs()) {
            return Err(Error::SimplicityViolation {
                left: w[0],
                right: w[1],
            });
        }
    }
    let residuals = zeros.iter().map(|&z| scaled_residual(z, eval(z))).collect();
    Ok(ZeroReport {
        n,
        family,
        zeros,
        residuals,
        polish_shift,
    })
}

fn jacobi_matrix(beta: &[f64], gamma: &[f64], n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if beta.len() < n || gamma.len() < n {
        return Err(Error::DegreeOutOfRange {
            requested: n,
            available: beta.len().min(gamma.len()),
        });
    }
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    for (k, &g) in gamma.iter().enumerate().take(n).skip(1) {
        if !(g > 0.0) {
            return Err(Error::DomainViolation(format!(
                "recurrence coefficient γ_{k} = {g} is not positive"
            )));
        }
        off.push(g.sqrt());
    }
    Ok((beta[..n].to_vec(), off))
}

/// Zeros of the degree-`n` monic polynomial of a three-term recurrence with
/// positive `γ`, as eigenvalues of its Jacobi matrix polished by Newton.
pub fn zeros_orthogonal(
    beta: &[f64],
    gamma: &[f64],
    n: usize,
    family: ZeroFamily,
) -> Result<ZeroReport> {
    let (diag, off) = jacobi_matrix(beta, gamma, n)?;
    let eig = tridiag::eigen(&diag, &off, false)?;
    finish(n, family, eig.values, |x| {
        crate::measures::eval_three_term(beta, gamma, n, x)
    })
}

/// Zeros of `P_n`.
pub fn zeros_classical(ctx: &GeronimusContext, n: usize) -> Result<ZeroReport> {
    let t = ctx.recurrence();
    zeros_orthogonal(&t.beta, &t.gamma, n, ZeroFamily::Classical)
}

/// Zeros of `Q_n^c`.
pub fn zeros_rational(ctx: &GeronimusContext, n: usize) -> Result<ZeroReport> {
    let (b, g) = ctx.geronimus_recurrence();
    zeros_orthogonal(b, g, n, ZeroFamily::Rational)
}

/// Zeros of `P_n^{c,[1]}`.
pub fn zeros_kernel(ctx: &GeronimusContext, n: usize) -> Result<ZeroReport> {
    let (b, g) = ctx.christoffel_recurrence();
    zeros_orthogonal(b, g, n, ZeroFamily::Kernel)
}

/// Zeros of `Q_n^{c,N} = P_n + Λ_n^c P_{n-1}`: eigenvalues of the Jacobi
/// matrix of `μ` with its last diagonal entry shifted by `-Λ_n^c`.
pub fn zeros_geronimus(ctx: &GeronimusContext, n: usize) -> Result<ZeroReport> {
    if n == 0 {
        return Ok(ZeroReport {
            n,
            family: ZeroFamily::Geronimus,
            zeros: vec![],
            residuals: vec![],
            polish_shift: 0.0,
        });
    }
    let t = ctx.recurrence();
    let (mut diag, off) = jacobi_matrix(&t.beta, &t.gamma, n)?;
    diag[n - 1] -= ctx.lambda(n);
    let eig = tridiag::eigen(&diag, &off, false)?;
    finish(n, ZeroFamily::Geronimus, eig.values, |x| ctx.eval_qcn(n, x))
}

/// Large-mass limits of the zeros of `Q_n^{c,N}` and the constants
/// `lim N (y_k - limit_k)`.
#[derive(Debug, Clone, Serialize)]
pub struct LimitRates {
    pub n: usize,
    pub side: Side,
    /// Ascending; `c` first for `c < a`, last for `c > b`.
    pub limits: Vec<f64>,
    pub constants: Vec<f64>,
}

/// Zeros of `Q_n^{c,N}` for one mass, each stored as its limit plus an
/// offset carrying full relative precision.
#[derive(Debug, Clone, Serialize)]
pub struct MassZeros {
    pub mass: f64,
    pub zeros: Vec<f64>,
    /// `y_k - limit_k`
    pub offsets: Vec<f64>,
    /// Whether the extended-precision path was needed.
    pub extended: bool,
    #[serde(skip)]
    refined: Option<Vec<Big>>,
}

/// Shift-level zero data for one degree, shared across masses.
pub struct ZeroAnalysis {
    ctx: GeronimusContext,
    n: usize,
    rational: ZeroReport,
    kernel: ZeroReport,
    limits: Vec<f64>,
    extended: OnceLock<Result<ExtendedZeros>>,
}

struct ExtendedZeros {
    family: ExtendedFamily,
    rational: Vec<Big>,
    limits: Vec<Big>,
}

/// One strict inequality of an interlacing chain.
#[derive(Debug, Clone, Serialize)]
pub struct Inequality {
    pub relation: String,
    pub left: f64,
    pub right: f64,
    /// `right - left`, computed in extended precision when needed.
    pub gap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct InterlacingReport {
    pub n: usize,
    pub mass: f64,
    pub side: Side,
    pub geronimus: Vec<f64>,
    pub rational: Vec<f64>,
    pub kernel: Vec<f64>,
    pub extended: bool,
    pub checked: usize,
    pub violations: Vec<Inequality>,
}

impl InterlacingReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl ZeroAnalysis {
    pub fn new(ctx: &GeronimusContext, n: usize) -> Result<Self> {
        if n == 0 || n > ctx.n_max() {
            return Err(Error::DegreeOutOfRange {
                requested: n,
                available: ctx.n_max(),
            });
        }
        let rational = zeros_rational(ctx, n)?;
        let kernel = zeros_kernel(ctx, n - 1)?;
        let c = ctx.shift();
        let limits = match ctx.side() {
            Side::Below => std::iter::once(c).chain(kernel.zeros.iter().copied()).collect(),
            Side::Above => kernel.zeros.iter().copied().chain(std::iter::once(c)).collect(),
        };
        Ok(Self {
            ctx: ctx.clone(),
            n,
            rational,
            kernel,
            limits,
            extended: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rational(&self) -> &ZeroReport {
        &self.rational
    }

    pub fn kernel(&self) -> &ZeroReport {
        &self.kernel
    }

    pub fn limits(&self) -> &[f64] {
        &self.limits
    }

    fn extended(&self) -> Result<&ExtendedZeros> {
        self.extended
            .get_or_init(|| {
                let family = ExtendedFamily::new(&self.ctx, self.n);
                let rational = self
                    .rational
                    .zeros
                    .iter()
                    .map(|&z| family.newton(z, |x| family.rational(x)))
                    .collect::<Result<Vec<_>>>()?;
                let kernel = self
                    .kernel
                    .zeros
                    .iter()
                    .map(|&z| family.newton(z, |x| family.kernel(x)))
                    .collect::<Result<Vec<_>>>()?;
                let c = family.shift().clone();
                let limits = match self.ctx.side() {
                    Side::Below => std::iter::once(c).chain(kernel).collect(),
                    Side::Above => kernel.into_iter().chain(std::iter::once(c)).collect(),
                };
                Ok(ExtendedZeros {
                    family,
                    rational,
                    limits,
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Rate constants `-Q_n^c(ζ) / (B_n^c g'(ζ))`, `g = (x - c) P_{n-1}^{c,[1]}`.
    pub fn limit_rates(&self) -> LimitRates {
        let c = self.ctx.shift();
        let b = self.ctx.b_coefficient(self.n);
        let constants = self
            .limits
            .iter()
            .map(|&z| {
                let q = self.ctx.eval_qc_recurrence(self.n, z).value;
                let g_prime = if z == c {
                    self.ctx.christoffel_kernel_poly_recurrence(self.n - 1, c).value
                } else {
                    (z - c) * self.ctx.christoffel_kernel_poly_recurrence(self.n - 1, z).d1
                };
                -q / (b * g_prime)
            })
            .collect();
        LimitRates {
            n: self.n,
            side: self.ctx.side(),
            limits: self.limits.clone(),
            constants,
        }
    }

    /// Zeros of `Q_n^{c,N}` at the given mass.
    pub fn at_mass(&self, mass: f64) -> Result<MassZeros> {
        self.mass_zeros(mass, false)
    }

    fn mass_zeros(&self, mass: f64, force_extended: bool) -> Result<MassZeros> {
        let ctx = self.ctx.with_mass(mass)?;
        let zeros = if mass == 0.0 {
            self.rational.zeros.clone()
        } else {
            zeros_geronimus(&ctx, self.n)?.zeros
        };
        let offsets: Vec<f64> = zeros.iter().zip(&self.limits).map(|(y, l)| y - l).collect();
        let near = |a: f64, b: f64| (a - b).abs() < EXTENDED_SWITCH * (1.0 + b.abs());
        let needs_extended = force_extended
            || (mass > 0.0
                && zeros
                    .iter()
                    .zip(&self.limits)
                    .zip(&self.rational.zeros)
                    .any(|((&y, &l), &r)| near(y, l) || near(y, r)));
        if !needs_extended {
            return Ok(MassZeros {
                mass,
                zeros,
                offsets,
                extended: false,
                refined: None,
            });
        }
        let ext = self.extended()?;
        let refined = if mass == 0.0 {
            ext.rational.clone()
        } else {
            zeros
                .iter()
                .map(|&z| ext.family.newton(z, |x| ext.family.geronimus(mass, x)))
                .collect::<Result<Vec<_>>>()?
        };
        let offsets = refined
            .iter()
            .zip(&ext.limits)
            .map(|(y, l)| extended::to_f64(&(y - l)))
            .collect();
        Ok(MassZeros {
            mass,
            zeros: refined.iter().map(extended::to_f64).collect(),
            offsets,
            extended: true,
            refined: Some(refined),
        })
    }

    /// Checks interlacing of `Q_n^c` and `P_{n-1}^{c,[1]}`, the sign
    /// relation at the zeros of `Q_n^c`, and the full chain with `c` and the
    /// zeros of `Q_n^{c,N}`. Gaps that binary64 cannot certify are
    /// recomputed in extended precision.
    pub fn interlacing(&self, mass: f64) -> Result<InterlacingReport> {
        let first = self.chain(self.mass_zeros(mass, false)?)?;
        if first.holds() || first.extended {
            Ok(first)
        } else {
            self.chain(self.mass_zeros(mass, true)?)
        }
    }

    fn chain(&self, mz: MassZeros) -> Result<InterlacingReport> {
        let mass = mz.mass;
        let n = self.n;
        let side = self.ctx.side();
        let c = self.ctx.shift();
        let y = &mz.zeros;
        let yc = &self.rational.zeros;
        let x = &self.kernel.zeros;

        let ext = if mz.extended { Some(self.extended()?) } else { None };
        let big_y = |k: usize| mz.refined.as_ref().map(|r| r[k].clone());
        let big_yc = |k: usize| ext.map(|e| e.rational[k].clone());
        let big_x = |k: usize| {
            ext.map(|e| match side {
                Side::Below => e.limits[k + 1].clone(),
                Side::Above => e.limits[k].clone(),
            })
        };
        let big_c = || ext.map(|e| e.family.shift().clone());

        type Link = (String, f64, f64, Option<Big>, Option<Big>);
        let mut links: Vec<Link> = Vec::new();
        for k in 0..n {
            if k > 0 {
                links.push((format!("x{k} < yc{}", k + 1), x[k - 1], yc[k], big_x(k - 1), big_yc(k)));
            }
            if k + 1 < n {
                links.push((format!("yc{} < x{}", k + 1, k + 1), yc[k], x[k], big_yc(k), big_x(k)));
            }
        }
        if mass > 0.0 {
            match side {
                Side::Below => {
                    links.push(("c < y1".into(), c, y[0], big_c(), big_y(0)));
                    for k in 0..n {
                        links.push((format!("y{} < yc{}", k + 1, k + 1), y[k], yc[k], big_y(k), big_yc(k)));
                        if k > 0 {
                            links.push((format!("x{k} < y{}", k + 1), x[k - 1], y[k], big_x(k - 1), big_y(k)));
                        }
                    }
                }
                Side::Above => {
                    for k in 0..n {
                        links.push((format!("yc{} < y{}", k + 1, k + 1), yc[k], y[k], big_yc(k), big_y(k)));
                        if k + 1 < n {
                            links.push((format!("y{} < x{}", k + 1, k + 1), y[k], x[k], big_y(k), big_x(k)));
                        }
                    }
                    links.push((format!("y{n} < c"), y[n - 1], c, big_y(n - 1), big_c()));
                }
            }
        }

        let mut violations = Vec::new();
        let checked = links.len() + n;
        for (relation, left, right, bl, br) in links {
            let scale = 1.0 + left.abs().max(right.abs());
            let (gap, ok) = match (bl, br) {
                (Some(l), Some(r)) => {
                    let g = extended::to_f64(&(r - l));
                    (g, g > extended::resolution() * scale)
                }
                _ => {
                    let g = right - left;
                    (g, g > EXTENDED_SWITCH * scale)
                }
            };
            if !ok {
                violations.push(Inequality {
                    relation,
                    left,
                    right,
                    gap,
                });
            }
        }
        // sign P_{n-1}^{c,[1]}(y^c_k) = sign Q_{n-1}^c(y^c_k)
        for (k, &z) in yc.iter().enumerate() {
            let kp = self.ctx.christoffel_kernel_poly_recurrence(n - 1, z).value;
            let qp = self.ctx.eval_qc_recurrence(n - 1, z).value;
            if kp.signum() != qp.signum() {
                violations.push(Inequality {
                    relation: format!("sign P1_{}(yc{}) = sign Qc_{}(yc{})", n - 1, k + 1, n - 1, k + 1),
                    left: kp,
                    right: qp,
                    gap: f64::NAN,
                });
            }
        }

        Ok(InterlacingReport {
            n,
            mass,
            side,
            geronimus: mz.zeros,
            rational: yc.clone(),
            kernel: x.clone(),
            extended: mz.extended,
            checked,
            violations,
        })
    }
}

/// Interlacing verdict for the mass carried by `ctx`.
pub fn interlacing_report(ctx: &GeronimusContext, n: usize) -> Result<InterlacingReport> {
    ZeroAnalysis::new(ctx, n)?.interlacing(ctx.mass())
}

pub fn limit_rates(ctx: &GeronimusContext, n: usize) -> Result<LimitRates> {
    Ok(ZeroAnalysis::new(ctx, n)?.limit_rates())
}

/// Zero trajectories over a list of masses.
#[derive(Debug, Clone, Serialize)]
pub struct SweepTrajectory {
    pub n: usize,
    pub side: Side,
    pub masses: Vec<f64>,
    /// `zeros[i][k]` is the `k`-th zero at `masses[i]`.
    pub zeros: Vec<Vec<f64>>,
    pub offsets: Vec<Vec<f64>>,
    pub limits: Vec<f64>,
    pub rate_constants: Vec<f64>,
    /// `N (y_k - limit_k)`
    pub products: Vec<Vec<f64>>,
    /// Per zero index: strictly decreasing (`c < a`) or increasing (`c > b`) in `N`.
    pub monotone: Vec<bool>,
}

impl SweepTrajectory {
    pub fn is_monotone(&self) -> bool {
        self.monotone.iter().all(|&m| m)
    }
}

pub fn sweep(ctx: &GeronimusContext, n: usize, masses: &[f64]) -> Result<SweepTrajectory> {
    if masses.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::DomainViolation(
            "mass list must be strictly ascending".into(),
        ));
    }
    let analysis = ZeroAnalysis::new(ctx, n)?;
    analysis.sweep(masses)
}

impl ZeroAnalysis {
    pub fn sweep(&self, masses: &[f64]) -> Result<SweepTrajectory> {
        let rows = masses
            .par_iter()
            .map(|&m| self.at_mass(m))
            .collect::<Result<Vec<_>>>()?;
        let rates = self.limit_rates();
        let sign = match self.ctx.side() {
            Side::Below => -1.0,
            Side::Above => 1.0,
        };
        let monotone = (0..self.n)
            .map(|k| {
                rows.windows(2)
                    .all(|w| sign * (w[1].offsets[k] - w[0].offsets[k]) > 0.0)
            })
            .collect();
        Ok(SweepTrajectory {
            n: self.n,
            side: self.ctx.side(),
            masses: masses.to_vec(),
            products: rows
                .iter()
                .map(|r| r.offsets.iter().map(|o| r.mass * o).collect())
                .collect(),
            zeros: rows.iter().map(|r| r.zeros.clone()).collect(),
            offsets: rows.into_iter().map(|r| r.offsets).collect(),
            limits: rates.limits,
            rate_constants: rates.constants,
            monotone,
        })
    }
}

/// Endpoint of the support that the extreme zero crosses.
fn crossing_endpoint(ctx: &GeronimusContext) -> Result<f64> {
    let (a, b) = ctx.spec().support();
    match ctx.side() {
        Side::Below => Ok(a),
        Side::Above if b.is_finite() => Ok(b),
        Side::Above => Err(Error::DomainViolation(
            "no finite upper endpoint for a shift above the support".into(),
        )),
    }
}

/// `N_0 = -Q_n^c(e) / (K_{n-1}^c(c,c) (e - c) P_{n-1}^{c,[1]}(e))`, `e` the
/// endpoint next to `c`.
pub fn minimum_mass(ctx: &GeronimusContext, n: usize) -> Result<f64> {
    let e = crossing_endpoint(ctx)?;
    let c = ctx.shift();
    let q = ctx.eval_qc(n, e).value;
    let k = ctx.christoffel_kernel_poly(n - 1, e).value;
    Ok(-q / (ctx.b_coefficient(n) * (e - c) * k))
}

/// `N_0` as the sign change of `N ↦ Q_n^{c,N}(e)`, by bisection.
pub fn minimum_mass_bisection(ctx: &GeronimusContext, n: usize) -> Result<f64> {
    let e = crossing_endpoint(ctx)?;
    let f = |m: f64| -> Result<f64> { Ok(ctx.with_mass(m)?.eval_qcn(n, e).value) };
    let s0 = f(0.0)?.signum();
    let (mut lo, mut hi) = (1e-8, 1e3);
    while f(lo)?.signum() != s0 {
        lo *= 1e-8;
        if lo < 1e-300 {
            return Err(Error::NumericalFailure("minimum mass below 1e-300".into()));
        }
    }
    while f(hi)?.signum() == s0 {
        hi *= 1e8;
        if hi > 1e300 {
            return Err(Error::NumericalFailure("no sign change of Q_n^{c,N}(e) in N".into()));
        }
    }
    for _ in 0..200 {
        let mid = if hi / lo > 1.001 {
            (lo * hi).sqrt()
        } else {
            0.5 * (lo + hi)
        };
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid)?.signum() == s0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::MeasureSpec;

    fn laguerre_ctx(mass: f64) -> GeronimusContext {
        GeronimusContext::new(MeasureSpec::laguerre(0.0).unwrap(), -1.0, mass, 5).unwrap()
    }

    #[test]
    fn classical_laguerre_zeros() {
        let ctx = laguerre_ctx(0.0);
        let z = zeros_classical(&ctx, 2).unwrap().zeros;
        assert!((z[0] - (2.0 - 2f64.sqrt())).abs() < 1e-14);
        assert!((z[1] - (2.0 + 2f64.sqrt())).abs() < 1e-14);
        let z = zeros_classical(&ctx, 3).unwrap().zeros;
        for (a, b) in z.iter().zip([0.415775, 2.294280, 6.289945]) {
            assert!((a - b).abs() < 5e-7);
        }
    }

    #[test]
    fn legendre_degree_one() {
        let ctx = GeronimusContext::new(MeasureSpec::jacobi(0.0, 0.0).unwrap(), 2.0, 0.0, 2).unwrap();
        assert!(zeros_classical(&ctx, 1).unwrap().zeros[0].abs() < 1e-16);
    }

    #[test]
    fn table_one_rows() {
        let z = zeros_geronimus(&laguerre_ctx(0.0), 3).unwrap().zeros;
        for (a, b) in z.iter().zip([0.29677128, 1.7948808, 5.3271527]) {
            assert!((a - b).abs() < 5e-7, "{a} vs {b}");
        }
        let z = zeros_geronimus(&laguerre_ctx(5.0), 3).unwrap().zeros;
        for (a, b) in z.iter().zip([-0.988481, 0.87094, 4.276644]) {
            assert!((a - b).abs() < 5e-6, "{a} vs {b}");
        }
    }

    #[test]
    fn degree_one_chain() {
        let ctx = laguerre_ctx(0.3);
        let r = interlacing_report(&ctx, 1).unwrap();
        assert!(r.holds(), "{:?}", r.violations);
        assert!(r.kernel.is_empty());
        assert_eq!(r.checked, 3);
    }

    #[test]
    fn single_mass_sweep_is_vacuously_monotone() {
        let t = sweep(&laguerre_ctx(0.0), 3, &[0.5]).unwrap();
        assert_eq!(t.zeros.len(), 1);
        assert!(t.is_monotone());
        assert!(sweep(&laguerre_ctx(0.0), 3, &[1.0, 0.5]).is_err());
    }

    #[test]
    fn minimum_mass_table_one() {
        let ctx = laguerre_ctx(0.0);
        let n0 = minimum_mass(&ctx, 3).unwrap();
        assert!(n0 > 0.0125 && n0 < 0.025, "{n0}");
        let bis = minimum_mass_bisection(&ctx, 3).unwrap();
        assert!(((n0 - bis) / n0).abs() < 1e-10);
    }
}
