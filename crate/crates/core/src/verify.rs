//! Property suites over the default parameter grid, with a JSON report.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::geronimus::GeronimusContext;
use crate::ladder::{equilibrium_residual, sample_points, Ladder};
use crate::measures::{Family, MeasureSpec};
use crate::oracle::{gram_schmidt_oracle, oracle_discrepancy, ORACLE_MAX_DEGREE};
use crate::zeros::{zeros_geronimus, ZeroAnalysis};

pub const SCHEMA: &str = "geronimus/1";

pub const GRID_MASSES: [f64; 5] = [0.0, 1e-3, 0.05, 1.0, 100.0];
pub const INTERLACING_MAX_DEGREE: usize = 25;
pub const LADDER_MAX_DEGREE: usize = 15;
pub const SAMPLE_COUNT: usize = 100;

pub const IDENTITY_TOL: f64 = 1e-9;
pub const RECONSTRUCTION_TOL: f64 = 1e-10;
pub const DELTA_TOL: f64 = 1e-12;
pub const HOLONOMIC_TOL: f64 = 1e-8;
pub const CLOSED_FORM_TOL: f64 = 1e-9;
pub const ZERO_LOG_DERIVATIVE_TOL: f64 = 1e-7;
pub const EQUILIBRIUM_TOL: f64 = 1e-6;
pub const ORACLE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Interlacing,
    Ladder,
    Ode,
    Equilibrium,
    Oracle,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Interlacing => "interlacing",
            Suite::Ladder => "ladder",
            Suite::Ode => "ode",
            Suite::Equilibrium => "equilibrium",
            Suite::Oracle => "oracle",
        }
    }
}

/// A measure together with a shift outside its support.
#[derive(Debug, Clone, Copy)]
pub struct GridCell {
    pub spec: MeasureSpec,
    pub c: f64,
}

impl GridCell {
    pub fn label(&self) -> String {
        match self.spec.family() {
            Family::Laguerre => format!("laguerre(α={}) c={}", self.spec.alpha(), self.c),
            Family::Jacobi => format!(
                "jacobi(α={}, β={}) c={}",
                self.spec.alpha(),
                self.spec.beta(),
                self.c
            ),
        }
    }
}

/// Laguerre α ∈ {-0.5, 0, 0.5, 2} with c ∈ {-5, -1, -0.1}; Jacobi
/// (α, β) ∈ {(0, 0), (0.5, 1), (2, -0.5)} with c ∈ {-3, -1.5, 1.5, 3}.
pub fn grid_cells() -> Vec<GridCell> {
    let mut cells = Vec::new();
    for alpha in [-0.5, 0.0, 0.5, 2.0] {
        for c in [-5.0, -1.0, -0.1] {
            let spec = MeasureSpec::laguerre(alpha).expect("grid parameter");
            cells.push(GridCell { spec, c });
        }
    }
    for (alpha, beta) in [(0.0, 0.0), (0.5, 1.0), (2.0, -0.5)] {
        for c in [-3.0, -1.5, 1.5, 3.0] {
            let spec = MeasureSpec::jacobi(alpha, beta).expect("grid parameter");
            cells.push(GridCell { spec, c });
        }
    }
    cells
}

/// Cells on which the quadrature oracle is compared: two Laguerre and two
/// Jacobi, with the mass used for each.
pub fn oracle_cells() -> Vec<(GridCell, f64)> {
    let lag = |a: f64| MeasureSpec::laguerre(a).expect("oracle parameter");
    let jac = |a: f64, b: f64| MeasureSpec::jacobi(a, b).expect("oracle parameter");
    vec![
        (GridCell { spec: lag(0.0), c: -1.0 }, 0.05),
        (GridCell { spec: lag(2.0), c: -1.0 }, 1.0),
        (GridCell { spec: jac(0.5, 1.0), c: -1.5 }, 0.05),
        (GridCell { spec: jac(2.0, -0.5), c: 1.5 }, 0.05),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub suite: &'static str,
    pub case: String,
    pub detail: String,
}

/// Case count, failures and the worst value seen for each measured quantity.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteOutcome {
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub worst: BTreeMap<String, f64>,
}

impl SuiteOutcome {
    fn merge(mut self, other: SuiteOutcome) -> SuiteOutcome {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        for (k, v) in other.worst {
            let e = self.worst.entry(k).or_insert(v);
            *e = e.max(v);
        }
        self
    }

    fn record(&mut self, metric: &str, value: f64) {
        let e = self.worst.entry(metric.to_string()).or_insert(value);
        if value > *e || value.is_nan() {
            *e = value;
        }
    }

    /// Counts one case; fails it if `value` is not below `tol`.
    fn check(&mut self, suite: &'static str, case: impl FnOnce() -> String, metric: &str, value: f64, tol: f64) {
        self.cases += 1;
        self.record(metric, value);
        if !(value < tol) {
            self.failures.push(Failure {
                suite,
                case: case(),
                detail: format!("{metric} = {value:.3e} (tolerance {tol:.0e})"),
            });
        }
    }

    fn error(&mut self, suite: &'static str, case: String, err: impl std::fmt::Display) {
        self.cases += 1;
        self.failures.push(Failure {
            suite,
            case,
            detail: err.to_string(),
        });
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub suite: &'static str,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub worst: BTreeMap<String, f64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `|lhs - Σ terms| / max(|lhs|, |terms|)`.
fn relative_residual(lhs: f64, terms: &[f64]) -> f64 {
    let scale = terms.iter().fold(lhs.abs(), |m, t| m.max(t.abs()));
    let r = lhs - terms.iter().sum::<f64>();
    if scale == 0.0 {
        r.abs()
    } else {
        r.abs() / scale
    }
}

fn relative_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn per_cell<F>(cells: &[GridCell], f: F) -> SuiteOutcome
where
    F: Fn(&GridCell) -> SuiteOutcome + Sync + Send,
{
    cells
        .par_iter()
        .map(f)
        .reduce(SuiteOutcome::default, SuiteOutcome::merge)
}

/// Zero chains for shifts below and above the support, kernel interlacing and
/// the sign relation, plus positivity of `B_n^c` and `e_n^c - γ_{n+2}^c`.
pub fn interlacing_suite(cells: &[GridCell]) -> SuiteOutcome {
    const SUITE: &str = "interlacing";
    per_cell(cells, |cell| {
        let mut out = SuiteOutcome::default();
        let ctx = match GeronimusContext::new(cell.spec, cell.c, 0.0, INTERLACING_MAX_DEGREE) {
            Ok(ctx) => ctx,
            Err(e) => {
                out.error(SUITE, cell.label(), e);
                return out;
            }
        };
        for n in 0..=INTERLACING_MAX_DEGREE {
            let gap = ctx.kernel_connection_coeffs(n).gap;
            out.check(SUITE, || format!("{} n={n}", cell.label()), "-(e_n - γ_{n+2})", -gap, 0.0);
            if n >= 1 {
                let b = ctx.b_coefficient(n);
                out.check(SUITE, || format!("{} n={n}", cell.label()), "-B_n", -b, 0.0);
            }
        }
        for n in 2..=INTERLACING_MAX_DEGREE {
            let analysis = match ZeroAnalysis::new(&ctx, n) {
                Ok(a) => a,
                Err(e) => {
                    out.error(SUITE, format!("{} n={n}", cell.label()), e);
                    continue;
                }
            };
            for mass in GRID_MASSES {
                let case = || format!("{} n={n} N={mass}", cell.label());
                match analysis.interlacing(mass) {
                    Ok(rep) => {
                        out.cases += 1;
                        out.record("violations", rep.violations.len() as f64);
                        if !rep.holds() {
                            let v = &rep.violations[0];
                            out.failures.push(Failure {
                                suite: SUITE,
                                case: case(),
                                detail: format!(
                                    "{} violated: {} vs {} (gap {:.3e}), {} violations",
                                    v.relation,
                                    v.left,
                                    v.right,
                                    v.gap,
                                    rep.violations.len()
                                ),
                            });
                        }
                    }
                    Err(e) => out.error(SUITE, case(), e),
                }
            }
        }
        out
    })
}

/// Lowering and raising identities, Cramer reconstruction and the two forms
/// of `Δ`.
pub fn ladder_suite(cells: &[GridCell]) -> SuiteOutcome {
    const SUITE: &str = "ladder";
    per_cell(cells, |cell| {
        let mut out = SuiteOutcome::default();
        for mass in GRID_MASSES {
            let ctx = match GeronimusContext::new(cell.spec, cell.c, mass, LADDER_MAX_DEGREE) {
                Ok(ctx) => ctx,
                Err(e) => {
                    out.error(SUITE, cell.label(), e);
                    continue;
                }
            };
            for n in 2..=LADDER_MAX_DEGREE {
                let label = || format!("{} N={mass} n={n}", cell.label());
                let ladder = match Ladder::new(&ctx, n) {
                    Ok(l) => l,
                    Err(e) => {
                        out.error(SUITE, label(), e);
                        continue;
                    }
                };
                let (d, f) = (ladder.delta_polynomial(), ladder.delta_polynomial_factored());
                let delta_gap = relative_diff(d.0[0], f.0[0]).max(relative_diff(d.0[1], f.0[1]));
                out.check(SUITE, label, "Δ forms", delta_gap, DELTA_TOL);
                let lead_gap = relative_diff(d.0[1], ladder.lambdas().1 / ctx.recurrence().gamma[n - 1]);
                let degree_ok = d.degree() == 1 && lead_gap < DELTA_TOL;
                out.check(SUITE, label, "Δ degree/leading coefficient", if degree_ok { 0.0 } else { 1.0 }, 0.5);

                let points = match sample_points(&ctx, n, SAMPLE_COUNT) {
                    Ok(p) => p,
                    Err(e) => {
                        out.error(SUITE, label(), e);
                        continue;
                    }
                };
                let (mut lower, mut raise, mut recon) = (0.0f64, 0.0f64, 0.0f64);
                for &x in &points {
                    let k = match ladder.coefficients(x) {
                        Ok(k) => k,
                        Err(e) => {
                            out.error(SUITE, format!("{} x={x}", label()), e);
                            continue;
                        }
                    };
                    let q = ctx.eval_qcn(n, x);
                    let qp = ctx.eval_qcn(n - 1, x);
                    let (p, pm) = ctx.recurrence().eval_pair(n, x);
                    let (lam_n, lam_p) = ladder.lambdas();
                    let g = ctx.recurrence().gamma[n - 1];
                    lower = lower.max(relative_residual(q.d1, &[k.xi1 * q.value, k.eta1 * qp.value]));
                    raise = raise.max(relative_residual(qp.d1, &[k.xi2 * q.value, k.eta2 * qp.value]));
                    recon = recon
                        .max(relative_residual(
                            p.value,
                            &[k.b2 * q.value / k.delta, -lam_n * qp.value / k.delta],
                        ))
                        .max(relative_residual(
                            pm.value,
                            &[lam_p / g * q.value / k.delta, qp.value / k.delta],
                        ));
                }
                out.check(SUITE, label, "lowering identity", lower, IDENTITY_TOL);
                out.check(SUITE, label, "raising identity", raise, IDENTITY_TOL);
                out.check(SUITE, label, "Cramer reconstruction", recon, RECONSTRUCTION_TOL);
            }
        }
        out
    })
}

/// Holonomic residual, generic-vs-closed-form coefficients and the
/// logarithmic-derivative condition at the zeros.
pub fn ode_suite(cells: &[GridCell]) -> SuiteOutcome {
    const SUITE: &str = "ode";
    per_cell(cells, |cell| {
        let mut out = SuiteOutcome::default();
        for mass in GRID_MASSES {
            let ctx = match GeronimusContext::new(cell.spec, cell.c, mass, LADDER_MAX_DEGREE) {
                Ok(ctx) => ctx,
                Err(e) => {
                    out.error(SUITE, cell.label(), e);
                    continue;
                }
            };
            for n in 2..=LADDER_MAX_DEGREE {
                let label = || format!("{} N={mass} n={n}", cell.label());
                let (ladder, points, zeros) = match (
                    Ladder::new(&ctx, n),
                    sample_points(&ctx, n, SAMPLE_COUNT),
                    zeros_geronimus(&ctx, n),
                ) {
                    (Ok(l), Ok(p), Ok(z)) => (l, p, z.zeros),
                    (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                        out.error(SUITE, label(), e);
                        continue;
                    }
                };
                let (mut hol, mut r_gap, mut s_gap) = (0.0f64, 0.0f64, 0.0f64);
                for &x in &points {
                    let o = match ladder.ode(x) {
                        Ok(o) => o,
                        Err(e) => {
                            out.error(SUITE, format!("{} x={x}", label()), e);
                            continue;
                        }
                    };
                    let q = ctx.eval_qcn(n, x);
                    hol = hol.max(relative_residual(q.d2, &[-o.r * q.d1, -o.s * q.value]));
                    r_gap = r_gap.max(relative_diff(o.r, o.r_closed));
                    if let Some(s) = o.s_closed {
                        s_gap = s_gap.max(relative_diff(o.s, s));
                    }
                }
                out.check(SUITE, label, "holonomic residual", hol, HOLONOMIC_TOL);
                out.check(SUITE, label, "R generic vs closed", r_gap, CLOSED_FORM_TOL);
                if cell.spec.family() == Family::Laguerre {
                    out.check(SUITE, label, "S generic vs closed", s_gap, CLOSED_FORM_TOL);
                }
                // closed-form R: the generic one cancels near the Δ root,
                // which approaches c together with the extreme zero
                let mut at_zeros = 0.0f64;
                for &y in &zeros {
                    let q = ctx.eval_qcn(n, y);
                    at_zeros = at_zeros.max(relative_diff(q.d2 / q.d1, -ladder.r_closed(y)));
                }
                out.check(SUITE, label, "Q''/Q' + R at zeros", at_zeros, ZERO_LOG_DERIVATIVE_TOL);
            }
        }
        out
    })
}

/// Electrostatic equilibrium at every zero, by both routes.
pub fn equilibrium_suite(cells: &[GridCell]) -> SuiteOutcome {
    const SUITE: &str = "equilibrium";
    per_cell(cells, |cell| {
        let mut out = SuiteOutcome::default();
        for mass in GRID_MASSES {
            let ctx = match GeronimusContext::new(cell.spec, cell.c, mass, LADDER_MAX_DEGREE) {
                Ok(ctx) => ctx,
                Err(e) => {
                    out.error(SUITE, cell.label(), e);
                    continue;
                }
            };
            for n in 1..=LADDER_MAX_DEGREE {
                let label = || format!("{} N={mass} n={n}", cell.label());
                match equilibrium_residual(&ctx, n) {
                    Ok(rep) => {
                        out.check(SUITE, label, "pairwise route", rep.max_pairwise(), EQUILIBRIUM_TOL);
                        out.check(
                            SUITE,
                            label,
                            "logarithmic-derivative route",
                            rep.max_logarithmic_derivative(),
                            EQUILIBRIUM_TOL,
                        );
                    }
                    Err(e) => out.error(SUITE, label(), e),
                }
            }
        }
        out
    })
}

/// Gram–Schmidt by quadrature against `P_n + Λ_n P_{n-1}`, degrees up to 8.
pub fn oracle_suite() -> SuiteOutcome {
    const SUITE: &str = "oracle";
    let mut out = SuiteOutcome::default();
    for (cell, mass) in oracle_cells() {
        let label = format!("{} N={mass}", cell.label());
        let res = GeronimusContext::new(cell.spec, cell.c, mass, ORACLE_MAX_DEGREE)
            .and_then(|ctx| Ok((gram_schmidt_oracle(&ctx, ORACLE_MAX_DEGREE)?, ctx)));
        match res {
            Ok((oracle, ctx)) => {
                for (n, d) in oracle_discrepancy(&ctx, &oracle).into_iter().enumerate() {
                    out.check(SUITE, || format!("{label} n={n}"), "coefficient mismatch", d, ORACLE_TOL);
                }
            }
            Err(e) => out.error(SUITE, label, e),
        }
    }
    out
}

pub fn run_suite(suite: Suite) -> SuiteOutcome {
    let cells = grid_cells();
    match suite {
        Suite::Interlacing => interlacing_suite(&cells),
        Suite::Ladder => ladder_suite(&cells),
        Suite::Ode => ode_suite(&cells),
        Suite::Equilibrium => equilibrium_suite(&cells),
        Suite::Oracle => oracle_suite(),
        Suite::All => [
            Suite::Interlacing,
            Suite::Ladder,
            Suite::Ode,
            Suite::Equilibrium,
            Suite::Oracle,
        ]
        .into_iter()
        .map(run_suite)
        .fold(SuiteOutcome::default(), SuiteOutcome::merge),
    }
}

pub fn verify(suite: Suite) -> VerifyReport {
    let out = run_suite(suite);
    VerifyReport {
        schema: SCHEMA,
        suite: suite.name(),
        cases: out.cases,
        failures: out.failures,
        worst: out.worst,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        assert_eq!(grid_cells().len(), 24);
        assert_eq!(oracle_cells().len(), 4);
    }

    #[test]
    fn oracle_suite_passes() {
        let out = oracle_suite();
        assert!(out.failures.is_empty(), "{:?}", out.failures);
        assert_eq!(out.cases, 4 * (ORACLE_MAX_DEGREE + 1));
    }

    #[test]
    fn all_is_the_sum_of_its_parts() {
        let one = vec![grid_cells()[4]];
        let a = ladder_suite(&one);
        let b = equilibrium_suite(&one);
        let merged = a.clone().merge(b.clone());
        assert_eq!(merged.cases, a.cases + b.cases);
        assert_eq!(merged.failures.len(), a.failures.len() + b.failures.len());
    }
}
