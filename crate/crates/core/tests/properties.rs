//! Invariants over random parameters.

use proptest::prelude::*;

use geronimus::geronimus::{GeronimusContext, Side};
use geronimus::ladder::{equilibrium_residual, Ladder};
use geronimus::measures::MeasureSpec;
use geronimus::zeros::{minimum_mass, zeros_geronimus, ZeroAnalysis};

/// A classical measure and a shift outside its support.
fn cell() -> impl Strategy<Value = (MeasureSpec, f64)> {
    let laguerre = (-0.9f64..5.0, 0.05f64..6.0).prop_map(|(a, d)| (MeasureSpec::laguerre(a).unwrap(), -d));
    let jacobi = (-0.9f64..4.0, -0.9f64..4.0, 0.02f64..3.0, any::<bool>()).prop_map(|(a, b, d, above)| {
        let c = if above { 1.0 + d } else { -1.0 - d };
        (MeasureSpec::jacobi(a, b).unwrap(), c)
    });
    prop_oneof![laguerre, jacobi]
}

fn log_mass() -> impl Strategy<Value = f64> {
    (-4.0f64..4.0).prop_map(|e| 10f64.powf(e))
}

fn config() -> ProptestConfig {
    ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::with_cases(48)
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn zero_chains_interlace((spec, c) in cell(), n in 2usize..20, mass in log_mass()) {
        let ctx = GeronimusContext::new(spec, c, 0.0, n).unwrap();
        let report = ZeroAnalysis::new(&ctx, n).unwrap().interlacing(mass).unwrap();
        prop_assert!(report.holds(), "{:?}", report.violations);
    }

    #[test]
    fn mass_coefficient_and_kernel_gap_positive((spec, c) in cell(), n in 1usize..25) {
        let ctx = GeronimusContext::new(spec, c, 0.0, n + 1).unwrap();
        prop_assert!(ctx.b_coefficient(n) > 0.0);
        prop_assert!(ctx.kernel_connection_coeffs(n - 1).gap > 0.0);
    }

    #[test]
    fn connection_coefficient_moves_monotonically(
        (spec, c) in cell(), n in 1usize..20, m1 in log_mass(), m2 in log_mass()
    ) {
        let (lo, hi) = if m1 < m2 { (m1, m2) } else { (m2, m1) };
        prop_assume!(hi > lo * (1.0 + 1e-9));
        let ctx = GeronimusContext::new(spec, c, 0.0, n).unwrap();
        let at = |m: f64| ctx.with_mass(m).unwrap().lambda(n);
        let start = at(0.0);
        let end = -ctx.pi(n - 1);
        let dir = (end - start).signum();
        let kappa = |m: f64| 1.0 + m * ctx.b_coefficient(n);
        // below this the change in Λ is under the rounding of π_{n-1}
        let resolvable = |d: f64| (end - start).abs() * d > 1e-12 * (1.0 + end.abs());
        prop_assume!(resolvable(1.0 / kappa(lo) - 1.0 / kappa(hi)));
        prop_assume!(resolvable(1.0 - 1.0 / kappa(lo)) && resolvable(1.0 / kappa(hi)));
        let (l_lo, l_hi) = (at(lo), at(hi));
        prop_assert!(dir * (l_hi - l_lo) > 0.0);
        prop_assert!(dir * (l_lo - start) > 0.0 && dir * (end - l_hi) > 0.0);
    }

    #[test]
    fn zeros_move_toward_the_shift((spec, c) in cell(), n in 1usize..15, m in log_mass()) {
        let ctx = GeronimusContext::new(spec, c, 0.0, n).unwrap();
        let analysis = ZeroAnalysis::new(&ctx, n).unwrap();
        let a = analysis.at_mass(m).unwrap();
        let b = analysis.at_mass(2.0 * m).unwrap();
        prop_assert_eq!(a.zeros.len(), n);
        prop_assert!(a.zeros.windows(2).all(|w| w[0] < w[1]));
        let sign = match ctx.side() { Side::Below => -1.0, Side::Above => 1.0 };
        // offsets from the large-mass limits keep full relative precision
        for (oa, ob) in a.offsets.iter().zip(&b.offsets) {
            prop_assert!(sign * (ob - oa) > 0.0, "{oa:e} -> {ob:e}");
        }
    }

    #[test]
    fn extreme_zero_leaves_support_past_minimum_mass((spec, c) in cell(), n in 2usize..15) {
        let ctx = GeronimusContext::new(spec, c, 0.0, n).unwrap();
        let n0 = minimum_mass(&ctx, n).unwrap();
        prop_assert!(n0 > 0.0);
        let (a, b) = spec.support();
        let extreme = |m: f64| {
            let z = zeros_geronimus(&ctx.with_mass(m).unwrap(), n).unwrap().zeros;
            match ctx.side() { Side::Below => z[0] - a, Side::Above => b - z[n - 1] }
        };
        prop_assert!(extreme(0.9 * n0) > 0.0);
        prop_assert!(extreme(1.1 * n0) < 0.0);
    }

    #[test]
    fn delta_forms_agree((spec, c) in cell(), n in 2usize..15, m in log_mass(), x in -3.0f64..10.0) {
        let ctx = GeronimusContext::new(spec, c, m, n).unwrap();
        let ladder = Ladder::new(&ctx, n).unwrap();
        let (p, q) = (ladder.delta_polynomial(), ladder.delta_polynomial_factored());
        let scale = p.0.iter().map(|v| v.abs()).sum::<f64>() * (1.0 + x.abs());
        prop_assert!((p.eval(x) - q.eval(x)).abs() < 1e-10 * scale);
    }

    #[test]
    fn holonomic_equation_annihilates((spec, c) in cell(), n in 2usize..15, m in log_mass(), t in 0.01f64..0.99) {
        let ctx = GeronimusContext::new(spec, c, m, n).unwrap();
        let ladder = Ladder::new(&ctx, n).unwrap();
        let (a, b) = spec.support();
        let x = a + (b.min(a + 4.0 * n as f64) - a) * t;
        prop_assume!(ladder.is_regular(x));
        let ode = ladder.ode(x).unwrap();
        let q = ctx.eval_qcn(n, x);
        let terms = [q.d2, ode.r * q.d1, ode.s * q.value];
        let scale: f64 = terms.iter().map(|v| v.abs()).sum();
        let residual: f64 = terms.iter().sum();
        prop_assert!(residual.abs() < 1e-7 * scale, "{residual:e} vs {scale:e}");
    }

    #[test]
    fn zeros_are_in_equilibrium((spec, c) in cell(), n in 1usize..12, m in log_mass()) {
        let ctx = GeronimusContext::new(spec, c, m, n).unwrap();
        let report = equilibrium_residual(&ctx, n).unwrap();
        prop_assert!(report.holds(1e-6), "{} {}", report.max_pairwise(), report.max_logarithmic_derivative());
    }
}
