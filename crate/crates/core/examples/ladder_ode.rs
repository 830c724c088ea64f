//! Ladder coefficients and the holonomic equation, checked pointwise with
//! derivatives from the differentiated recurrence.

use geronimus::geronimus::GeronimusContext;
use geronimus::ladder::{c1_audit, sample_points, Ladder};
use geronimus::measures::MeasureSpec;

fn main() -> geronimus::error::Result<()> {
    let ctx = GeronimusContext::new(MeasureSpec::laguerre(0.0)?, -1.0, 0.05, 8)?;
    let audit = c1_audit(ctx.spec().family());
    println!("C1 variant: {:?} (residuals {:.1e} vs {:.1e})", audit.selected, audit.residual_previous_degree, audit.residual_same_degree);

    let n = 6;
    let ladder = Ladder::new(&ctx, n)?;
    println!("Δ(x) = {:?}", ladder.delta_polynomial().0);
    let (mut lower, mut ode) = (0.0f64, 0.0f64);
    for x in sample_points(&ctx, n, 100)? {
        let k = ladder.coefficients(x)?;
        let q = ctx.eval_qcn(n, x);
        let qp = ctx.eval_qcn(n - 1, x);
        let terms = [k.xi1 * q.value, k.eta1 * qp.value];
        lower = lower.max((q.d1 - terms[0] - terms[1]).abs() / q.d1.abs().max(terms[0].abs()).max(terms[1].abs()));
        let o = ladder.ode(x)?;
        let t = [q.d2, o.r * q.d1, o.s * q.value];
        ode = ode.max((t[0] + t[1] + t[2]).abs() / t.iter().fold(0.0f64, |m, v| m.max(v.abs())));
    }
    println!("lowering identity, worst relative residual: {lower:.2e}");
    println!("Q'' + R Q' + S Q,   worst relative residual: {ode:.2e}");
    let o = ladder.ode(2.5)?;
    println!("at x = 2.5: R = {:.10} (closed {:.10}), S = {:.10} (closed {:.10?})", o.r, o.r_closed, o.s, o.s_closed);
    Ok(())
}
