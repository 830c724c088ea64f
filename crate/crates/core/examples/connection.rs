//! Q_n^{c,N} = P_n + Λ_n P_{n-1} against the independent form
//! (Q_n^c + N B_n^c (x - c) P_{n-1}^{c,[1]}) / (1 + N B_n^c).

use geronimus::geronimus::GeronimusContext;
use geronimus::measures::MeasureSpec;

fn main() -> geronimus::error::Result<()> {
    let spec = MeasureSpec::jacobi(0.5, 1.0)?;
    let n = 4;
    for mass in [0.0, 0.05, 5.0] {
        let ctx = GeronimusContext::new(spec, -1.5, mass, n)?;
        let d = ctx.connection_data(n);
        println!("N = {mass}: Λ_n = {:.10}, κ_n = {:.6}, B_n = {:.6}", d.lambda, d.kappa, d.b);
        let mut worst = 0.0f64;
        for i in 0..=20 {
            let x = -1.0 + 0.1 * i as f64;
            let a = ctx.eval_qcn(n, x).value;
            let b = ctx.eval_qcn_connection(n, x).value;
            worst = worst.max((a - b).abs() / a.abs().max(b.abs()));
        }
        println!("  max relative difference of the two forms on [-1, 1]: {worst:.2e}");
    }
    Ok(())
}
