//! Zero trajectories in N, their limits, and the speed of convergence
//! N (y_k - limit_k) against the predicted constants.

use geronimus::cli::logrange;
use geronimus::geronimus::GeronimusContext;
use geronimus::measures::MeasureSpec;
use geronimus::zeros::sweep;

fn main() -> geronimus::error::Result<()> {
    let ctx = GeronimusContext::new(MeasureSpec::laguerre(0.0)?, -1.0, 0.0, 3)?;
    let masses = logrange(1e-3, 1e6, 10);
    let traj = sweep(&ctx, 3, &masses)?;
    println!("limits:         {:.8?}", traj.limits);
    println!("rate constants: {:.8?}", traj.rate_constants);
    for (i, m) in traj.masses.iter().enumerate() {
        println!("N = {m:9.3e}  zeros {:.8?}  N(y - limit) {:.6?}", traj.zeros[i], traj.products[i]);
    }
    println!("strictly monotone in N: {}", traj.is_monotone());
    Ok(())
}
