//! External potential, the short-range charge location and the equilibrium
//! residual at the zeros.

use geronimus::ladder::{equilibrium_residual, external_potential, short_range_root};
use geronimus::tables::TableId;

fn main() -> geronimus::error::Result<()> {
    for id in [TableId::Laguerre, TableId::Jacobi] {
        let n = id.degree();
        for mass in id.masses() {
            let ctx = id.context(mass)?;
            let z = short_range_root(&ctx, n);
            let rep = equilibrium_residual(&ctx, n)?;
            println!(
                "{id:?} N={mass:<7} charge at z = {z:10.6}  residuals {:.1e} / {:.1e}",
                rep.max_pairwise(),
                rep.max_logarithmic_derivative()
            );
        }
        let ctx = id.context(0.05)?;
        let x = match id {
            TableId::Laguerre => 1.0,
            TableId::Jacobi => 0.0,
        };
        match external_potential(&ctx, n, x) {
            Ok(v) => println!("  V_ext({x}) = {:.8} with u = {:.6}", v.value, v.u),
            Err(e) => println!("  V_ext({x}) unavailable: {e}"),
        }
    }
    Ok(())
}
