//! Smallest mass that pushes the extreme zero outside the support.

use geronimus::tables::TableId;
use geronimus::zeros::{minimum_mass, minimum_mass_bisection};

fn main() -> geronimus::error::Result<()> {
    for id in [TableId::Laguerre, TableId::Jacobi] {
        let ctx = id.context(0.0)?;
        let n = id.degree();
        let closed = minimum_mass(&ctx, n)?;
        let bisect = minimum_mass_bisection(&ctx, n)?;
        println!(
            "{id:?}: N_0 = {closed:.12e} (bisection {bisect:.12e}, relative gap {:.1e})",
            ((closed - bisect) / closed).abs()
        );
        let masses = id.masses();
        let pair = masses.windows(2).find(|w| w[0] < closed && closed < w[1]);
        println!("  bracketed by table rows {pair:?}");
    }
    Ok(())
}
