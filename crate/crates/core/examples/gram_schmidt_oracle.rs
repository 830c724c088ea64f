//! Monic orthogonal polynomials of dμ/|x - c| + N δ_c by Gram–Schmidt over a
//! Gauss rule, compared with P_n + Λ_n P_{n-1}.

use geronimus::oracle::{gram_schmidt_oracle, oracle_discrepancy};
use geronimus::verify::oracle_cells;

fn main() -> geronimus::error::Result<()> {
    for (cell, mass) in oracle_cells() {
        let ctx = geronimus::geronimus::GeronimusContext::new(cell.spec, cell.c, mass, 8)?;
        let oracle = gram_schmidt_oracle(&ctx, 8)?;
        let worst = oracle_discrepancy(&ctx, &oracle).into_iter().fold(0.0, f64::max);
        println!(
            "{} N={mass}: condition {:.1e}, worst coefficient mismatch {worst:.1e}",
            cell.label(),
            oracle.condition
        );
    }
    Ok(())
}
