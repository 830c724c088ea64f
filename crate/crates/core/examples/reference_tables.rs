//! Recomputes both reference zero tables and the kernel-polynomial limits,
//! printing each value next to its six-digit printed counterpart.

use geronimus::tables::{compute_kernel_zeros, compute_table, deviations, TableId, PRINTED_TOL};

fn main() -> geronimus::error::Result<()> {
    for id in [TableId::Laguerre, TableId::Jacobi] {
        let rows = compute_table(id)?;
        let printed = id.printed();
        println!("{id:?}: c = {}, n = {}", id.shift(), id.degree());
        for ((row, p), dev) in rows.iter().zip(&printed).zip(deviations(&rows, &printed)) {
            let zeros: Vec<String> = row.zeros.iter().map(|y| format!("{y:10.6}")).collect();
            println!(
                "  N = {:<7} zeros [{}]  z = {:9.6}  (printed z = {:9.6}, max dev {dev:.1e})",
                row.mass,
                zeros.join(", "),
                row.z,
                p.z
            );
            assert!(dev < PRINTED_TOL);
        }
        let limits = compute_kernel_zeros(id)?;
        println!("  zeros of the kernel polynomial: {limits:.6?}");
        println!("  printed:                        {:?}", id.printed_kernel_zeros());
    }
    Ok(())
}
