//! Interlacing chains for shifts below and above the support.

use geronimus::geronimus::GeronimusContext;
use geronimus::measures::MeasureSpec;
use geronimus::zeros::ZeroAnalysis;

fn main() -> geronimus::error::Result<()> {
    let cases = [
        (MeasureSpec::laguerre(0.0)?, -1.0),
        (MeasureSpec::jacobi(0.5, 1.0)?, 3.0),
    ];
    for (spec, c) in cases {
        let ctx = GeronimusContext::new(spec, c, 0.0, 6)?;
        let analysis = ZeroAnalysis::new(&ctx, 6)?;
        for mass in [0.05, 100.0] {
            let rep = analysis.interlacing(mass)?;
            println!(
                "{:?} c={c} N={mass}: {:?}, {} inequalities checked, {} violated, extended precision: {}",
                spec.family(),
                rep.side,
                rep.checked,
                rep.violations.len(),
                rep.extended
            );
            println!("  zeros of Q_n^(c,N): {:.6?}", rep.geronimus);
            println!("  zeros of Q_n^c:     {:.6?}", rep.rational);
            println!("  kernel zeros:       {:.6?}", rep.kernel);
        }
    }
    Ok(())
}
