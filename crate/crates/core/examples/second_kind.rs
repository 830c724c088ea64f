//! Functions of the second kind, their ratios, and the recurrence of the
//! rationally modified measure dμ/|x - c|.

use geronimus::geronimus::GeronimusContext;
use geronimus::measures::MeasureSpec;
use geronimus::secondkind::second_kind;

fn main() -> geronimus::error::Result<()> {
    let spec = MeasureSpec::laguerre(0.0)?;
    let c = -1.0;
    let table = second_kind(&spec, c, 8)?;
    println!("Laguerre α=0, c={c}: continued fraction certified at depth {}", table.depth);
    println!("{:>3} {:>16} {:>16}", "n", "F_n(c)", "r_n = F_{n+1}/F_n");
    for n in 0..=6 {
        println!("{n:>3} {:>16.10e} {:>16.10}", table.value(n), table.ratio(n));
    }

    let ctx = GeronimusContext::new(spec, c, 0.0, 8)?;
    let (beta_c, gamma_c) = ctx.geronimus_recurrence();
    println!("\n{:>3} {:>14} {:>14} {:>14}", "n", "β_n^c", "γ_n^c", "B_n^c");
    for n in 1..=6 {
        println!(
            "{n:>3} {:>14.8} {:>14.8} {:>14.8}",
            beta_c[n], gamma_c[n], ctx.b_coefficient(n)
        );
    }
    Ok(())
}
