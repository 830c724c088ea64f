//! Runs one property suite over the default grid and prints its JSON report.
//!
//! `cargo run --release --example verify_suite -- ladder`

use geronimus::verify::{verify, Suite};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "equilibrium".into());
    let suite = match arg.as_str() {
        "all" => Suite::All,
        "interlacing" => Suite::Interlacing,
        "ladder" => Suite::Ladder,
        "ode" => Suite::Ode,
        "equilibrium" => Suite::Equilibrium,
        "oracle" => Suite::Oracle,
        other => {
            eprintln!("unknown suite {other}");
            std::process::exit(1);
        }
    };
    let report = verify(suite);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
