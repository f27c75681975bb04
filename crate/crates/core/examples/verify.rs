//! Runs the built-in self-check suites and prints one line per case.
//!
//! cargo run --release --example verify -- [field] [truncation] [seed]

use blocklab::error::Budget;
use blocklab::verify::{run, Settings, Suite};

fn main() -> blocklab::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let field = args.next().unwrap_or_else(|| "gf2".into()).parse()?;
    let truncation = args.next().map_or(6, |s| s.parse().expect("truncation"));
    let seed = args.next().map_or(0, |s| s.parse().expect("seed"));
    let settings = Settings {
        field,
        truncation,
        seed,
    };
    let reports = run(&Suite::ALL, &settings, &Budget::default())?;
    for r in &reports {
        let status = if r.passed() { "ok" } else { "FAILED" };
        println!(
            "{:12} {:24} {:6} checks  {status}",
            r.suite.name(),
            r.name,
            r.checks
        );
        if let Some(cx) = &r.counterexample {
            println!("    {cx}");
        }
    }
    Ok(())
}
