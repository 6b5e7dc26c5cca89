//! Sample connected graphs with connected complements and audit every bound.
//!
//! Run with `cargo run --example audit_bounds`.

use partial_domination::audit::{audit_suite, sample_connected_coconnected};
use partial_domination::{FamilySpec, Proportion};

fn main() -> partial_domination::Result<()> {
    let ps: Vec<Proportion> = ["1/4", "1/2", "3/4", "1/1"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;

    let spider = FamilySpec::Spider(8).build()?;
    print!("{}", audit_suite(&spider, "spider:8", &ps).to_text());

    let mut violated = 0;
    for seed in 0..20 {
        let g = sample_connected_coconnected(9, Proportion::HALF, seed)?;
        let report = audit_suite(&g, format!("sample-{seed}"), &ps);
        violated += report.violations().count();
    }
    println!("20 sampled graphs, {violated} violations");
    Ok(())
}
