//! Ask whether k vertices can cover t vertices, for every k, and show the
//! feasibility boundary the binary search relies on.
//!
//! Run with `cargo run --example t_domination_decision`.

use partial_domination::engine::t_dom_decision;
use partial_domination::FamilySpec;

fn main() -> partial_domination::Result<()> {
    let g = FamilySpec::Grid(4, 6).build()?;
    for t in [6, 12, 18, 24] {
        let row: Vec<String> = (0..=6)
            .map(|k| match t_dom_decision(&g, t, k) {
                Some(w) => format!("k={k}:{w}"),
                None => format!("k={k}:-"),
            })
            .collect();
        println!("t = {t:>2}  {}", row.join("  "));
    }
    Ok(())
}
