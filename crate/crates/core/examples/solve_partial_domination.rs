//! Compute the partial domination number with every solver and compare.
//!
//! Run with `cargo run --example solve_partial_domination`.

use partial_domination::engine::{
    gamma_p_binary_search, gamma_p_exact, greedy_gamma_p, oracle_gamma_p,
};
use partial_domination::{FamilySpec, Proportion};

fn main() -> partial_domination::Result<()> {
    let p: Proportion = "1/2".parse()?;
    for spec in [
        FamilySpec::Cycle(13),
        FamilySpec::Grid(3, 5),
        FamilySpec::Spider(8),
    ] {
        let g = spec.build()?;
        let exact = gamma_p_exact(&g, p);
        let binary = gamma_p_binary_search(&g, p);
        let greedy = greedy_gamma_p(&g, p);
        let oracle = oracle_gamma_p(&g, p)?;
        println!("{spec} at p = {p}, threshold {}", p.threshold(g.n()));
        for r in [&exact, &binary, &greedy, &oracle] {
            println!(
                "  {:<16} size {} witness {} covers {} ({} nodes)",
                r.method.to_string(),
                r.cardinality,
                r.witness,
                r.covered,
                r.nodes_explored
            );
        }
    }
    Ok(())
}
