//! Find the largest minimal p-dominating set and compare it with the smallest.
//!
//! Run with `cargo run --example upper_domination`.

use partial_domination::engine::{big_gamma_p_exact, gamma_p_exact, is_minimal_p_dominating};
use partial_domination::{FamilySpec, Proportion, VertexSet};

fn main() -> partial_domination::Result<()> {
    let p = Proportion::HALF;
    for spec in [
        FamilySpec::Path(6),
        FamilySpec::Cycle(12),
        FamilySpec::Grid(3, 4),
    ] {
        let g = spec.build()?;
        let lower = gamma_p_exact(&g, p);
        let upper = big_gamma_p_exact(&g, p)?;
        println!(
            "{spec}: gamma_p = {} via {}, Gamma_p = {} via {}",
            lower.cardinality, lower.witness, upper.cardinality, upper.witness
        );
    }

    let g = FamilySpec::Path(6).build()?;
    let leaves = VertexSet::from_vertices(6, [0, 5]);
    println!(
        "leaves {leaves} minimal: {}",
        is_minimal_p_dominating(&g, &leaves, p)
    );
    Ok(())
}
