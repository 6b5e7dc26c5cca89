//! Build each graph family and inspect closed neighborhoods.
//!
//! Run with `cargo run --example families`.

use partial_domination::FamilySpec;

fn main() -> partial_domination::Result<()> {
    for label in [
        "path:6",
        "cycle:8",
        "multipartite:3,5",
        "grid:3,4",
        "torus:3,5",
        "spider:4",
    ] {
        let spec: FamilySpec = label.parse()?;
        let g = spec.build()?;
        println!(
            "{spec}: n = {}, m = {}, max degree = {}, connected = {}",
            g.n(),
            g.edge_count(),
            g.max_degree(),
            g.is_connected()
        );
        println!("  N[0] = {}", g.closed_neighborhood(0)?);
    }

    let g = FamilySpec::Path(5).build()?;
    let co = g.complement();
    println!(
        "complement of path:5 has {} edges: {:?}",
        co.edge_count(),
        co.edges().collect::<Vec<_>>()
    );
    Ok(())
}
