//! Write a graph as an edge list, read it back, and report parse errors.
//!
//! Run with `cargo run --example edge_list_io`.

use partial_domination::edge_list::{parse_edge_list, to_edge_list_string};
use partial_domination::FamilySpec;

fn main() -> partial_domination::Result<()> {
    let g = FamilySpec::Torus(3, 3).build()?;
    let text = to_edge_list_string(&g);
    print!("{text}");
    let back = parse_edge_list(&text)?;
    println!("round trip equal: {}", back.edges().eq(g.edges()));

    let broken = "3 2\n0 1\n1 7\n";
    match parse_edge_list(broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
