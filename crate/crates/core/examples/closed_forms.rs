//! Evaluate the closed-form values for structured families, including the
//! explicit witness constructions and the grid ratio report.
//!
//! Run with `cargo run --example closed_forms`.

use partial_domination::closed_forms::{
    gamma_grid_goncalves, gamma_half_cycle, gamma_half_grid, gamma_half_multipartite,
    gamma_half_path, gamma_half_torus, grid_ratio_report,
};

fn main() -> partial_domination::Result<()> {
    let results = [
        gamma_half_cycle(20)?,
        gamma_half_path(25)?,
        gamma_half_multipartite(&[3, 5])?,
        gamma_half_grid(2, 12)?,
        gamma_half_grid(7, 9)?,
        gamma_half_torus(5, 5)?,
    ];
    for r in &results {
        let witness = r
            .witness
            .as_ref()
            .map_or("-".to_string(), |w| w.to_string());
        println!(
            "{}: {} witness {witness} fallback {}",
            r.family, r.value, r.fallback
        );
    }

    println!("gamma(grid 20x20) = {}", gamma_grid_goncalves(20, 20)?);
    for size in [16, 50, 1000] {
        let r = grid_ratio_report(size, size)?;
        println!(
            "{size}x{size}: {r} = {:.4} below half: {}",
            r.as_f64(),
            r.below_half()
        );
    }
    Ok(())
}
