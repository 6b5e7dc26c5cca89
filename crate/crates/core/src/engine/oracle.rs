//! Exhaustive reference solver. Deliberately shares nothing with the
//! branch-and-bound path beyond the graph itself.

use super::{Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::proportion::Proportion;
use crate::vertex_set::VertexSet;

pub const ORACLE_MAX_VERTICES: usize = 24;

/// γ_p(G) by enumerating subsets in order of size, lexicographically within
/// each size. The first hit is the lexicographically first minimum set.
pub fn oracle_gamma_p(g: &Graph, p: Proportion) -> Result<SolveResult> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "exhaustive oracle",
            limit: ORACLE_MAX_VERTICES,
            got: n,
        });
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, u| m | 1 << u))
        .collect();
    // |N[S]| / n >= num / den  <=>  |N[S]| * den >= num * n
    let meets = |mask: u32| mask.count_ones() as u64 * p.den() >= p.num() * n as u64;

    let mut examined = 0u64;
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            examined += 1;
            let mask = idx.iter().fold(0u32, |m, &v| m | closed[v]);
            if meets(mask) {
                let witness = VertexSet::from_vertices(n, idx.iter().copied());
                return Ok(SolveResult::new(g, witness, Method::Oracle, examined));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set meets any proportion <= 1")
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
