//! Γ_p(G): the largest minimal p-dominating set.

use super::{Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::proportion::Proportion;
use crate::vertex_set::VertexSet;

pub const UPPER_MAX_VERTICES: usize = 24;

struct UpperSearch {
    n: usize,
    target: usize,
    closed: Vec<u32>,
    /// Union of closed neighborhoods of vertices `i..n`.
    suffix_reach: Vec<u32>,
    best: Option<u32>,
    best_len: usize,
    nodes: u64,
}

impl UpperSearch {
    /// Vertices dominated by exactly one member of `chosen`.
    fn private_mask(&self, chosen: u32) -> u32 {
        let (mut once, mut twice) = (0u32, 0u32);
        let mut rest = chosen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice |= once & self.closed[v];
            once |= self.closed[v];
        }
        once & !twice
    }

    // A member whose private neighborhood is empty stays removable in every
    // superset, so such branches are dropped; coverage reaching the target
    // ends the branch because any added vertex would be removable.
    fn dfs(&mut self, i: usize, chosen: u32, covered: u32) {
        self.nodes += 1;
        let len = chosen.count_ones() as usize;
        if covered.count_ones() as usize >= self.target {
            let private = self.private_mask(chosen);
            let minimal = (0..self.n).filter(|&v| chosen >> v & 1 == 1).all(|v| {
                covered.count_ones() - (self.closed[v] & private).count_ones() < self.target as u32
            });
            if minimal && (self.best.is_none() || len > self.best_len) {
                self.best = Some(chosen);
                self.best_len = len;
            }
            return;
        }
        if i == self.n {
            return;
        }
        if self.best.is_some() && len + (self.n - i) <= self.best_len {
            return;
        }
        if ((covered | self.suffix_reach[i]).count_ones() as usize) < self.target {
            return;
        }

        let with = chosen | 1 << i;
        let private = self.private_mask(with);
        let all_private = (0..=i)
            .filter(|&v| with >> v & 1 == 1)
            .all(|v| self.closed[v] & private != 0);
        if all_private {
            self.dfs(i + 1, with, covered | self.closed[i]);
        }
        self.dfs(i + 1, chosen, covered);
    }
}

/// Γ_p(G) by exhaustive search with pruning; limited to
/// [`UPPER_MAX_VERTICES`] vertices.
pub fn big_gamma_p_exact(g: &Graph, p: Proportion) -> Result<SolveResult> {
    let n = g.n();
    if n > UPPER_MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "upper p-domination search",
            limit: UPPER_MAX_VERTICES,
            got: n,
        });
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| g.closed(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut suffix_reach = vec![0u32; n + 1];
    for v in (0..n).rev() {
        suffix_reach[v] = suffix_reach[v + 1] | closed[v];
    }
    let mut search = UpperSearch {
        n,
        target: p.threshold(n),
        closed,
        suffix_reach,
        best: None,
        best_len: 0,
        nodes: 0,
    };
    search.dfs(0, 0, 0);
    let best = search
        .best
        .expect("some minimal p-dominating set always exists");
    let witness = VertexSet::from_vertices(n, (0..n).filter(|&v| best >> v & 1 == 1));
    Ok(SolveResult::new(
        g,
        witness,
        Method::BranchAndBound,
        search.nodes,
    ))
}
