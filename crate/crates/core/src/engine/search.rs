//! Branch-and-bound for the t-dominating set decision problem and the
//! γ_p solvers built on top of it.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{Method, SolveResult};
use crate::graph::Graph;
use crate::proportion::Proportion;
use crate::vertex_set::VertexSet;

/// Largest graph the CLI hands to the exact solvers.
pub const MAX_SEARCH_VERTICES: usize = 512;

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Split the root branches across the rayon pool.
    pub parallel: bool,
}

#[derive(Debug, Clone)]
pub struct Decision {
    pub witness: Option<VertexSet>,
    pub nodes_explored: u64,
}

struct Search<'a> {
    g: &'a Graph,
    target: usize,
    /// `suffix_max_deg[i]` = max degree over vertices `i..n`.
    suffix_max_deg: Vec<usize>,
}

/// Vertices chosen on the current branch and the node counter.
#[derive(Default)]
struct Trail {
    chosen: Vec<usize>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, target: usize) -> Self {
        let n = g.n();
        let mut suffix_max_deg = vec![0; n + 1];
        for v in (0..n).rev() {
            suffix_max_deg[v] = suffix_max_deg[v + 1].max(g.degree(v));
        }
        Self {
            g,
            target,
            suffix_max_deg,
        }
    }

    /// Candidates `start..n` with positive marginal gain, or `None` when the
    /// node can be pruned.
    fn expand(
        &self,
        start: usize,
        budget: usize,
        covered: &VertexSet,
        cov: usize,
    ) -> Option<Vec<(usize, usize)>> {
        let need = self.target - cov;
        if budget == 0 || start >= self.g.n() {
            return None;
        }
        // Each further pick adds at most Δ + 1 newly covered vertices.
        if budget * (self.suffix_max_deg[start] + 1) < need {
            return None;
        }
        let cands: Vec<(usize, usize)> = (start..self.g.n())
            .filter_map(|v| {
                let gain = self.g.closed(v).difference_len(covered);
                (gain > 0).then_some((v, gain))
            })
            .collect();
        // Marginal gains only shrink as the set grows, so the best `budget`
        // current gains bound anything still reachable.
        let mut gains: Vec<usize> = cands.iter().map(|&(_, gain)| gain).collect();
        if gains.len() > budget {
            gains.select_nth_unstable_by(budget - 1, |a, b| b.cmp(a));
            gains.truncate(budget);
        }
        if gains.iter().sum::<usize>() < need {
            return None;
        }
        Some(cands)
    }

    fn dfs<F: Fn() -> bool>(
        &self,
        start: usize,
        budget: usize,
        covered: &VertexSet,
        cov: usize,
        trail: &mut Trail,
        cancelled: &F,
    ) -> bool {
        trail.nodes += 1;
        if cov >= self.target {
            return true;
        }
        if cancelled() {
            return false;
        }
        let Some(cands) = self.expand(start, budget, covered, cov) else {
            return false;
        };
        for (v, gain) in cands {
            let mut next = covered.clone();
            next.union_with(self.g.closed(v));
            trail.chosen.push(v);
            if self.dfs(v + 1, budget - 1, &next, cov + gain, trail, cancelled) {
                return true;
            }
            trail.chosen.pop();
        }
        false
    }

    fn run_sequential(&self, budget: usize) -> Decision {
        let mut trail = Trail::default();
        let found = self.dfs(0, budget, &self.g.vertex_set(), 0, &mut trail, &|| false);
        Decision {
            witness: found.then(|| VertexSet::from_vertices(self.g.n(), trail.chosen)),
            nodes_explored: trail.nodes,
        }
    }

    /// Root branches run concurrently. The result is the same witness the
    /// sequential search would return: branches behind an already successful
    /// lower-indexed branch are cancelled, and the first success in index
    /// order wins.
    fn run_parallel(&self, budget: usize) -> Decision {
        let empty = self.g.vertex_set();
        if self.target == 0 {
            return Decision {
                witness: Some(empty),
                nodes_explored: 1,
            };
        }
        let Some(cands) = self.expand(0, budget, &empty, 0) else {
            return Decision {
                witness: None,
                nodes_explored: 1,
            };
        };
        let best = AtomicUsize::new(usize::MAX);
        let total = AtomicU64::new(1);
        let found = cands
            .par_iter()
            .enumerate()
            .map(|(idx, &(v, gain))| {
                if best.load(Ordering::Relaxed) < idx {
                    return None;
                }
                let mut covered = empty.clone();
                covered.union_with(self.g.closed(v));
                let mut trail = Trail {
                    chosen: vec![v],
                    nodes: 0,
                };
                let cancelled = || best.load(Ordering::Relaxed) < idx;
                let ok = self.dfs(v + 1, budget - 1, &covered, gain, &mut trail, &cancelled);
                total.fetch_add(trail.nodes, Ordering::Relaxed);
                if ok {
                    best.fetch_min(idx, Ordering::Relaxed);
                    Some(trail.chosen)
                } else {
                    None
                }
            })
            .find_first(|r| r.is_some())
            .flatten();
        Decision {
            witness: found.map(|c| VertexSet::from_vertices(self.g.n(), c)),
            nodes_explored: total.load(Ordering::Relaxed),
        }
    }
}

/// Finds at most `k` vertices dominating at least `t` vertices, if any exist.
///
/// Exact: `None` means no such set exists.
pub fn t_dom_decision(g: &Graph, t: usize, k: usize) -> Option<VertexSet> {
    t_dom_decision_with(g, t, k, SolveOptions::default()).witness
}

pub fn t_dom_decision_with(g: &Graph, t: usize, k: usize, opts: SolveOptions) -> Decision {
    let search = Search::new(g, t);
    if opts.parallel {
        search.run_parallel(k)
    } else {
        search.run_sequential(k)
    }
}

/// Repeatedly takes the vertex with the largest marginal coverage (lowest
/// index on ties) until the threshold is met.
pub fn greedy_gamma_p(g: &Graph, p: Proportion) -> SolveResult {
    let t = p.threshold(g.n());
    let mut covered = g.vertex_set();
    let mut cov = 0;
    let mut witness = g.vertex_set();
    let mut rounds = 0;
    while cov < t {
        rounds += 1;
        let (v, gain) = (0..g.n())
            .map(|v| (v, g.closed(v).difference_len(&covered)))
            .fold(
                (usize::MAX, 0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        assert!(gain > 0, "threshold {t} unreachable on {} vertices", g.n());
        witness.insert(v);
        covered.union_with(g.closed(v));
        cov += gain;
    }
    SolveResult::new(g, witness, Method::Greedy, rounds)
}

/// γ_p(G) by trying `k = 0, 1, 2, ..` against the decision procedure.
pub fn gamma_p_exact(g: &Graph, p: Proportion) -> SolveResult {
    gamma_p_exact_with(g, p, SolveOptions::default())
}

pub fn gamma_p_exact_with(g: &Graph, p: Proportion, opts: SolveOptions) -> SolveResult {
    let t = p.threshold(g.n());
    let upper = greedy_gamma_p(g, p);
    let mut nodes = upper.nodes_explored;
    for k in 0..=upper.cardinality {
        let d = t_dom_decision_with(g, t, k, opts);
        nodes += d.nodes_explored;
        if let Some(w) = d.witness {
            return SolveResult::new(g, w, Method::BranchAndBound, nodes);
        }
    }
    unreachable!(
        "greedy set of size {} meets the threshold",
        upper.cardinality
    )
}

/// γ_p(G) by binary search over `k ∈ [0, n]`, using that feasibility of the
/// decision problem is monotone in `k`.
pub fn gamma_p_binary_search(g: &Graph, p: Proportion) -> SolveResult {
    gamma_p_binary_search_with(g, p, SolveOptions::default())
}

pub fn gamma_p_binary_search_with(g: &Graph, p: Proportion, opts: SolveOptions) -> SolveResult {
    let t = p.threshold(g.n());
    let (mut lo, mut hi) = (0, g.n());
    let mut nodes = 0;
    let mut witness = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let d = t_dom_decision_with(g, t, mid, opts);
        nodes += d.nodes_explored;
        match d.witness {
            Some(w) => {
                hi = mid;
                witness = Some(w);
            }
            None => lo = mid + 1,
        }
    }
    // `hi` was never probed when every smaller k failed.
    let witness = match witness {
        Some(w) => w,
        None => {
            let d = t_dom_decision_with(g, t, lo, opts);
            nodes += d.nodes_explored;
            d.witness.expect("all n vertices dominate the graph")
        }
    };
    SolveResult::new(g, witness, Method::BinarySearch, nodes)
}

/// Classical domination number γ(G) = γ_1(G).
pub fn gamma_exact(g: &Graph) -> SolveResult {
    gamma_p_exact(g, Proportion::ONE)
}
