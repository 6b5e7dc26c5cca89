use crate::graph::Graph;
use crate::proportion::Proportion;
use crate::vertex_set::VertexSet;

/// `|N[S]|`, the number of vertices dominated by `s`.
pub fn coverage(g: &Graph, s: &VertexSet) -> usize {
    closed_union(g, s).len()
}

pub(crate) fn closed_union(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut covered = g.vertex_set();
    for v in s.iter() {
        debug_assert!(v < g.n(), "vertex {v} not in graph");
        covered.union_with(g.closed(v));
    }
    covered
}

/// Least coverage meeting proportion `p` on `n` vertices: `ceil(p * n)`.
pub fn threshold(n: usize, p: Proportion) -> usize {
    p.threshold(n)
}

pub fn is_p_dominating(g: &Graph, s: &VertexSet, p: Proportion) -> bool {
    coverage(g, s) >= threshold(g.n(), p)
}

/// True iff `s` is `p`-dominating and no proper subset is.
///
/// Only single-vertex removals are tried. Coverage is monotone under
/// inclusion, so if every `s - {v}` falls short, so does every proper subset
/// (each is contained in some `s - {v}`).
pub fn is_minimal_p_dominating(g: &Graph, s: &VertexSet, p: Proportion) -> bool {
    let t = threshold(g.n(), p);
    if coverage(g, s) < t {
        return false;
    }
    let mut rest = s.clone();
    for v in s.iter() {
        rest.remove(v);
        let still = coverage(g, &rest) >= t;
        rest.insert(v);
        if still {
            return false;
        }
    }
    true
}
