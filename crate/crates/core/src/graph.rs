//! Immutable simple undirected graphs with bitset adjacency.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency rows are open neighborhoods. Closed neighborhoods are cached at
/// construction since every solver works with them.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let adj = (0..n).map(|_| VertexSet::new(n)).collect();
        Self::from_adjacency(n, adj)
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Self::from_adjacency(n, adj)
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(n, adj))
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for (u, v) in edges {
            assert!(u < n && v < n && u != v);
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Self::from_adjacency(n, adj)
    }

    fn from_adjacency(n: usize, adj: Vec<VertexSet>) -> Self {
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.clone();
                c.insert(v);
                c
            })
            .collect();
        let g = Self { n, adj, closed };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        (0..self.n).all(|v| {
            !self.adj[v].contains(v)
                && self.adj[v]
                    .iter()
                    .all(|u| u < self.n && self.adj[u].contains(v))
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Open neighborhood `N(v)`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Cached closed neighborhood `N[v]`. Panics if `v` is out of range.
    #[inline]
    pub fn closed(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    /// Checked closed neighborhood `N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for graph with {} vertices",
                self.n
            )));
        }
        Ok(self.closed[v].clone())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The empty set sized for this graph.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full.clone();
                for u in self.adj[v].iter() {
                    row.remove(u);
                }
                row.remove(v);
                row
            })
            .collect();
        Self::from_adjacency(self.n, adj)
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + offset, v + offset)));
        Self::from_edges_dedup(self.n + other.n, edges)
    }

    /// True iff the graph has exactly one component; vacuously true for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for u in self.adj[v].iter() {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == self.n
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn path(n: usize) -> Graph {
        FamilySpec::Path(n).build().unwrap()
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p6 = path(6);
        let c = p6.closed_neighborhood(1).unwrap();
        assert_eq!(c.to_vec(), vec![0, 1, 2]);

        let e = Graph::empty(3);
        assert_eq!(e.closed_neighborhood(2).unwrap().to_vec(), vec![2]);

        let k35 = FamilySpec::CompleteMultipartite(vec![3, 5])
            .build()
            .unwrap();
        let c = k35.closed_neighborhood(0).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.to_vec(), vec![0, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn closed_neighborhood_out_of_range() {
        assert!(matches!(
            path(6).closed_neighborhood(6),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn complement_examples() {
        for n in 0..6 {
            let c = Graph::complete(n).complement();
            assert_eq!(c, Graph::empty(n));
        }
        let c5 = FamilySpec::Cycle(5).build().unwrap();
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
        assert!(cc.is_connected());

        // P4 = 0-1-2-3; complement edges by enumeration: {0,2}, {0,3}, {1,3},
        // which is the path 2-0-3-1.
        let p4c = path(4).complement();
        assert_eq!(
            p4c.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 3), (1, 3)]
        );
        let relabel = [2, 0, 3, 1];
        let back = Graph::from_edges(4, (0..3).map(|i| (relabel[i], relabel[i + 1]))).unwrap();
        assert_eq!(back, p4c);
    }

    #[test]
    fn connectivity() {
        assert!(path(6).is_connected());
        let tri = FamilySpec::Cycle(3).build().unwrap();
        assert!(!tri.disjoint_union(&tri).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
    }
}
