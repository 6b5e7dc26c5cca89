//! Partial domination solvers.
//!
//! Everything here is a pure function of a [`Graph`](crate::Graph) and a
//! [`Proportion`](crate::Proportion). Sequential solvers are deterministic:
//! exact methods return the lexicographically first minimum witness under
//! canonical vertex order.

mod coverage;
mod oracle;
mod search;
mod upper;

pub use coverage::{coverage, is_minimal_p_dominating, is_p_dominating, threshold};
pub use oracle::{oracle_gamma_p, ORACLE_MAX_VERTICES};
pub use search::{
    gamma_exact, gamma_p_binary_search, gamma_p_binary_search_with, gamma_p_exact,
    gamma_p_exact_with, greedy_gamma_p, t_dom_decision, t_dom_decision_with, Decision,
    SolveOptions, MAX_SEARCH_VERTICES,
};
pub use upper::{big_gamma_p_exact, UPPER_MAX_VERTICES};

use serde::Serialize;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    BranchAndBound,
    BinarySearch,
    Greedy,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::BranchAndBound => "branch-and-bound",
            Method::BinarySearch => "binary-search",
            Method::Greedy => "greedy",
        })
    }
}

/// Output of every solver: the value, a certificate, and search statistics.
#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub cardinality: usize,
    pub witness: VertexSet,
    /// `|N[witness]|`.
    pub covered: usize,
    pub method: Method,
    pub nodes_explored: u64,
}

impl SolveResult {
    pub(crate) fn new(
        g: &crate::Graph,
        witness: VertexSet,
        method: Method,
        nodes_explored: u64,
    ) -> Self {
        Self {
            cardinality: witness.len(),
            covered: coverage(g, &witness),
            witness,
            method,
            nodes_explored,
        }
    }
}
