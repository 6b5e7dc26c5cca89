//! Exact and heuristic solvers for partial domination.
//!
//! A set `S` of vertices is *p-dominating* when its closed neighborhood
//! `N[S]` contains at least a proportion `p` of the vertices; γ_p(G) is the
//! smallest such set and Γ_p(G) the largest one that is minimal under
//! inclusion.
//!
//! ```
//! use partial_domination::{engine, FamilySpec, Proportion};
//!
//! let spider = FamilySpec::Spider(8).build().unwrap();
//! let half = engine::gamma_p_exact(&spider, Proportion::HALF);
//! assert_eq!(half.witness.to_vec(), vec![0]);
//! assert_eq!(engine::gamma_exact(&spider).cardinality, 8);
//! ```

pub mod audit;
pub mod cli;
pub mod closed_forms;
pub mod edge_list;
pub mod engine;
mod error;
pub mod family;
pub mod graph;
pub mod proportion;
pub mod vertex_set;

pub use engine::{Method, SolveResult};
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::Graph;
pub use proportion::Proportion;
pub use vertex_set::VertexSet;
