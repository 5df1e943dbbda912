//! Enumeration of minimal connected and capacitated vertex covers and
//! dominating sets.
//!
//! Every enumerator traverses a graph whose nodes are the minimal solutions
//! ([`supergraph`]) and differs only in how it builds the neighborhood of a
//! solution. Brute-force ground truth lives in [`oracle`]; executable
//! versions of the transversal-hardness gadgets live in [`reductions`].

pub mod capacitated;
pub mod connected_ds;
pub mod connected_vc;
pub mod error;
pub mod graph;
pub mod min_valid_aug;
pub mod oracle;
pub mod reductions;
pub mod subsets;
pub mod supergraph;

pub use error::{Error, Result};
pub use graph::{BasicKind, CapacityFn, Graph, Hypergraph, VertexSet};
pub use supergraph::DelayStats;
