use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// A hypergraph on vertices `0..n` with non-empty hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Each hyperedge is stored sorted; repeated members are rejected.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::Input(format!("hyperedge {i} is empty")));
            }
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::Input(format!("hyperedge {i} has vertex {v} >= {n}")));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Input(format!("hyperedge {i} repeats a vertex")));
            }
            sorted.push(e);
        }
        Ok(Hypergraph { n, edges: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Whether `s` hits every hyperedge.
    pub fn is_transversal(&self, s: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.iter().any(|&v| s.contains(v)))
    }
}
