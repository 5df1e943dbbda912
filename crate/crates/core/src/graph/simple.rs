use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// An undirected simple graph on vertices `0..n`, immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge {u}-{v} has a vertex id >= {n}")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Input(format!("duplicate edge {u}-{}", w[0])));
            }
        }
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Graph {
            adjacency,
            edge_count,
            max_degree,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    /// Δ
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, members: I) -> VertexSet {
        VertexSet::from_members(self.n(), members)
    }

    /// N(v) as a set.
    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        self.set_of(self.neighbors(v).iter().copied())
    }

    /// N[X] = X ∪ N(X).
    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        for v in x.iter() {
            for &w in self.neighbors(v) {
                out.insert(w);
            }
        }
        out
    }

    /// Whether the whole graph is connected; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        crate::graph::is_induced_connected(self, &self.vertex_set())
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<_> = edges.filter(|&(u, v)| !self.has_edge(u, v)).collect();
        Graph::from_edges(n, edges).expect("complement of a simple graph is simple")
    }
}
