use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// The four basic solution predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicKind {
    VertexCover,
    DominatingSet,
    ConnectedVertexCover,
    ConnectedDominatingSet,
}

impl FromStr for BasicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vc" => Ok(BasicKind::VertexCover),
            "ds" => Ok(BasicKind::DominatingSet),
            "connected-vc" | "cvc" => Ok(BasicKind::ConnectedVertexCover),
            "connected-ds" | "cds" => Ok(BasicKind::ConnectedDominatingSet),
            other => Err(Error::Input(format!("unknown property kind `{other}`"))),
        }
    }
}

impl fmt::Display for BasicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasicKind::VertexCover => "vc",
            BasicKind::DominatingSet => "ds",
            BasicKind::ConnectedVertexCover => "connected-vc",
            BasicKind::ConnectedDominatingSet => "connected-ds",
        })
    }
}

/// Connected components of `G[x]`, each listed once, ordered by smallest member.
pub fn induced_components(g: &Graph, x: &VertexSet) -> Vec<VertexSet> {
    let labels = component_labels(g, x);
    let count = labels.iter().flatten().max().map_or(0, |&c| c + 1);
    let mut comps = vec![g.empty_set(); count];
    for (v, label) in labels.iter().enumerate() {
        if let Some(c) = label {
            comps[*c].insert(v);
        }
    }
    comps
}

/// Component index of every vertex of `x` in `G[x]` (`None` outside `x`).
/// Components are numbered in order of their smallest member.
pub fn component_labels(g: &Graph, x: &VertexSet) -> Vec<Option<usize>> {
    let mut label = vec![None; g.n()];
    let mut stack = Vec::new();
    let mut next = 0;
    for s in x.iter() {
        if label[s].is_some() {
            continue;
        }
        label[s] = Some(next);
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if x.contains(w) && label[w].is_none() {
                    label[w] = Some(next);
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Number of components of `G[x]`.
pub fn component_count(g: &Graph, x: &VertexSet) -> usize {
    component_labels(g, x).iter().flatten().max().map_or(0, |&c| c + 1)
}

/// Whether `G[x]` is connected. `G[∅]` is connected by convention.
pub fn is_induced_connected(g: &Graph, x: &VertexSet) -> bool {
    let Some(start) = x.iter().next() else {
        return true;
    };
    let mut seen = g.empty_set();
    seen.insert(start);
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if x.contains(w) && !seen.contains(w) {
                seen.insert(w);
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == x.len()
}

/// A degeneracy ordering by repeated removal of a minimum-degree vertex
/// (lowest id on ties), together with the degeneracy `k`.
pub fn degeneracy_ordering(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        k = k.max(degree[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    (order, k)
}

/// The largest number of later neighbors over an ordering of all vertices.
pub fn ordering_width(g: &Graph, order: &[usize]) -> usize {
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).iter().filter(|&&w| position[w] > i).count())
        .max()
        .unwrap_or(0)
}

pub fn is_vertex_cover(g: &Graph, x: &VertexSet) -> bool {
    g.edges().all(|(u, v)| x.contains(u) || x.contains(v))
}

pub fn is_dominating(g: &Graph, x: &VertexSet) -> bool {
    (0..g.n()).all(|v| x.contains(v) || g.neighbors(v).iter().any(|&w| x.contains(w)))
}

pub fn check_basic_property(g: &Graph, x: &VertexSet, kind: BasicKind) -> bool {
    match kind {
        BasicKind::VertexCover => is_vertex_cover(g, x),
        BasicKind::DominatingSet => is_dominating(g, x),
        BasicKind::ConnectedVertexCover => is_vertex_cover(g, x) && is_induced_connected(g, x),
        BasicKind::ConnectedDominatingSet => is_dominating(g, x) && is_induced_connected(g, x),
    }
}

/// A proper 2-colouring if the graph is bipartite.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Whether `g` contains an induced star with `d` leaves.
pub fn has_induced_claw(g: &Graph, d: usize) -> bool {
    fn extend(g: &Graph, nbrs: &[usize], start: usize, chosen: &mut Vec<usize>, d: usize) -> bool {
        if chosen.len() == d {
            return true;
        }
        for i in start..nbrs.len() {
            let w = nbrs[i];
            if chosen.iter().all(|&u| !g.has_edge(u, w)) {
                chosen.push(w);
                if extend(g, nbrs, i + 1, chosen, d) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    (0..g.n()).any(|c| g.degree(c) >= d && extend(g, g.neighbors(c), 0, &mut Vec::new(), d))
}
