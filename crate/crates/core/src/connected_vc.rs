//! Minimal connected vertex covers on bounded-degree and d-claw-free graphs.
//!
//! For a minimal connected vertex cover `X` and `v ∈ X`, the set
//! `X' = (X \ {v}) ∪ N(v)` is again a vertex cover whose induced subgraph has
//! at most `Δ` (resp. `d - 1`) components, and a handful of extra vertices
//! (a *valid augmentation*) reconnects it. Minimizing every reconnected set
//! gives a neighborhood that makes the solution graph strongly connected.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{component_labels, has_induced_claw, is_vertex_cover, BasicKind, Graph, VertexSet};
use crate::subsets::for_each_subset;
use crate::supergraph::{enumerate_solutions, is_minimal, minimize_monotone, DelayStats, GraphProperty};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetMode {
    /// `k = Δ - 1`
    BoundedDegree,
    /// `k = d - 2` for a d-claw-free input.
    ClawFree { d: usize },
    /// User-chosen `k`; complete only for `k >= min(Δ - 1, d - 2)`.
    Explicit,
}

/// Largest augmentation size scanned per neighborhood step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AugmentationBudget {
    k: usize,
    mode: BudgetMode,
}

impl AugmentationBudget {
    pub fn bounded_degree(g: &Graph) -> Self {
        AugmentationBudget {
            k: g.max_degree().saturating_sub(1),
            mode: BudgetMode::BoundedDegree,
        }
    }

    pub fn claw_free(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::Input(format!("claw size must be at least 2, got {d}")));
        }
        Ok(AugmentationBudget {
            k: d - 2,
            mode: BudgetMode::ClawFree { d },
        })
    }

    pub fn explicit(k: usize) -> Self {
        AugmentationBudget {
            k,
            mode: BudgetMode::Explicit,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> BudgetMode {
        self.mode
    }
}

/// Components of `G[X']` for a vertex cover `X'`.
pub(crate) struct CoverSplit {
    labels: Vec<Option<usize>>,
    count: usize,
}

impl CoverSplit {
    pub(crate) fn new(g: &Graph, cover: &VertexSet) -> Self {
        let labels = component_labels(g, cover);
        let count = labels.iter().flatten().max().map_or(0, |&c| c + 1);
        CoverSplit { labels, count }
    }

    /// Distinct components adjacent to `u`.
    pub(crate) fn touching(&self, g: &Graph, u: usize) -> Vec<usize> {
        let mut comps: Vec<usize> = g.neighbors(u).iter().filter_map(|&w| self.labels[w]).collect();
        comps.sort_unstable();
        comps.dedup();
        comps
    }

    /// Whether `G[X' ∪ W]` is connected, for `W` disjoint from `X'`.
    pub(crate) fn connected_with(&self, g: &Graph, w: &[usize]) -> bool {
        let total = self.count + w.len();
        if total <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        };
        for (i, &u) in w.iter().enumerate() {
            for &nb in g.neighbors(u) {
                if let Some(c) = self.labels[nb] {
                    union(&mut parent, self.count + i, c);
                } else if let Some(j) = w.iter().position(|&o| o == nb) {
                    union(&mut parent, self.count + i, self.count + j);
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..total).all(|a| find(&mut parent, a) == root)
    }
}

/// All `W ⊆ V \ X'` with `|W| <= k` such that `G[X' ∪ W]` is connected,
/// in ascending (size, lexicographic) order.
pub fn valid_augmentations(g: &Graph, xprime: &VertexSet, k: usize) -> Result<Vec<VertexSet>> {
    if !is_vertex_cover(g, xprime) {
        return Err(Error::Contract(format!("{xprime} is not a vertex cover")));
    }
    let split = CoverSplit::new(g, xprime);
    let outside: Vec<usize> = (0..g.n()).filter(|&u| !xprime.contains(u)).collect();
    let mut out = Vec::new();
    let _ = for_each_subset(&outside, k, |w| {
        if split.connected_with(g, w) {
            out.push(g.set_of(w.iter().copied()));
        }
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// The neighborhood of a minimal connected vertex cover `x`.
pub fn cvc_neighborhood(g: &Graph, x: &VertexSet, budget: AugmentationBudget) -> Result<Vec<VertexSet>> {
    let property = GraphProperty::new(g, BasicKind::ConnectedVertexCover);
    if !is_minimal(&property, x) {
        return Err(Error::Contract(format!("{x} is not a minimal connected vertex cover")));
    }
    neighborhood(g, x, budget)
}

fn neighborhood(g: &Graph, x: &VertexSet, budget: AugmentationBudget) -> Result<Vec<VertexSet>> {
    let property = GraphProperty::new(g, BasicKind::ConnectedVertexCover);
    let mut out = BTreeSet::new();
    for v in x.iter() {
        let mut xprime = x.without(v);
        for &w in g.neighbors(v) {
            xprime.insert(w);
        }
        let split = CoverSplit::new(g, &xprime);
        match budget.mode {
            BudgetMode::BoundedDegree if split.count > g.max_degree() => {
                return Err(Error::Integrity(format!(
                    "removing {v} from {x} left {} components with Δ = {}",
                    split.count,
                    g.max_degree()
                )));
            }
            BudgetMode::ClawFree { d } if split.count > d - 1 => {
                return Err(Error::Contract(format!(
                    "graph has an induced {d}-claw centred at {v}"
                )));
            }
            _ => {}
        }
        // A vertex touching at most one component is never needed to merge
        // components, so only vertices bridging two or more are candidates.
        let candidates: Vec<usize> = (0..g.n())
            .filter(|&u| !xprime.contains(u) && split.touching(g, u).len() >= 2)
            .collect();
        let mut failure = None;
        let _ = for_each_subset(&candidates, budget.k, |w| {
            if split.connected_with(g, w) {
                let mut cover = xprime.clone();
                w.iter().for_each(|&u| cover.insert(u));
                match minimize_monotone(&property, &cover) {
                    Ok(z) => {
                        out.insert(z);
                    }
                    Err(e) => {
                        failure = Some(e);
                        return ControlFlow::Break(());
                    }
                }
            }
            ControlFlow::Continue(())
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(out.into_iter().collect())
}

/// Enumerates every minimal connected vertex cover of a connected graph.
pub fn enumerate_cvc<S>(g: &Graph, budget: AugmentationBudget, sink: S) -> Result<DelayStats>
where
    S: FnMut(&VertexSet) -> ControlFlow<()>,
{
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let BudgetMode::ClawFree { d } = budget.mode {
        if cfg!(debug_assertions) && d <= 4 && has_induced_claw(g, d) {
            return Err(Error::Contract(format!("graph is not {d}-claw-free")));
        }
    }
    let property = GraphProperty::new(g, BasicKind::ConnectedVertexCover);
    let initial = minimize_monotone(&property, &g.vertex_set())?;
    enumerate_solutions(&property, initial, |x| neighborhood(g, x, budget), sink)
}
