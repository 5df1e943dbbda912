//! Minimal connected dominating sets on bounded-degree graphs.
//!
//! For a minimal connected dominating set `X` and `v ∈ X`, every other
//! minimal solution `Y` can be approached by replacing `v` with at most
//! `3Δ - 2` vertices: up to `Δ` restore domination, and short connectors
//! between the resulting components restore connectivity.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{is_dominating, is_induced_connected, BasicKind, Graph, VertexSet};
use crate::subsets::for_each_subset;
use crate::supergraph::{enumerate_solutions, is_minimal, minimize_monotone, DelayStats, GraphProperty};

/// Largest replacement set scanned for one removed vertex: `3Δ - 2`.
pub fn replacement_budget(g: &Graph) -> usize {
    (3 * g.max_degree()).saturating_sub(2)
}

/// The neighborhood of a minimal connected dominating set `x`.
pub fn cds_neighborhood(g: &Graph, x: &VertexSet) -> Result<Vec<VertexSet>> {
    let property = GraphProperty::new(g, BasicKind::ConnectedDominatingSet);
    if !is_minimal(&property, x) {
        return Err(Error::Contract(format!("{x} is not a minimal connected dominating set")));
    }
    neighborhood(g, x)
}

fn neighborhood(g: &Graph, x: &VertexSet) -> Result<Vec<VertexSet>> {
    let property = GraphProperty::new(g, BasicKind::ConnectedDominatingSet);
    let budget = replacement_budget(g);
    let mut out = BTreeSet::new();
    for v in x.iter() {
        let rest = x.without(v);
        let candidates: Vec<usize> = (0..g.n()).filter(|&u| !rest.contains(u)).collect();
        let mut failure = None;
        let mut trial = rest.clone();
        let _ = for_each_subset(&candidates, budget, |w| {
            w.iter().for_each(|&u| trial.insert(u));
            if is_dominating(g, &trial) && is_induced_connected(g, &trial) {
                match minimize_monotone(&property, &trial) {
                    Ok(z) => {
                        out.insert(z);
                    }
                    Err(e) => failure = Some(e),
                }
            }
            w.iter().for_each(|&u| trial.remove(u));
            if failure.is_some() {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(out.into_iter().collect())
}

/// Enumerates every minimal connected dominating set of a connected graph.
pub fn enumerate_cds<S>(g: &Graph, sink: S) -> Result<DelayStats>
where
    S: FnMut(&VertexSet) -> ControlFlow<()>,
{
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let property = GraphProperty::new(g, BasicKind::ConnectedDominatingSet);
    let initial = minimize_monotone(&property, &g.vertex_set())?;
    enumerate_solutions(&property, initial, |x| neighborhood(g, x), sink)
}
