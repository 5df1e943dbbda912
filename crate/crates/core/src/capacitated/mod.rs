//! Capacitated vertex covers and dominating sets.
//!
//! A set `X` is a capacitated vertex cover if every edge can be assigned to
//! an endpoint in `X` with no `v` receiving more than `c(v)` edges; for
//! domination every vertex outside `X` is assigned to a neighbor in `X`.
//! Feasibility is a bipartite matching question between items and capacity
//! slots. Removing one vertex from a minimal solution leaves a deficiency of
//! at most `q` items (`q + 1` for domination), which bounds how many
//! vertices have to be added back.

mod feasibility;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::time::Instant;

pub use feasibility::{effective_capacities, FeasibilityGraph, Item, Matching};

use crate::connected_vc::CoverSplit;
use crate::error::{Error, Result};
use crate::graph::{is_induced_connected, CapacityFn, Graph, VertexSet};
use crate::subsets::for_each_subset;
use crate::supergraph::{empty_run, enumerate_solutions, is_minimal, minimize_monotone, DelayStats, MonotoneProperty};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CapKind {
    VertexCover,
    DominatingSet,
}

impl FromStr for CapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vc" => Ok(CapKind::VertexCover),
            "ds" => Ok(CapKind::DominatingSet),
            other => Err(Error::Input(format!("unknown capacitated kind `{other}`"))),
        }
    }
}

impl fmt::Display for CapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CapKind::VertexCover => "vc",
            CapKind::DominatingSet => "ds",
        })
    }
}

/// How the vertices restoring feasibility after a removal are searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Every set up to the size bound, filtered by feasibility.
    #[default]
    Scan,
    /// Only vertices that can absorb an item reachable by an alternating
    /// path from an unassigned item in a maximum matching. Yields a subset of
    /// the scan's neighborhood and stays complete; needed on large sparse
    /// instances where the scan is out of reach.
    Alternating,
}

/// A witness for a capacitated solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assignment {
    /// Each edge `(u, v)`, `u < v`, with the endpoint covering it.
    EdgeToVertex(BTreeMap<(usize, usize), usize>),
    /// Each vertex outside the set with the member dominating it.
    VertexToVertex(BTreeMap<usize, usize>),
}

impl Assignment {
    pub fn kind(&self) -> CapKind {
        match self {
            Assignment::EdgeToVertex(_) => CapKind::VertexCover,
            Assignment::VertexToVertex(_) => CapKind::DominatingSet,
        }
    }

    /// Number of items assigned to `v`.
    pub fn load(&self, v: usize) -> usize {
        match self {
            Assignment::EdgeToVertex(map) => map.values().filter(|&&w| w == v).count(),
            Assignment::VertexToVertex(map) => map.values().filter(|&&w| w == v).count(),
        }
    }

    /// Checks that the assignment certifies `x` as a capacitated solution.
    pub fn validate(&self, g: &Graph, c: &CapacityFn, x: &VertexSet) -> Result<()> {
        let fail = |msg: String| Err(Error::Integrity(msg));
        let mut load = vec![0usize; g.n()];
        match self {
            Assignment::EdgeToVertex(map) => {
                if map.len() != g.m() {
                    return fail(format!("{} of {} edges assigned", map.len(), g.m()));
                }
                for (&(u, v), &w) in map {
                    if !g.has_edge(u, v) || (w != u && w != v) || !x.contains(w) {
                        return fail(format!("edge {u}-{v} assigned to {w}"));
                    }
                    load[w] += 1;
                }
            }
            Assignment::VertexToVertex(map) => {
                let outside = g.n() - x.len();
                if map.len() != outside {
                    return fail(format!("{} of {outside} outside vertices assigned", map.len()));
                }
                for (&u, &w) in map {
                    if x.contains(u) || !x.contains(w) || !g.has_edge(u, w) {
                        return fail(format!("vertex {u} assigned to {w}"));
                    }
                    load[w] += 1;
                }
            }
        }
        match (0..g.n()).find(|&v| load[v] > c.get(v)) {
            Some(v) => fail(format!("vertex {v} carries {} items, capacity {}", load[v], c.get(v))),
            None => Ok(()),
        }
    }
}

fn check_capacity_len(g: &Graph, c: &CapacityFn) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::Input(format!("{} capacities for {} vertices", c.len(), g.n())));
    }
    Ok(())
}

/// `q = min(max c'(v), Δ)` over clamped capacities.
pub fn capacity_bound(g: &Graph, c: &CapacityFn, kind: CapKind) -> usize {
    let caps = effective_capacities(g, c, kind);
    caps.iter().copied().max().unwrap_or(0).min(g.max_degree())
}

/// Largest number of vertices that must be added after one removal:
/// `q` for covers, `q + 1` for domination.
pub fn search_bound(g: &Graph, c: &CapacityFn, kind: CapKind) -> usize {
    let q = capacity_bound(g, c, kind);
    match kind {
        CapKind::VertexCover => q,
        CapKind::DominatingSet => q + 1,
    }
}

fn feasible_with(g: &Graph, caps: &[usize], x: &VertexSet, kind: CapKind) -> bool {
    let items = match kind {
        CapKind::VertexCover => g.m(),
        CapKind::DominatingSet => g.n() - x.len(),
    };
    if items == 0 {
        return true;
    }
    if x.iter().map(|v| caps[v]).sum::<usize>() < items {
        return false;
    }
    FeasibilityGraph::new(g, caps, x, kind).maximum_matching().is_saturating()
}

/// Whether `x` is a capacitated vertex cover (resp. dominating set).
pub fn is_cap_feasible(g: &Graph, c: &CapacityFn, x: &VertexSet, kind: CapKind) -> bool {
    feasible_with(g, &effective_capacities(g, c, kind), x, kind)
}

/// A witness assignment if `x` is a capacitated solution, `None` otherwise.
pub fn cap_feasible(g: &Graph, c: &CapacityFn, x: &VertexSet, kind: CapKind) -> Option<Assignment> {
    let caps = effective_capacities(g, c, kind);
    let fg = FeasibilityGraph::new(g, &caps, x, kind);
    let m = fg.maximum_matching();
    if !m.is_saturating() {
        return None;
    }
    let owner = |i: usize| fg.slot_owner(m.slot_of(i).expect("saturating matching"));
    Some(match kind {
        CapKind::VertexCover => Assignment::EdgeToVertex(
            fg.items()
                .iter()
                .enumerate()
                .map(|(i, item)| match *item {
                    Item::Edge(u, v) => ((u, v), owner(i)),
                    Item::Vertex(_) => unreachable!("cover items are edges"),
                })
                .collect(),
        ),
        CapKind::DominatingSet => Assignment::VertexToVertex(
            fg.items()
                .iter()
                .enumerate()
                .map(|(i, item)| match *item {
                    Item::Vertex(u) => (u, owner(i)),
                    Item::Edge(..) => unreachable!("domination items are vertices"),
                })
                .collect(),
        ),
    })
}

/// Capacitated feasibility as a monotone property.
#[derive(Debug, Clone)]
pub struct CapacitatedProperty<'a> {
    graph: &'a Graph,
    caps: Vec<usize>,
    kind: CapKind,
}

impl<'a> CapacitatedProperty<'a> {
    pub fn new(graph: &'a Graph, c: &CapacityFn, kind: CapKind) -> Self {
        CapacitatedProperty {
            graph,
            caps: effective_capacities(graph, c, kind),
            kind,
        }
    }
}

impl MonotoneProperty for CapacitatedProperty<'_> {
    fn universe(&self) -> usize {
        self.graph.n()
    }

    fn holds(&self, x: &VertexSet) -> bool {
        feasible_with(self.graph, &self.caps, x, self.kind)
    }
}

/// Connected vertex cover that is also a capacitated vertex cover.
#[derive(Debug, Clone)]
pub struct ConnectedCapacitatedVc<'a> {
    capacity: CapacitatedProperty<'a>,
}

impl<'a> ConnectedCapacitatedVc<'a> {
    pub fn new(graph: &'a Graph, c: &CapacityFn) -> Self {
        ConnectedCapacitatedVc {
            capacity: CapacitatedProperty::new(graph, c, CapKind::VertexCover),
        }
    }
}

impl MonotoneProperty for ConnectedCapacitatedVc<'_> {
    fn universe(&self) -> usize {
        self.capacity.graph.n()
    }

    fn holds(&self, x: &VertexSet) -> bool {
        is_induced_connected(self.capacity.graph, x) && self.capacity.holds(x)
    }
}

/// Calls `f` with every feasible `rest ∪ W` the strategy produces.
fn restoring_sets<F>(
    property: &CapacitatedProperty<'_>,
    rest: &VertexSet,
    bound: usize,
    strategy: SearchStrategy,
    mut f: F,
) -> ControlFlow<()>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let (g, caps, kind) = (property.graph, &property.caps, property.kind);
    match strategy {
        SearchStrategy::Scan => {
            // a zero-capacity vertex covers no edge, so never restores a cover
            let candidates: Vec<usize> = (0..g.n())
                .filter(|&u| !rest.contains(u) && (kind == CapKind::DominatingSet || caps[u] > 0))
                .collect();
            let mut trial = rest.clone();
            for_each_subset(&candidates, bound, |w| {
                w.iter().for_each(|&u| trial.insert(u));
                let flow = if property.holds(&trial) { f(&trial) } else { ControlFlow::Continue(()) };
                w.iter().for_each(|&u| trial.remove(u));
                flow
            })
        }
        SearchStrategy::Alternating => {
            let mut seen = HashSet::new();
            let mut stack = vec![rest.clone()];
            while let Some(s) = stack.pop() {
                let fg = FeasibilityGraph::new(g, caps, &s, kind);
                let m = fg.maximum_matching();
                if m.is_saturating() {
                    f(&s)?;
                    continue;
                }
                if s.len() - rest.len() >= bound {
                    continue;
                }
                let reach = fg.alternating_reach(&m);
                let mut branch = BTreeSet::new();
                for (i, item) in fg.items().iter().enumerate() {
                    if !reach[i] {
                        continue;
                    }
                    // a reachable dominated vertex can also join the set itself
                    let absorbers: &[usize] = match item {
                        Item::Edge(u, v) => &[*u, *v],
                        Item::Vertex(u) => {
                            branch.insert(*u);
                            g.neighbors(*u)
                        }
                    };
                    branch.extend(absorbers.iter().copied().filter(|&w| !s.contains(w) && caps[w] > 0));
                }
                for u in branch {
                    let next = s.with(u);
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
            ControlFlow::Continue(())
        }
    }
}

/// The neighborhood of a minimal capacitated solution, scanning all
/// replacement sets up to the size bound.
pub fn cap_neighborhood(g: &Graph, c: &CapacityFn, x: &VertexSet, kind: CapKind) -> Result<Vec<VertexSet>> {
    cap_neighborhood_with(g, c, x, kind, SearchStrategy::Scan)
}

pub fn cap_neighborhood_with(
    g: &Graph,
    c: &CapacityFn,
    x: &VertexSet,
    kind: CapKind,
    strategy: SearchStrategy,
) -> Result<Vec<VertexSet>> {
    check_capacity_len(g, c)?;
    let property = CapacitatedProperty::new(g, c, kind);
    if !is_minimal(&property, x) {
        return Err(Error::Contract(format!("{x} is not a minimal capacitated {kind}")));
    }
    Ok(cap_step(&property, x, search_bound(g, c, kind), strategy))
}

fn cap_step(property: &CapacitatedProperty<'_>, x: &VertexSet, bound: usize, strategy: SearchStrategy) -> Vec<VertexSet> {
    let mut out = BTreeSet::new();
    for v in x.iter() {
        let rest = x.without(v);
        let _ = restoring_sets(property, &rest, bound, strategy, |s| {
            out.insert(minimize_monotone(property, s).expect("restoring sets are feasible"));
            ControlFlow::Continue(())
        });
    }
    out.into_iter().collect()
}

/// Enumerates every minimal capacitated vertex cover or dominating set.
/// Produces nothing when `V(g)` itself is infeasible.
pub fn enumerate_capacitated<S>(g: &Graph, c: &CapacityFn, kind: CapKind, sink: S) -> Result<DelayStats>
where
    S: FnMut(&VertexSet) -> ControlFlow<()>,
{
    enumerate_capacitated_with(g, c, kind, SearchStrategy::Scan, sink)
}

pub fn enumerate_capacitated_with<S>(
    g: &Graph,
    c: &CapacityFn,
    kind: CapKind,
    strategy: SearchStrategy,
    sink: S,
) -> Result<DelayStats>
where
    S: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let started = Instant::now();
    check_capacity_len(g, c)?;
    let property = CapacitatedProperty::new(g, c, kind);
    if !property.holds(&g.vertex_set()) {
        return Ok(empty_run(started));
    }
    let initial = minimize_monotone(&property, &g.vertex_set())?;
    let bound = search_bound(g, c, kind);
    enumerate_solutions(&property, initial, |x| Ok(cap_step(&property, x, bound, strategy)), sink)
}

/// The neighborhood of a minimal connected capacitated vertex cover: after
/// removing `v`, first restore capacity feasibility with at most
/// `min(q, Δ)` vertices, then reconnect the at most `2Δ` components with at
/// most `2Δ - 1` more.
pub fn connected_cap_neighborhood(
    g: &Graph,
    c: &CapacityFn,
    x: &VertexSet,
    strategy: SearchStrategy,
) -> Result<Vec<VertexSet>> {
    check_capacity_len(g, c)?;
    let property = ConnectedCapacitatedVc::new(g, c);
    if !is_minimal(&property, x) {
        return Err(Error::Contract(format!("{x} is not a minimal connected capacitated vertex cover")));
    }
    Ok(connected_cap_step(g, &property, x, strategy))
}

fn connected_cap_step(
    g: &Graph,
    property: &ConnectedCapacitatedVc<'_>,
    x: &VertexSet,
    strategy: SearchStrategy,
) -> Vec<VertexSet> {
    let bound = property.capacity.caps.iter().copied().max().unwrap_or(0).min(g.max_degree());
    let reconnect = (2 * g.max_degree()).saturating_sub(1);
    let mut out = BTreeSet::new();
    for v in x.iter() {
        let rest = x.without(v);
        let _ = restoring_sets(&property.capacity, &rest, bound, strategy, |cover| {
            let split = CoverSplit::new(g, cover);
            let candidates: Vec<usize> = (0..g.n())
                .filter(|&u| !cover.contains(u) && split.touching(g, u).len() >= 2)
                .collect();
            let mut trial = cover.clone();
            for_each_subset(&candidates, reconnect, |w| {
                if split.connected_with(g, w) {
                    w.iter().for_each(|&u| trial.insert(u));
                    out.insert(minimize_monotone(property, &trial).expect("reconnected cover is feasible"));
                    w.iter().for_each(|&u| trial.remove(u));
                }
                ControlFlow::Continue(())
            })
        });
    }
    out.into_iter().collect()
}

/// Enumerates every minimal set that is both a connected vertex cover and a
/// capacitated vertex cover of a connected graph.
pub fn enumerate_connected_capacitated_vc<S>(g: &Graph, c: &CapacityFn, sink: S) -> Result<DelayStats>
where
    S: FnMut(&VertexSet) -> ControlFlow<()>,
{
    enumerate_connected_capacitated_vc_with(g, c, SearchStrategy::Scan, sink)
}

pub fn enumerate_connected_capacitated_vc_with<S>(
    g: &Graph,
    c: &CapacityFn,
    strategy: SearchStrategy,
    sink: S,
) -> Result<DelayStats>
where
    S: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let started = Instant::now();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_capacity_len(g, c)?;
    let property = ConnectedCapacitatedVc::new(g, c);
    if !property.holds(&g.vertex_set()) {
        return Ok(empty_run(started));
    }
    let initial = minimize_monotone(&property, &g.vertex_set())?;
    enumerate_solutions(&property, initial, |x| Ok(connected_cap_step(g, &property, x, strategy)), sink)
}
