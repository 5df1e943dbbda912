//! Enumeration by traversal of the solution graph.
//!
//! Nodes are the minimal solutions of a monotone property; arcs come from a
//! caller-supplied neighborhood. If for every pair of distinct solutions
//! `X`, `Y` the neighborhood of `X` contains some `Z` with
//! `|Z \ Y| < |X \ Y|`, the solution graph is strongly connected and a
//! search from any single solution reaches all of them.

use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{check_basic_property, BasicKind, Graph, VertexSet};

/// A predicate over vertex subsets that is closed under taking supersets.
pub trait MonotoneProperty {
    /// Size of the ground set.
    fn universe(&self) -> usize;
    fn holds(&self, x: &VertexSet) -> bool;
}

impl<P: MonotoneProperty + ?Sized> MonotoneProperty for &P {
    fn universe(&self) -> usize {
        (**self).universe()
    }

    fn holds(&self, x: &VertexSet) -> bool {
        (**self).holds(x)
    }
}

/// Adapts a closure into a [`MonotoneProperty`].
pub struct FnProperty<F> {
    universe: usize,
    predicate: F,
}

impl<F: Fn(&VertexSet) -> bool> FnProperty<F> {
    pub fn new(universe: usize, predicate: F) -> Self {
        FnProperty { universe, predicate }
    }
}

impl<F: Fn(&VertexSet) -> bool> MonotoneProperty for FnProperty<F> {
    fn universe(&self) -> usize {
        self.universe
    }

    fn holds(&self, x: &VertexSet) -> bool {
        (self.predicate)(x)
    }
}

/// One of the four basic predicates on a fixed graph.
#[derive(Debug, Clone, Copy)]
pub struct GraphProperty<'a> {
    graph: &'a Graph,
    kind: BasicKind,
}

impl<'a> GraphProperty<'a> {
    pub fn new(graph: &'a Graph, kind: BasicKind) -> Self {
        GraphProperty { graph, kind }
    }
}

impl MonotoneProperty for GraphProperty<'_> {
    fn universe(&self) -> usize {
        self.graph.n()
    }

    fn holds(&self, x: &VertexSet) -> bool {
        check_basic_property(self.graph, x, self.kind)
    }
}

/// Greedy minimization: tries to drop each vertex of `x` in ascending id
/// order and keeps the removal whenever the property survives.
///
/// One pass suffices for a monotone property: a vertex that could not be
/// dropped from a superset cannot be dropped from any later subset either.
pub fn minimize_monotone<P: MonotoneProperty + ?Sized>(property: &P, x: &VertexSet) -> Result<VertexSet> {
    if !property.holds(x) {
        return Err(Error::Contract(format!("{x} does not satisfy the property")));
    }
    let mut current = x.clone();
    for v in x.iter() {
        current.remove(v);
        if !property.holds(&current) {
            current.insert(v);
        }
    }
    Ok(current)
}

/// Whether `x` satisfies the property and no single-vertex removal does.
pub fn is_minimal<P: MonotoneProperty + ?Sized>(property: &P, x: &VertexSet) -> bool {
    if !property.holds(x) {
        return false;
    }
    let mut probe = x.clone();
    x.iter().all(|v| {
        probe.remove(v);
        let broken = !property.holds(&probe);
        probe.insert(v);
        broken
    })
}

fn as_secs<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Wall-clock delay profile of one enumeration run.
///
/// Gaps are measured from the start of the run to the first output, between
/// consecutive outputs, and (for runs that were not truncated) from the last
/// output to termination. Durations serialize as seconds.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct DelayStats {
    pub outputs: u64,
    #[serde(serialize_with = "as_secs")]
    pub max_gap: Duration,
    #[serde(serialize_with = "as_secs")]
    pub mean_gap: Duration,
    pub neighborhood_calls: u64,
    /// Distinct solutions discovered, including queued but unemitted ones.
    pub discovered: u64,
    pub truncated: bool,
}

struct GapClock {
    last: Instant,
    total: Duration,
    gaps: u32,
    max: Duration,
}

impl GapClock {
    fn start() -> Self {
        GapClock {
            last: Instant::now(),
            total: Duration::ZERO,
            gaps: 0,
            max: Duration::ZERO,
        }
    }

    fn tick(&mut self) {
        let now = Instant::now();
        let gap = now - self.last;
        self.last = now;
        self.total += gap;
        self.gaps += 1;
        self.max = self.max.max(gap);
    }

    fn finish(self, stats: &mut DelayStats) {
        stats.max_gap = self.max;
        stats.mean_gap = if self.gaps == 0 {
            Duration::ZERO
        } else {
            self.total / self.gaps
        };
    }
}

/// Statistics for a run that produced nothing, e.g. an empty family.
pub(crate) fn empty_run(started: Instant) -> DelayStats {
    let elapsed = started.elapsed();
    DelayStats {
        max_gap: elapsed,
        mean_gap: elapsed,
        ..DelayStats::default()
    }
}

/// Breadth-first traversal of the solution graph from `initial`.
///
/// Each solution is handed to `sink` when it is dequeued, exactly once.
/// Deduplication is by canonical [`VertexSet`] over the whole run. In debug
/// builds every set returned by `neighborhood` is checked to be a minimal
/// solution of `property`. The sink may stop the run early by breaking.
pub fn enumerate_solutions<P, N, S>(
    property: &P,
    initial: VertexSet,
    mut neighborhood: N,
    mut sink: S,
) -> Result<DelayStats>
where
    P: MonotoneProperty + ?Sized,
    N: FnMut(&VertexSet) -> Result<Vec<VertexSet>>,
    S: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let mut clock = GapClock::start();
    let mut stats = DelayStats::default();
    if cfg!(debug_assertions) && !is_minimal(property, &initial) {
        return Err(Error::Integrity(format!("initial set {initial} is not a minimal solution")));
    }
    let mut visited: HashSet<VertexSet> = HashSet::new();
    let mut queue = VecDeque::new();
    visited.insert(initial.clone());
    queue.push_back(initial);

    while let Some(x) = queue.pop_front() {
        clock.tick();
        stats.outputs += 1;
        if sink(&x).is_break() {
            stats.truncated = true;
            break;
        }
        stats.neighborhood_calls += 1;
        for z in neighborhood(&x)? {
            if visited.contains(&z) {
                continue;
            }
            if cfg!(debug_assertions) && !is_minimal(property, &z) {
                return Err(Error::Integrity(format!("neighborhood of {x} produced non-minimal {z}")));
            }
            visited.insert(z.clone());
            queue.push_back(z);
        }
    }
    if !stats.truncated {
        clock.tick();
    }
    stats.discovered = visited.len() as u64;
    clock.finish(&mut stats);
    Ok(stats)
}
