//! Gadget graphs that encode minimal hypergraph transversals as minimal
//! connected vertex covers, connected dominating sets or capacitated vertex
//! covers, with projection back to transversals and an end-to-end checker.
//!
//! Vertex numbering is fixed: the hypergraph vertices `0..n` first, then one
//! gadget per hyperedge in input order, then the apex `r` and its pendant
//! `r'` where the construction has them.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::capacitated::{enumerate_capacitated_with, CapKind, CapacitatedProperty, SearchStrategy};
use crate::error::{Error, Result};
use crate::graph::{
    check_basic_property, degeneracy_ordering, is_bipartite, ordering_width, BasicKind, CapacityFn, Graph,
    Hypergraph, VertexSet,
};
use crate::min_valid_aug::enumerate_cvc_quasipoly;
use crate::oracle::{brute_minimal, brute_transversals};
use crate::supergraph::{is_minimal, GraphProperty};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// Incidence graph, pendant per hyperedge vertex, apex with pendant.
    Cvc,
    /// As `Cvc` with each hyperedge vertex stretched into a path with
    /// pendants, giving a 2-degenerate bipartite graph.
    Cvc2Deg,
    /// Co-bipartite graph for connected domination.
    CdsCobip,
    /// Incidence graph with hyperedge pendants and a capacity table.
    Capvc,
    /// Path version of `Capvc`.
    Capvc2Deg,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 5] = [
        ReductionKind::Cvc,
        ReductionKind::Cvc2Deg,
        ReductionKind::CdsCobip,
        ReductionKind::Capvc,
        ReductionKind::Capvc2Deg,
    ];

    fn uses_paths(self) -> bool {
        matches!(self, ReductionKind::Cvc2Deg | ReductionKind::Capvc2Deg)
    }

    fn has_apex(self) -> bool {
        matches!(self, ReductionKind::Cvc | ReductionKind::Cvc2Deg | ReductionKind::CdsCobip)
    }

    fn is_capacitated(self) -> bool {
        matches!(self, ReductionKind::Capvc | ReductionKind::Capvc2Deg)
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cvc" => Ok(ReductionKind::Cvc),
            "cvc-2deg" => Ok(ReductionKind::Cvc2Deg),
            "cds-cobip" => Ok(ReductionKind::CdsCobip),
            "capvc" => Ok(ReductionKind::Capvc),
            "capvc-2deg" => Ok(ReductionKind::Capvc2Deg),
            other => Err(Error::Input(format!("unknown reduction kind `{other}`"))),
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::Cvc => "cvc",
            ReductionKind::Cvc2Deg => "cvc-2deg",
            ReductionKind::CdsCobip => "cds-cobip",
            ReductionKind::Capvc => "capvc",
            ReductionKind::Capvc2Deg => "capvc-2deg",
        })
    }
}

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Hypergraph vertex with the same id.
    Original(usize),
    /// `w_e` for hyperedge `edge`.
    EdgeVertex { edge: usize },
    /// `w'_e`, the pendant of `w_e`.
    EdgePendant { edge: usize },
    /// `p^e_index`, `index` counted from 1.
    PathVertex { edge: usize, index: usize },
    /// The pendant of `p^e_index`.
    PathPendant { edge: usize, index: usize },
    Apex,
    ApexPendant,
}

impl Role {
    pub fn is_pendant(self) -> bool {
        matches!(self, Role::EdgePendant { .. } | Role::PathPendant { .. } | Role::ApexPendant)
    }
}

#[derive(Debug, Clone)]
pub struct ReductionInstance {
    kind: ReductionKind,
    hypergraph: Hypergraph,
    graph: Graph,
    capacity: Option<CapacityFn>,
    roles: Vec<Role>,
}

impl ReductionInstance {
    pub fn kind(&self) -> ReductionKind {
        self.kind
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn capacity(&self) -> Option<&CapacityFn> {
        self.capacity.as_ref()
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Vertices every minimal gadget solution must contain: all `w_e` or
    /// path vertices, and the apex where present. Empty for `CdsCobip`.
    pub fn forced_vertices(&self) -> VertexSet {
        let forced = self.roles.iter().enumerate().filter(|(_, role)| match role {
            Role::EdgeVertex { .. } => self.kind != ReductionKind::CdsCobip,
            Role::PathVertex { .. } => true,
            Role::Apex => self.kind != ReductionKind::CdsCobip,
            _ => false,
        });
        self.graph.set_of(forced.map(|(v, _)| v))
    }

    pub fn pendants(&self) -> VertexSet {
        self.graph
            .set_of(self.roles.iter().enumerate().filter(|(_, r)| r.is_pendant()).map(|(v, _)| v))
    }

    /// The elimination order pendants, even path vertices, remaining path
    /// vertices, hypergraph vertices, apex. Only for the path kinds.
    pub fn elimination_order(&self) -> Option<Vec<usize>> {
        if !self.kind.uses_paths() {
            return None;
        }
        let rank = |role: &Role| match role {
            Role::PathPendant { .. } | Role::ApexPendant | Role::EdgePendant { .. } => 0,
            Role::PathVertex { index, .. } if index % 2 == 0 => 1,
            Role::PathVertex { .. } | Role::EdgeVertex { .. } => 2,
            Role::Original(_) => 3,
            Role::Apex => 4,
        };
        let mut order: Vec<usize> = (0..self.graph.n()).collect();
        order.sort_by_key(|&v| (rank(&self.roles[v]), v));
        Some(order)
    }

    /// Whether `x` satisfies the gadget's property (without minimality).
    pub fn holds(&self, x: &VertexSet) -> bool {
        match self.kind {
            ReductionKind::Cvc | ReductionKind::Cvc2Deg => {
                check_basic_property(&self.graph, x, BasicKind::ConnectedVertexCover)
            }
            ReductionKind::CdsCobip => check_basic_property(&self.graph, x, BasicKind::ConnectedDominatingSet),
            ReductionKind::Capvc | ReductionKind::Capvc2Deg => {
                use crate::supergraph::MonotoneProperty;
                self.cap_property().holds(x)
            }
        }
    }

    fn cap_property(&self) -> CapacitatedProperty<'_> {
        CapacitatedProperty::new(
            &self.graph,
            self.capacity.as_ref().expect("capacitated kinds carry capacities"),
            CapKind::VertexCover,
        )
    }

    pub fn is_minimal_solution(&self, x: &VertexSet) -> bool {
        match self.kind {
            ReductionKind::Cvc | ReductionKind::Cvc2Deg => {
                is_minimal(&GraphProperty::new(&self.graph, BasicKind::ConnectedVertexCover), x)
            }
            ReductionKind::CdsCobip => {
                is_minimal(&GraphProperty::new(&self.graph, BasicKind::ConnectedDominatingSet), x)
            }
            ReductionKind::Capvc | ReductionKind::Capvc2Deg => is_minimal(&self.cap_property(), x),
        }
    }
}

struct Builder {
    roles: Vec<Role>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn add(&mut self, role: Role) -> usize {
        self.roles.push(role);
        self.roles.len() - 1
    }
}

/// Builds the gadget for `h`.
pub fn build_reduction(h: &Hypergraph, kind: ReductionKind) -> Result<ReductionInstance> {
    if kind == ReductionKind::CdsCobip && h.edges().is_empty() {
        return Err(Error::Input("the co-bipartite gadget needs at least one hyperedge".into()));
    }
    let n = h.n();
    let mut b = Builder {
        roles: (0..n).map(Role::Original).collect(),
        edges: Vec::new(),
    };
    for (i, e) in h.edges().iter().enumerate() {
        if kind.uses_paths() {
            let len = 2 * e.len() + 1;
            let path: Vec<usize> = (1..=len)
                .map(|index| b.add(Role::PathVertex { edge: i, index }))
                .collect();
            for w in path.windows(2) {
                b.edges.push((w[0], w[1]));
            }
            for (j, &p) in path.iter().enumerate() {
                let pendant = b.add(Role::PathPendant { edge: i, index: j + 1 });
                b.edges.push((p, pendant));
            }
            // u_j ~ p_{2j-1}
            for (j, &u) in e.iter().enumerate() {
                b.edges.push((u, path[2 * j]));
            }
        } else {
            let w = b.add(Role::EdgeVertex { edge: i });
            for &u in e {
                b.edges.push((u, w));
            }
            if kind != ReductionKind::CdsCobip {
                let pendant = b.add(Role::EdgePendant { edge: i });
                b.edges.push((w, pendant));
            }
        }
    }
    if kind == ReductionKind::CdsCobip {
        let edge_vertices: Vec<usize> = (n..b.roles.len()).collect();
        for (i, &a) in edge_vertices.iter().enumerate() {
            for &c in &edge_vertices[i + 1..] {
                b.edges.push((a, c));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                b.edges.push((u, v));
            }
        }
    }
    if kind.has_apex() {
        let r = b.add(Role::Apex);
        for u in 0..n {
            b.edges.push((u, r));
        }
        if kind != ReductionKind::CdsCobip {
            let pendant = b.add(Role::ApexPendant);
            b.edges.push((r, pendant));
        }
    }
    let graph = Graph::from_edges(b.roles.len(), b.edges)?;
    let capacity = kind.is_capacitated().then(|| {
        CapacityFn::new(
            b.roles
                .iter()
                .enumerate()
                .map(|(v, role)| match role {
                    Role::Original(_) => graph.degree(v),
                    Role::EdgeVertex { .. } | Role::PathVertex { .. } => graph.degree(v) - 1,
                    _ => 0,
                })
                .collect(),
        )
    });
    Ok(ReductionInstance {
        kind,
        hypergraph: h.clone(),
        graph,
        capacity,
        roles: b.roles,
    })
}

/// A minimal gadget solution seen from the hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Projection {
    /// The solution restricted to the hypergraph vertices.
    Transversal(VertexSet),
    /// A co-bipartite solution `{v, w_e}` that corresponds to no transversal.
    Extra { vertex: usize, edge: usize },
}

/// Maps a minimal gadget solution back to the hypergraph.
pub fn project_solution(inst: &ReductionInstance, sol: &VertexSet) -> Result<Projection> {
    let n = inst.hypergraph.n();
    let restricted = VertexSet::from_members(n, sol.iter().filter(|&v| v < n));
    if inst.kind == ReductionKind::CdsCobip {
        let gadget: Vec<usize> = sol.iter().filter(|&v| v >= n).collect();
        return match (restricted.to_vec().as_slice(), gadget.as_slice()) {
            (_, []) => Ok(Projection::Transversal(restricted)),
            (&[vertex], &[w]) => match inst.roles[w] {
                Role::EdgeVertex { edge } if inst.hypergraph.edges()[edge].contains(&vertex) => {
                    Ok(Projection::Extra { vertex, edge })
                }
                _ => Err(Error::Integrity(format!("{sol} mixes unrelated gadget vertices"))),
            },
            _ => Err(Error::Integrity(format!("{sol} is neither inside V nor a pair {{v, w_e}}"))),
        };
    }
    if !inst.forced_vertices().is_subset(sol) {
        return Err(Error::Integrity(format!("{sol} misses a forced gadget vertex")));
    }
    if !sol.is_disjoint(&inst.pendants()) {
        return Err(Error::Integrity(format!("{sol} contains a pendant")));
    }
    Ok(Projection::Transversal(restricted))
}

/// The gadget solution corresponding to a transversal `s`.
pub fn lift_transversal(inst: &ReductionInstance, s: &VertexSet) -> VertexSet {
    let mut lifted = inst.forced_vertices();
    s.iter().for_each(|v| lifted.insert(v));
    lifted
}

/// All minimal solutions of the gadget: the quasi-polynomial connected
/// vertex cover enumerator, the alternating-path capacitated enumerator, or
/// brute force for the co-bipartite kind.
pub fn gadget_solutions(inst: &ReductionInstance) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let push = |x: &VertexSet| {
        out.push(x.clone());
        ControlFlow::Continue(())
    };
    match inst.kind {
        ReductionKind::Cvc | ReductionKind::Cvc2Deg => {
            enumerate_cvc_quasipoly(&inst.graph, push)?;
        }
        ReductionKind::Capvc | ReductionKind::Capvc2Deg => {
            let c = inst.capacity.as_ref().expect("capacitated kinds carry capacities");
            enumerate_capacitated_with(&inst.graph, c, CapKind::VertexCover, SearchStrategy::Alternating, push)?;
        }
        ReductionKind::CdsCobip => {
            out = brute_minimal(inst.graph.n(), |x| {
                check_basic_property(&inst.graph, x, BasicKind::ConnectedDominatingSet)
            })?;
        }
    }
    out.sort();
    Ok(out)
}

/// A failed check of [`verify_reduction`], naming its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// A minimal transversal that no gadget solution projects to.
    MissingTransversal(VertexSet),
    /// A projection that is not a minimal transversal.
    UnexpectedTransversal(VertexSet),
    /// Two gadget solutions project to the same transversal.
    DuplicateProjection(VertexSet),
    /// The lift of a minimal transversal is not a minimal gadget solution.
    LiftNotMinimal(VertexSet),
    /// A gadget solution misses a forced vertex, contains a pendant, or is
    /// otherwise malformed.
    Structure(VertexSet),
    Degeneracy { order_width: usize, degeneracy: usize },
    NotBipartite,
    NotCoBipartite,
    /// Expected pair `{v, w_e}` missing from the gadget solutions.
    MissingExtra { vertex: usize, edge: usize },
    UnexpectedExtra { vertex: usize, edge: usize },
    TooManyExtras { count: usize, bound: usize },
    /// Capacity of a gadget vertex differs from the table.
    Capacity { vertex: usize, expected: usize, found: usize },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::MissingTransversal(s) => write!(f, "minimal transversal {s} has no gadget solution"),
            Failure::UnexpectedTransversal(s) => write!(f, "projection {s} is not a minimal transversal"),
            Failure::DuplicateProjection(s) => write!(f, "transversal {s} is hit by several gadget solutions"),
            Failure::LiftNotMinimal(s) => write!(f, "lift of {s} is not a minimal gadget solution"),
            Failure::Structure(s) => write!(f, "gadget solution {s} breaks the forced structure"),
            Failure::Degeneracy {
                order_width,
                degeneracy,
            } => write!(f, "elimination order width {order_width}, degeneracy {degeneracy} (want <= 2)"),
            Failure::NotBipartite => write!(f, "gadget is not bipartite"),
            Failure::NotCoBipartite => write!(f, "gadget complement is not bipartite"),
            Failure::MissingExtra { vertex, edge } => write!(f, "pair ({vertex}, w_{edge}) not found"),
            Failure::UnexpectedExtra { vertex, edge } => write!(f, "pair ({vertex}, w_{edge}) not expected"),
            Failure::TooManyExtras { count, bound } => write!(f, "{count} extra solutions exceed {bound}"),
            Failure::Capacity {
                vertex,
                expected,
                found,
            } => write!(f, "capacity of {vertex} is {found}, expected {expected}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionReport {
    pub kind: ReductionKind,
    pub gadget_vertices: usize,
    pub gadget_edges: usize,
    pub solutions: usize,
    pub transversals: Vec<VertexSet>,
    pub extras: Vec<(usize, usize)>,
    /// Degeneracy of the gadget, for the path kinds.
    pub degeneracy: Option<usize>,
    pub failures: Vec<Failure>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "kind {}: gadget with {} vertices and {} edges",
            self.kind, self.gadget_vertices, self.gadget_edges
        )?;
        writeln!(
            f,
            "{} minimal gadget solutions, {} minimal transversals, {} extras",
            self.solutions,
            self.transversals.len(),
            self.extras.len()
        )?;
        if let Some(k) = self.degeneracy {
            writeln!(f, "degeneracy {k}")?;
        }
        for failure in &self.failures {
            writeln!(f, "FAIL {failure}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Builds the gadget, enumerates its minimal solutions and checks them
/// against brute-force minimal transversals of `h`.
pub fn verify_reduction(h: &Hypergraph, kind: ReductionKind) -> Result<ReductionReport> {
    let inst = build_reduction(h, kind)?;
    let g = &inst.graph;
    let transversals = brute_transversals(h)?;
    let solutions = gadget_solutions(&inst)?;
    let mut failures = Vec::new();

    let mut projected = BTreeSet::new();
    let mut extras = BTreeSet::new();
    for sol in &solutions {
        match project_solution(&inst, sol) {
            Ok(Projection::Transversal(s)) => {
                if !projected.insert(s.clone()) {
                    failures.push(Failure::DuplicateProjection(s));
                }
            }
            Ok(Projection::Extra { vertex, edge }) => {
                extras.insert((vertex, edge));
            }
            Err(_) => failures.push(Failure::Structure(sol.clone())),
        }
    }
    let expected: BTreeSet<VertexSet> = transversals.iter().cloned().collect();
    failures.extend(expected.difference(&projected).cloned().map(Failure::MissingTransversal));
    failures.extend(projected.difference(&expected).cloned().map(Failure::UnexpectedTransversal));
    for s in &transversals {
        if !inst.is_minimal_solution(&lift_transversal(&inst, s)) {
            failures.push(Failure::LiftNotMinimal(s.clone()));
        }
    }

    if kind == ReductionKind::CdsCobip {
        // {v, w_e} with v ∈ e is minimal unless v alone dominates, i.e. v
        // lies in every hyperedge
        let edges = h.edges();
        let everywhere = |v: usize| edges.iter().all(|e| e.contains(&v));
        let wanted: BTreeSet<(usize, usize)> = edges
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.iter().map(move |&v| (v, i)))
            .filter(|&(v, _)| !everywhere(v))
            .collect();
        for &(vertex, edge) in wanted.difference(&extras) {
            failures.push(Failure::MissingExtra { vertex, edge });
        }
        for &(vertex, edge) in extras.difference(&wanted) {
            failures.push(Failure::UnexpectedExtra { vertex, edge });
        }
        let bound = h.n() * edges.len();
        if extras.len() > bound {
            failures.push(Failure::TooManyExtras {
                count: extras.len(),
                bound,
            });
        }
        if !is_bipartite(&g.complement()) {
            failures.push(Failure::NotCoBipartite);
        }
    } else if !is_bipartite(g) {
        failures.push(Failure::NotBipartite);
    }

    let mut degeneracy = None;
    if let Some(order) = inst.elimination_order() {
        let order_width = ordering_width(g, &order);
        let (_, k) = degeneracy_ordering(g);
        degeneracy = Some(k);
        if order_width > 2 || k > 2 {
            failures.push(Failure::Degeneracy {
                order_width,
                degeneracy: k,
            });
        }
    }

    if let Some(c) = &inst.capacity {
        for (v, role) in inst.roles.iter().enumerate() {
            let expected = match role {
                Role::Original(_) => g.degree(v),
                Role::EdgeVertex { .. } | Role::PathVertex { .. } => g.degree(v) - 1,
                _ => 0,
            };
            if c.get(v) != expected {
                failures.push(Failure::Capacity {
                    vertex: v,
                    expected,
                    found: c.get(v),
                });
            }
        }
    }

    Ok(ReductionReport {
        kind,
        gadget_vertices: g.n(),
        gadget_edges: g.m(),
        solutions: solutions.len(),
        transversals,
        extras: extras.into_iter().collect(),
        degeneracy,
        failures,
    })
}
