//! Corpora and independent checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::ops::ControlFlow;

use mincover::capacitated::CapKind;
use mincover::graph::{is_induced_connected, CapacityFn, Graph, Hypergraph, VertexSet};
use mincover::min_valid_aug::ContractedBipartite;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
    Graph::from_edges(n, edges).unwrap()
}

/// Every connected labeled graph on `1..=max_n` vertices.
pub fn labeled_connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let ps = pairs(n);
        for mask in 0u32..(1 << ps.len()) {
            let g = graph_from_mask(n, &ps, mask);
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One connected graph per isomorphism class on `1..=max_n` vertices.
pub fn connected_graph_classes(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let ps = pairs(n);
        let index = |u: usize, v: usize| ps.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
        let perms = permutations(n);
        let mut seen = HashSet::new();
        for mask in 0u32..(1 << ps.len()) {
            let g = graph_from_mask(n, &ps, mask);
            if !g.is_connected() {
                continue;
            }
            let canonical = perms
                .iter()
                .map(|p| g.edges().fold(0u32, |m, (u, v)| m | 1 << index(p[u], p[v])))
                .min()
                .unwrap();
            if seen.insert(canonical) {
                out.push(g);
            }
        }
    }
    out
}

/// A random spanning tree plus each other pair independently with `p`.
pub fn random_connected_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for (u, v) in pairs(n) {
        if rng.gen_bool(p) {
            edges.insert((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A random connected graph with maximum degree at most `max_degree >= 2`.
pub fn random_bounded_degree_graph(rng: &mut StdRng, n: usize, max_degree: usize, extra: usize) -> Graph {
    let mut degree = vec![0usize; n];
    let mut edges = BTreeSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let open: Vec<usize> = (0..i).filter(|&j| degree[order[j]] < max_degree).collect();
        let j = open[rng.gen_range(0..open.len())];
        let (a, b) = (order[i], order[j]);
        degree[a] += 1;
        degree[b] += 1;
        edges.insert((a.min(b), a.max(b)));
    }
    for _ in 0..extra * 4 {
        if edges.len() >= n - 1 + extra {
            break;
        }
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = (a.min(b), a.max(b));
        if a != b && degree[a] < max_degree && degree[b] < max_degree && edges.insert(e) {
            degree[a] += 1;
            degree[b] += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Capacities drawn uniformly from `0..=Δ`.
pub fn random_capacity(rng: &mut StdRng, g: &Graph) -> CapacityFn {
    CapacityFn::new((0..g.n()).map(|_| rng.gen_range(0..=g.max_degree())).collect())
}

/// A random connected bipartite instance with `|L| + |R| <= max_total`.
pub fn random_bipartite(rng: &mut StdRng, max_total: usize) -> ContractedBipartite {
    loop {
        let nl = rng.gen_range(1..max_total);
        let nr = rng.gen_range(0..=max_total - nl);
        let p = rng.gen_range(0.15..0.7);
        let edges: Vec<(usize, usize)> = (0..nl)
            .flat_map(|l| (0..nr).map(move |r| (l, r)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let h = ContractedBipartite::new(nl, nr, &edges);
        if h.is_connected() {
            return h;
        }
    }
}

/// Every hypergraph on `1..=max_n` vertices with at most `max_m` hyperedges,
/// taken as multisets of non-empty hyperedges.
pub fn all_hypergraphs(max_n: usize, max_m: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let subsets: Vec<Vec<usize>> = (1u32..(1 << n))
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect();
        fn extend(
            n: usize,
            subsets: &[Vec<usize>],
            start: usize,
            left: usize,
            current: &mut Vec<Vec<usize>>,
            out: &mut Vec<Hypergraph>,
        ) {
            out.push(Hypergraph::new(n, current.clone()).unwrap());
            if left == 0 {
                return;
            }
            for i in start..subsets.len() {
                current.push(subsets[i].clone());
                extend(n, subsets, i, left - 1, current, out);
                current.pop();
            }
        }
        extend(n, &subsets, 0, max_m, &mut Vec::new(), &mut out);
    }
    out
}

pub fn random_hypergraph(rng: &mut StdRng, max_n: usize, max_m: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let edges = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(4));
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            vs.truncate(size);
            vs
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// Exhaustive search for an assignment of items to members of `x` within
/// the raw capacities, by backtracking.
pub fn brute_assignment_exists(g: &Graph, c: &CapacityFn, x: &VertexSet, kind: CapKind) -> bool {
    let options: Vec<Vec<usize>> = match kind {
        CapKind::VertexCover => g
            .edges()
            .map(|(u, v)| [u, v].into_iter().filter(|&w| x.contains(w)).collect())
            .collect(),
        CapKind::DominatingSet => (0..g.n())
            .filter(|&u| !x.contains(u))
            .map(|u| g.neighbors(u).iter().copied().filter(|&w| x.contains(w)).collect())
            .collect(),
    };
    fn assign(i: usize, options: &[Vec<usize>], left: &mut [usize]) -> bool {
        if i == options.len() {
            return true;
        }
        for &w in &options[i] {
            if left[w] > 0 {
                left[w] -= 1;
                let ok = assign(i + 1, options, left);
                left[w] += 1;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let mut left: Vec<usize> = c.as_slice().to_vec();
    assign(0, &options, &mut left)
}

/// Inline per-solution invariants: no duplicate emission, the property
/// holds, every single-vertex removal breaks it, connectivity where
/// required, and a caller-supplied witness check.
#[derive(Default)]
pub struct Checker {
    pub solutions: u64,
    pub violations: Vec<String>,
}

impl Checker {
    pub fn check<P, W>(&mut self, x: &VertexSet, seen: &mut HashSet<VertexSet>, holds: P, connected: Option<&Graph>, witness: W)
    where
        P: Fn(&VertexSet) -> bool,
        W: FnOnce(&VertexSet) -> Result<(), String>,
    {
        self.solutions += 1;
        if !seen.insert(x.clone()) {
            self.violations.push(format!("{x} emitted twice"));
        }
        if !holds(x) {
            self.violations.push(format!("{x} does not satisfy the property"));
        }
        if let Some(v) = x.iter().find(|&v| holds(&x.without(v))) {
            self.violations.push(format!("{x} stays feasible without {v}"));
        }
        if let Some(g) = connected {
            if !is_induced_connected(g, x) {
                self.violations.push(format!("{x} is not connected"));
            }
        }
        if let Err(e) = witness(x) {
            self.violations.push(e);
        }
    }
}

/// Runs `enumerate`, checking every emitted set, and returns the family in
/// canonical order.
pub fn run_checked<E, P, W>(
    checker: &mut Checker,
    enumerate: E,
    holds: P,
    connected: Option<&Graph>,
    witness: W,
) -> Vec<VertexSet>
where
    E: FnOnce(&mut dyn FnMut(&VertexSet) -> ControlFlow<()>),
    P: Fn(&VertexSet) -> bool,
    W: Fn(&VertexSet) -> Result<(), String>,
{
    let mut seen = HashSet::new();
    let mut family = Vec::new();
    enumerate(&mut |x: &VertexSet| {
        checker.check(x, &mut seen, &holds, connected, &witness);
        family.push(x.clone());
        ControlFlow::Continue(())
    });
    family.sort();
    family
}
