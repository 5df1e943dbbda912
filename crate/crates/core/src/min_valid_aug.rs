//! Minimal valid augmentations on a bipartite instance `(H, L)` and the
//! general-graph connected vertex cover enumerator built on them.
//!
//! `H` has colour classes `L` (contracted components) and `R`. A set
//! `W ⊆ R` is a valid augmentation if `H[L ∪ W]` is connected; it is minimal
//! exactly when every vertex of `W` is a cut vertex of `H[L ∪ W]`.
//! [`min_valid_aug`] enumerates all minimal ones by branching on a
//! highest-degree right vertex `v`: either recursing on `H - v` and on the
//! contraction `H_v`, or, when `v` sees at most half of `L`, recursing on
//! `H_W - v` for every `W` found in `H_v`.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{component_labels, BasicKind, Graph, VertexSet};
use crate::supergraph::{enumerate_solutions, is_minimal, minimize_monotone, DelayStats, GraphProperty};

/// A left node of a (possibly contracted) instance and what it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftNode {
    /// Original left ids merged into this node.
    pub left: Vec<usize>,
    /// Original right ids absorbed by contraction.
    pub right: Vec<usize>,
}

/// The bipartite graph `H_X` with left class `L_X`. Right vertices keep
/// their original ids; left nodes are indexed `0..left_len()` in order of
/// their smallest original left id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedBipartite {
    left: Vec<LeftNode>,
    right: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    right_universe: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl ContractedBipartite {
    /// Uncontracted instance with left ids `0..n_left`, right ids `0..n_right`
    /// and edges `(l, r)`. Panics on out-of-range ids.
    pub fn new(n_left: usize, n_right: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![Vec::new(); n_right];
        for &(l, r) in edges {
            assert!(l < n_left && r < n_right, "edge ({l}, {r}) out of range");
            adjacency[r].push(l);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        ContractedBipartite {
            left: (0..n_left)
                .map(|l| LeftNode {
                    left: vec![l],
                    right: Vec::new(),
                })
                .collect(),
            right: (0..n_right).collect(),
            adjacency,
            right_universe: n_right,
        }
    }

    /// The instance obtained from a vertex cover `X'` of `g`: one left node per
    /// component of `G[X']` (left id = component index, absorbed vertices =
    /// the component) and `R = V(g) \ X'` with original vertex ids.
    pub fn from_cover(g: &Graph, cover: &VertexSet) -> Self {
        let labels = component_labels(g, cover);
        let count = labels.iter().flatten().max().map_or(0, |&c| c + 1);
        let mut left: Vec<LeftNode> = (0..count)
            .map(|c| LeftNode {
                left: vec![c],
                right: Vec::new(),
            })
            .collect();
        for (v, label) in labels.iter().enumerate() {
            if let Some(c) = label {
                left[*c].right.push(v);
            }
        }
        let right: Vec<usize> = (0..g.n()).filter(|&v| !cover.contains(v)).collect();
        let adjacency = right
            .iter()
            .map(|&r| {
                let mut comps: Vec<usize> = g.neighbors(r).iter().filter_map(|&w| labels[w]).collect();
                comps.sort_unstable();
                comps.dedup();
                comps
            })
            .collect();
        ContractedBipartite {
            left,
            right,
            adjacency,
            right_universe: g.n(),
        }
    }

    pub fn left_len(&self) -> usize {
        self.left.len()
    }

    pub fn right_len(&self) -> usize {
        self.right.len()
    }

    pub fn left_nodes(&self) -> &[LeftNode] {
        &self.left
    }

    /// Remaining right vertices, ascending.
    pub fn right_vertices(&self) -> &[usize] {
        &self.right
    }

    /// Id range of right vertices; augmentations are sets over this universe.
    pub fn right_universe(&self) -> usize {
        self.right_universe
    }

    pub fn empty_augmentation(&self) -> VertexSet {
        VertexSet::empty(self.right_universe)
    }

    fn position(&self, r: usize) -> Option<usize> {
        self.right.binary_search(&r).ok()
    }

    /// Left neighbors of right vertex `r`, or `None` if `r` is not present.
    pub fn neighbors(&self, r: usize) -> Option<&[usize]> {
        self.position(r).map(|p| self.adjacency[p].as_slice())
    }

    pub fn is_connected(&self) -> bool {
        let nl = self.left.len();
        let total = nl + self.right.len();
        if total <= 1 {
            return true;
        }
        let mut uf = UnionFind::new(total);
        for (p, list) in self.adjacency.iter().enumerate() {
            for &l in list {
                uf.union(nl + p, l);
            }
        }
        (1..total).all(|a| uf.find(a) == uf.find(0))
    }

    fn connected_with_positions(&self, positions: &[usize]) -> bool {
        let nl = self.left.len();
        if nl == 0 {
            return positions.len() <= 1;
        }
        if positions.iter().any(|&p| self.adjacency[p].is_empty()) {
            return false;
        }
        let mut uf = UnionFind::new(nl);
        for &p in positions {
            let list = &self.adjacency[p];
            for &l in &list[1..] {
                uf.union(list[0], l);
            }
        }
        (1..nl).all(|a| uf.find(a) == uf.find(0))
    }

    fn positions_of(&self, w: &VertexSet) -> Option<Vec<usize>> {
        w.iter().map(|r| self.position(r)).collect()
    }

    /// Whether `H[L ∪ W]` is connected. False if `W` is not a subset of `R`.
    pub fn is_valid_augmentation(&self, w: &VertexSet) -> bool {
        self.positions_of(w).is_some_and(|pos| self.connected_with_positions(&pos))
    }

    /// Valid, and every vertex of `W` is a cut vertex of `H[L ∪ W]`.
    pub fn is_minimal_augmentation(&self, w: &VertexSet) -> bool {
        let Some(pos) = self.positions_of(w) else {
            return false;
        };
        if !self.connected_with_positions(&pos) {
            return false;
        }
        let mut rest = Vec::with_capacity(pos.len());
        (0..pos.len()).all(|skip| {
            rest.clear();
            rest.extend(pos.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &p)| p));
            !self.connected_with_positions(&rest)
        })
    }

    /// `H_X` and `L_X`: every component of `H[L ∪ X]` that contains a left
    /// node becomes a single left node; members of `X` without neighbors form
    /// components with no left node and are dropped.
    pub fn contract(&self, x: &VertexSet) -> Result<Self> {
        let pos = self
            .positions_of(x)
            .ok_or_else(|| Error::Contract(format!("{x} is not a subset of the right class")))?;
        Ok(self.contract_positions(&pos))
    }

    fn contract_positions(&self, pos: &[usize]) -> Self {
        let nl = self.left.len();
        let mut uf = UnionFind::new(nl);
        for &p in pos {
            let list = &self.adjacency[p];
            for &l in list.iter().skip(1) {
                uf.union(list[0], l);
            }
        }
        // roots are the smallest index of each group, so first-appearance
        // order keeps groups sorted by smallest original left id
        let mut new_index = vec![usize::MAX; nl];
        let mut left: Vec<LeftNode> = Vec::new();
        for l in 0..nl {
            let root = uf.find(l);
            if new_index[root] == usize::MAX {
                new_index[root] = left.len();
                left.push(LeftNode {
                    left: Vec::new(),
                    right: Vec::new(),
                });
            }
            let node = &mut left[new_index[root]];
            node.left.extend_from_slice(&self.left[l].left);
            node.right.extend_from_slice(&self.left[l].right);
        }
        let mut absorbed = vec![false; self.right.len()];
        for &p in pos {
            absorbed[p] = true;
            if let Some(&l) = self.adjacency[p].first() {
                left[new_index[uf.find(l)]].right.push(self.right[p]);
            }
        }
        for node in &mut left {
            node.left.sort_unstable();
            node.right.sort_unstable();
        }
        let mut right = Vec::with_capacity(self.right.len() - pos.len());
        let mut adjacency = Vec::with_capacity(self.right.len() - pos.len());
        for (p, &r) in self.right.iter().enumerate() {
            if absorbed[p] {
                continue;
            }
            let mut list: Vec<usize> = self.adjacency[p].iter().map(|&l| new_index[uf.find(l)]).collect();
            list.sort_unstable();
            list.dedup();
            right.push(r);
            adjacency.push(list);
        }
        ContractedBipartite {
            left,
            right,
            adjacency,
            right_universe: self.right_universe,
        }
    }

    /// `H - r`; unchanged if `r` is not a right vertex.
    pub fn without_right(&self, r: usize) -> Self {
        let mut out = self.clone();
        if let Some(p) = self.position(r) {
            out.right.remove(p);
            out.adjacency.remove(p);
        }
        out
    }
}

/// Keeps exactly the minimal valid augmentations of `family`, sorted and
/// deduplicated. Every member must be a valid augmentation.
pub fn min_filter(h: &ContractedBipartite, family: &[VertexSet]) -> Result<Vec<VertexSet>> {
    let mut out = BTreeSet::new();
    for w in family {
        if !h.is_valid_augmentation(w) {
            return Err(Error::Contract(format!("{w} is not a valid augmentation")));
        }
        if h.is_minimal_augmentation(w) {
            out.insert(w.clone());
        }
    }
    Ok(out.into_iter().collect())
}

/// All minimal valid augmentations of a connected instance, in canonical order.
pub fn min_valid_aug(h: &ContractedBipartite) -> Result<Vec<VertexSet>> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let family = recurse(h);
    debug_assert!(
        family.iter().enumerate().all(|(i, a)| family[i + 1..]
            .iter()
            .all(|b| !a.is_subset(b) && !b.is_subset(a))),
        "minimal valid augmentations must form an antichain"
    );
    Ok(family)
}

fn recurse(h: &ContractedBipartite) -> Vec<VertexSet> {
    if h.left.len() <= 1 {
        return vec![h.empty_augmentation()];
    }
    if h.right.len() <= 1 {
        let empty = h.empty_augmentation();
        if h.is_minimal_augmentation(&empty) {
            return vec![empty];
        }
        return h
            .right
            .iter()
            .map(|&r| empty.with(r))
            .filter(|w| h.is_minimal_augmentation(w))
            .collect();
    }

    // highest degree, lowest id on ties
    let (pos, degree) = h
        .adjacency
        .iter()
        .enumerate()
        .map(|(p, list)| (p, list.len()))
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
    if degree <= 1 {
        return Vec::new();
    }
    let v = h.right[pos];
    let with_v = recurse(&h.contract_positions(&[pos]));

    let mut out = BTreeSet::new();
    if 2 * degree > h.left.len() {
        out.extend(recurse(&h.without_right(v)));
    } else {
        for w in &with_v {
            let pos_w = h.positions_of(w).expect("augmentations of H_v lie in R");
            let reduced = h.contract_positions(&pos_w).without_right(v);
            for u in recurse(&reduced) {
                let candidate = u.union(w);
                if h.is_minimal_augmentation(&candidate) {
                    out.insert(candidate);
                }
            }
        }
    }
    for w in &with_v {
        let candidate = w.with(v);
        if h.is_minimal_augmentation(&candidate) {
            out.insert(candidate);
        }
    }
    // each W in S(H_v, L_v) maps to W or W + v in S(H, L)
    debug_assert!(with_v.len() <= out.len(), "contraction produced more augmentations than the parent");
    out.into_iter().collect()
}

/// The neighborhood of a minimal connected vertex cover `x` built from
/// minimal valid augmentations of each `(X \ {v}) ∪ N(v)`.
pub fn cvc_quasipoly_neighborhood(g: &Graph, x: &VertexSet) -> Result<Vec<VertexSet>> {
    let property = GraphProperty::new(g, BasicKind::ConnectedVertexCover);
    if !is_minimal(&property, x) {
        return Err(Error::Contract(format!("{x} is not a minimal connected vertex cover")));
    }
    neighborhood(g, x)
}

fn neighborhood(g: &Graph, x: &VertexSet) -> Result<Vec<VertexSet>> {
    let property = GraphProperty::new(g, BasicKind::ConnectedVertexCover);
    let mut out = BTreeSet::new();
    for v in x.iter() {
        let mut xprime = x.without(v);
        for &w in g.neighbors(v) {
            xprime.insert(w);
        }
        let h = ContractedBipartite::from_cover(g, &xprime);
        for w in recurse(&h) {
            out.insert(minimize_monotone(&property, &xprime.union(&w))?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Enumerates every minimal connected vertex cover of a connected graph of
/// any maximum degree.
pub fn enumerate_cvc_quasipoly<S>(g: &Graph, sink: S) -> Result<DelayStats>
where
    S: FnMut(&VertexSet) -> ControlFlow<()>,
{
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let property = GraphProperty::new(g, BasicKind::ConnectedVertexCover);
    let initial = minimize_monotone(&property, &g.vertex_set())?;
    enumerate_solutions(&property, initial, |x| neighborhood(g, x), sink)
}
