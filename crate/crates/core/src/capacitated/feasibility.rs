use std::ops::Range;

use crate::graph::{CapacityFn, Graph, VertexSet};

use super::CapKind;

/// Something that must be covered: an edge (vertex cover) or a vertex
/// outside the set (dominating set).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    /// Endpoints in ascending order.
    Edge(usize, usize),
    Vertex(usize),
}

/// Capacity clamped to what a vertex can ever use: its degree for covers,
/// `n - 1` for domination.
pub fn effective_capacities(g: &Graph, c: &CapacityFn, kind: CapKind) -> Vec<usize> {
    (0..g.n())
        .map(|v| match kind {
            CapKind::VertexCover => c.get(v).min(g.degree(v)),
            CapKind::DominatingSet => c.get(v).min(g.n().saturating_sub(1)),
        })
        .collect()
}

/// Bipartite graph between items and capacity slots of the members of `x`:
/// each member `v` contributes one slot per unit of (clamped) capacity, and
/// an item is adjacent to every slot of a member that may take it.
#[derive(Debug, Clone)]
pub struct FeasibilityGraph {
    items: Vec<Item>,
    takers: Vec<Vec<usize>>,
    slot_start: Vec<usize>,
    slot_owner: Vec<usize>,
}

/// A maximum matching of a [`FeasibilityGraph`].
#[derive(Debug, Clone)]
pub struct Matching {
    item_slot: Vec<Option<usize>>,
    slot_item: Vec<Option<usize>>,
    size: usize,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn slot_of(&self, item: usize) -> Option<usize> {
        self.item_slot[item]
    }

    pub fn item_at(&self, slot: usize) -> Option<usize> {
        self.slot_item[slot]
    }

    pub fn is_saturating(&self) -> bool {
        self.size == self.item_slot.len()
    }

    pub fn free_items(&self) -> impl Iterator<Item = usize> + '_ {
        self.item_slot.iter().enumerate().filter(|(_, s)| s.is_none()).map(|(i, _)| i)
    }
}

impl FeasibilityGraph {
    /// `capacities` are the clamped capacities of every vertex of `g`.
    pub fn new(g: &Graph, capacities: &[usize], x: &VertexSet, kind: CapKind) -> Self {
        let mut items = Vec::new();
        let mut takers = Vec::new();
        match kind {
            CapKind::VertexCover => {
                for (u, v) in g.edges() {
                    let t: Vec<usize> = [u, v].into_iter().filter(|&w| x.contains(w) && capacities[w] > 0).collect();
                    items.push(Item::Edge(u, v));
                    takers.push(t);
                }
            }
            CapKind::DominatingSet => {
                for u in (0..g.n()).filter(|&u| !x.contains(u)) {
                    let t: Vec<usize> = g
                        .neighbors(u)
                        .iter()
                        .copied()
                        .filter(|&w| x.contains(w) && capacities[w] > 0)
                        .collect();
                    items.push(Item::Vertex(u));
                    takers.push(t);
                }
            }
        }
        let mut slot_start = Vec::with_capacity(g.n() + 1);
        let mut slot_owner = Vec::new();
        for (v, &cap) in capacities.iter().enumerate() {
            slot_start.push(slot_owner.len());
            if x.contains(v) {
                slot_owner.extend(std::iter::repeat_n(v, cap));
            }
        }
        slot_start.push(slot_owner.len());
        FeasibilityGraph {
            items,
            takers,
            slot_start,
            slot_owner,
        }
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn slot_count(&self) -> usize {
        self.slot_owner.len()
    }

    /// Members of the set whose slots are adjacent to `item`.
    pub fn takers(&self, item: usize) -> &[usize] {
        &self.takers[item]
    }

    pub fn slots(&self, v: usize) -> Range<usize> {
        self.slot_start[v]..self.slot_start[v + 1]
    }

    pub fn slot_owner(&self, slot: usize) -> usize {
        self.slot_owner[slot]
    }

    /// Maximum matching by repeated augmenting-path search. Slots of one
    /// vertex are interchangeable, so the search marks vertices rather than
    /// individual slots as visited.
    pub fn maximum_matching(&self) -> Matching {
        let mut m = Matching {
            item_slot: vec![None; self.items.len()],
            slot_item: vec![None; self.slot_owner.len()],
            size: 0,
        };
        let n = self.slot_start.len() - 1;
        let mut visited = vec![false; n];
        for item in 0..self.items.len() {
            visited.iter_mut().for_each(|b| *b = false);
            if self.augment(item, &mut m, &mut visited) {
                m.size += 1;
            }
        }
        m
    }

    fn augment(&self, item: usize, m: &mut Matching, visited: &mut [bool]) -> bool {
        for &v in &self.takers[item] {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            let slots = self.slots(v);
            if let Some(s) = slots.clone().find(|&s| m.slot_item[s].is_none()) {
                m.slot_item[s] = Some(item);
                m.item_slot[item] = Some(s);
                return true;
            }
            for s in slots {
                let other = m.slot_item[s].expect("all slots of v are taken");
                if self.augment(other, m, visited) {
                    m.slot_item[s] = Some(item);
                    m.item_slot[item] = Some(s);
                    return true;
                }
            }
        }
        false
    }

    /// Items reachable from an unmatched item by an alternating path.
    pub fn alternating_reach(&self, m: &Matching) -> Vec<bool> {
        let mut reached = vec![false; self.items.len()];
        let mut seen = vec![false; self.slot_start.len() - 1];
        let mut stack: Vec<usize> = m.free_items().collect();
        stack.iter().for_each(|&i| reached[i] = true);
        while let Some(i) = stack.pop() {
            for &v in &self.takers[i] {
                if std::mem::replace(&mut seen[v], true) {
                    continue;
                }
                for s in self.slots(v) {
                    if let Some(j) = m.slot_item[s] {
                        if !reached[j] {
                            reached[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
        }
        reached
    }
}
