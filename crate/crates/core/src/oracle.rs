//! Brute-force ground truth for small instances.
//!
//! Subsets are scanned by increasing size; any superset of a set already
//! found is skipped, so whatever survives and satisfies the predicate is
//! inclusion-minimal. Nothing here depends on the enumerators.

use crate::error::{Error, Result};
use crate::graph::{Hypergraph, VertexSet};
use crate::min_valid_aug::ContractedBipartite;

/// Largest ground set [`brute_minimal`] accepts.
pub const MAX_UNIVERSE: usize = 25;
/// Largest right class [`brute_min_valid_aug`] accepts.
pub const MAX_RIGHT: usize = 20;

/// Calls `f` on every `size`-subset of `0..n`, as a bit mask, in increasing
/// numeric order.
fn for_each_mask(n: usize, size: usize, mut f: impl FnMut(u32)) {
    if size > n {
        return;
    }
    if size == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << n;
    let mut mask: u64 = (1 << size) - 1;
    while mask < limit {
        f(mask as u32);
        // next mask with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
}

fn minimal_masks(n: usize, mut holds: impl FnMut(u32) -> bool) -> Vec<u32> {
    let mut found: Vec<u32> = Vec::new();
    for size in 0..=n {
        let mut layer = Vec::new();
        for_each_mask(n, size, |mask| {
            if found.iter().all(|&f| mask & f != f) && holds(mask) {
                layer.push(mask);
            }
        });
        found.extend(layer);
    }
    found
}

fn mask_to_set(universe: usize, mask: u32, ids: impl Fn(usize) -> usize) -> VertexSet {
    VertexSet::from_members(universe, (0..32).filter(|&i| mask >> i & 1 == 1).map(ids))
}

/// All inclusion-minimal subsets of `0..universe` satisfying `holds`, in
/// canonical order.
pub fn brute_minimal<F>(universe: usize, holds: F) -> Result<Vec<VertexSet>>
where
    F: Fn(&VertexSet) -> bool,
{
    if universe > MAX_UNIVERSE {
        return Err(Error::TooLarge {
            size: universe,
            limit: MAX_UNIVERSE,
        });
    }
    let mut out: Vec<VertexSet> = minimal_masks(universe, |mask| holds(&mask_to_set(universe, mask, |i| i)))
        .into_iter()
        .map(|mask| mask_to_set(universe, mask, |i| i))
        .collect();
    out.sort();
    Ok(out)
}

/// All minimal transversals of `h`.
pub fn brute_transversals(h: &Hypergraph) -> Result<Vec<VertexSet>> {
    if h.n() > MAX_UNIVERSE {
        return Err(Error::TooLarge {
            size: h.n(),
            limit: MAX_UNIVERSE,
        });
    }
    let edge_masks: Vec<u32> = h.edges().iter().map(|e| e.iter().fold(0, |m, &v| m | 1 << v)).collect();
    let mut out: Vec<VertexSet> = minimal_masks(h.n(), |mask| edge_masks.iter().all(|&e| e & mask != 0))
        .into_iter()
        .map(|mask| mask_to_set(h.n(), mask, |i| i))
        .collect();
    out.sort();
    Ok(out)
}

/// All minimal `W ⊆ R` with `H[L ∪ W]` connected, checked directly by graph
/// search on the induced subgraph.
pub fn brute_min_valid_aug(h: &ContractedBipartite) -> Result<Vec<VertexSet>> {
    let right = h.right_vertices();
    if right.len() > MAX_RIGHT {
        return Err(Error::TooLarge {
            size: right.len(),
            limit: MAX_RIGHT,
        });
    }
    let nl = h.left_len();
    let adjacency: Vec<&[usize]> = right.iter().map(|&r| h.neighbors(r).expect("listed right vertex")).collect();
    let connected = |mask: u32| {
        let chosen: Vec<usize> = (0..right.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let total = nl + chosen.len();
        if total <= 1 {
            return true;
        }
        // nodes: left 0..nl, then chosen right positions
        let mut seen = vec![false; total];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            let next: Vec<usize> = if a < nl {
                (0..chosen.len()).filter(|&j| adjacency[chosen[j]].contains(&a)).map(|j| nl + j).collect()
            } else {
                adjacency[chosen[a - nl]].to_vec()
            };
            for b in next {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    let mut out: Vec<VertexSet> = minimal_masks(right.len(), connected)
        .into_iter()
        .map(|mask| mask_to_set(h.right_universe(), mask, |i| right[i]))
        .collect();
    out.sort();
    Ok(out)
}
