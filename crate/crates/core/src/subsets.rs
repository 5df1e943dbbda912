//! Size-ascending, lexicographic enumeration of small subsets.

use std::ops::ControlFlow;

/// Calls `f` on every subset of `items` with at most `max_size` elements,
/// ordered by size and then lexicographically by position in `items`.
/// Stops early if `f` breaks.
pub fn for_each_subset<F>(items: &[usize], max_size: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut chosen = Vec::with_capacity(max_size.min(items.len()));
    for size in 0..=max_size.min(items.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            chosen.clear();
            chosen.extend(idx.iter().map(|&i| items[i]));
            f(&chosen)?;
            let n = items.len();
            let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    ControlFlow::Continue(())
}
