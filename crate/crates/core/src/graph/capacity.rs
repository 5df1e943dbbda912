/// Per-vertex non-negative capacities `c(v)` together with `q = max c(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityFn {
    cap: Vec<usize>,
    max: usize,
}

impl CapacityFn {
    pub fn new(cap: Vec<usize>) -> Self {
        let max = cap.iter().copied().max().unwrap_or(0);
        CapacityFn { cap, max }
    }

    pub fn uniform(n: usize, q: usize) -> Self {
        Self::new(vec![q; n])
    }

    pub fn len(&self) -> usize {
        self.cap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cap.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.cap[v]
    }

    pub fn max(&self) -> usize {
        self.max
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.cap
    }
}
