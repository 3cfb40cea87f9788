//! A concurrent memo for the skein engine, splitting branches with rayon.

use dashmap::DashMap;
use skeinlab_core::homfly::{homfly_in, SkeinContext, SkeinStats};
use skeinlab_core::{Diagram, LaurentPoly2, Result};

pub struct ParallelMemo {
    map: DashMap<Vec<u16>, LaurentPoly2>,
    /// Branches are evaluated in parallel above this recursion depth.
    split_depth: usize,
}

impl ParallelMemo {
    pub fn new(split_depth: usize) -> Self {
        Self { map: DashMap::new(), split_depth }
    }
}

impl Default for ParallelMemo {
    fn default() -> Self {
        Self::new(12)
    }
}

impl SkeinContext for ParallelMemo {
    fn lookup(&self, key: &[u16]) -> Option<LaurentPoly2> {
        self.map.get(key).map(|p| p.clone())
    }

    fn store(&self, key: Vec<u16>, value: LaurentPoly2) {
        self.map.insert(key, value);
    }

    fn memo_len(&self) -> u64 {
        self.map.len() as u64
    }

    fn join<A, B, RA, RB>(&self, depth: usize, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        if depth < self.split_depth {
            rayon::join(a, b)
        } else {
            (a(), b())
        }
    }
}

/// HOMFLY polynomial using all rayon worker threads.
pub fn homfly_parallel(d: &Diagram, budget: u64) -> Result<(LaurentPoly2, SkeinStats)> {
    homfly_in(d, &ParallelMemo::default(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use skeinlab_core::constructors::{pretzel, whitehead_double, Clasp};
    use skeinlab_core::homfly::homfly;

    #[test]
    fn agrees_with_sequential() {
        let w = whitehead_double(&pretzel(&[2, 1, 1]).unwrap(), 0, Clasp::Positive).unwrap();
        let (p, _) = homfly_parallel(&w, 1_000_000).unwrap();
        assert_eq!(p, homfly(&w).unwrap());
    }
}
