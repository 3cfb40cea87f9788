//! HOMFLY polynomials by skein recursion, in Morton's convention
//! `v^-1 P(L+) - v P(L-) = z P(L0)` with `P(unknot) = 1`.
//!
//! A crossing-free `k`-component unlink has `P = δ^(k-1)` where
//! `δ = (v^-1 - v) z^-1`. This follows from the relation at a kink: the two
//! resolutions of a one-crossing unknot diagram are both unknots and its
//! smoothing is a two-component unlink, so `v^-1 - v = z P(unlink2)`.

mod gauss;
mod naive;

use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering};

use hashbrown::HashMap;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly2;

pub use gauss::{GaussCode, Pass};
pub use naive::homfly_naive;

/// Skein nodes expanded before giving up, unless the caller says otherwise.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Budget for the larger computations.
pub const EXTENDED_BUDGET: u64 = 20_000_000;

/// Counters describing one evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SkeinStats {
    /// Crossings resolved by the skein relation.
    pub nodes: u64,
    pub memo_hits: u64,
    pub memo_entries: u64,
    pub budget: u64,
}

impl fmt::Display for SkeinStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} skein nodes of {} budgeted, {} memo hits, {} memo entries",
            self.nodes, self.budget, self.memo_hits, self.memo_entries
        )
    }
}

/// Memo store and scheduling used by the recursion.
///
/// Values are functions of their keys, so storing the same pair twice is harmless.
pub trait SkeinContext: Sync {
    fn lookup(&self, key: &[u16]) -> Option<LaurentPoly2>;
    fn store(&self, key: Vec<u16>, value: LaurentPoly2);
    fn memo_len(&self) -> u64;

    /// Evaluates two independent branches; `depth` is the recursion depth.
    fn join<A, B, RA, RB>(&self, _depth: usize, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        (a(), b())
    }
}

/// Single-threaded memo.
#[derive(Default)]
pub struct SequentialMemo {
    map: spin::Mutex<HashMap<Vec<u16>, LaurentPoly2>>,
}

impl SequentialMemo {
    pub fn new() -> Self {
        Self::default()
    }
}

impl SkeinContext for SequentialMemo {
    fn lookup(&self, key: &[u16]) -> Option<LaurentPoly2> {
        self.map.lock().get(key).cloned()
    }

    fn store(&self, key: Vec<u16>, value: LaurentPoly2) {
        self.map.lock().insert(key, value);
    }

    fn memo_len(&self) -> u64 {
        self.map.lock().len() as u64
    }
}

struct Run<'a, C: SkeinContext> {
    ctx: &'a C,
    budget: u64,
    nodes: AtomicU64,
    hits: AtomicU64,
}

struct Exhausted;

impl<C: SkeinContext> Run<'_, C> {
    fn eval(&self, mut g: GaussCode, depth: usize) -> core::result::Result<LaurentPoly2, Exhausted> {
        g.simplify();
        let loops = g.loops;
        if g.comps.is_empty() {
            return Ok(delta_pow(loops - 1));
        }
        let groups = g.split();
        let mut acc = delta_pow(groups.len() + loops - 1);
        for group in groups {
            let p = self.eval_connected(group, depth)?;
            acc = &acc * &p;
        }
        Ok(acc)
    }

    fn eval_connected(&self, g: GaussCode, depth: usize) -> core::result::Result<LaurentPoly2, Exhausted> {
        let Some(x) = g.first_ascending() else {
            return Ok(delta_pow(g.comps.len() - 1));
        };
        let key = g.canonical_key();
        if let Some(p) = self.ctx.lookup(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(p);
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Exhausted);
        }
        let positive = g.positive[x as usize];
        let smoothed = g.smooth(x);
        let mut switched = g;
        switched.switch(x);
        let (ps, p0) = self.ctx.join(depth, || self.eval(switched, depth + 1), || self.eval(smoothed, depth + 1));
        let (ps, p0) = (ps?, p0?);
        let p = if positive {
            // P+ = v^2 P- + v z P0
            ps.combine(1, 2, 0, &p0, 1, 1, 1)
        } else {
            // P- = v^-2 P+ - v^-1 z P0
            ps.combine(1, -2, 0, &p0, -1, -1, 1)
        };
        self.ctx.store(key, p.clone());
        Ok(p)
    }
}

fn delta_pow(k: usize) -> LaurentPoly2 {
    LaurentPoly2::delta().pow(k as u32)
}

/// HOMFLY polynomial of a diagram using a caller-supplied memo store.
pub fn homfly_in<C: SkeinContext>(d: &Diagram, ctx: &C, budget: u64) -> Result<(LaurentPoly2, SkeinStats)> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::InvalidDiagram(report));
    }
    let run = Run { ctx, budget, nodes: AtomicU64::new(0), hits: AtomicU64::new(0) };
    let out = run.eval(GaussCode::from_diagram(d), 0);
    let stats = SkeinStats {
        nodes: run.nodes.load(Ordering::Relaxed).min(budget),
        memo_hits: run.hits.load(Ordering::Relaxed),
        memo_entries: ctx.memo_len(),
        budget,
    };
    match out {
        Ok(p) => Ok((p, stats)),
        Err(Exhausted) => Err(Error::BudgetExceeded(stats)),
    }
}

/// HOMFLY polynomial with a fresh sequential memo and the given node budget.
pub fn homfly_with_budget(d: &Diagram, budget: u64) -> Result<(LaurentPoly2, SkeinStats)> {
    homfly_in(d, &SequentialMemo::new(), budget)
}

/// HOMFLY polynomial with the default budget.
pub fn homfly(d: &Diagram) -> Result<LaurentPoly2> {
    homfly_with_budget(d, DEFAULT_BUDGET).map(|(p, _)| p)
}

/// Highest power of `z` in `p`.
pub fn z_degree(p: &LaurentPoly2) -> Result<i32> {
    p.z_degree().ok_or(Error::ZeroPolynomial)
}

/// Morton's bound `c(D) - s(D) + 1` on the z-degree.
pub fn morton_bound(d: &Diagram) -> Result<i64> {
    let s = d.seifert_circles()?;
    Ok(d.crossing_count() as i64 - s.circle_count as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::torus2;

    #[test]
    fn unlinks() {
        assert_eq!(homfly(&Diagram::unknot()).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly(&Diagram::unlink(2)).unwrap(), LaurentPoly2::delta());
        assert_eq!(homfly(&Diagram::unlink(3)).unwrap(), LaurentPoly2::delta().pow(2));
    }

    #[test]
    fn trefoil() {
        let p = homfly(&torus2(3).unwrap()).unwrap();
        let expected = LaurentPoly2::from_terms([(2, 0, 2.into()), (4, 0, (-1).into()), (2, 2, 1.into())]);
        assert_eq!(p, expected);
        assert_eq!(z_degree(&p).unwrap(), 2);
        assert_eq!(morton_bound(&torus2(3).unwrap()).unwrap(), 2);
    }

    #[test]
    fn hopf() {
        let p = homfly(&torus2(2).unwrap()).unwrap();
        let expected = LaurentPoly2::from_terms([(1, -1, 1.into()), (3, -1, (-1).into()), (1, 1, 1.into())]);
        assert_eq!(p, expected);
    }

    #[test]
    fn budget_is_enforced() {
        let d = torus2(7).unwrap();
        assert!(matches!(homfly_with_budget(&d, 1), Err(Error::BudgetExceeded(_))));
    }
}
