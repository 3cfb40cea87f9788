//! One-stop summary of a diagram's invariants.

use crate::diagram::Diagram;
use crate::error::Result;
use crate::homfly::{homfly_in, morton_bound, z_degree, SequentialMemo, SkeinContext, SkeinStats};
use crate::poly::LaurentPoly2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub crossing_count: usize,
    pub component_count: usize,
    pub seifert_circles: usize,
    pub canonical_genus: u64,
    pub writhe: i32,
    pub homfly: LaurentPoly2,
    pub z_degree: i32,
    pub morton_bound: i64,
    pub morton_tight: bool,
    pub stats: SkeinStats,
}

/// Computes every invariant, checking Morton's inequality on the way.
pub fn invariant_report_in<C: SkeinContext>(d: &Diagram, ctx: &C, budget: u64) -> Result<InvariantReport> {
    let seifert = d.seifert_circles()?;
    let bound = morton_bound(d)?;
    let (homfly, stats) = homfly_in(d, ctx, budget)?;
    let m = z_degree(&homfly)?;
    assert!(m as i64 <= bound, "Morton's inequality fails: z-degree {m} exceeds {bound}");
    Ok(InvariantReport {
        crossing_count: d.crossing_count(),
        component_count: d.component_count(),
        seifert_circles: seifert.circle_count,
        canonical_genus: seifert.canonical_genus,
        writhe: d.writhe(),
        z_degree: m,
        morton_bound: bound,
        morton_tight: m as i64 == bound,
        homfly,
        stats,
    })
}

pub fn invariant_report(d: &Diagram, budget: u64) -> Result<InvariantReport> {
    invariant_report_in(d, &SequentialMemo::new(), budget)
}
