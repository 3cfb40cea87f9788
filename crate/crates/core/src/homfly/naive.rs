//! Plain skein expansion with no simplification or memo, for cross-checking.

use alloc::vec;

use crate::diagram::{Crossing, Diagram};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly2;

/// Walks components in the order of their lowest arc label, each from that
/// label, and returns the first crossing first met on its under strand.
fn first_bad(d: &Diagram) -> Option<usize> {
    let ends = d.arc_ends();
    let mut comps: alloc::vec::Vec<&[u32]> = d.components().iter().map(|c| c.as_slice()).collect();
    comps.sort_by_key(|c| c.iter().min().copied());
    let mut seen = vec![false; d.crossing_count()];
    for c in comps {
        let start = c.iter().enumerate().min_by_key(|(_, &a)| a).map_or(0, |(i, _)| i);
        for k in 0..c.len() {
            if let Some((x, s)) = ends[c[(start + k) % c.len()] as usize].head {
                if !seen[x] {
                    if !Crossing::is_over_slot(s) {
                        return Some(x);
                    }
                    seen[x] = true;
                }
            }
        }
    }
    None
}

fn expand(d: &Diagram, nodes: &mut u64, budget: u64) -> Result<LaurentPoly2> {
    let Some(x) = first_bad(d) else {
        return Ok(LaurentPoly2::delta().pow(d.component_count() as u32 - 1));
    };
    if *nodes >= budget {
        return Err(Error::BudgetExceeded(super::SkeinStats { nodes: *nodes, budget, ..Default::default() }));
    }
    *nodes += 1;
    let ps = expand(&d.switch(x)?, nodes, budget)?;
    let p0 = expand(&d.smooth(x)?, nodes, budget)?;
    Ok(match d.crossings()[x].sign {
        crate::Sign::Positive => ps.combine(1, 2, 0, &p0, 1, 1, 1),
        crate::Sign::Negative => ps.combine(1, -2, 0, &p0, -1, -1, 1),
    })
}

/// HOMFLY polynomial by exhaustive skein expansion. Exponential in the
/// crossing count; `budget` caps the number of expanded crossings.
pub fn homfly_naive(d: &Diagram, budget: u64) -> Result<LaurentPoly2> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::InvalidDiagram(report));
    }
    expand(d, &mut 0, budget)
}
