//! JSON form of an invariant report.

use serde::Serialize;
use skeinlab_core::homfly::SkeinStats;
use skeinlab_core::report::InvariantReport;

use crate::poly_io::PolyJson;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub memo_hits: u64,
    pub memo_entries: u64,
    pub budget: u64,
}

impl From<SkeinStats> for StatsJson {
    fn from(s: SkeinStats) -> Self {
        StatsJson { nodes: s.nodes, memo_hits: s.memo_hits, memo_entries: s.memo_entries, budget: s.budget }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportJson {
    pub crossing_count: usize,
    pub component_count: usize,
    pub seifert_circles: usize,
    pub canonical_genus: u64,
    pub writhe: i32,
    pub z_degree: i32,
    pub morton_bound: i64,
    pub morton_tight: bool,
    pub homfly: String,
    pub homfly_terms: PolyJson,
    pub stats: StatsJson,
}

impl From<&InvariantReport> for ReportJson {
    fn from(r: &InvariantReport) -> Self {
        ReportJson {
            crossing_count: r.crossing_count,
            component_count: r.component_count,
            seifert_circles: r.seifert_circles,
            canonical_genus: r.canonical_genus,
            writhe: r.writhe,
            z_degree: r.z_degree,
            morton_bound: r.morton_bound,
            morton_tight: r.morton_tight,
            homfly: r.homfly.to_string(),
            homfly_terms: (&r.homfly).into(),
            stats: r.stats.into(),
        }
    }
}

pub fn report_to_json(r: &InvariantReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("report JSON")
}
