//! JSON run records.

use mmnfa_core::{GenSpec, GraphStats, Network, VerifyReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything one CLI invocation produced. Only the section matching the
/// command is filled in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub schema_version: u32,
    pub version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gen: Option<GenSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bench: Option<BenchReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compare: Option<CompareReport>,
}

impl RunRecord {
    pub fn new(command: &str) -> Self {
        RunRecord {
            schema_version: SCHEMA_VERSION,
            version: VERSION.to_string(),
            command: command.to_string(),
            input: None,
            gen: None,
            solve: None,
            exact: None,
            verify: None,
            bench: None,
            compare: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }
}

/// A solve result without its timing, so identical inputs give identical
/// records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveRecord {
    pub stats: GraphStats,
    pub total_length: u64,
    pub duplicates_merged: usize,
    pub network: Network,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactRecord {
    pub length: u64,
    pub expansions: u64,
    pub network: Network,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub trial: usize,
    pub seed: u64,
    pub n_total: usize,
    pub n_edges: usize,
    pub depth: usize,
    pub total_length: u64,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spread {
    pub min: u64,
    pub median: u64,
    pub max: u64,
}

impl Spread {
    pub fn of(values: impl IntoIterator<Item = u64>) -> Option<Spread> {
        let mut v: Vec<u64> = values.into_iter().collect();
        if v.is_empty() {
            return None;
        }
        v.sort_unstable();
        Some(Spread {
            min: v[0],
            median: v[v.len() / 2],
            max: v[v.len() - 1],
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub n_total: Spread,
    pub n_edges: Spread,
    pub total_length: Spread,
    pub elapsed_us: Spread,
}

/// Mean Manhattan-pair coverage of heuristic networks on small random
/// instances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageProbe {
    pub instances: usize,
    pub n: usize,
    pub coord_max: i64,
    pub mean_coverage: f64,
    pub min_coverage: f64,
    pub all_connected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub n: usize,
    pub coord_max: i64,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
    pub summary: BenchSummary,
    pub coverage_probe: CoverageProbe,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub mmnfa_length: u64,
    /// `None` when the exact search ran out of budget.
    pub exact_length: Option<u64>,
    /// `mmnfa_length - exact_length`.
    pub difference: Option<i64>,
    pub ratio: Option<f64>,
    /// Fraction of main pairs joined by a Manhattan path in the heuristic
    /// network.
    pub mmnfa_coverage: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub coord_max: i64,
    pub seed: u64,
    pub rows: Vec<CompareRow>,
    pub zero_differences: usize,
    /// Instances where the heuristic came out shorter than the optimum.
    pub negative_differences: usize,
    pub budget_exceeded: usize,
    pub max_ratio: Option<f64>,
    /// Row indices with ratio above 2.
    pub over_two: Vec<usize>,
}
