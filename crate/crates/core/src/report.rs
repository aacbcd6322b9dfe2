//! Machine-readable report payloads.
//!
//! Copy counts are serialized as decimal strings so downstream consumers
//! never lose precision to a narrower integer type.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CountReport {
    pub pattern: String,
    pub host: String,
    pub method: String,
    pub count: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThroughEdgeReport {
    pub pattern: String,
    pub host: String,
    pub edge: [u32; 4],
    pub count: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CminReport {
    pub pattern: String,
    pub host: String,
    pub count: String,
    pub argmin_edges: Vec<[u32; 4]>,
    /// Per-part vertex counts of each argmin edge, when a defining partition
    /// was available.
    pub argmin_profiles: Vec<Vec<u8>>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionReport {
    pub mode: String,
    pub objective: String,
    pub part_sizes: Vec<u64>,
    #[serde(rename = "B_size")]
    pub b_size: String,
    #[serde(rename = "M_size")]
    pub m_size: String,
    pub restarts: u32,
    pub seed: u64,
    pub locally_optimal: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TuranReport {
    pub n: u32,
    pub pattern: String,
    pub value: String,
    pub status: String,
    pub nodes_explored: String,
    pub budget_nodes: u64,
    pub budget_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_path: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstructionSidecar {
    pub construction: String,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    pub q: u64,
    pub part_ranges: Vec<[u32; 2]>,
    pub added_edges: Vec<[u32; 4]>,
    pub edge_count: String,
}

/// One verification check outcome; free of timing so reruns are byte-identical.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckRecord>,
}
