use serde::{Deserialize, Serialize};
use sfvs_core::{Instance, VertexSet};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Widths {
    pub gf2: usize,
    pub rational: usize,
    pub mim: usize,
}

/// The JSON printed by `sfvs solve`.
///
/// For `sfvs` and `fvs` the objective is the weight of the kept S-forest;
/// for `nmc` it is the weight of the cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub problem: String,
    pub n: usize,
    pub m: usize,
    pub width: Widths,
    pub objective_weight: i64,
    /// Vertex names, in vertex order.
    pub deletion_set: Vec<String>,
    pub sforest_weight: i64,
    pub oracle_checked: bool,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(problem: &str, inst: &Instance, width: Widths) -> Self {
        Self {
            problem: problem.to_string(),
            n: inst.n(),
            m: inst.graph.edge_count(),
            width,
            objective_weight: 0,
            deletion_set: Vec::new(),
            sforest_weight: 0,
            oracle_checked: false,
            elapsed_ms: 0,
        }
    }

    pub(crate) fn fill(&mut self, inst: &Instance, objective: i64, deletion: &VertexSet, kept_weight: i64) {
        self.objective_weight = objective;
        self.deletion_set = deletion.iter().map(|v| inst.graph.name(v).to_string()).collect();
        self.sforest_weight = kept_weight;
    }

    /// The report without its timing, for comparing runs.
    pub fn without_timing(&self) -> Self {
        Self { elapsed_ms: 0, ..self.clone() }
    }
}
