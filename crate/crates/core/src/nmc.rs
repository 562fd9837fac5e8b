//! Node Multiway Cut through Subset Feedback Vertex Set: an apex vertex
//! joined to every terminal is the only vertex of `S`, so S-cycles are
//! exactly the terminal-to-terminal paths closed through the apex.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::dp::{solve_with, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::{abs_weight_total, Graph, Instance};
use crate::layout::RootedLayout;

pub const NMC_ORACLE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NmcInstance {
    pub graph: Graph,
    pub terminals: VertexSet,
    /// One weight per vertex; terminal entries only matter when terminals
    /// are deletable.
    pub weights: Vec<i64>,
    pub deletable_terminals: bool,
}

impl NmcInstance {
    pub fn new(graph: Graph, terminals: VertexSet, weights: Vec<i64>) -> Result<Self> {
        let n = graph.n();
        if weights.len() != n {
            return Err(Error::WeightLength { expected: n, got: weights.len() });
        }
        if let Some(v) = terminals.iter().find(|&v| v >= n) {
            return Err(Error::VertexOutOfRange(v, n));
        }
        if terminals.len() < 2 {
            return Err(Error::TooFewTerminals(terminals.len()));
        }
        abs_weight_total(&weights)?;
        Ok(Self { graph, terminals, weights, deletable_terminals: false })
    }

    pub fn with_deletable_terminals(mut self, deletable: bool) -> Self {
        self.deletable_terminals = deletable;
        self
    }

    fn deletable(&self, v: usize) -> bool {
        self.deletable_terminals || !self.terminals.contains(v)
    }

    /// Two fixed terminals joined by an edge cannot be separated.
    fn check_feasible(&self) -> Result<()> {
        if self.deletable_terminals {
            return Ok(());
        }
        for t in &self.terminals {
            if let Some(u) = self.graph.neighbors(t).intersection(&self.terminals).first() {
                return Err(Error::AdjacentTerminals(t.min(u), t.max(u)));
            }
        }
        Ok(())
    }

    /// Weight that no feasible cut can reach: `1 + Σ|w|`.
    pub fn big_weight(&self) -> i64 {
        1 + self.weights.iter().map(|w| w.abs()).sum::<i64>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NmcSolution {
    pub weight: i64,
    pub cut: VertexSet,
}

/// The SFVS instance with the apex (vertex `n`, the only member of `S`)
/// and the layout extended by a leaf for it beside the old root.
pub fn reduce_to_sfvs(nmc: &NmcInstance, l: &RootedLayout) -> Result<(Instance, RootedLayout)> {
    l.check_graph(&nmc.graph)?;
    let n = nmc.graph.n();
    let mut name = String::from("apex");
    while nmc.graph.vertex_by_name(&name).is_some() {
        name.push('_');
    }
    let graph = nmc.graph.with_apex(name, &nmc.terminals);
    let big = nmc.big_weight();
    let mut weights: Vec<i64> =
        (0..n).map(|v| if nmc.deletable(v) { nmc.weights[v] } else { big }).collect();
    weights.push(big);
    let inst = Instance::new(graph, VertexSet::singleton(n), weights)?;
    Ok((inst, l.with_new_root_leaf()))
}

/// Minimum-weight multiway cut via the DP on the reduced instance.
pub fn solve_nmc(nmc: &NmcInstance, l: &RootedLayout) -> Result<NmcSolution> {
    solve_nmc_with(nmc, l, SolveOptions::default())
}

pub fn solve_nmc_with(nmc: &NmcInstance, l: &RootedLayout, opts: SolveOptions) -> Result<NmcSolution> {
    nmc.check_feasible()?;
    let (inst, extended) = reduce_to_sfvs(nmc, l)?;
    let (sol, _) = solve_with(&inst, &extended, opts)?;
    let apex = nmc.graph.n();
    let mut cut = sol.deletion.clone();
    cut.remove(apex);
    if sol.deletion.contains(apex) || cut.iter().any(|v| !nmc.deletable(v)) {
        return Err(Error::Internal("optimal deletion uses a non-deletable vertex".into()));
    }
    if !separates(&nmc.graph, &nmc.terminals, &cut) {
        return Err(Error::Internal("cut does not separate the terminals".into()));
    }
    let weight = cut.iter().map(|v| nmc.weights[v]).sum();
    Ok(NmcSolution { weight, cut })
}

/// Whether removing `cut` leaves every surviving terminal unable to reach
/// any other terminal.
pub fn separates(g: &Graph, terminals: &VertexSet, cut: &VertexSet) -> bool {
    let alive = cut.complement(g.n());
    let survivors = terminals.difference(cut);
    survivors.iter().all(|t| {
        let mut seen = VertexSet::singleton(t);
        let mut queue = VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            for u in &g.neighbors(v).intersection(&alive) {
                if seen.insert(u) {
                    if survivors.contains(u) {
                        return false;
                    }
                    queue.push_back(u);
                }
            }
        }
        true
    })
}

/// Minimum-weight cut by enumerating subsets of deletable vertices; ties
/// go to the lexicographically smallest cut.
pub fn brute_force_nmc(nmc: &NmcInstance) -> Result<NmcSolution> {
    let n = nmc.graph.n();
    if n > NMC_ORACLE_LIMIT {
        return Err(Error::SizeGuard { n, limit: NMC_ORACLE_LIMIT });
    }
    nmc.check_feasible()?;
    let pool: Vec<usize> = (0..n).filter(|&v| nmc.deletable(v)).collect();
    let found = (0u64..1 << pool.len())
        .into_par_iter()
        .filter_map(|mask| {
            let cut: VertexSet = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
            separates(&nmc.graph, &nmc.terminals, &cut).then(|| (cut.iter().map(|v| nmc.weights[v]).sum::<i64>(), cut))
        })
        .reduce_with(|a, b| if (a.0, &a.1).cmp(&(b.0, &b.1)).is_le() { a } else { b });
    let (weight, cut) = found.ok_or(Error::Internal("no separating set found".into()))?;
    Ok(NmcSolution { weight, cut })
}
