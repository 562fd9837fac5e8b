//! Exhaustive oracles and checkers for the structural facts the solver
//! relies on. Nothing here is used by the solver itself.

use std::collections::HashSet;
use std::collections::VecDeque;

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::dp::{best, IndexTuple, NodeContext, SolutionTable};
use crate::error::{Error, Result};
use crate::graph::{contract_partial, contracted, BlockGraph, ContractMode, Graph, Instance};
use crate::layout::{max_induced_matching, mim_cut};

pub const SFVS_ORACLE_LIMIT: usize = 24;
pub const REPRESENTS_LIMIT: usize = 12;

/// Whether `v` lies on a cycle of `G[x]`: some edge `vu` inside `x` whose
/// endpoints stay connected after removing that edge.
fn on_cycle(g: &Graph, x: &VertexSet, v: usize) -> bool {
    g.neighbors(v).intersection(x).iter().any(|u| {
        let mut seen = VertexSet::singleton(v);
        let mut queue = VecDeque::from([v]);
        while let Some(w) = queue.pop_front() {
            for z in &g.neighbors(w).intersection(x) {
                if (w == v && z == u) || seen.contains(z) {
                    continue;
                }
                if z == u {
                    return true;
                }
                seen.insert(z);
                queue.push_back(z);
            }
        }
        false
    })
}

fn naive_s_forest(inst: &Instance, x: &VertexSet) -> bool {
    x.intersection(&inst.s).iter().all(|v| !on_cycle(&inst.graph, x, v))
}

/// Maximum over `masks` of `score`, ties to the lexicographically smallest
/// set; `None` if `keep` rejects every set.
fn exhaustive_best(
    n: usize,
    weights: &[i64],
    keep: impl Fn(&VertexSet) -> bool + Sync,
) -> Option<(i64, VertexSet)> {
    (0u64..1 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let x: VertexSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            keep(&x).then(|| (x.iter().map(|v| weights[v]).sum::<i64>(), x))
        })
        .reduce_with(|a, b| match a.0.cmp(&b.0) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => {
                if a.1.lex_cmp(&b.1).is_le() {
                    a
                } else {
                    b
                }
            }
        })
}

/// Maximum-weight S-forest by enumerating every vertex subset.
pub fn brute_force_sfvs(inst: &Instance) -> Result<(i64, VertexSet)> {
    let n = inst.n();
    if n > SFVS_ORACLE_LIMIT {
        return Err(Error::SizeGuard { n, limit: SFVS_ORACLE_LIMIT });
    }
    Ok(exhaustive_best(n, &inst.weights, |x| naive_s_forest(inst, x)).expect("the empty set is an S-forest"))
}

/// Maximum-weight induced forest, counting edges against components.
pub fn brute_force_fvs(g: &Graph, weights: &[i64]) -> Result<(i64, VertexSet)> {
    let n = g.n();
    if n > SFVS_ORACLE_LIMIT {
        return Err(Error::SizeGuard { n, limit: SFVS_ORACLE_LIMIT });
    }
    let is_forest = |x: &VertexSet| {
        let edges = x.iter().map(|v| g.neighbors(v).intersection_len(x)).sum::<usize>() / 2;
        edges + g.components(x).len() == x.len()
    };
    Ok(exhaustive_best(n, weights, is_forest).expect("the empty set is a forest"))
}

/// Result of [`find_scontraction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SContraction {
    /// `𝒫_Y`, ordered by smallest vertex.
    pub partition: Vec<VertexSet>,
    /// Vertex cover of the contracted cut graph: blocks of degree at least
    /// two, plus the inside block of every isolated edge.
    pub vertex_cover: Vec<VertexSet>,
}

/// Outcome of checking a contraction of `Y` against `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionReport {
    /// The contracted union graph is a forest.
    pub forest: bool,
    /// Every S-vertex meets every non-S block at most once.
    pub single_contacts: bool,
    pub vertex_cover: Vec<VertexSet>,
    pub cover_limit: usize,
    /// The cover is at most `4·mim(A)` blocks.
    pub cover_small: bool,
    /// Cover blocks have pairwise distinct neighbourhoods in the contracted
    /// cut graph.
    pub cover_distinct: bool,
}

impl ContractionReport {
    pub fn holds(&self) -> bool {
        self.forest && self.single_contacts && self.cover_small && self.cover_distinct
    }
}

fn s_singletons(x: &VertexSet, s: &VertexSet) -> Vec<VertexSet> {
    x.intersection(s).iter().map(VertexSet::singleton).collect()
}

/// Checks a contraction `p_y` of `y` against `x ⊆ a` and extracts the
/// vertex cover of the contracted cut graph.
pub fn check_contraction(
    g: &Graph,
    a: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
    s: &VertexSet,
    p_y: &[VertexSet],
) -> Result<ContractionReport> {
    let x_ns = g.components(&x.difference(s));
    contract_partial(y, p_y, s)?;
    let mut x_blocks = x_ns.clone();
    x_blocks.extend(s_singletons(x, s));
    let mut y_blocks = p_y.to_vec();
    y_blocks.extend(s_singletons(y, s));

    let forest = contracted(g, &x_blocks, &y_blocks, ContractMode::Full)?.is_forest();
    let non_s: Vec<&VertexSet> = x_ns.iter().chain(p_y).collect();
    let single_contacts =
        x.union(y).intersection(s).iter().all(|v| non_s.iter().all(|p| g.neighbors(v).intersection_len(p) <= 1));

    let cut = contracted(g, &x_blocks, &y_blocks, ContractMode::Bipartite)?;
    let cover = cover_of(&cut);
    let nbhds: Vec<Vec<usize>> = cover.iter().map(|&b| cut.neighbors(b).to_vec()).collect();
    let cover_distinct = nbhds.iter().collect::<HashSet<_>>().len() == nbhds.len();
    let cover_limit = 4 * mim_cut(g, a);
    Ok(ContractionReport {
        forest,
        single_contacts,
        cover_small: cover.len() <= cover_limit,
        cover_distinct,
        cover_limit,
        vertex_cover: cover.into_iter().map(|b| cut.blocks[b].clone()).collect(),
    })
}

/// Blocks of degree at least two, plus the first-family endpoint of every
/// isolated edge.
fn cover_of(cut: &BlockGraph) -> Vec<usize> {
    (0..cut.len())
        .filter(|&b| {
            let d = cut.degree(b);
            d >= 2 || (d == 1 && b < cut.split && cut.degree(cut.neighbors(b)[0]) == 1)
        })
        .collect()
}

/// Builds a contraction of `y` that turns the S-forest `G[x ∪ y]` into a
/// forest: start from `cc(y \ S)` and, while the contracted graph has a
/// cycle, merge the outside blocks of a shortest one.
///
/// Errors unless `G[x ∪ y]` is an S-forest; also errors if the result
/// fails any check of [`check_contraction`].
pub fn find_scontraction(
    g: &Graph,
    a: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
    s: &VertexSet,
) -> Result<SContraction> {
    if !x.is_subset(a) || y.intersects(a) {
        return Err(Error::NotInSide);
    }
    if !crate::graph::is_s_forest(g, &x.union(y), s) {
        return Err(Error::Precondition("G[X ∪ Y] is not an S-forest".into()));
    }
    let x_ns = g.components(&x.difference(s));
    let mut p_y = g.components(&y.difference(s));
    loop {
        let mut blocks = x_ns.clone();
        let split = blocks.len();
        blocks.extend(p_y.iter().cloned());
        let bg = contracted(g, &blocks[..split], &blocks[split..], ContractMode::Full)?;
        let Some(cycle) = shortest_cycle(&bg) else { break };
        let mut merged = VertexSet::new();
        let mut rest = Vec::new();
        for (k, p) in p_y.into_iter().enumerate() {
            if cycle.contains(&(split + k)) {
                merged.union_with(&p);
            } else {
                rest.push(p);
            }
        }
        rest.push(merged);
        rest.sort_by_key(VertexSet::first);
        p_y = rest;
    }
    let report = check_contraction(g, a, x, y, s, &p_y)?;
    if !report.holds() {
        return Err(Error::Internal(format!("contraction fails its checks: {report:?}")));
    }
    Ok(SContraction { partition: p_y, vertex_cover: report.vertex_cover })
}

/// Blocks of a shortest cycle, found by deleting each edge in turn and
/// searching for the shortest path between its endpoints.
fn shortest_cycle(bg: &BlockGraph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for (u, v) in bg.edges() {
        let mut prev = vec![usize::MAX; bg.len()];
        prev[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            if w == v {
                break;
            }
            for &z in bg.neighbors(w) {
                if prev[z] == usize::MAX && !(w == u && z == v) {
                    prev[z] = w;
                    queue.push_back(z);
                }
            }
        }
        if prev[v] == usize::MAX {
            continue;
        }
        let mut path = vec![v];
        while *path.last().expect("nonempty") != u {
            path.push(prev[*path.last().expect("nonempty")]);
        }
        if best.as_ref().is_none_or(|b| path.len() < b.len()) {
            best = Some(path);
        }
    }
    best
}

/// The index read off a witness `(X, 𝒫_Y, VC)`: every cover block
/// contributes its representative and `x_rest` represents what is left of
/// `X`.
pub fn index_from_witness(ctx: &NodeContext, x: &VertexSet, witness: &SContraction) -> IndexTuple {
    let g = &ctx.inst.graph;
    let s = &ctx.inst.s;
    let mut i = IndexTuple::default();
    let mut rest = x.clone();
    for block in &witness.vertex_cover {
        let single_s = block.len() == 1 && block.is_subset(s);
        if block.is_subset(&ctx.inside) {
            rest.difference_with(block);
            if single_s {
                i.x_s.push(ctx.in1.index_of(g, block) as u32);
            } else {
                i.x_ns.push(ctx.in2.index_of(g, block) as u32);
            }
        } else if single_s {
            i.y_s.push(ctx.out1.index_of(g, block) as u32);
        } else {
            i.y_ns.push(ctx.out2.index_of(g, block) as u32);
        }
    }
    i.x_rest = ctx.in1.index_of(g, &rest) as u32;
    IndexTuple::from_items(i.items(), i.x_rest)
}

/// Whether `(y, p_y)` is a complement solution associated with `i`.
///
/// The matching conditions compare against the outside representative
/// families: `rep^1` for S-singletons and `rep^2` for blocks of `p_y`.
pub fn is_complement_solution(ctx: &NodeContext, y: &VertexSet, p_y: &[VertexSet], i: &IndexTuple) -> Result<bool> {
    let g = &ctx.inst.graph;
    let s = &ctx.inst.s;
    if !y.is_subset(&ctx.outside) {
        return Err(Error::NotInSide);
    }
    contract_partial(y, p_y, s)?;
    let y_s = y.intersection(s).to_vec();
    let s_rep: Vec<u32> = y_s.iter().map(|&v| ctx.out1.index_of(g, &VertexSet::singleton(v)) as u32).collect();
    let p_rep: Vec<u32> = p_y.iter().map(|p| ctx.out2.index_of(g, p) as u32).collect();

    let unique = |reps: &[u32], r: &u32| reps.iter().filter(|&q| q == r).count() == 1;
    if !i.y_s.iter().all(|r| unique(&s_rep, r)) || !i.y_ns.iter().all(|r| unique(&p_rep, r)) {
        return Ok(false);
    }
    let mut blocks = p_y.to_vec();
    blocks.extend(s_singletons(y, s));
    if !contracted(g, &blocks, &[], ContractMode::Full)?.is_forest() {
        return Ok(false);
    }
    // inside S-singletons of the cover meet each block at most once
    for &r in &i.x_s {
        for v in ctx.in1.rep(r as usize) {
            if p_y.iter().any(|p| g.neighbors(v).intersection_len(p) > 1) {
                return Ok(false);
            }
        }
    }
    // outside S-vertices meet each x_ns block and each block of p_y at most once
    for &v in &y_s {
        let nv = g.neighbors(v);
        let x_blocks = i.x_ns.iter().map(|&r| ctx.in2.rep(r as usize));
        if x_blocks.chain(p_y.iter()).any(|r| nv.intersection_len(r) > 1) {
            return Ok(false);
        }
    }
    // no edge between x_rest and the uncovered part of Y
    let mut uncovered = VertexSet::new();
    for (&v, r) in y_s.iter().zip(&s_rep) {
        if !i.y_s.contains(r) {
            uncovered.insert(v);
        }
    }
    for (p, r) in p_y.iter().zip(&p_rep) {
        if !i.y_ns.contains(r) {
            uncovered.union_with(p);
        }
    }
    Ok(!g.neighborhood(ctx.in1.rep(i.x_rest as usize)).intersects(&uncovered))
}

/// For a forest `G[x ∪ y]`: the vertices of `x` with at least two
/// neighbours in `y` number at most twice the maximum induced matching of
/// `G[x, y]`.
pub fn check_x2plus(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<bool> {
    let xy = x.union(y);
    if x.intersects(y) || !crate::graph::is_s_forest(g, &xy, &xy) {
        return Err(Error::Precondition("X and Y must be disjoint and induce a forest".into()));
    }
    let heavy = x.iter().filter(|&v| g.neighbors(v).intersection_len(y) >= 2).count();
    Ok(heavy <= 2 * max_induced_matching(g, x, y))
}

/// Whether `b` represents `a`: `best(a, Y) = best(b, Y)` for every subset
/// `Y` of `outside`.
pub fn check_represents(inst: &Instance, a: &SolutionTable, b: &SolutionTable, outside: &VertexSet) -> Result<bool> {
    let members = outside.to_vec();
    if members.len() > REPRESENTS_LIMIT {
        return Err(Error::SizeGuard { n: members.len(), limit: REPRESENTS_LIMIT });
    }
    Ok((0u32..1 << members.len()).into_par_iter().all(|mask| {
        let y: VertexSet = (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
        best(inst, a, &y) == best(inst, b, &y)
    }))
}
