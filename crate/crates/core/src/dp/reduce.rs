//! `reduce(𝒜)`: for every index `i` and every class of `~_i`, keep one
//! partial solution of maximum weight (ties go to the lexicographically
//! smaller set).
//!
//! Enumerating `𝕀_x` and testing every `X` against every index is far too
//! slow. Instead each `X` enumerates exactly the indices it is a partial
//! solution for, together with `cc(X, i)`, and the winners are collected
//! per `(i, cc(X, i))` bucket. Both loops see the same pairs, so the result
//! is the same table.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use smallvec::SmallVec;

use super::{cc_signature, enumerate_indices, is_partial_solution, CcSignature, IndexTuple, NodeContext, VcItem};
use super::table::{PartialSolution, SolutionTable};
use crate::bitset::VertexSet;
use crate::graph::UnionFind;

/// Which indices each partial solution is bucketed under.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndexPolicy {
    /// All of `𝕀_x`.
    Full,
    /// Only indices that can arise from an actual solution `X ∪ Y`: cover
    /// items have a nonempty representative, outside S-singletons come from
    /// vertices of `S`, and every outside item touches at least two blocks
    /// of `X`.
    #[default]
    Witnessed,
}

/// Bucket key: `x_rest` followed by the groups of `cc(X, i)`, each group
/// terminated by `SEP`. The groups together list every cover item, so the
/// key determines `i` as well.
type Key = SmallVec<[u32; 16]>;

const SEP: u32 = u32::MAX;
const TAG_SHIFT: u32 = 29;

fn code(item: VcItem) -> u32 {
    let (tag, idx) = match item {
        VcItem::XNonS(r) => (0, r),
        VcItem::XS(r) => (1, r),
        VcItem::YNonS(r) => (2, r),
        VcItem::YS(r) => (3, r),
    };
    assert!(idx < 1 << TAG_SHIFT, "representative index overflow");
    tag << TAG_SHIFT | idx
}

/// An outside item that may be added to the cover.
struct YCandidate {
    item: VcItem,
    set: VertexSet,
    nbhd: VertexSet,
}

struct Prepared<'a, 'c> {
    ctx: &'c NodeContext<'a>,
    policy: IndexPolicy,
    y: Vec<YCandidate>,
}

impl<'a, 'c> Prepared<'a, 'c> {
    fn new(ctx: &'c NodeContext<'a>, policy: IndexPolicy) -> Self {
        let g = &ctx.inst.graph;
        let mut items: Vec<VcItem> = Vec::new();
        match policy {
            IndexPolicy::Full => {
                items.extend((0..ctx.out2.class_count() as u32).map(VcItem::YNonS));
                items.extend(ctx.out_singletons.iter().map(|&r| VcItem::YS(r)));
            }
            IndexPolicy::Witnessed => {
                items.extend((1..ctx.out2.class_count() as u32).map(VcItem::YNonS));
                items.extend(ctx.out_s_singletons.iter().filter(|&&r| r != 0).map(|&r| VcItem::YS(r)));
            }
        }
        let y = items
            .into_iter()
            .map(|item| {
                let set = ctx.item_set(item).clone();
                let nbhd = g.neighborhood(&set);
                YCandidate { item, set, nbhd }
            })
            .collect();
        Self { ctx, policy, y }
    }

    /// Calls `emit` once for every bucket key of `X`.
    fn keys_of(&self, x: &VertexSet, emit: &mut impl FnMut(Key)) {
        let ctx = self.ctx;
        let g = &ctx.inst.graph;
        let s = &ctx.inst.s;
        let budget = ctx.budget();

        let s_vertices = x.intersection(s).to_vec();
        let components = g.components(&x.difference(s));
        // S-vertices of X meet every component at most once
        if s_vertices.iter().any(|&v| components.iter().any(|c| g.neighbors(v).intersection_len(c) > 1)) {
            return;
        }

        let mut blocks: Vec<(VertexSet, bool)> = components.into_iter().map(|c| (c, false)).collect();
        blocks.extend(s_vertices.iter().map(|&v| (VertexSet::singleton(v), true)));
        blocks.sort_by_key(|(b, _)| b.first());
        let nblocks = blocks.len();

        let mut base = UnionFind::new(nblocks);
        for i in 0..nblocks {
            let ni = g.neighborhood(&blocks[i].0);
            for j in i + 1..nblocks {
                // components of X \ S are never adjacent to each other
                if (blocks[i].1 || blocks[j].1) && ni.intersects(&blocks[j].0) && !base.union(i, j) {
                    return;
                }
            }
        }

        // inside cover candidates: blocks whose representative is unique
        let reps: Vec<VcItem> = blocks
            .iter()
            .map(|(b, is_s)| {
                if *is_s {
                    VcItem::XS(ctx.in1.index_of(g, b) as u32)
                } else {
                    VcItem::XNonS(ctx.in2.index_of(g, b) as u32)
                }
            })
            .collect();
        let x_cands: Vec<usize> = (0..nblocks)
            .filter(|&b| reps.iter().filter(|&&r| r == reps[b]).count() == 1)
            .filter(|&b| match self.policy {
                IndexPolicy::Full => true,
                IndexPolicy::Witnessed => !ctx.item_set(reps[b]).is_empty(),
            })
            .collect();

        // every subset of inside candidates, with its x_rest
        // (sorted by size, which `YWalk::emit_all` relies on)
        let mut x_subsets: Vec<(Vec<usize>, u32)> = Vec::new();
        for k in 0..=budget.min(x_cands.len()) {
            for chosen in x_cands.iter().copied().combinations(k) {
                let mut rest = x.clone();
                for &b in &chosen {
                    rest.difference_with(&blocks[b].0);
                }
                x_subsets.push((chosen, ctx.in1.index_of(g, &rest) as u32));
            }
        }

        // outside candidates compatible with X on their own
        let y_cands: Vec<(VcItem, Vec<usize>)> = self
            .y
            .iter()
            .filter(|c| match c.item {
                VcItem::YS(_) => c.set.iter().all(|u| {
                    let nu = g.neighbors(u);
                    blocks.iter().all(|(b, is_s)| *is_s || nu.intersection_len(b) <= 1)
                }),
                _ => s_vertices.iter().all(|&v| g.neighbors(v).intersection_len(&c.set) <= 1),
            })
            .map(|c| (c.item, (0..nblocks).filter(|&b| c.nbhd.intersects(&blocks[b].0)).collect::<Vec<_>>()))
            .filter(|(_, nbrs)| self.policy == IndexPolicy::Full || nbrs.len() >= 2)
            .collect();

        let walk = YWalk { budget, reps: &reps, x_subsets: &x_subsets, y_cands: &y_cands };
        let mut chosen = Vec::new();
        walk.visit(0, &base, &mut chosen, emit);
    }
}

struct YWalk<'w> {
    budget: usize,
    reps: &'w [VcItem],
    x_subsets: &'w [(Vec<usize>, u32)],
    y_cands: &'w [(VcItem, Vec<usize>)],
}

impl YWalk<'_> {
    /// Depth-first over sets of outside items that keep `aux` a forest.
    fn visit(&self, start: usize, uf: &UnionFind, chosen: &mut Vec<usize>, emit: &mut impl FnMut(Key)) {
        self.emit_all(uf, chosen, emit);
        if chosen.len() == self.budget {
            return;
        }
        for j in start..self.y_cands.len() {
            let nbrs = &self.y_cands[j].1;
            let mut next = uf.clone();
            if nbrs.iter().skip(1).all(|&b| next.union(nbrs[0], b)) {
                chosen.push(j);
                self.visit(j + 1, &next, chosen, emit);
                chosen.pop();
            }
        }
    }

    fn emit_all(&self, uf: &UnionFind, chosen: &[usize], emit: &mut impl FnMut(Key)) {
        let mut uf = uf.clone();
        let roots: Vec<usize> = (0..self.reps.len()).map(|b| uf.find(b)).collect();
        // (group, code) for the outside part; isolated items get their own group
        let y_part: Vec<(usize, u32)> = chosen
            .iter()
            .enumerate()
            .map(|(k, &j)| {
                let (item, nbrs) = &self.y_cands[j];
                let group = nbrs.first().map_or(self.reps.len() + k, |&b| roots[b]);
                (group, code(*item))
            })
            .collect();
        let room = self.budget - chosen.len();
        for (xs, x_rest) in self.x_subsets {
            if xs.len() > room {
                break;
            }
            let mut tagged: SmallVec<[(usize, u32); 16]> = y_part.iter().copied().collect();
            tagged.extend(xs.iter().map(|&b| (roots[b], code(self.reps[b]))));
            emit(encode(*x_rest, tagged));
        }
    }
}

fn encode(x_rest: u32, mut tagged: SmallVec<[(usize, u32); 16]>) -> Key {
    tagged.sort_unstable();
    let mut groups: SmallVec<[SmallVec<[u32; 8]>; 8]> = SmallVec::new();
    let mut last = None;
    for (grp, c) in tagged {
        if last != Some(grp) {
            groups.push(SmallVec::new());
            last = Some(grp);
        }
        groups.last_mut().expect("pushed above").push(c);
    }
    for grp in &mut groups {
        grp.sort_unstable();
    }
    groups.sort_unstable();
    let mut key = Key::new();
    key.push(x_rest);
    for grp in groups {
        key.extend(grp);
        key.push(SEP);
    }
    key
}

/// Winner per bucket: (weight, position in the sorted input table).
type Buckets = HashMap<Key, (i64, usize)>;

fn offer(map: &mut Buckets, key: Key, weight: i64, pos: usize) {
    map.entry(key)
        .and_modify(|cur| {
            if weight > cur.0 || (weight == cur.0 && pos < cur.1) {
                *cur = (weight, pos);
            }
        })
        .or_insert((weight, pos));
}

/// Keeps a maximum-weight member of every `(i, cc(X, i))` bucket.
pub fn reduce(ctx: &NodeContext, table: &SolutionTable, policy: IndexPolicy) -> SolutionTable {
    let prep = Prepared::new(ctx, policy);
    let buckets = table
        .solutions
        .par_iter()
        .enumerate()
        .fold(Buckets::new, |mut map, (pos, sol)| {
            prep.keys_of(&sol.vertices, &mut |key| offer(&mut map, key, sol.weight, pos));
            map
        })
        .reduce(Buckets::new, |a, b| if a.len() >= b.len() { merge_buckets(a, b) } else { merge_buckets(b, a) });
    winners(table, buckets.into_values().map(|(_, p)| p))
}

fn merge_buckets(mut a: Buckets, b: Buckets) -> Buckets {
    for (k, (w, p)) in b {
        offer(&mut a, k, w, p);
    }
    a
}

fn winners(table: &SolutionTable, positions: impl Iterator<Item = usize>) -> SolutionTable {
    let mut keep: Vec<usize> = positions.collect();
    keep.sort_unstable();
    keep.dedup();
    let sols: Vec<PartialSolution> = keep.into_iter().map(|p| table.solutions[p].clone()).collect();
    SolutionTable::new(table.domain.clone(), sols)
}

/// The same reduction computed index by index straight from the
/// definitions, over all of `𝕀_x`. Exponentially slower; for testing.
pub fn reduce_by_index_stream(ctx: &NodeContext, table: &SolutionTable) -> SolutionTable {
    let mut keep: Vec<usize> = Vec::new();
    for i in enumerate_indices(ctx) {
        let mut buckets: HashMap<CcSignature, (i64, usize)> = HashMap::new();
        for (pos, sol) in table.solutions.iter().enumerate() {
            if !is_partial_solution(ctx, &sol.vertices, &i) {
                continue;
            }
            let sig = cc_signature(ctx, &sol.vertices, &i).expect("checked above");
            buckets
                .entry(sig)
                .and_modify(|cur| {
                    if sol.weight > cur.0 {
                        *cur = (sol.weight, pos);
                    }
                })
                .or_insert((sol.weight, pos));
        }
        keep.extend(buckets.into_values().map(|(_, p)| p));
    }
    winners(table, keep.into_iter())
}

/// Every `(i, cc(X, i))` bucket `X` is filed under by [`reduce`], sorted.
pub fn index_buckets(ctx: &NodeContext, x: &VertexSet, policy: IndexPolicy) -> Vec<(IndexTuple, CcSignature)> {
    let prep = Prepared::new(ctx, policy);
    let mut out = Vec::new();
    prep.keys_of(x, &mut |key| out.push(decode(&key)));
    out.sort();
    out
}

fn decode(key: &[u32]) -> (IndexTuple, CcSignature) {
    let item = |c: u32| {
        let idx = c & ((1 << TAG_SHIFT) - 1);
        match c >> TAG_SHIFT {
            0 => VcItem::XNonS(idx),
            1 => VcItem::XS(idx),
            2 => VcItem::YNonS(idx),
            _ => VcItem::YS(idx),
        }
    };
    let groups: Vec<Vec<VcItem>> =
        key[1..].split(|&c| c == SEP).filter(|g| !g.is_empty()).map(|g| g.iter().map(|&c| item(c)).collect()).collect();
    let i = IndexTuple::from_items(groups.iter().flatten().copied(), key[0]);
    (i, CcSignature::from_groups(groups))
}
