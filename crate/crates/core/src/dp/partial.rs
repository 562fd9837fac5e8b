//! Direct, unoptimised evaluation of the partial-solution conditions and of
//! `cc(X, i)`. The reduction in `reduce.rs` computes the same things
//! incrementally; these functions are the reference it is tested against.

use super::{CcSignature, IndexTuple, NodeContext, VcItem};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{block_graph, BlockGraph, ContractMode};

/// The pieces of `X ⊆ V_x` the conditions talk about.
struct Pieces {
    /// `X ∩ S`, one vertex each
    s_vertices: Vec<usize>,
    /// `cc(X \ S)`
    components: Vec<VertexSet>,
}

fn pieces(ctx: &NodeContext, x: &VertexSet) -> Pieces {
    let s_vertices = x.intersection(&ctx.inst.s).to_vec();
    let components = ctx.inst.graph.components(&x.difference(&ctx.inst.s));
    Pieces { s_vertices, components }
}

/// `aux(X, i) = G[X↓cc(X∖S) | y_ns ∪ y_s]`.
///
/// Blocks `0..split` are the contracted blocks of `X` (ordered by smallest
/// vertex); the remaining blocks are the items of `i.y_items()` in order.
pub fn aux_graph(ctx: &NodeContext, x: &VertexSet, i: &IndexTuple) -> BlockGraph {
    let mut blocks = x_blocks(ctx, x);
    let split = blocks.len();
    blocks.extend(i.y_items().into_iter().map(|it| ctx.item_set(it).clone()));
    block_graph(&ctx.inst.graph, blocks, split, ContractMode::Mixed)
}

fn x_blocks(ctx: &NodeContext, x: &VertexSet) -> Vec<VertexSet> {
    let p = pieces(ctx, x);
    let mut blocks: Vec<VertexSet> = p.components;
    blocks.extend(p.s_vertices.iter().map(|&v| VertexSet::singleton(v)));
    blocks.sort_by_key(VertexSet::first);
    blocks
}

/// Whether `X` is a partial solution associated with `i`.
pub fn is_partial_solution(ctx: &NodeContext, x: &VertexSet, i: &IndexTuple) -> bool {
    let g = &ctx.inst.graph;
    if !x.is_subset(&ctx.inside) || i.vc_size() > ctx.budget() {
        return false;
    }
    let p = pieces(ctx, x);
    let s_rep: Vec<u32> = p.s_vertices.iter().map(|&v| ctx.in1.index_of(g, &VertexSet::singleton(v)) as u32).collect();
    let c_rep: Vec<u32> = p.components.iter().map(|c| ctx.in2.index_of(g, c) as u32).collect();

    // each x_s item names exactly one S-vertex of X
    if i.x_s.iter().any(|r| s_rep.iter().filter(|&q| q == r).count() != 1) {
        return false;
    }
    // each x_ns item names exactly one component of X \ S
    if i.x_ns.iter().any(|r| c_rep.iter().filter(|&q| q == r).count() != 1) {
        return false;
    }
    if !aux_graph(ctx, x, i).is_forest() {
        return false;
    }
    // outside S-singletons see each component at most once
    for &r in &i.y_s {
        for u in ctx.out1.rep(r as usize) {
            if p.components.iter().any(|c| g.neighbors(u).intersection_len(c) > 1) {
                return false;
            }
        }
    }
    // S-vertices of X see each y_ns block and each component at most once
    for &v in &p.s_vertices {
        let nv = g.neighbors(v);
        let y_blocks = i.y_ns.iter().map(|&r| ctx.out2.rep(r as usize));
        if y_blocks.chain(p.components.iter()).any(|u| nv.intersection_len(u) > 1) {
            return false;
        }
    }
    // x_rest represents X minus the cover blocks
    let mut rest = x.clone();
    for (&v, r) in p.s_vertices.iter().zip(&s_rep) {
        if i.x_s.contains(r) {
            rest.remove(v);
        }
    }
    for (c, r) in p.components.iter().zip(&c_rep) {
        if i.x_ns.contains(r) {
            rest.difference_with(c);
        }
    }
    ctx.in1.index_of(g, &rest) as u32 == i.x_rest
}

/// `cc(X, i)`: cover items grouped by the component of `aux(X, i)` that
/// holds them. Errors if `X` is not a partial solution for `i`.
pub fn cc_signature(ctx: &NodeContext, x: &VertexSet, i: &IndexTuple) -> Result<CcSignature> {
    if !is_partial_solution(ctx, x, i) {
        return Err(Error::Precondition("not a partial solution for this index".into()));
    }
    let g = &ctx.inst.graph;
    let aux = aux_graph(ctx, x, i);
    let y_items = i.y_items();
    let item_of = |b: usize| -> Option<VcItem> {
        if b >= aux.split {
            return Some(y_items[b - aux.split]);
        }
        let blk = &aux.blocks[b];
        let v = blk.first().expect("blocks are nonempty");
        if ctx.inst.s.contains(v) {
            let r = ctx.in1.index_of(g, blk) as u32;
            i.x_s.contains(&r).then_some(VcItem::XS(r))
        } else {
            let r = ctx.in2.index_of(g, blk) as u32;
            i.x_ns.contains(&r).then_some(VcItem::XNonS(r))
        }
    };
    let groups = aux.components().into_iter().map(|comp| comp.into_iter().filter_map(item_of).collect()).collect();
    Ok(CcSignature::from_groups(groups))
}
