use super::reduce::{reduce, IndexPolicy};
use super::table::{merge, SolutionTable};
use super::{index_count, NodeContext};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::layout::{LayoutNode, RootedLayout};

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    pub policy: IndexPolicy,
    /// Keep every node's tables in the returned trace.
    pub trace: bool,
}

/// A maximum-weight S-forest and its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub sforest: VertexSet,
    pub sforest_weight: i64,
    pub deletion: VertexSet,
    pub deletion_weight: i64,
}

impl Solution {
    fn from_forest(inst: &Instance, sforest: VertexSet) -> Self {
        let deletion = sforest.complement(inst.n());
        Self {
            sforest_weight: inst.weight(&sforest),
            deletion_weight: inst.weight(&deletion),
            sforest,
            deletion,
        }
    }
}

/// Per-node record of one run.
#[derive(Clone, Debug)]
pub struct NodeTrace {
    pub node: usize,
    pub inside: VertexSet,
    pub mim: usize,
    pub index_count: u128,
    /// `merge` of the children's tables, or `{∅, {v}}` at a leaf.
    pub merged: SolutionTable,
    /// The table kept at this node.
    pub reduced: SolutionTable,
}

/// Maximum-weight S-forest of `inst` along `layout`.
pub fn solve(inst: &Instance, layout: &RootedLayout) -> Result<Solution> {
    solve_with(inst, layout, SolveOptions::default()).map(|(s, _)| s)
}

/// [`solve`] with options; the trace is empty unless `opts.trace` is set.
pub fn solve_with(inst: &Instance, layout: &RootedLayout, opts: SolveOptions) -> Result<(Solution, Vec<NodeTrace>)> {
    layout.check_graph(&inst.graph)?;
    let sets = layout.vertex_sets();
    let mut tables: Vec<Option<SolutionTable>> = vec![None; layout.node_count()];
    let mut trace = Vec::new();
    for node in 0..layout.node_count() {
        let merged = match layout.node(node)? {
            LayoutNode::Leaf(v) => SolutionTable::leaf(inst, v),
            LayoutNode::Internal(a, b) => {
                let ta = tables[a].take().ok_or(Error::Internal("child table missing".into()))?;
                let tb = tables[b].take().ok_or(Error::Internal("child table missing".into()))?;
                merge(&ta, &tb)?
            }
        };
        // leaves are reduced too, so the size bound holds at every node
        let ctx = NodeContext::new(inst, sets[node].clone());
        let reduced = reduce(&ctx, &merged, opts.policy);
        if opts.trace {
            trace.push(NodeTrace {
                node,
                inside: sets[node].clone(),
                mim: ctx.mim,
                index_count: index_count(&ctx),
                merged,
                reduced: reduced.clone(),
            });
        }
        tables[node] = Some(reduced);
    }
    let root = tables[layout.root()].take().ok_or(Error::Internal("root table missing".into()))?;
    let best = root
        .solutions
        .iter()
        .filter(|x| inst.is_s_forest(&x.vertices))
        .min_by(|a, b| a.preference(b))
        .ok_or(Error::Internal("root table holds no S-forest".into()))?;
    Ok((Solution::from_forest(inst, best.vertices.clone()), trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn triangle_with_heavy_s_vertex() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = Instance::new(g, VertexSet::from_slice(&[0]), vec![5, 2, 3]).unwrap();
        let l = RootedLayout::caterpillar(3).unwrap();
        let sol = solve(&inst, &l).unwrap();
        assert_eq!(sol.sforest, VertexSet::from_slice(&[0, 2]));
        assert_eq!(sol.sforest_weight, 8);
        assert_eq!(sol.deletion_weight, 2);
    }

    #[test]
    fn single_vertex() {
        let inst = Instance::unit(Graph::new(1), VertexSet::from_slice(&[0]));
        let sol = solve(&inst, &RootedLayout::caterpillar(1).unwrap()).unwrap();
        assert_eq!(sol.sforest_weight, 1);
        assert!(sol.deletion.is_empty());
    }

    #[test]
    fn trace_records_every_node() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let inst = Instance::unit(g, VertexSet::from_slice(&[0]));
        let l = RootedLayout::caterpillar(4).unwrap();
        let (sol, trace) = solve_with(&inst, &l, SolveOptions { trace: true, ..Default::default() }).unwrap();
        assert_eq!(trace.len(), l.node_count());
        assert_eq!(sol.sforest_weight, 3);
        let root = trace.last().unwrap();
        assert_eq!(root.mim, 0);
        assert_eq!(root.reduced.len(), 1);
    }
}
