#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sfvs_core::layout::LayoutNode;
use sfvs_core::{Graph, Instance, RootedLayout, VertexSet};

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// The graph on `n` vertices whose edges are the set bits of `mask`, in
/// the order `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_subset(rng: &mut impl Rng, n: usize, p: f64) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

pub fn subsets(domain: &VertexSet) -> impl Iterator<Item = VertexSet> {
    let members = domain.to_vec();
    (0u32..1 << members.len()).map(move |m| (0..members.len()).filter(|i| m >> i & 1 == 1).map(|i| members[i]).collect())
}

/// Random rooted binary tree: repeatedly joins two random roots.
pub fn random_layout(rng: &mut impl Rng, n: usize) -> RootedLayout {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut nodes: Vec<LayoutNode> = order.iter().map(|&v| LayoutNode::Leaf(v)).collect();
    let mut roots: Vec<usize> = (0..n).collect();
    while roots.len() > 1 {
        let a = roots.swap_remove(rng.gen_range(0..roots.len()));
        let b = roots.swap_remove(rng.gen_range(0..roots.len()));
        nodes.push(LayoutNode::Internal(a, b));
        roots.push(nodes.len() - 1);
    }
    RootedLayout::from_nodes(nodes).unwrap()
}

pub fn random_instance(rng: &mut impl Rng, n: usize, p: f64, weights: (i64, i64)) -> Instance {
    let g = random_graph(rng, n, p);
    let s = random_subset(rng, n, 0.5);
    let w = (0..n).map(|_| rng.gen_range(weights.0..=weights.1)).collect();
    Instance::new(g, s, w).unwrap()
}

/// Vertices of `G[x]` on a cycle: `v` is on one iff some neighbour `u`
/// still reaches `v` after the edge `uv` is dropped.
pub fn naive_cyclic(g: &Graph, x: &VertexSet) -> VertexSet {
    x.iter()
        .filter(|&v| {
            g.neighbors(v).intersection(x).iter().any(|u| {
                let mut seen = VertexSet::singleton(u);
                let mut stack = vec![u];
                while let Some(w) = stack.pop() {
                    for z in &g.neighbors(w).intersection(x) {
                        if (w == u && z == v) || (w == v && z == u) {
                            continue;
                        }
                        if seen.insert(z) {
                            stack.push(z);
                        }
                    }
                }
                seen.contains(v)
            })
        })
        .collect()
}

pub fn naive_s_forest(g: &Graph, x: &VertexSet, s: &VertexSet) -> bool {
    !naive_cyclic(g, x).intersects(s)
}

/// Maximum-weight S-forest by listing every subset; no shared code with
/// the library oracles.
pub fn naive_best(inst: &Instance) -> i64 {
    subsets(&inst.graph.vertices())
        .filter(|x| naive_s_forest(&inst.graph, x, &inst.s))
        .map(|x| x.iter().map(|v| inst.weights[v]).sum::<i64>())
        .max()
        .unwrap()
}
