//! Simple undirected graphs, SFVS instances, and contracted block graphs.
//!
//! Vertices are `0..n` and keep the input order; every "lexicographically
//! smallest" rule in the crate uses that order. Blocks of a partition are
//! always ordered by their smallest vertex.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Undirected simple graph with a symmetric bit-matrix adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    names: Vec<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices named `v0..v{n-1}`.
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::with_capacity(n); n],
            names: (0..n).map(|i| format!("v{i}")).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_names(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::from_edges(names.len(), edges)?;
        g.names = names;
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange(w, n));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    /// Returns a copy with one extra vertex adjacent to `nbrs`.
    pub fn with_apex(&self, name: String, nbrs: &VertexSet) -> Self {
        let v = self.n();
        let mut g = self.clone();
        g.adj.push(nbrs.clone());
        g.names.push(name);
        for u in nbrs {
            g.adj[u].insert(v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// `N(U) = (⋃_{v∈U} N(v)) \ U`.
    pub fn neighborhood(&self, u: &VertexSet) -> VertexSet {
        let mut out = VertexSet::with_capacity(self.n());
        for v in u {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(u);
        out
    }

    /// Connected components of `G[x]`, ordered by smallest vertex.
    pub fn components(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut left = x.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp.clone();
            left.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(&left);
                left.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }
}

/// `cc_G(X)` as a block partition whose blocks are untagged S-bar blocks.
pub fn connected_components(g: &Graph, x: &VertexSet) -> BlockPartition {
    BlockPartition { blocks: g.components(x).into_iter().map(|v| Block { vertices: v, kind: BlockKind::NonS }).collect() }
}

/// A Subset Feedback Vertex Set instance `(G, S, w)`.
///
/// Weights are integers; rational weights must be pre-scaled by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub s: VertexSet,
    pub weights: Vec<i64>,
}

/// Bound on `Σ|w|` so that any sum of weights, plus the NMC apex weight,
/// stays far from overflow.
pub const WEIGHT_LIMIT: u64 = 1 << 62;

impl Instance {
    pub fn new(graph: Graph, s: VertexSet, weights: Vec<i64>) -> Result<Self> {
        let n = graph.n();
        if weights.len() != n {
            return Err(Error::WeightLength { expected: n, got: weights.len() });
        }
        if let Some(v) = s.iter().find(|&v| v >= n) {
            return Err(Error::VertexOutOfRange(v, n));
        }
        abs_weight_total(&weights)?;
        Ok(Self { graph, s, weights })
    }

    pub fn unit(graph: Graph, s: VertexSet) -> Self {
        let n = graph.n();
        Self { graph, s, weights: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn weight(&self, x: &VertexSet) -> i64 {
        x.iter().map(|v| self.weights[v]).sum()
    }

    pub fn is_s_forest(&self, x: &VertexSet) -> bool {
        is_s_forest(&self.graph, x, &self.s)
    }
}

pub(crate) fn abs_weight_total(weights: &[i64]) -> Result<u64> {
    let mut total: u64 = 0;
    for &w in weights {
        total = total.checked_add(w.unsigned_abs()).ok_or(Error::WeightOverflow)?;
        if total >= WEIGHT_LIMIT {
            return Err(Error::WeightOverflow);
        }
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockKind {
    /// `{v}` with `v ∈ S`.
    SSingleton,
    /// A block containing no vertex of `S`.
    NonS,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub vertices: VertexSet,
    pub kind: BlockKind,
}

/// Ordered list of pairwise-disjoint nonempty blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    pub blocks: Vec<Block>,
}

impl BlockPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sets(&self) -> Vec<VertexSet> {
        self.blocks.iter().map(|b| b.vertices.clone()).collect()
    }

    /// `V(𝒫)`
    pub fn support(&self) -> VertexSet {
        let mut out = VertexSet::new();
        for b in &self.blocks {
            out.union_with(&b.vertices);
        }
        out
    }

    fn sort(&mut self) {
        self.blocks.sort_by_key(|b| b.vertices.first());
    }
}

/// `X↓𝒫 = 𝒫 ∪ (X∩S choose 1)`.
///
/// `p` must partition `X \ S` exactly.
pub fn contract_partial(x: &VertexSet, p: &[VertexSet], s: &VertexSet) -> Result<BlockPartition> {
    let target = x.difference(s);
    let mut seen = VertexSet::new();
    for block in p {
        if block.is_empty() {
            return Err(Error::EmptyBlock);
        }
        if block.intersects(s) {
            return Err(Error::InvalidContraction("a block contains a vertex of S".into()));
        }
        if !block.is_subset(&target) {
            return Err(Error::InvalidContraction("a block leaves X".into()));
        }
        if block.intersects(&seen) {
            return Err(Error::InvalidContraction("blocks overlap".into()));
        }
        seen.union_with(block);
    }
    if seen != target {
        return Err(Error::InvalidContraction("blocks miss a vertex of X \\ S".into()));
    }
    let mut out = BlockPartition {
        blocks: p.iter().map(|b| Block { vertices: b.clone(), kind: BlockKind::NonS }).collect(),
    };
    out.blocks.extend(
        x.intersection(s).iter().map(|v| Block { vertices: VertexSet::singleton(v), kind: BlockKind::SSingleton }),
    );
    out.sort();
    Ok(out)
}

/// `X↓cc(X∖S)`
pub fn contract_components(g: &Graph, x: &VertexSet, s: &VertexSet) -> BlockPartition {
    let comps = g.components(&x.difference(s));
    contract_partial(x, &comps, s).expect("components partition X \\ S")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractMode {
    /// `G[𝒜 ∪ ℬ]`
    Full,
    /// `G[𝒜, ℬ]`
    Bipartite,
    /// `G[𝒜 | ℬ]`
    Mixed,
}

/// A contracted graph whose vertices ("blocks") are vertex sets of the
/// original graph. Blocks `0..split` come from the first family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockGraph {
    pub blocks: Vec<VertexSet>,
    pub split: usize,
    adj: Vec<Vec<usize>>,
}

impl BlockGraph {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn neighbors(&self, b: usize) -> &[usize] {
        &self.adj[b]
    }

    pub fn degree(&self, b: usize) -> usize {
        self.adj[b].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, ns)| ns.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.len());
        self.edges().all(|(a, b)| uf.union(a, b))
    }

    /// Connected components as lists of block indices, in order of their
    /// smallest block index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.len());
        for (a, b) in self.edges() {
            uf.union(a, b);
        }
        let mut by_root: Vec<Option<usize>> = vec![None; self.len()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for b in 0..self.len() {
            let r = uf.find(b);
            match by_root[r] {
                Some(i) => out[i].push(b),
                None => {
                    by_root[r] = Some(out.len());
                    out.push(vec![b]);
                }
            }
        }
        out
    }
}

/// Builds `G[a ∪ b]`, `G[a, b]`, or `G[a | b]`.
///
/// Two blocks `A, B` are adjacent iff `N(A) ∩ B ≠ ∅`.
pub fn contracted(g: &Graph, a: &[VertexSet], b: &[VertexSet], mode: ContractMode) -> Result<BlockGraph> {
    if a.iter().chain(b).any(VertexSet::is_empty) {
        return Err(Error::EmptyBlock);
    }
    let blocks: Vec<VertexSet> = a.iter().chain(b).cloned().collect();
    Ok(block_graph(g, blocks, a.len(), mode))
}

/// [`contracted`] without the nonempty-block check; empty blocks become
/// isolated vertices.
pub(crate) fn block_graph(g: &Graph, blocks: Vec<VertexSet>, split: usize, mode: ContractMode) -> BlockGraph {
    let nbhd: Vec<VertexSet> = blocks.iter().map(|blk| g.neighborhood(blk)).collect();
    let mut adj = vec![Vec::new(); blocks.len()];
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let (ia, ja) = (i < split, j < split);
            let allowed = match mode {
                ContractMode::Full => true,
                ContractMode::Bipartite => ia != ja,
                ContractMode::Mixed => ia || ja,
            };
            if allowed && nbhd[i].intersects(&blocks[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    BlockGraph { blocks, split, adj }
}

/// True iff no cycle of `G[x]` passes through a vertex of `s ∩ x`.
///
/// A vertex lies on a cycle iff it belongs to a biconnected component with
/// at least two edges; this checks that no such component touches `s`.
pub fn is_s_forest(g: &Graph, x: &VertexSet, s: &VertexSet) -> bool {
    let targets = s.intersection(x);
    if targets.is_empty() {
        return true;
    }
    !cyclic_vertices(g, x).intersects(&targets)
}

/// Vertices of `G[x]` that lie on some cycle.
pub fn cyclic_vertices(g: &Graph, x: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = VertexSet::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in x {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, remaining neighbors)
        let mut stack: Vec<(usize, usize, Vec<usize>)> =
            vec![(root, usize::MAX, g.neighbors(root).intersection(x).to_vec())];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(w) = top.2.pop() {
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, g.neighbors(w).intersection(x).to_vec()));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(up) = stack.last() {
                let u = up.0;
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    // (u, v) closes a biconnected component
                    let mut comp_edges = 0;
                    let mut comp = VertexSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        comp_edges += 1;
                        comp.insert(a);
                        comp.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    if comp_edges >= 2 {
                        out.union_with(&comp);
                    }
                }
            }
        }
    }
    out
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(xs: &[usize]) -> VertexSet {
        VertexSet::from_slice(xs)
    }

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(Error::VertexOutOfRange(2, 2)));
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(path3().neighborhood(&vs(&[0, 2])), vs(&[1]));
        assert!(path3().neighborhood(&VertexSet::new()).is_empty());
        assert_eq!(triangle().neighborhood(&vs(&[0])), vs(&[1, 2]));
    }

    #[test]
    fn components_examples() {
        let g = path3();
        assert_eq!(connected_components(&g, &vs(&[0, 2])).sets(), vec![vs(&[0]), vs(&[2])]);
        assert_eq!(connected_components(&g, &vs(&[0, 1, 2])).sets(), vec![vs(&[0, 1, 2])]);
        assert!(connected_components(&g, &VertexSet::new()).is_empty());
    }

    #[test]
    fn contracted_examples() {
        let g = c4();
        let full = contracted(&g, &[vs(&[0, 1]), vs(&[2]), vs(&[3])], &[], ContractMode::Full).unwrap();
        assert_eq!(full.edge_count(), 3);
        assert!(!full.is_forest());

        let bip = contracted(&g, &[vs(&[0, 1])], &[vs(&[2]), vs(&[3])], ContractMode::Bipartite).unwrap();
        assert_eq!(bip.edge_count(), 2);
        assert!(!bip.has_edge(1, 2));

        let mixed = contracted(&g, &[], &[vs(&[2]), vs(&[3])], ContractMode::Mixed).unwrap();
        assert_eq!(mixed.edge_count(), 0);

        assert_eq!(contracted(&g, &[VertexSet::new()], &[], ContractMode::Full), Err(Error::EmptyBlock));
    }

    #[test]
    fn contract_partial_examples() {
        let s = vs(&[0]);
        let p = contract_partial(&vs(&[0, 1, 2]), &[vs(&[1, 2])], &s).unwrap();
        assert_eq!(p.sets(), vec![vs(&[0]), vs(&[1, 2])]);
        assert_eq!(p.blocks[0].kind, BlockKind::SSingleton);

        let all_s = vs(&[0, 1, 2]);
        let p = contract_partial(&vs(&[0, 2]), &[], &all_s).unwrap();
        assert_eq!(p.sets(), vec![vs(&[0]), vs(&[2])]);

        assert!(contract_partial(&VertexSet::new(), &[], &s).unwrap().is_empty());
        assert!(contract_partial(&vs(&[0, 1]), &[vs(&[0, 1])], &s).is_err());
        assert!(contract_partial(&vs(&[0, 1, 2]), &[vs(&[1])], &s).is_err());
    }

    #[test]
    fn s_forest_examples() {
        let t = triangle();
        let all = t.vertices();
        assert!(!is_s_forest(&t, &all, &vs(&[0])));
        assert!(is_s_forest(&t, &all, &VertexSet::new()));

        let g = c4();
        let all = g.vertices();
        assert!(!is_s_forest(&g, &all, &all));
        assert!(is_s_forest(&g, &vs(&[0, 1, 2]), &all));
    }

    #[test]
    fn cyclic_vertices_ignores_pendant_paths() {
        // triangle 0-1-2 with a tail 2-3-4 and a separate square 5-6-7-8
        let g = Graph::from_edges(9, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (8, 5)])
            .unwrap();
        assert_eq!(cyclic_vertices(&g, &g.vertices()), vs(&[0, 1, 2, 5, 6, 7, 8]));
    }
}
