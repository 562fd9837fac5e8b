use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// `mim(A)`: maximum induced matching of the bipartite cut graph `G[A, V\A]`.
pub fn mim_cut(g: &Graph, a: &VertexSet) -> usize {
    max_induced_matching(g, a, &a.complement(g.n()))
}

/// Maximum induced matching of `G[left, right]` for disjoint `left`, `right`.
///
/// Exact and exponential in the worst case. Branches on the left endpoint of
/// the lexicographically first remaining edge (unmatched, or matched to each
/// of its neighbours in turn), memoised on the remaining vertex set; a branch
/// loop stops once it reaches the maximum-matching upper bound.
pub fn max_induced_matching(g: &Graph, left: &VertexSet, right: &VertexSet) -> usize {
    let mut solver = Mim { g, left, right, memo: HashMap::new() };
    solver.solve(&left.union(right))
}

struct Mim<'a> {
    g: &'a Graph,
    left: &'a VertexSet,
    right: &'a VertexSet,
    memo: HashMap<VertexSet, usize>,
}

impl Mim<'_> {
    fn cross_nbrs(&self, v: usize, alive: &VertexSet) -> VertexSet {
        let side = if self.left.contains(v) { self.right } else { self.left };
        let mut out = self.g.neighbors(v).intersection(side);
        out.intersect_with(alive);
        out
    }

    fn solve(&mut self, alive: &VertexSet) -> usize {
        let Some(a) = alive
            .intersection(self.left)
            .iter()
            .find(|&v| self.g.neighbors(v).intersects(&alive.intersection(self.right)))
        else {
            return 0;
        };
        if let Some(&hit) = self.memo.get(alive) {
            return hit;
        }
        let bound = self.matching_bound(alive);
        let mut without_a = alive.clone();
        without_a.remove(a);
        let mut best = self.solve(&without_a);
        let partners = self.cross_nbrs(a, alive);
        for b in &partners {
            if best >= bound {
                break;
            }
            let mut rest = alive.clone();
            rest.difference_with(&partners);
            rest.difference_with(&self.cross_nbrs(b, alive));
            rest.remove(a);
            rest.remove(b);
            best = best.max(1 + self.solve(&rest));
        }
        self.memo.insert(alive.clone(), best);
        best
    }

    /// Maximum matching size of the remaining cut graph (Kuhn's algorithm).
    fn matching_bound(&self, alive: &VertexSet) -> usize {
        let lefts: Vec<usize> = alive.intersection(self.left).to_vec();
        let mut mate: HashMap<usize, usize> = HashMap::new();
        let mut size = 0;
        for &u in &lefts {
            let mut seen = VertexSet::new();
            if self.augment(u, alive, &mut seen, &mut mate) {
                size += 1;
            }
        }
        size
    }

    fn augment(&self, u: usize, alive: &VertexSet, seen: &mut VertexSet, mate: &mut HashMap<usize, usize>) -> bool {
        for w in &self.cross_nbrs(u, alive) {
            if !seen.insert(w) {
                continue;
            }
            let free = match mate.get(&w) {
                None => true,
                Some(&m) => self.augment(m, alive, seen, mate),
            };
            if free {
                mate.insert(w, u);
                return true;
            }
        }
        false
    }
}
