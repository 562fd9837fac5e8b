use std::cmp::Ordering;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Instance;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialSolution {
    pub vertices: VertexSet,
    pub weight: i64,
}

impl PartialSolution {
    pub fn new(inst: &Instance, vertices: VertexSet) -> Self {
        let weight = inst.weight(&vertices);
        Self { vertices, weight }
    }

    /// Preference order used whenever one solution must be picked among
    /// several: heavier first, then lexicographically smaller.
    pub fn preference(&self, other: &Self) -> Ordering {
        other.weight.cmp(&self.weight).then_with(|| self.vertices.lex_cmp(&other.vertices))
    }
}

/// A family of subsets of `domain`, sorted lexicographically, no duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionTable {
    pub domain: VertexSet,
    pub solutions: Vec<PartialSolution>,
}

impl SolutionTable {
    pub fn new(domain: VertexSet, mut solutions: Vec<PartialSolution>) -> Self {
        solutions.sort_by(|a, b| a.vertices.lex_cmp(&b.vertices));
        solutions.dedup_by(|a, b| a.vertices == b.vertices);
        Self { domain, solutions }
    }

    /// `{∅, {v}}`
    pub fn leaf(inst: &Instance, v: usize) -> Self {
        let sols = vec![PartialSolution::new(inst, VertexSet::new()), PartialSolution::new(inst, VertexSet::singleton(v))];
        Self::new(VertexSet::singleton(v), sols)
    }

    /// Every subset of `domain`; for tests and oracles on small domains.
    pub fn all_subsets(inst: &Instance, domain: &VertexSet) -> Self {
        let members = domain.to_vec();
        assert!(members.len() < 32, "domain too large to enumerate");
        let sols = (0u32..1 << members.len())
            .map(|mask| {
                let set: VertexSet = (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
                PartialSolution::new(inst, set)
            })
            .collect();
        Self::new(domain.clone(), sols)
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn sets(&self) -> impl Iterator<Item = &VertexSet> + '_ {
        self.solutions.iter().map(|s| &s.vertices)
    }

    pub fn contains(&self, x: &VertexSet) -> bool {
        self.solutions.binary_search_by(|s| s.vertices.lex_cmp(x)).is_ok()
    }
}

/// `𝒜 ⊗ ℬ = {X ∪ W}` over tables on disjoint domains.
pub fn merge(a: &SolutionTable, b: &SolutionTable) -> Result<SolutionTable> {
    if a.domain.intersects(&b.domain) {
        return Err(Error::OverlappingTables);
    }
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in &a.solutions {
        for w in &b.solutions {
            out.push(PartialSolution { vertices: x.vertices.union(&w.vertices), weight: x.weight + w.weight });
        }
    }
    Ok(SolutionTable::new(a.domain.union(&b.domain), out))
}

/// `best(𝒜, Y)`: the largest weight of `X ∈ 𝒜` with `X ∪ Y` an S-forest,
/// or `None` when there is no such `X`.
pub fn best(inst: &Instance, a: &SolutionTable, y: &VertexSet) -> Option<i64> {
    a.solutions
        .iter()
        .filter(|x| inst.is_s_forest(&x.vertices.union(y)))
        .map(|x| x.weight)
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn vs(xs: &[usize]) -> VertexSet {
        VertexSet::from_slice(xs)
    }

    #[test]
    fn merge_leaves() {
        let inst = Instance::new(Graph::new(2), VertexSet::new(), vec![3, -1]).unwrap();
        let m = merge(&SolutionTable::leaf(&inst, 0), &SolutionTable::leaf(&inst, 1)).unwrap();
        let sets: Vec<_> = m.sets().cloned().collect();
        assert_eq!(sets, vec![vs(&[]), vs(&[0]), vs(&[0, 1]), vs(&[1])]);
        let w: Vec<i64> = m.solutions.iter().map(|s| s.weight).collect();
        assert_eq!(w, vec![0, 3, 2, -1]);
        assert_eq!(merge(&m, &SolutionTable::leaf(&inst, 1)), Err(Error::OverlappingTables));
    }

    #[test]
    fn best_on_a_triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = Instance::new(g, vs(&[0]), vec![5, 1, 1]).unwrap();
        let all = SolutionTable::all_subsets(&inst, &vs(&[0, 1]));
        assert_eq!(best(&inst, &all, &vs(&[])), Some(6));
        // with 2 forced in, {0,1} closes the triangle through S
        assert_eq!(best(&inst, &all, &vs(&[2])), Some(5));
        let only_full = SolutionTable::new(vs(&[0, 1]), vec![PartialSolution::new(&inst, vs(&[0, 1]))]);
        assert_eq!(best(&inst, &only_full, &vs(&[2])), None);
        let empty = SolutionTable::new(vs(&[0]), vec![]);
        assert_eq!(best(&inst, &empty, &vs(&[])), None);
    }
}
