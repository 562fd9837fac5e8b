//! d-neighbor equivalence over one side of a cut.
//!
//! `X ≡_A^d Y` iff every `u ∉ A` sees the same number of neighbours in `X`
//! and in `Y`, counted up to `d`. Each class has a canonical representative:
//! the smallest member by size, then lexicographically.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use smallvec::SmallVec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Signature of a subset of `A`: `min(d, |X ∩ N(u)|)` for every `u ∉ A`,
/// bit-packed in the id order of the outside vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NeighborKey(SmallVec<[u64; 2]>);

/// Keys are computed against a fixed side `A` and depth `d`.
#[derive(Clone, Debug)]
struct KeyMaker {
    outside: Vec<usize>,
    d: usize,
    bits: usize,
}

impl KeyMaker {
    fn new(g: &Graph, side: &VertexSet, d: usize) -> Self {
        let bits = (usize::BITS - d.leading_zeros()) as usize;
        Self { outside: side.complement(g.n()).to_vec(), d, bits }
    }

    fn key(&self, g: &Graph, x: &VertexSet) -> NeighborKey {
        let total = self.outside.len() * self.bits;
        let mut words: SmallVec<[u64; 2]> = SmallVec::from_elem(0, total.div_ceil(64));
        for (i, &u) in self.outside.iter().enumerate() {
            let c = g.neighbors(u).intersection_len(x).min(self.d) as u64;
            if c != 0 {
                let pos = i * self.bits;
                words[pos / 64] |= c << (pos % 64);
            }
        }
        NeighborKey(words)
    }
}

/// `Rep_A^d` with a lookup from signatures to representatives.
#[derive(Clone, Debug)]
pub struct NecFamily {
    side: VertexSet,
    keys: KeyMaker,
    reps: Vec<VertexSet>,
    lookup: HashMap<NeighborKey, u32>,
}

impl NecFamily {
    /// Enumerates the classes of `≡_A^d` breadth-first from `∅`.
    ///
    /// Level `k` holds the representatives of size `k`. Its candidates are
    /// `R ∪ {v}` for representatives `R` of level `k-1` and `v ∈ A \ R`,
    /// visited in lexicographic order; the first candidate seen with a new
    /// key becomes that class's representative.
    pub fn compute(g: &Graph, a: &VertexSet, d: usize) -> Self {
        assert!(d >= 1, "depth must be positive");
        let keys = KeyMaker::new(g, a, d);
        let mut reps = vec![VertexSet::new()];
        let mut lookup = HashMap::new();
        lookup.insert(keys.key(g, &VertexSet::new()), 0u32);
        let members = a.to_vec();
        let mut level = vec![VertexSet::new()];
        while !level.is_empty() {
            let mut candidates: Vec<VertexSet> = level
                .iter()
                .flat_map(|r| {
                    members.iter().filter(|&&v| !r.contains(v)).map(move |&v| {
                        let mut c = r.clone();
                        c.insert(v);
                        c
                    })
                })
                .collect();
            candidates.sort();
            candidates.dedup();
            let mut next = Vec::new();
            for c in candidates {
                let k = keys.key(g, &c);
                if let Entry::Vacant(slot) = lookup.entry(k) {
                    slot.insert(reps.len() as u32);
                    reps.push(c.clone());
                    next.push(c);
                }
            }
            level = next;
        }
        Self { side: a.clone(), keys, reps, lookup }
    }

    pub fn side(&self) -> &VertexSet {
        &self.side
    }

    pub fn depth(&self) -> usize {
        self.keys.d
    }

    /// `Rep_A^d`, in discovery order (so `reps()[0]` is `∅`).
    pub fn reps(&self) -> &[VertexSet] {
        &self.reps
    }

    pub fn rep(&self, idx: usize) -> &VertexSet {
        &self.reps[idx]
    }

    /// `nec_d(A)`
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn key(&self, g: &Graph, x: &VertexSet) -> NeighborKey {
        self.keys.key(g, x)
    }

    /// Index of `rep_A^d(x)` in [`Self::reps`]. `x` must lie inside `A`.
    pub fn index_of(&self, g: &Graph, x: &VertexSet) -> usize {
        debug_assert!(x.is_subset(&self.side));
        self.lookup[&self.keys.key(g, x)] as usize
    }

    /// `rep_A^d(x)`
    pub fn rep_of(&self, g: &Graph, x: &VertexSet) -> Result<&VertexSet> {
        if !x.is_subset(&self.side) {
            return Err(Error::NotInSide);
        }
        Ok(&self.reps[self.index_of(g, x)])
    }
}

/// `x ≡_a^d y`
pub fn same_class(g: &Graph, a: &VertexSet, d: usize, x: &VertexSet, y: &VertexSet) -> bool {
    let keys = KeyMaker::new(g, a, d);
    keys.key(g, x) == keys.key(g, y)
}
