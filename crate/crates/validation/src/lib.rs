//! Seeded instance samplers shared by the acceptance suite in
//! `tests/acceptance.rs`.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sfvs_core::{Graph, Instance, RootedLayout, VertexSet};

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).expect("edges are in range")
}

/// Graph on `n` vertices whose edges are the set bits of `mask`, in the
/// order `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edges(n, &edges).expect("edges are in range")
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, p: f64) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// Caterpillar over a random vertex order.
pub fn shuffled_caterpillar(rng: &mut ChaCha8Rng, n: usize) -> RootedLayout {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    RootedLayout::from_order(&order).expect("order is a permutation")
}

/// Random cut `(G, A)` with 4 to 12 vertices.
pub fn random_cut(rng: &mut ChaCha8Rng) -> (Graph, VertexSet) {
    let n = rng.gen_range(4..=12);
    let p = rng.gen_range(0.1..0.7);
    let g = random_graph(rng, n, p);
    let a = random_subset(rng, n, 0.5);
    (g, a)
}

/// Greedy random S-forest: vertices are offered in order and kept with
/// probability 0.8 unless they would close an S-cycle.
pub fn random_s_forest(rng: &mut ChaCha8Rng, inst: &Instance) -> VertexSet {
    let mut x = VertexSet::new();
    for v in 0..inst.n() {
        if rng.gen_bool(0.8) {
            x.insert(v);
            if !inst.is_s_forest(&x) {
                x.remove(v);
            }
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn masks_enumerate_edges_in_order() {
        let g = graph_from_mask(4, 0b100001);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn greedy_forests_are_s_forests() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 8, 0.5);
            let inst = Instance::unit(g, random_subset(&mut rng, 8, 0.5));
            assert!(inst.is_s_forest(&random_s_forest(&mut rng, &inst)));
        }
    }
}
