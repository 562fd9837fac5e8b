use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Gf2,
    Rational,
}

/// Rank of `M_{A, V\A}` over the chosen field.
pub fn cut_rank(g: &Graph, a: &VertexSet, field: Field) -> usize {
    let outside = a.complement(g.n());
    let cols = outside.to_vec();
    let rows: Vec<Vec<bool>> = a
        .iter()
        .map(|v| cols.iter().map(|&u| g.has_edge(v, u)).collect())
        .collect();
    match field {
        Field::Gf2 => gf2_rank(&rows),
        Field::Rational => rational_rank(&rows),
    }
}

/// GF(2) rank by XOR-basis insertion on packed 64-bit words.
pub fn gf2_rank(rows: &[Vec<bool>]) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let words = width.div_ceil(64);
    // basis[i] has its leading bit at pivot[i]
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        let mut packed = vec![0u64; words];
        for (j, &b) in row.iter().enumerate() {
            if b {
                packed[j / 64] |= 1 << (j % 64);
            }
        }
        for (vec, &p) in basis.iter().zip(&pivots) {
            if packed[p / 64] >> (p % 64) & 1 == 1 {
                for (x, y) in packed.iter_mut().zip(vec) {
                    *x ^= y;
                }
            }
        }
        if let Some(p) = lowest_bit(&packed) {
            basis.push(packed);
            pivots.push(p);
        }
    }
    basis.len()
}

fn lowest_bit(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over ℚ by exact Gaussian elimination on big rationals.
pub fn rational_rank(rows: &[Vec<bool>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&b| if b { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            let (top, bottom) = m.split_at_mut(r);
            for (cell, above) in bottom[0][col..width].iter_mut().zip(&top[rank][col..width]) {
                *cell -= &factor * above;
            }
        }
        rank += 1;
    }
    rank
}
