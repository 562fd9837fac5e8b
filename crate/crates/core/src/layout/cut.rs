use std::collections::HashSet;

use rayon::prelude::*;

use super::{cut_rank, mim_cut, Field, RootedLayout};
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WidthKind {
    Gf2,
    Rational,
    Mim,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeCut {
    pub node: usize,
    pub vertices: VertexSet,
    pub rw: usize,
    pub rw_q: usize,
    pub mim: usize,
}

/// The three cut functions evaluated at every node of a layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub nodes: Vec<NodeCut>,
}

impl CutReport {
    pub fn width(&self, kind: WidthKind) -> usize {
        self.nodes
            .iter()
            .map(|c| match kind {
                WidthKind::Gf2 => c.rw,
                WidthKind::Rational => c.rw_q,
                WidthKind::Mim => c.mim,
            })
            .max()
            .unwrap_or(0)
    }
}

/// Layout width for `kind`, plus the per-node report for all three.
pub fn width(g: &Graph, l: &RootedLayout, kind: WidthKind) -> Result<(usize, CutReport)> {
    l.check_graph(g)?;
    let nodes = l
        .vertex_sets()
        .into_par_iter()
        .enumerate()
        .map(|(node, vertices)| NodeCut {
            node,
            rw: cut_rank(g, &vertices, Field::Gf2),
            rw_q: cut_rank(g, &vertices, Field::Rational),
            mim: mim_cut(g, &vertices),
            vertices,
        })
        .collect();
    let report = CutReport { nodes };
    Ok((report.width(kind), report))
}

/// Number of distinct rows of `M_{A, V\A}`.
pub fn distinct_external_neighborhoods(g: &Graph, a: &VertexSet) -> usize {
    let outside = a.complement(g.n());
    a.iter().map(|v| g.neighbors(v).intersection(&outside)).collect::<HashSet<_>>().len()
}
