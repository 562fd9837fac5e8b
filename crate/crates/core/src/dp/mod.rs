//! Representative-set dynamic programming for Subset Feedback Vertex Set.
//!
//! Every node `x` of a rooted layout keeps a table of partial solutions
//! `𝒜_x ⊆ 2^{V_x}`. Tables are built bottom-up by merging the children's
//! tables and pruning with [`reduce`], which keeps, for every index `i` and
//! every class of `i`-equivalent partial solutions, one of maximum weight.
//!
//! An index is a tuple of representatives describing a candidate vertex
//! cover of the contracted cut graph:
//!
//! * `x_ns`: 2-neighbor representatives (over `V_x`) of S-bar components,
//! * `x_s`: 1-neighbor representatives (over `V_x`) of S-singletons,
//! * `x_rest`: 1-neighbor representative of everything not in the cover,
//! * `y_ns`, `y_s`: the same for the outside of the cut.
//!
//! The four cover parts together hold at most `4·mim(V_x)` items.

mod index;
mod partial;
mod reduce;
mod solve;
mod table;

pub use index::{enumerate_indices, index_count, size_bound};
pub use partial::{aux_graph, cc_signature, is_partial_solution};
pub use reduce::{index_buckets, reduce, reduce_by_index_stream, IndexPolicy};
pub use solve::{solve, solve_with, NodeTrace, Solution, SolveOptions};
pub use table::{best, merge, PartialSolution, SolutionTable};

use crate::bitset::VertexSet;
use crate::graph::Instance;
use crate::layout::mim_cut;
use crate::nec::NecFamily;

/// Everything the DP needs to know about one cut `(V_x, V \ V_x)`.
#[derive(Clone, Debug)]
pub struct NodeContext<'a> {
    pub inst: &'a Instance,
    pub inside: VertexSet,
    pub outside: VertexSet,
    pub mim: usize,
    /// `Rep^1_{V_x}`
    pub in1: NecFamily,
    /// `Rep^2_{V_x}`
    pub in2: NecFamily,
    /// `Rep^1` of the outside
    pub out1: NecFamily,
    /// `Rep^2` of the outside
    pub out2: NecFamily,
    /// Distinct `rep^1_{V_x}({v})` over `v ∈ V_x`, as indices into `in1`.
    pub in_singletons: Vec<u32>,
    /// Distinct outside `rep^1({v})`, as indices into `out1`.
    pub out_singletons: Vec<u32>,
    /// Like `out_singletons`, restricted to outside vertices of `S`.
    pub out_s_singletons: Vec<u32>,
}

impl<'a> NodeContext<'a> {
    /// Builds the context, computing `mim(V_x)` exactly.
    pub fn new(inst: &'a Instance, inside: VertexSet) -> Self {
        let mim = mim_cut(&inst.graph, &inside);
        Self::with_mim(inst, inside, mim)
    }

    pub fn with_mim(inst: &'a Instance, inside: VertexSet, mim: usize) -> Self {
        let g = &inst.graph;
        let outside = inside.complement(g.n());
        let in1 = NecFamily::compute(g, &inside, 1);
        let in2 = NecFamily::compute(g, &inside, 2);
        let out1 = NecFamily::compute(g, &outside, 1);
        let out2 = NecFamily::compute(g, &outside, 2);
        let singles = |fam: &NecFamily, set: &VertexSet| {
            let mut v: Vec<u32> = set.iter().map(|u| fam.index_of(g, &VertexSet::singleton(u)) as u32).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let in_singletons = singles(&in1, &inside);
        let out_singletons = singles(&out1, &outside);
        let out_s_singletons = singles(&out1, &outside.intersection(&inst.s));
        Self { inst, inside, outside, mim, in1, in2, out1, out2, in_singletons, out_singletons, out_s_singletons }
    }

    /// Maximum number of cover items in an index: `4·mim(V_x)`.
    pub fn budget(&self) -> usize {
        4 * self.mim
    }

    /// The vertex set an item stands for.
    pub fn item_set(&self, item: VcItem) -> &VertexSet {
        match item {
            VcItem::XNonS(r) => self.in2.rep(r as usize),
            VcItem::XS(r) => self.in1.rep(r as usize),
            VcItem::YNonS(r) => self.out2.rep(r as usize),
            VcItem::YS(r) => self.out1.rep(r as usize),
        }
    }
}

/// One representative in the cover part of an index, tagged by the
/// component of the tuple it belongs to. The payload indexes the matching
/// representative family of the [`NodeContext`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VcItem {
    XNonS(u32),
    XS(u32),
    YNonS(u32),
    YS(u32),
}

impl VcItem {
    pub fn is_inside(self) -> bool {
        matches!(self, VcItem::XNonS(_) | VcItem::XS(_))
    }
}

/// An index `(x_ns, x_s, x_rest, y_ns, y_s)`; the vectors are sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple {
    pub x_ns: Vec<u32>,
    pub x_s: Vec<u32>,
    pub x_rest: u32,
    pub y_ns: Vec<u32>,
    pub y_s: Vec<u32>,
}

impl IndexTuple {
    pub fn from_items(items: impl IntoIterator<Item = VcItem>, x_rest: u32) -> Self {
        let mut i = IndexTuple { x_rest, ..Default::default() };
        for item in items {
            match item {
                VcItem::XNonS(r) => i.x_ns.push(r),
                VcItem::XS(r) => i.x_s.push(r),
                VcItem::YNonS(r) => i.y_ns.push(r),
                VcItem::YS(r) => i.y_s.push(r),
            }
        }
        for v in [&mut i.x_ns, &mut i.x_s, &mut i.y_ns, &mut i.y_s] {
            v.sort_unstable();
            v.dedup();
        }
        i
    }

    /// Cover items in canonical order.
    pub fn items(&self) -> Vec<VcItem> {
        let mut out: Vec<VcItem> = self.x_ns.iter().map(|&r| VcItem::XNonS(r)).collect();
        out.extend(self.x_s.iter().map(|&r| VcItem::XS(r)));
        out.extend(self.y_ns.iter().map(|&r| VcItem::YNonS(r)));
        out.extend(self.y_s.iter().map(|&r| VcItem::YS(r)));
        out
    }

    pub fn vc_size(&self) -> usize {
        self.x_ns.len() + self.x_s.len() + self.y_ns.len() + self.y_s.len()
    }

    pub fn y_items(&self) -> Vec<VcItem> {
        self.items().into_iter().filter(|it| !it.is_inside()).collect()
    }
}

/// `cc(X, i)`: the cover items grouped by connected component of
/// `aux(X, i)`. Groups are sorted and components without cover items are
/// dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CcSignature(pub Vec<Vec<VcItem>>);

impl CcSignature {
    pub fn from_groups(mut groups: Vec<Vec<VcItem>>) -> Self {
        groups.retain(|g| !g.is_empty());
        for g in &mut groups {
            g.sort_unstable();
        }
        groups.sort_unstable();
        Self(groups)
    }
}
