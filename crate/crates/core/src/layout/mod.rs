//! Rooted layouts (rooted branch-decompositions) and their cut functions.
//!
//! A layout is a rooted binary tree whose leaves are in bijection with the
//! vertices of a graph. Every tree node `x` induces the cut `(V_x, V \ V_x)`
//! where `V_x` is the set of vertices mapped to leaves below `x`.
//!
//! The text format is nested parentheses over vertex names, e.g.
//! `((v0,v1),(v2,v3))`. Whitespace is ignored on input and never emitted.

mod cut;
mod mim;
mod rank;

pub use cut::{distinct_external_neighborhoods, width, CutReport, NodeCut, WidthKind};
pub use mim::{max_induced_matching, mim_cut};
pub use rank::{cut_rank, gf2_rank, rational_rank, Field};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LayoutNode {
    Leaf(usize),
    Internal(usize, usize),
}

/// Rooted binary tree with leaves mapped bijectively onto `0..n`.
///
/// Nodes are stored children-first, so iterating `0..node_count()` is a
/// valid bottom-up order and the root is the last node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedLayout {
    nodes: Vec<LayoutNode>,
    leaf_of: Vec<usize>,
}

impl RootedLayout {
    /// Builds a layout from nodes in children-first order, root last.
    pub fn from_nodes(nodes: Vec<LayoutNode>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidLayout("no nodes".into()));
        }
        let leaves = nodes.iter().filter(|n| matches!(n, LayoutNode::Leaf(_))).count();
        let mut leaf_of = vec![usize::MAX; leaves];
        let mut has_parent = vec![false; nodes.len()];
        for (id, node) in nodes.iter().enumerate() {
            match *node {
                LayoutNode::Leaf(v) => {
                    if v >= leaves {
                        return Err(Error::InvalidLayout(format!("leaf vertex {v} out of range")));
                    }
                    if leaf_of[v] != usize::MAX {
                        return Err(Error::InvalidLayout(format!("vertex {v} on two leaves")));
                    }
                    leaf_of[v] = id;
                }
                LayoutNode::Internal(a, b) => {
                    if a >= id || b >= id || a == b {
                        return Err(Error::InvalidLayout(format!("node {id} has bad children")));
                    }
                    for c in [a, b] {
                        if std::mem::replace(&mut has_parent[c], true) {
                            return Err(Error::InvalidLayout(format!("node {c} has two parents")));
                        }
                    }
                }
            }
        }
        let roots = has_parent.iter().filter(|&&p| !p).count();
        if roots != 1 || has_parent[nodes.len() - 1] {
            return Err(Error::InvalidLayout("tree must have exactly one root, stored last".into()));
        }
        Ok(Self { nodes, leaf_of })
    }

    /// Left-deep caterpillar: the deepest internal node joins `order[0]` and
    /// `order[1]`, every later vertex joins as a right leaf.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::InvalidLayout("empty vertex order".into()));
        }
        let mut seen = vec![false; n];
        for &v in order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidLayout("order is not a permutation".into()));
            }
        }
        let mut nodes = vec![LayoutNode::Leaf(order[0])];
        let mut spine = 0;
        for &v in &order[1..] {
            nodes.push(LayoutNode::Leaf(v));
            nodes.push(LayoutNode::Internal(spine, nodes.len() - 1));
            spine = nodes.len() - 1;
        }
        Self::from_nodes(nodes)
    }

    /// Caterpillar in vertex-id order.
    pub fn caterpillar(n: usize) -> Result<Self> {
        Self::from_order(&(0..n).collect::<Vec<_>>())
    }

    pub fn vertex_count(&self) -> usize {
        self.leaf_of.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn node(&self, x: usize) -> Result<LayoutNode> {
        self.nodes.get(x).copied().ok_or(Error::UnknownNode(x))
    }

    pub fn leaf_of(&self, v: usize) -> usize {
        self.leaf_of[v]
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.vertex_count() != g.n() {
            return Err(Error::LayoutSizeMismatch { layout: self.vertex_count(), graph: g.n() });
        }
        Ok(())
    }

    /// `V_x`
    pub fn vertex_set_below(&self, x: usize) -> Result<VertexSet> {
        self.node(x)?;
        let mut out = VertexSet::with_capacity(self.vertex_count());
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            match self.nodes[y] {
                LayoutNode::Leaf(v) => {
                    out.insert(v);
                }
                LayoutNode::Internal(a, b) => stack.extend([a, b]),
            }
        }
        Ok(out)
    }

    /// `V_x` for every node, indexed by node id.
    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let set = match *node {
                LayoutNode::Leaf(v) => VertexSet::singleton(v),
                LayoutNode::Internal(a, b) => out[a].union(&out[b]),
            };
            out.push(set);
        }
        out
    }

    /// New layout with an extra leaf for vertex `n` hung next to the old root.
    pub fn with_new_root_leaf(&self) -> Self {
        let mut nodes = self.nodes.clone();
        let old_root = self.root();
        nodes.push(LayoutNode::Leaf(self.vertex_count()));
        nodes.push(LayoutNode::Internal(old_root, nodes.len() - 1));
        Self::from_nodes(nodes).expect("extension keeps the layout valid")
    }

    /// Canonical text form using the graph's vertex names.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        self.write_node(self.root(), g, &mut out);
        out
    }

    fn write_node(&self, x: usize, g: &Graph, out: &mut String) {
        match self.nodes[x] {
            LayoutNode::Leaf(v) => out.push_str(g.name(v)),
            LayoutNode::Internal(a, b) => {
                out.push('(');
                self.write_node(a, g, out);
                out.push(',');
                self.write_node(b, g, out);
                out.push(')');
            }
        }
    }

    /// Parses the nested-parentheses format against `g`'s vertex names.
    pub fn parse(text: &str, g: &Graph) -> Result<Self> {
        let mut p = Parser { text: text.as_bytes(), pos: 0, g, nodes: Vec::new(), seen: vec![false; g.n()] };
        p.node()?;
        p.skip_ws();
        if p.pos != p.text.len() {
            return Err(p.err("trailing input"));
        }
        if let Some(v) = p.seen.iter().position(|&s| !s) {
            return Err(Error::InvalidLayout(format!("vertex {} has no leaf", g.name(v))));
        }
        Self::from_nodes(p.nodes)
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    g: &'a Graph,
    nodes: Vec<LayoutNode>,
    seen: Vec<bool>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::LayoutParse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.text.get(self.pos) != Some(&c) {
            return Err(self.err(&format!("expected '{}'", c as char)));
        }
        self.pos += 1;
        Ok(())
    }

    fn node(&mut self) -> Result<usize> {
        self.skip_ws();
        match self.text.get(self.pos) {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let a = self.node()?;
                self.expect(b',')?;
                let b = self.node()?;
                self.expect(b')')?;
                self.nodes.push(LayoutNode::Internal(a, b));
                Ok(self.nodes.len() - 1)
            }
            Some(b')') | Some(b',') => Err(self.err("expected a vertex name or '('")),
            Some(_) => {
                let start = self.pos;
                while self.pos < self.text.len() && !matches!(self.text[self.pos], b'(' | b')' | b',')
                    && !self.text[self.pos].is_ascii_whitespace()
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.text[start..self.pos]).map_err(|_| self.err("invalid utf-8"))?;
                let v = self
                    .g
                    .vertex_by_name(name)
                    .ok_or_else(|| Error::LayoutParse { pos: start, msg: format!("unknown vertex '{name}'") })?;
                if std::mem::replace(&mut self.seen[v], true) {
                    return Err(Error::LayoutParse { pos: start, msg: format!("duplicate leaf '{name}'") });
                }
                self.nodes.push(LayoutNode::Leaf(v));
                Ok(self.nodes.len() - 1)
            }
        }
    }
}

/// Caterpillar over vertices sorted by `(left, right, id)` for an interval
/// model of `g`.
///
/// The model must match `g` exactly (closed intervals intersect iff the
/// vertices are adjacent). Every cut of the result is checked to have
/// maximum induced matching at most one.
pub fn interval_layout(g: &Graph, intervals: &[(i64, i64)]) -> Result<RootedLayout> {
    if intervals.len() != g.n() {
        return Err(Error::LayoutSizeMismatch { layout: intervals.len(), graph: g.n() });
    }
    for (v, &(l, r)) in intervals.iter().enumerate() {
        if l > r {
            return Err(Error::Precondition(format!("interval of vertex {v} has left > right")));
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (a, b) = (intervals[u], intervals[v]);
            let meet = a.0.max(b.0) <= a.1.min(b.1);
            if meet != g.has_edge(u, v) {
                return Err(Error::IntervalMismatch(u, v));
            }
        }
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (intervals[v].0, intervals[v].1, v));
    let layout = RootedLayout::from_order(&order)?;
    for set in layout.vertex_sets() {
        let m = mim_cut(g, &set);
        if m > 1 {
            return Err(Error::IntervalWidth(m));
        }
    }
    Ok(layout)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(xs: &[usize]) -> VertexSet {
        VertexSet::from_slice(xs)
    }

    #[test]
    fn caterpillar_shapes() {
        let one = RootedLayout::from_order(&[0]).unwrap();
        assert_eq!(one.node_count(), 1);
        assert_eq!(one.vertex_set_below(one.root()).unwrap(), vs(&[0]));

        let two = RootedLayout::from_order(&[1, 0]).unwrap();
        assert_eq!(two.node(two.root()).unwrap(), LayoutNode::Internal(0, 1));

        let g = Graph::new(3);
        let three = RootedLayout::from_order(&[0, 1, 2]).unwrap();
        assert_eq!(three.to_text(&g), "((v0,v1),v2)");
        // deepest internal node holds the first two vertices
        assert_eq!(three.vertex_set_below(2).unwrap(), vs(&[0, 1]));
        assert_eq!(three.vertex_set_below(three.root()).unwrap(), g.vertices());
        assert_eq!(three.vertex_set_below(three.leaf_of(2)).unwrap(), vs(&[2]));
        assert_eq!(three.vertex_set_below(99), Err(Error::UnknownNode(99)));

        assert!(RootedLayout::from_order(&[0, 0]).is_err());
        assert!(RootedLayout::from_order(&[]).is_err());
    }

    #[test]
    fn parse_examples() {
        let g = Graph::new(3);
        let l = RootedLayout::parse("((v0,v1),v2)", &g).unwrap();
        assert_eq!(l, RootedLayout::from_order(&[0, 1, 2]).unwrap());

        let g2 = Graph::new(2);
        let l = RootedLayout::parse(" ( v0 ,\n v1 ) ", &g2).unwrap();
        assert_eq!(l.node_count(), 3);
        assert_eq!(l.to_text(&g2), "(v0,v1)");

        assert!(matches!(RootedLayout::parse("((v0,v0),v1)", &g2), Err(Error::LayoutParse { .. })));
        assert!(matches!(RootedLayout::parse("((v0,v1),v2", &g), Err(Error::LayoutParse { .. })));
        assert!(matches!(RootedLayout::parse("(v0,v1))", &g2), Err(Error::LayoutParse { .. })));
        assert!(matches!(RootedLayout::parse("(v0,x)", &g2), Err(Error::LayoutParse { .. })));
        assert!(matches!(RootedLayout::parse("(v0,v1)", &g), Err(Error::InvalidLayout(_))));
    }

    #[test]
    fn extension_adds_root() {
        let l = RootedLayout::from_order(&[0, 1]).unwrap().with_new_root_leaf();
        assert_eq!(l.vertex_count(), 3);
        assert_eq!(l.to_text(&Graph::new(3)), "((v0,v1),v2)");
    }

    #[test]
    fn interval_examples() {
        // nested [1,10] ⊃ [2,3], [4,5]
        let ivs = [(1, 10), (2, 3), (4, 5)];
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let l = interval_layout(&g, &ivs).unwrap();
        let (w, _) = width(&g, &l, WidthKind::Mim).unwrap();
        assert_eq!(w, 1);
        assert_eq!(l.to_text(&g), "((v0,v1),v2)");

        let disjoint = [(0, 1), (2, 3), (4, 5)];
        let l = interval_layout(&Graph::new(3), &disjoint).unwrap();
        assert_eq!(width(&Graph::new(3), &l, WidthKind::Mim).unwrap().0, 0);

        assert_eq!(interval_layout(&Graph::new(3), &ivs), Err(Error::IntervalMismatch(0, 1)));
    }
}
