//! Text formats for instances and interval models.
//!
//! Graph files:
//!
//! ```text
//! c optional comments
//! p sfvs <n> <m>
//! v <name> <weight> <0|1>      (the flag marks membership in S)
//! e <name> <name>
//! ```
//!
//! Interval files:
//!
//! ```text
//! p intervals <n>
//! i <name> <left> <right>
//! ```

use std::collections::{HashMap, HashSet};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Instance};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn check_name(line: usize, name: &str) -> Result<()> {
    if name.contains(['(', ')', ',']) {
        return Err(parse_err(line, format!("vertex name {name:?} contains a reserved character")));
    }
    Ok(())
}

fn number<T: std::str::FromStr>(line: usize, field: Option<&str>, what: &str) -> Result<T> {
    let text = field.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    text.parse().map_err(|_| parse_err(line, format!("bad {what} {text:?}")))
}

/// Lines that carry data, with 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, f)| !f.is_empty() && f[0] != "c")
}

pub fn parse_graph(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize)> = None;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut weights = Vec::new();
    let mut s = VertexSet::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_edges: HashSet<(usize, usize)> = HashSet::new();
    for (line, f) in records(text) {
        match (f[0], header) {
            ("p", None) => {
                if f.get(1) != Some(&"sfvs") || f.len() != 4 {
                    return Err(parse_err(line, "expected `p sfvs <n> <m>`"));
                }
                header = Some((number(line, f.get(2).copied(), "vertex count")?, number(line, f.get(3).copied(), "edge count")?));
            }
            ("p", Some(_)) => return Err(parse_err(line, "duplicate header")),
            (_, None) => return Err(parse_err(line, "record before the `p` header")),
            ("v", Some(_)) => {
                if f.len() != 4 {
                    return Err(parse_err(line, "expected `v <name> <weight> <0|1>`"));
                }
                check_name(line, f[1])?;
                if index.insert(f[1].to_string(), names.len()).is_some() {
                    return Err(parse_err(line, format!("duplicate vertex {:?}", f[1])));
                }
                weights.push(number::<i64>(line, Some(f[2]), "weight")?);
                match f[3] {
                    "1" => {
                        s.insert(names.len());
                    }
                    "0" => {}
                    other => return Err(parse_err(line, format!("bad S flag {other:?}"))),
                }
                names.push(f[1].to_string());
            }
            ("e", Some(_)) => {
                if f.len() != 3 {
                    return Err(parse_err(line, "expected `e <name> <name>`"));
                }
                let lookup = |n: &str| index.get(n).copied().ok_or_else(|| parse_err(line, format!("unknown vertex {n:?}")));
                let (u, v) = (lookup(f[1])?, lookup(f[2])?);
                if u == v {
                    return Err(parse_err(line, format!("self-loop on {:?}", f[1])));
                }
                if !seen_edges.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(line, format!("duplicate edge {} {}", f[1], f[2])));
                }
                edges.push((u, v));
            }
            (other, Some(_)) => return Err(parse_err(line, format!("unknown record type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p sfvs` header"))?;
    if names.len() != n || edges.len() != m {
        return Err(parse_err(0, format!("header says {n} vertices and {m} edges, found {} and {}", names.len(), edges.len())));
    }
    Instance::new(Graph::with_names(names, &edges)?, s, weights)
}

pub fn write_graph(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = format!("p sfvs {} {}\n", g.n(), g.edge_count());
    for v in 0..g.n() {
        out.push_str(&format!("v {} {} {}\n", g.name(v), inst.weights[v], u8::from(inst.s.contains(v))));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", g.name(u), g.name(v)));
    }
    out
}

/// Closed intervals, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    pub names: Vec<String>,
    pub intervals: Vec<(i64, i64)>,
}

impl IntervalModel {
    /// The intersection graph.
    pub fn graph(&self) -> Result<Graph> {
        let iv = &self.intervals;
        let edges: Vec<(usize, usize)> = (0..iv.len())
            .flat_map(|u| (u + 1..iv.len()).map(move |v| (u, v)))
            .filter(|&(u, v)| iv[u].0.max(iv[v].0) <= iv[u].1.min(iv[v].1))
            .collect();
        Graph::with_names(self.names.clone(), &edges)
    }
}

pub fn parse_intervals(text: &str) -> Result<IntervalModel> {
    let mut expected: Option<usize> = None;
    let mut model = IntervalModel { names: Vec::new(), intervals: Vec::new() };
    let mut seen = HashSet::new();
    for (line, f) in records(text) {
        match (f[0], expected) {
            ("p", None) => {
                if f.get(1) != Some(&"intervals") || f.len() != 3 {
                    return Err(parse_err(line, "expected `p intervals <n>`"));
                }
                expected = Some(number(line, f.get(2).copied(), "interval count")?);
            }
            ("p", Some(_)) => return Err(parse_err(line, "duplicate header")),
            (_, None) => return Err(parse_err(line, "record before the `p` header")),
            ("i", Some(_)) => {
                if f.len() != 4 {
                    return Err(parse_err(line, "expected `i <name> <left> <right>`"));
                }
                check_name(line, f[1])?;
                if !seen.insert(f[1]) {
                    return Err(parse_err(line, format!("duplicate vertex {:?}", f[1])));
                }
                let (l, r): (i64, i64) = (number(line, Some(f[2]), "left end")?, number(line, Some(f[3]), "right end")?);
                if l > r {
                    return Err(parse_err(line, "left end exceeds right end"));
                }
                model.names.push(f[1].to_string());
                model.intervals.push((l, r));
            }
            (other, Some(_)) => return Err(parse_err(line, format!("unknown record type {other:?}"))),
        }
    }
    let n = expected.ok_or_else(|| parse_err(0, "missing `p intervals` header"))?;
    if model.names.len() != n {
        return Err(parse_err(0, format!("header says {n} intervals, found {}", model.names.len())));
    }
    Ok(model)
}

pub fn write_intervals(model: &IntervalModel) -> String {
    let mut out = format!("p intervals {}\n", model.names.len());
    for (name, (l, r)) in model.names.iter().zip(&model.intervals) {
        out.push_str(&format!("i {name} {l} {r}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "c unit triangle\np sfvs 3 3\nv a 1 1\nv b 1 0\nv c 2 0\ne a b\ne b c\ne a c\n";

    #[test]
    fn parses_and_round_trips() {
        let inst = parse_graph(TRIANGLE).unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.graph.edge_count(), 3);
        assert_eq!(inst.s, VertexSet::singleton(0));
        assert_eq!(inst.weights, vec![1, 1, 2]);
        assert_eq!(inst.graph.name(2), "c");
        let again = parse_graph(&write_graph(&inst)).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn rejects_bad_graphs() {
        let cases = [
            ("v a 1 1\n", 1),
            ("p sfvs 1 0\nv a 1 2\n", 2),
            ("p sfvs 2 1\nv a 1 0\nv a 1 0\n", 3),
            ("p sfvs 1 1\nv a 1 0\ne a a\n", 3),
            ("p sfvs 2 2\nv a 1 0\nv b 1 0\ne a b\ne b a\n", 5),
            ("p sfvs 2 1\nv a 1 0\nv b 1 0\ne a z\n", 4),
            ("p sfvs 1 0\nv (a 1 0\n", 2),
            ("p sfvs 2 0\nv a 1 0\n", 0),
            ("p sfvs 1 0\nv a x 0\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn intervals_round_trip() {
        let text = "p intervals 3\ni x 1 10\ni y 2 3\ni z 11 12\n";
        let model = parse_intervals(text).unwrap();
        assert_eq!(write_intervals(&model), text);
        let g = model.graph().unwrap();
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(0, 2));
        assert!(!g.has_edge(1, 2));
        assert!(parse_intervals("p intervals 1\ni x 3 2\n").is_err());
        assert!(parse_intervals("p intervals 2\ni x 1 2\n").is_err());
    }
}
