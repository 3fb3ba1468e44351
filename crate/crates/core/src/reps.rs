//! Permutation representation graphs, their text format and DOT export.

use std::fmt::Write as _;

use thiserror::Error;

use crate::group::UnionFind;
use crate::perm::Perm;
use crate::sggi::{Sggi, SggiError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edges of label {0} do not form a matching")]
    MatchingViolation(usize),
    #[error("labels {i} and {j}: component {component:?} is not a vertex, edge, double edge or alternating square")]
    SquareViolation { i: usize, j: usize, component: Vec<usize> },
    #[error("label {0} has no edges")]
    EmptyLabel(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Sggi(#[from] SggiError),
}

/// An `i`-edge between two points (0-based, `u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub label: usize,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(u: usize, v: usize, label: usize) -> Edge {
        Edge { label, u: u.min(v), v: u.max(v) }
    }
}

/// Edge-labelled multigraph on `{0..degree}`; edges kept sorted by (label, u, v).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermRepGraph {
    degree: usize,
    edges: Vec<Edge>,
}

impl PermRepGraph {
    /// Collects edges, normalising order and rejecting loops and repeated triples.
    pub fn new(degree: usize, edges: impl IntoIterator<Item = Edge>) -> Result<PermRepGraph, GraphError> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            if e.u == e.v {
                return Err(GraphError::Parse { line: 0, msg: format!("loop at {}", e.u + 1) });
            }
            if e.v >= degree {
                return Err(GraphError::Parse { line: 0, msg: format!("vertex {} exceeds degree {degree}", e.v + 1) });
            }
        }
        edges.sort();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(GraphError::Parse { line: 0, msg: "repeated edge".into() });
        }
        Ok(PermRepGraph { degree, edges })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// One more than the largest label; 0 for an edgeless graph.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(|e| e.label + 1).max().unwrap_or(0)
    }

    pub fn edges_with_label(&self, label: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.label == label)
    }

    /// Relabels every edge `i` as `f(i)`.
    pub fn map_labels(&self, f: impl Fn(usize) -> usize) -> PermRepGraph {
        let edges = self.edges.iter().map(|e| Edge::new(e.u, e.v, f(e.label)));
        PermRepGraph::new(self.degree, edges).expect("relabelling keeps edges distinct")
    }

    /// Checks the matching and square conditions.
    pub fn validate(&self) -> Result<(), GraphError> {
        let r = self.rank();
        for i in 0..r {
            let mut used = vec![false; self.degree];
            let mut any = false;
            for e in self.edges_with_label(i) {
                any = true;
                if used[e.u] || used[e.v] {
                    return Err(GraphError::MatchingViolation(i));
                }
                used[e.u] = true;
                used[e.v] = true;
            }
            if !any {
                return Err(GraphError::EmptyLabel(i));
            }
        }
        for i in 0..r {
            for j in i + 2..r {
                self.check_square(i, j)?;
            }
        }
        Ok(())
    }

    fn check_square(&self, i: usize, j: usize) -> Result<(), GraphError> {
        let sub: Vec<&Edge> = self.edges.iter().filter(|e| e.label == i || e.label == j).collect();
        let mut uf = UnionFind::new(self.degree);
        for e in &sub {
            uf.union(e.u, e.v);
        }
        let mut comps: Vec<Vec<usize>> = vec![Vec::new(); self.degree];
        for x in 0..self.degree {
            comps[uf.find(x)].push(x);
        }
        for comp in comps.into_iter().filter(|c| c.len() > 1) {
            let es: Vec<&&Edge> = sub.iter().filter(|e| comp.contains(&e.u)).collect();
            let ok = match comp.len() {
                // single or double edge
                2 => true,
                // two matchings make a 4-cycle exactly when there are four edges
                4 => es.len() == 4,
                _ => false,
            };
            if !ok {
                return Err(GraphError::SquareViolation { i, j, component: comp.iter().map(|x| x + 1).collect() });
            }
        }
        Ok(())
    }

    /// Text form: `degree <n>` then `edge <u> <v> <label>` lines, 1-based vertices.
    pub fn to_dsl(&self) -> String {
        let mut s = format!("degree {}\n", self.degree);
        for e in &self.edges {
            let _ = writeln!(s, "edge {} {} {}", e.u + 1, e.v + 1, e.label);
        }
        s
    }

    pub fn parse_dsl(text: &str) -> Result<PermRepGraph, GraphError> {
        let mut degree = None;
        let mut edges = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: &str| GraphError::Parse { line: k + 1, msg: msg.to_string() };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match (toks[0], degree) {
                ("degree", None) => {
                    if toks.len() != 2 {
                        return Err(perr("expected `degree <n>`"));
                    }
                    let n: usize = toks[1].parse().map_err(|_| perr("bad degree"))?;
                    if n == 0 || n > 255 {
                        return Err(perr("degree out of range"));
                    }
                    degree = Some(n);
                }
                ("degree", Some(_)) => return Err(perr("repeated degree line")),
                ("edge", None) => return Err(perr("edge before degree line")),
                ("edge", Some(n)) => {
                    if toks.len() != 4 {
                        return Err(perr("expected `edge <u> <v> <label>`"));
                    }
                    let num = |t: &str| t.parse::<usize>().map_err(|_| perr("bad number"));
                    let (u, v, l) = (num(toks[1])?, num(toks[2])?, num(toks[3])?);
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(perr("vertex out of range"));
                    }
                    if u == v {
                        return Err(perr("loop"));
                    }
                    let e = Edge::new(u - 1, v - 1, l);
                    if edges.contains(&e) {
                        return Err(perr("repeated edge"));
                    }
                    edges.push(e);
                }
                _ => return Err(perr("unknown directive")),
            }
        }
        let n = degree.ok_or(GraphError::Parse { line: 1, msg: "missing degree line".into() })?;
        PermRepGraph::new(n, edges)
    }

    /// Undirected DOT; one statement per vertex, then edges in canonical order.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph {\n");
        for x in 0..self.degree {
            let _ = writeln!(s, "  {};", x + 1);
        }
        for e in &self.edges {
            let _ = writeln!(s, "  {} -- {} [label={}];", e.u + 1, e.v + 1, e.label);
        }
        s.push_str("}\n");
        s
    }

    /// Reads back the DOT subset produced by [`PermRepGraph::to_dot`]. The degree is the
    /// largest node mentioned.
    pub fn parse_dot(text: &str) -> Result<PermRepGraph, GraphError> {
        let body = text
            .trim()
            .strip_prefix("graph")
            .and_then(|t| t.trim().strip_prefix('{'))
            .and_then(|t| t.trim_end().strip_suffix('}'))
            .ok_or(GraphError::Parse { line: 1, msg: "expected `graph { ... }`".into() })?;
        let mut degree = 0;
        let mut edges = Vec::new();
        for (k, stmt) in body.split(';').enumerate() {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let perr = |msg: &str| GraphError::Parse { line: k + 1, msg: msg.to_string() };
            let num = |t: &str| t.trim().parse::<usize>().map_err(|_| perr("bad node id"));
            if let Some((lhs, attrs)) = stmt.split_once('[') {
                let (a, b) = lhs.split_once("--").ok_or_else(|| perr("expected `--`"))?;
                let attrs = attrs.trim().strip_suffix(']').ok_or_else(|| perr("unclosed attributes"))?;
                let label = attrs
                    .trim()
                    .strip_prefix("label=")
                    .ok_or_else(|| perr("expected label attribute"))?
                    .trim()
                    .trim_matches('"');
                let l: usize = label.parse().map_err(|_| perr("bad label"))?;
                let (u, v) = (num(a)?, num(b)?);
                if u == 0 || v == 0 || u == v {
                    return Err(perr("bad edge"));
                }
                degree = degree.max(u).max(v);
                edges.push(Edge::new(u - 1, v - 1, l));
            } else {
                let u = num(stmt)?;
                if u == 0 {
                    return Err(perr("bad node id"));
                }
                degree = degree.max(u);
            }
        }
        PermRepGraph::new(degree, edges)
    }
}

/// One edge per transposition of each generator.
pub fn graph_of(s: &Sggi) -> PermRepGraph {
    let edges = s
        .gens()
        .iter()
        .enumerate()
        .flat_map(|(i, g)| g.transpositions().into_iter().map(move |(a, b)| Edge::new(a, b, i)));
    PermRepGraph::new(s.degree(), edges).expect("transpositions are distinct")
}

/// Generator `i` is the product of the `i`-edges.
pub fn sggi_of(g: &PermRepGraph) -> Result<Sggi, GraphError> {
    g.validate()?;
    let n = g.degree();
    let gens = (0..g.rank())
        .map(|i| {
            let mut p = Perm::identity(n);
            for e in g.edges_with_label(i) {
                p = p.then(&Perm::transposition(n, e.u, e.v));
            }
            p
        })
        .collect();
    Ok(Sggi::new(n, gens)?)
}
