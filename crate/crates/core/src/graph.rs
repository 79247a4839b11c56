//! The signed-graph data model and the `sg 1` text format.
//!
//! Vertices are dense indices `0..n`. Edges keep the order in which they were
//! added (file order), and that order is the canonical edge order used for
//! every tie-break in the crate. Each edge carries a user-visible string id.
//!
//! Text format, one directive per line, `#` starts a comment:
//!
//! ```text
//! sg 1
//! n 4
//! edge a 1 2 +      # link (u != v) or loop (u == v), vertices 1-based
//! half h 3
//! loose z
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::ops::{Mul, Neg};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(x: i64) -> Option<Sign> {
        match x {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char(self.symbol())
    }
}

/// The four kinds of edge. Only links and loops carry a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Link { u: usize, v: usize, sign: Sign },
    Loop { v: usize, sign: Sign },
    Half { v: usize },
    Loose,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn sign(&self) -> Option<Sign> {
        match self.kind {
            EdgeKind::Link { sign, .. } | EdgeKind::Loop { sign, .. } => Some(sign),
            _ => None,
        }
    }

    /// Vertex of every edge end: two for links and loops, one for a half edge.
    pub fn ends(&self) -> Vec<usize> {
        match self.kind {
            EdgeKind::Link { u, v, .. } => vec![u, v],
            EdgeKind::Loop { v, .. } => vec![v, v],
            EdgeKind::Half { v } => vec![v],
            EdgeKind::Loose => vec![],
        }
    }

    /// Distinct endpoints.
    pub fn vertices(&self) -> Vec<usize> {
        match self.kind {
            EdgeKind::Link { u, v, .. } => vec![u, v],
            EdgeKind::Loop { v, .. } | EdgeKind::Half { v } => vec![v],
            EdgeKind::Loose => vec![],
        }
    }

    pub fn is_link(&self) -> bool {
        matches!(self.kind, EdgeKind::Link { .. })
    }

    /// Link or loop.
    pub fn is_ordinary(&self) -> bool {
        matches!(self.kind, EdgeKind::Link { .. } | EdgeKind::Loop { .. })
    }

    pub fn is_loose(&self) -> bool {
        matches!(self.kind, EdgeKind::Loose)
    }

    pub fn is_half(&self) -> bool {
        matches!(self.kind, EdgeKind::Half { .. })
    }

    /// Half edge or negative loop.
    pub fn is_unbalanced(&self) -> bool {
        matches!(
            self.kind,
            EdgeKind::Half { .. }
                | EdgeKind::Loop {
                    sign: Sign::Minus,
                    ..
                }
        )
    }

    pub fn is_positive_loop(&self) -> bool {
        matches!(
            self.kind,
            EdgeKind::Loop {
                sign: Sign::Plus,
                ..
            }
        )
    }

    /// Same edge with its sign (if any) multiplied by `s`.
    pub fn times(&self, s: Sign) -> Edge {
        let kind = match self.kind {
            EdgeKind::Link { u, v, sign } => EdgeKind::Link { u, v, sign: sign * s },
            EdgeKind::Loop { v, sign } => EdgeKind::Loop { v, sign: sign * s },
            k => k,
        };
        Edge {
            id: self.id.clone(),
            kind,
        }
    }
}

/// A signed graph: order `n` plus an ordered list of typed edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignedGraph {
    order: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Self {
        SignedGraph {
            order: n,
            edges: Vec::new(),
        }
    }

    /// Build from parts, validating endpoints and id uniqueness.
    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut g = SignedGraph::new(n);
        for e in edges {
            g.push(e)?;
        }
        Ok(g)
    }

    pub fn push(&mut self, e: Edge) -> Result<usize> {
        for v in e.vertices() {
            if v >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
        }
        if let EdgeKind::Link { u, v, .. } = e.kind {
            if u == v {
                return Err(Error::InvalidParameter(format!(
                    "link `{}` has equal endpoints; use a loop",
                    e.id
                )));
            }
        }
        if e.id.is_empty() || e.id.chars().any(char::is_whitespace) {
            return Err(Error::InvalidParameter(format!("bad edge id `{}`", e.id)));
        }
        if self.edges.iter().any(|f| f.id == e.id) {
            return Err(Error::DuplicateEdgeId(e.id));
        }
        self.edges.push(e);
        Ok(self.edges.len() - 1)
    }

    /// Adds a link when `u != v` and a loop when `u == v`.
    pub fn add_edge(&mut self, id: impl Into<String>, u: usize, v: usize, sign: Sign) -> Result<usize> {
        let kind = if u == v {
            EdgeKind::Loop { v, sign }
        } else {
            EdgeKind::Link { u, v, sign }
        };
        self.push(Edge { id: id.into(), kind })
    }

    pub fn add_half(&mut self, id: impl Into<String>, v: usize) -> Result<usize> {
        self.push(Edge {
            id: id.into(),
            kind: EdgeKind::Half { v },
        })
    }

    pub fn add_loose(&mut self, id: impl Into<String>) -> Result<usize> {
        self.push(Edge {
            id: id.into(),
            kind: EdgeKind::Loose,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn edge_index(&self, id: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    pub fn edge_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<EdgeSet> {
        ids.iter().map(|id| self.edge_index(id.as_ref())).collect()
    }

    pub fn edge_ids(&self, s: &EdgeSet) -> Vec<&str> {
        s.iter().map(|i| self.edges[i].id.as_str()).collect()
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// True when every edge is a link.
    pub fn is_link_graph(&self) -> bool {
        self.edges.iter().all(Edge::is_link)
    }

    pub fn require_link_graph(&self) -> Result<()> {
        match self.edges.iter().find(|e| !e.is_link()) {
            Some(e) => Err(Error::NotLinkGraph(e.id.clone())),
            None => Ok(()),
        }
    }

    /// Link graph without parallel edges.
    pub fn require_simple(&self) -> Result<()> {
        self.require_link_graph()?;
        let mut seen = HashSet::new();
        for e in &self.edges {
            if let EdgeKind::Link { u, v, .. } = e.kind {
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::NotSimple(format!("parallel edge `{}`", e.id)));
                }
            }
        }
        Ok(())
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .map(|e| e.ends().iter().filter(|&&w| w == v).count())
            .sum())
    }

    /// Product of the signs of the edges of `s`, each counted once.
    pub fn edge_set_sign(&self, s: &EdgeSet) -> Result<Sign> {
        let mut acc = Sign::Plus;
        for i in s.iter() {
            let e = &self.edges[i];
            acc = acc * e.sign().ok_or_else(|| Error::UnsignedEdge(e.id.clone()))?;
        }
        Ok(acc)
    }

    /// Vertex-level components of `(V, s)`; loose edges are ignored.
    /// Returns the component label of every vertex, labels numbered in order of
    /// each component's lowest vertex.
    pub fn components(&self, s: &EdgeSet) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.order).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut x = x;
            while p[x] != r {
                let nx = p[x];
                p[x] = r;
                x = nx;
            }
            r
        }
        for i in s.iter() {
            if let EdgeKind::Link { u, v, .. } = self.edges[i].kind {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut label = vec![usize::MAX; self.order];
        let mut next = 0;
        let mut out = vec![0; self.order];
        for v in 0..self.order {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[v] = label[r];
        }
        out
    }

    /// Edges restricted to `s`, same vertex set.
    pub fn restrict(&self, s: &EdgeSet) -> SignedGraph {
        SignedGraph {
            order: self.order,
            edges: s.iter().map(|i| self.edges[i].clone()).collect(),
        }
    }

    /// Delete the vertex set `x` together with every edge that has an endpoint
    /// in `x`; loose edges survive. Remaining vertices are renumbered in order.
    /// Returns the new graph and the old-to-new vertex map.
    pub fn delete_vertices(&self, x: &[usize]) -> Result<(SignedGraph, Vec<Option<usize>>)> {
        for &v in x {
            self.check_vertex(v)?;
        }
        let gone: HashSet<usize> = x.iter().copied().collect();
        let mut map = vec![None; self.order];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !gone.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = SignedGraph::new(next);
        for e in &self.edges {
            if e.vertices().iter().any(|v| gone.contains(v)) {
                continue;
            }
            let kind = match e.kind {
                EdgeKind::Link { u, v, sign } => EdgeKind::Link {
                    u: map[u].unwrap(),
                    v: map[v].unwrap(),
                    sign,
                },
                EdgeKind::Loop { v, sign } => EdgeKind::Loop {
                    v: map[v].unwrap(),
                    sign,
                },
                EdgeKind::Half { v } => EdgeKind::Half { v: map[v].unwrap() },
                EdgeKind::Loose => EdgeKind::Loose,
            };
            g.edges.push(Edge {
                id: e.id.clone(),
                kind,
            });
        }
        Ok((g, map))
    }

    /// Same underlying graph with every ordinary edge given sign `s`.
    pub fn with_all_signs(&self, s: Sign) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let kind = match e.kind {
                    EdgeKind::Link { u, v, .. } => EdgeKind::Link { u, v, sign: s },
                    EdgeKind::Loop { v, .. } => EdgeKind::Loop { v, sign: s },
                    k => k,
                };
                Edge {
                    id: e.id.clone(),
                    kind,
                }
            })
            .collect();
        SignedGraph {
            order: self.order,
            edges,
        }
    }

    /// Negate every sign.
    pub fn negated(&self) -> SignedGraph {
        SignedGraph {
            order: self.order,
            edges: self.edges.iter().map(|e| e.times(Sign::Minus)).collect(),
        }
    }

    /// Replace the kind of edge `i`, keeping its id and position.
    pub fn replace_kind(&mut self, i: usize, kind: EdgeKind) -> Result<()> {
        let e = Edge {
            id: self.edges[i].id.clone(),
            kind,
        };
        for v in e.vertices() {
            self.check_vertex(v)?;
        }
        if let EdgeKind::Link { u, v, .. } = kind {
            if u == v {
                return Err(Error::InvalidParameter(format!(
                    "link `{}` has equal endpoints; use a loop",
                    e.id
                )));
            }
        }
        self.edges[i] = e;
        Ok(())
    }

    /// Disjoint union; the second graph's vertices are shifted by `self.order()`
    /// and its edge ids get `suffix` appended.
    pub fn disjoint_union(&self, other: &SignedGraph, suffix: &str) -> Result<SignedGraph> {
        let shift = self.order;
        let mut g = self.clone();
        g.order += other.order;
        for e in &other.edges {
            let kind = match e.kind {
                EdgeKind::Link { u, v, sign } => EdgeKind::Link {
                    u: u + shift,
                    v: v + shift,
                    sign,
                },
                EdgeKind::Loop { v, sign } => EdgeKind::Loop { v: v + shift, sign },
                EdgeKind::Half { v } => EdgeKind::Half { v: v + shift },
                EdgeKind::Loose => EdgeKind::Loose,
            };
            g.push(Edge {
                id: format!("{}{}", e.id, suffix),
                kind,
            })?;
        }
        Ok(g)
    }

    /// Whether `other` has the same order and the same edges (ids, kinds and
    /// endpoints) up to signs, in the same order.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.order == other.order
            && self.edges.len() == other.edges.len()
            && self.edges.iter().zip(&other.edges).all(|(a, b)| {
                a.id == b.id
                    && match (a.kind, b.kind) {
                        (EdgeKind::Link { u, v, .. }, EdgeKind::Link { u: x, v: y, .. }) => {
                            (u, v) == (x, y)
                        }
                        (EdgeKind::Loop { v, .. }, EdgeKind::Loop { v: w, .. }) => v == w,
                        (EdgeKind::Half { v }, EdgeKind::Half { v: w }) => v == w,
                        (EdgeKind::Loose, EdgeKind::Loose) => true,
                        _ => false,
                    }
            })
    }

    /// Parse the `sg 1` text format.
    pub fn parse(text: &str) -> Result<SignedGraph> {
        let mut graph: Option<SignedGraph> = None;
        let mut saw_magic = false;
        let mut ids: HashMap<String, usize> = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            if !saw_magic {
                if fields != ["sg", "1"] {
                    return Err(err("expected header `sg 1`".into()));
                }
                saw_magic = true;
                continue;
            }
            let directive = fields[0];
            if directive == "n" {
                if graph.is_some() {
                    return Err(err("duplicate `n` directive".into()));
                }
                if fields.len() != 2 {
                    return Err(err("`n` takes exactly one argument".into()));
                }
                let n: usize = fields[1]
                    .parse()
                    .map_err(|_| err(format!("bad order `{}`", fields[1])))?;
                graph = Some(SignedGraph::new(n));
                continue;
            }
            let g = graph
                .as_mut()
                .ok_or_else(|| err("`n` must precede edges".into()))?;
            let vertex = |tok: &str| -> Result<usize> {
                let v: usize = tok
                    .parse()
                    .map_err(|_| err(format!("bad vertex `{tok}`")))?;
                if v == 0 || v > g.order {
                    return Err(err(format!(
                        "vertex {v} out of range 1..={} (order {})",
                        g.order, g.order
                    )));
                }
                Ok(v - 1)
            };
            let kind = match directive {
                "edge" => {
                    if fields.len() != 5 {
                        return Err(err("`edge` takes: <id> <u> <v> <+|->".into()));
                    }
                    let u = vertex(fields[2])?;
                    let v = vertex(fields[3])?;
                    let sign = match fields[4] {
                        "+" => Sign::Plus,
                        "-" => Sign::Minus,
                        s => return Err(err(format!("bad sign `{s}`"))),
                    };
                    if u == v {
                        EdgeKind::Loop { v, sign }
                    } else {
                        EdgeKind::Link { u, v, sign }
                    }
                }
                "half" => {
                    if fields.len() == 4 {
                        return Err(err("a half edge carries no sign".into()));
                    }
                    if fields.len() != 3 {
                        return Err(err("`half` takes: <id> <v>".into()));
                    }
                    EdgeKind::Half {
                        v: vertex(fields[2])?,
                    }
                }
                "loose" => {
                    if fields.len() == 3 {
                        return Err(err("a loose edge carries no sign".into()));
                    }
                    if fields.len() != 2 {
                        return Err(err("`loose` takes: <id>".into()));
                    }
                    EdgeKind::Loose
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            };
            let id = fields[1].to_string();
            if ids.insert(id.clone(), line).is_some() {
                return Err(err(format!("duplicate edge id `{id}`")));
            }
            g.edges.push(Edge { id, kind });
        }
        if !saw_magic {
            return Err(Error::Parse {
                line: 1,
                message: "missing header `sg 1`".into(),
            });
        }
        graph.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `n` directive".into(),
        })
    }

    /// Serialize to the `sg 1` text format. Output is deterministic.
    pub fn to_sg_string(&self) -> String {
        let mut out = format!("sg 1\nn {}\n", self.order);
        for e in &self.edges {
            match e.kind {
                EdgeKind::Link { u, v, sign } => {
                    writeln!(out, "edge {} {} {} {}", e.id, u + 1, v + 1, sign).unwrap()
                }
                EdgeKind::Loop { v, sign } => {
                    writeln!(out, "edge {} {} {} {}", e.id, v + 1, v + 1, sign).unwrap()
                }
                EdgeKind::Half { v } => writeln!(out, "half {} {}", e.id, v + 1).unwrap(),
                EdgeKind::Loose => writeln!(out, "loose {}", e.id).unwrap(),
            }
        }
        out
    }

    /// Counts of (links, loops, half edges, loose edges).
    pub fn kind_counts(&self) -> (usize, usize, usize, usize) {
        let mut c = (0, 0, 0, 0);
        for e in &self.edges {
            match e.kind {
                EdgeKind::Link { .. } => c.0 += 1,
                EdgeKind::Loop { .. } => c.1 += 1,
                EdgeKind::Half { .. } => c.2 += 1,
                EdgeKind::Loose => c.3 += 1,
            }
        }
        c
    }
}

/// Parse; free-function form of [`SignedGraph::parse`].
pub fn parse(text: &str) -> Result<SignedGraph> {
    SignedGraph::parse(text)
}

/// Serialize; free-function form of [`SignedGraph::to_sg_string`].
pub fn serialize(g: &SignedGraph) -> String {
    g.to_sg_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::fixtures::SIGMA4;

    #[test]
    fn parse_smallest_link() {
        let g = parse("sg 1\nn 2\nedge a 1 2 +").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(
            g.edge(0).kind,
            EdgeKind::Link {
                u: 0,
                v: 1,
                sign: Sign::Plus
            }
        );
    }

    #[test]
    fn parse_half_edge() {
        let g = parse("sg 1\nn 1\nhalf h 1").unwrap();
        assert_eq!(g.edge(0).kind, EdgeKind::Half { v: 0 });
    }

    #[test]
    fn parse_sigma4_fixture() {
        let g = parse(SIGMA4).unwrap();
        assert_eq!(g.size(), 7);
        assert_eq!(g.kind_counts(), (6, 0, 1, 0));
        assert_eq!(g.edge_ids(&g.all_edges()), ["a", "b", "c", "d", "e", "f", "h"]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("sg 2\nn 1\n", 1),
            ("sg 1\nn 2\nedge a 1 3 +\n", 3),
            ("sg 1\nn 2\n# c\nhalf h 1 +\n", 4),
            ("sg 1\nn 1\nloose z -\n", 3),
            ("sg 1\nn 1\nbogus x\n", 3),
            ("sg 1\nedge a 1 2 +\n", 2),
            ("sg 1\nn 2\nedge a 1 2 +\nedge a 2 1 -\n", 4),
            ("sg 1\nn 2\nedge a 0 1 +\n", 3),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(serialize(&SignedGraph::new(0)), "sg 1\nn 0\n");
        let mut g = SignedGraph::new(1);
        g.add_loose("m").unwrap();
        assert!(serialize(&g).lines().any(|l| l == "loose m"));
        let s4 = parse(SIGMA4).unwrap();
        let once = serialize(&s4);
        let twice = serialize(&parse(&once).unwrap());
        assert_eq!(once, twice);
    }

    #[test]
    fn degrees() {
        let g = parse(SIGMA4).unwrap();
        assert_eq!(g.degree(0).unwrap(), 4);
        assert_eq!(g.degree(2).unwrap(), 4);
        let mut h = SignedGraph::new(2);
        h.add_edge("l", 0, 0, Sign::Minus).unwrap();
        assert_eq!(h.degree(0).unwrap(), 2);
        assert_eq!(h.degree(1).unwrap(), 0);
        assert!(h.degree(2).is_err());
    }

    #[test]
    fn edge_set_signs() {
        let g = parse(SIGMA4).unwrap();
        assert_eq!(g.edge_set_sign(&EdgeSet::new()).unwrap(), Sign::Plus);
        assert_eq!(g.edge_set_sign(&g.edge_set(&["b", "f"]).unwrap()).unwrap(), Sign::Plus);
        assert!(matches!(
            g.edge_set_sign(&g.edge_set(&["a", "h"]).unwrap()),
            Err(Error::UnsignedEdge(_))
        ));
        let mut c3 = SignedGraph::new(3);
        for (i, (u, v)) in [(0, 1), (1, 2), (0, 2)].into_iter().enumerate() {
            c3.add_edge(format!("e{i}"), u, v, Sign::Minus).unwrap();
        }
        assert_eq!(c3.edge_set_sign(&c3.all_edges()).unwrap(), Sign::Minus);
    }

    #[test]
    fn vertex_deletion_keeps_loose_edges() {
        let mut g = parse(SIGMA4).unwrap();
        g.add_loose("z").unwrap();
        let (h, map) = g.delete_vertices(&[2]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(map, vec![Some(0), Some(1), None, Some(2)]);
        assert_eq!(h.edge_ids(&h.all_edges()), ["a", "d", "e", "z"]);
    }
}
