//! Bidirected graphs, acyclic orientations, and the signed-graphic
//! hyperplane arrangement.
//!
//! An end direction `τ(v, e) = +` means the end points into `v`. A vertex is a
//! source when every end at it is `+` and a sink when every end is `-`.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::frame::enumerate_frame_circuits;
use crate::graph::{EdgeKind, Sign, SignedGraph};
use crate::limits::{self, Limits};
use crate::poly::IntPolynomial;

/// A signed graph with a direction on every edge end.
///
/// `tau[e]` lists the directions of the ends of edge `e`: slot 0 is at `u` and
/// slot 1 at `v` for a link `{u, v}`, both slots are at `v` for a loop, a half
/// edge has one slot and a loose edge none.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BidirectedGraph {
    graph: SignedGraph,
    tau: Vec<Vec<Sign>>,
}

fn end_count(kind: &EdgeKind) -> usize {
    match kind {
        EdgeKind::Link { .. } | EdgeKind::Loop { .. } => 2,
        EdgeKind::Half { .. } => 1,
        EdgeKind::Loose => 0,
    }
}

impl BidirectedGraph {
    /// Validate `σ(e) = −τ(v,e)τ(w,e)` on every link and loop.
    pub fn new(graph: SignedGraph, tau: Vec<Vec<Sign>>) -> Result<Self> {
        if tau.len() != graph.size() {
            return Err(Error::DimensionMismatch {
                expected: graph.size(),
                found: tau.len(),
            });
        }
        for (e, t) in graph.edges().iter().zip(&tau) {
            if t.len() != end_count(&e.kind) {
                return Err(Error::InvalidOrientation(e.id.clone()));
            }
            if let Some(s) = e.sign() {
                if s != -(t[0] * t[1]) {
                    return Err(Error::InvalidOrientation(e.id.clone()));
                }
            }
        }
        Ok(BidirectedGraph { graph, tau })
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn tau(&self) -> &[Vec<Sign>] {
        &self.tau
    }

    /// `(vertex, direction)` for every end of edge `e`.
    pub fn ends(&self, e: usize) -> Vec<(usize, Sign)> {
        let verts = match self.graph.edge(e).kind {
            EdgeKind::Link { u, v, .. } => vec![u, v],
            EdgeKind::Loop { v, .. } => vec![v, v],
            EdgeKind::Half { v } => vec![v],
            EdgeKind::Loose => vec![],
        };
        verts.into_iter().zip(self.tau[e].iter().copied()).collect()
    }

    /// `η_ve`: the sum of `τ` over the ends of `e` at `v`.
    pub fn eta(&self, v: usize, e: usize) -> i64 {
        self.ends(e)
            .into_iter()
            .filter(|&(w, _)| w == v)
            .map(|(_, s)| s.to_i64())
            .sum()
    }

    /// Reverse both ends of edge `e`.
    pub fn reorient(&self, e: usize) -> Self {
        let mut out = self.clone();
        for s in &mut out.tau[e] {
            *s = -*s;
        }
        out
    }

    /// Switch vertex `v`: reverse every end at `v` and switch the signature.
    pub fn switch_vertex(&self, v: usize) -> Result<Self> {
        self.graph.check_vertex(v)?;
        let mut tau = self.tau.clone();
        for (e, t) in tau.iter_mut().enumerate() {
            for (slot, (w, _)) in self.ends(e).into_iter().enumerate() {
                if w == v {
                    t[slot] = -t[slot];
                }
            }
        }
        let z = crate::balance::SwitchingFunction::from_set(self.graph.order(), &[v])?;
        let graph = crate::balance::switch(&self.graph, &z)?;
        BidirectedGraph::new(graph, tau)
    }
}

/// The orientation whose `η` reproduces the canonical edge vectors. A positive
/// loop gets `(+, −)`.
pub fn orient(g: &SignedGraph) -> BidirectedGraph {
    let tau = g
        .edges()
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Link { u, v, sign } => {
                // +1 at the lower endpoint, −σ at the higher one.
                if u < v {
                    vec![Sign::Plus, -sign]
                } else {
                    vec![-sign, Sign::Plus]
                }
            }
            EdgeKind::Loop {
                sign: Sign::Minus, ..
            } => vec![Sign::Plus, Sign::Plus],
            EdgeKind::Loop { .. } => vec![Sign::Plus, Sign::Minus],
            EdgeKind::Half { .. } => vec![Sign::Plus],
            EdgeKind::Loose => vec![],
        })
        .collect();
    BidirectedGraph::new(g.clone(), tau).expect("canonical orientation is consistent")
}

/// Directed ends `(vertex, slot-owner edge)` of a frame circuit, grouped so
/// the source/sink test is a scan.
struct CircuitEnds {
    /// For every end: (vertex, edge, slot).
    ends: Vec<(usize, usize, usize)>,
}

fn circuit_ends(b: &BidirectedGraph, edges: &EdgeSet) -> CircuitEnds {
    let mut ends = Vec::new();
    for e in edges.iter() {
        for (slot, (v, _)) in b.ends(e).into_iter().enumerate() {
            ends.push((v, e, slot));
        }
    }
    CircuitEnds { ends }
}

/// Whether the circuit has a vertex whose ends all agree.
fn has_source_or_sink(c: &CircuitEnds, tau: impl Fn(usize, usize) -> Sign) -> bool {
    let mut verts: Vec<usize> = c.ends.iter().map(|&(v, _, _)| v).collect();
    verts.sort_unstable();
    verts.dedup();
    verts.into_iter().any(|v| {
        let mut dirs = c
            .ends
            .iter()
            .filter(|&&(w, _, _)| w == v)
            .map(|&(_, e, s)| tau(e, s));
        let first = dirs.next().expect("vertex has an end");
        dirs.all(|d| d == first)
    })
}

/// Every frame circuit has a source or a sink.
pub fn is_acyclic(b: &BidirectedGraph, lim: &Limits) -> Result<bool> {
    let circuits = enumerate_frame_circuits(&b.graph, lim)?;
    Ok(circuits.iter().all(|c| {
        let ends = circuit_ends(b, &c.edges);
        has_source_or_sink(&ends, |e, s| b.tau[e][s])
    }))
}

/// Direction of slot 0 chosen by one bit; slot 1 is then forced by the sign.
fn tau_from_bits(g: &SignedGraph, bits: u64) -> Vec<Vec<Sign>> {
    let mut k = 0;
    g.edges()
        .iter()
        .map(|e| {
            let n = end_count(&e.kind);
            if n == 0 {
                return vec![];
            }
            let t0 = if bits >> k & 1 == 0 { Sign::Plus } else { Sign::Minus };
            k += 1;
            match e.sign() {
                Some(s) => vec![t0, -(s * t0)],
                None => vec![t0],
            }
        })
        .collect()
}

/// All orientations of `g`, in a fixed order.
pub fn all_orientations(g: &SignedGraph, lim: &Limits) -> Result<Vec<BidirectedGraph>> {
    let free = free_bits(g, lim)?;
    Ok((0..1u64 << free)
        .map(|bits| BidirectedGraph {
            graph: g.clone(),
            tau: tau_from_bits(g, bits),
        })
        .collect())
}

fn free_bits(g: &SignedGraph, lim: &Limits) -> Result<usize> {
    let ends: usize = g.edges().iter().map(|e| end_count(&e.kind)).sum();
    limits::check("orientation ends", ends, lim.max_ends)?;
    Ok(g.edges().iter().filter(|e| end_count(&e.kind) > 0).count())
}

/// Number of acyclic orientations, by exhaustive enumeration.
pub fn enumerate_acyclic(g: &SignedGraph, lim: &Limits) -> Result<u64> {
    let free = free_bits(g, lim)?;
    let circuits = enumerate_frame_circuits(g, lim)?;
    let probe = orient(g);
    let ends: Vec<CircuitEnds> = circuits.iter().map(|c| circuit_ends(&probe, &c.edges)).collect();
    Ok((0..1u64 << free)
        .into_par_iter()
        .filter(|&bits| {
            let tau = tau_from_bits(g, bits);
            ends.iter().all(|c| has_source_or_sink(c, |e, s| tau[e][s]))
        })
        .count() as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hyperplane {
    /// `x_j = sign · x_i` with `i < j`.
    Difference { i: usize, j: usize, sign: Sign },
    /// `x_i = 0`.
    Coordinate { i: usize },
    /// `0 = 0`.
    Degenerate,
}

impl Hyperplane {
    /// Normal vector of the hyperplane in dimension `n`.
    pub fn normal(&self, n: usize) -> Vec<i64> {
        let mut x = vec![0; n];
        match *self {
            Hyperplane::Difference { i, j, sign } => {
                x[j] = 1;
                x[i] = -sign.to_i64();
            }
            Hyperplane::Coordinate { i } => x[i] = 1,
            Hyperplane::Degenerate => {}
        }
        x
    }

    /// Sign of the defining form at a point; `0` on the hyperplane.
    pub fn side(&self, x: &[i64]) -> i64 {
        match *self {
            Hyperplane::Difference { i, j, sign } => (x[j] - sign.to_i64() * x[i]).signum(),
            Hyperplane::Coordinate { i } => x[i].signum(),
            Hyperplane::Degenerate => 0,
        }
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Hyperplane::Difference { i, j, sign } => {
                let s = if sign == Sign::Plus { "" } else { "-" };
                write!(f, "x{} = {}x{}", j + 1, s, i + 1)
            }
            Hyperplane::Coordinate { i } => write!(f, "x{} = 0", i + 1),
            Hyperplane::Degenerate => f.write_str("0 = 0"),
        }
    }
}

/// One hyperplane per edge, in edge order.
pub fn arrangement(g: &SignedGraph) -> Vec<Hyperplane> {
    g.edges()
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Link { u, v, sign } => Hyperplane::Difference {
                i: u.min(v),
                j: u.max(v),
                sign,
            },
            EdgeKind::Loop {
                v,
                sign: Sign::Minus,
            }
            | EdgeKind::Half { v } => Hyperplane::Coordinate { i: v },
            EdgeKind::Loop { .. } | EdgeKind::Loose => Hyperplane::Degenerate,
        })
        .collect()
}

/// Row-echelon basis over the integers, kept primitive.
#[derive(Clone, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<i64>)>,
}

impl Echelon {
    /// Insert `v`; returns whether the rank grew.
    fn insert(&mut self, mut v: Vec<i64>) -> bool {
        for (p, row) in &self.rows {
            let a = v[*p];
            if a == 0 {
                continue;
            }
            let b = row[*p];
            for (x, y) in v.iter_mut().zip(row) {
                *x = *x * b - y * a;
            }
            let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            if g > 1 {
                for x in &mut v {
                    *x /= g;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// `Σ_{S ⊆ E} (−1)^{|S|} λ^{dim ∩S}`, with each dimension found by linear
/// algebra on the hyperplane normals.
pub fn characteristic_polynomial(g: &SignedGraph, lim: &Limits) -> Result<IntPolynomial> {
    limits::check("characteristic-polynomial edges", g.size(), lim.max_edges)?;
    let n = g.order();
    let normals: Vec<Vec<i64>> = arrangement(g).iter().map(|h| h.normal(n)).collect();
    // counts[parity][rank]
    let mut counts = vec![[0i64; 2]; n + 1];
    fn walk(
        k: usize,
        normals: &[Vec<i64>],
        basis: &Echelon,
        size: usize,
        counts: &mut [[i64; 2]],
    ) {
        if k == normals.len() {
            counts[basis.rows.len()][size % 2] += 1;
            return;
        }
        walk(k + 1, normals, basis, size, counts);
        let mut with = basis.clone();
        with.insert(normals[k].clone());
        walk(k + 1, normals, &with, size + 1, counts);
    }
    walk(0, &normals, &Echelon::default(), 0, &mut counts);
    Ok((0..=n)
        .map(|r| IntPolynomial::monomial(counts[r][0] - counts[r][1], n - r))
        .sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionReport {
    pub region_count: u64,
    pub char_poly: IntPolynomial,
    pub degenerate: bool,
    pub acyclic_count: Option<u64>,
    pub sign_vector_regions: Option<u64>,
}

/// Regions of `H[Σ]` as `(−1)^n p(−1)`, optionally cross-checked by the
/// signed-permutation oracle and the acyclic-orientation count.
pub fn region_count(g: &SignedGraph, oracle: bool, lim: &Limits) -> Result<RegionReport> {
    let p = characteristic_polynomial(g, lim)?;
    let hs = arrangement(g);
    let degenerate = hs.contains(&Hyperplane::Degenerate);
    let signed = p.eval(-1) * if g.order().is_multiple_of(2) { 1 } else { -1 };
    let region_count = if degenerate { 0 } else { signed as u64 };
    let (acyclic_count, sign_vector_regions) = if oracle && !degenerate {
        limits::check("region oracle order", g.order(), lim.max_oracle_order)?;
        (
            Some(enumerate_acyclic(g, lim)?),
            Some(sign_vector_regions(g.order(), &hs)),
        )
    } else {
        (None, None)
    };
    Ok(RegionReport {
        region_count,
        char_poly: p,
        degenerate,
        acyclic_count,
        sign_vector_regions,
    })
}

/// Every point `(s_1 π(1), …, s_n π(n))` for a permutation `π` of `1..n` and
/// signs `s`, in a fixed order.
pub fn signed_permutation_points(n: usize) -> Vec<Vec<i64>> {
    let mut perms: Vec<Vec<i64>> = vec![vec![]];
    for k in 1..=n as i64 {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    perms.sort();
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in perms {
        for mask in 0..1u32 << n {
            out.push(
                p.iter()
                    .enumerate()
                    .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                    .collect(),
            );
        }
    }
    out
}

/// Distinct sign vectors of the signed-permutation points.
///
/// Every region of the full arrangement `x_i = ±x_j`, `x_i = 0` holds exactly
/// one such point, and a region of any subarrangement is a union of those
/// regions, so the count is exact for signed-graphic arrangements.
pub fn sign_vector_regions(n: usize, hs: &[Hyperplane]) -> u64 {
    let live: Vec<&Hyperplane> = hs.iter().filter(|h| **h != Hyperplane::Degenerate).collect();
    let seen: HashSet<Vec<i8>> = signed_permutation_points(n)
        .par_iter()
        .map(|x| live.iter().map(|h| h.side(x) as i8).collect())
        .collect();
    seen.len() as u64
}

/// A signed-permutation point of `R(τ)`: `Σ_v η_ve x_v > 0` for every edge.
pub fn region_witness(b: &BidirectedGraph) -> Option<Vec<i64>> {
    let g = b.graph();
    signed_permutation_points(g.order()).into_iter().find(|x| {
        (0..g.size()).all(|e| {
            b.ends(e)
                .into_iter()
                .map(|(v, s)| s.to_i64() * x[v])
                .sum::<i64>()
                > 0
        })
    })
}
