//! Frame circuits, balance-closure, closure, closed sets and rank.
//!
//! Half edges behave as negative loops throughout.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::balance::{b, balance_partition, negative_circles, run_switching};
use crate::circles::{enumerate_circles, link_adjacency};
use crate::edgeset::EdgeSet;
use crate::error::Result;
use crate::graph::{EdgeKind, Sign, SignedGraph};
use crate::limits::{self, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameCircuitKind {
    PositiveCircle,
    LooseEdge,
    TightHandcuff,
    LooseHandcuff,
}

impl FrameCircuitKind {
    pub fn name(self) -> &'static str {
        match self {
            FrameCircuitKind::PositiveCircle => "positive-circle",
            FrameCircuitKind::LooseEdge => "loose-edge",
            FrameCircuitKind::TightHandcuff => "tight-handcuff",
            FrameCircuitKind::LooseHandcuff => "loose-handcuff",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrameCircuit {
    pub kind: FrameCircuitKind,
    pub edges: EdgeSet,
    /// The constituent circle (one) or negative circles (two, for handcuffs).
    pub circles: Vec<EdgeSet>,
    /// Connecting path of a loose handcuff; empty otherwise.
    pub path: EdgeSet,
}

/// All frame circuits of `g`, sorted by edge set.
pub fn enumerate_frame_circuits(g: &SignedGraph, lim: &Limits) -> Result<Vec<FrameCircuit>> {
    limits::check("frame-circuit order", g.order(), lim.max_frame_order)?;
    limits::check("frame-circuit edges", g.size(), lim.max_edges)?;
    let all = g.all_edges();
    let mut found: BTreeMap<EdgeSet, FrameCircuit> = BTreeMap::new();
    for c in enumerate_circles(g, &all, lim)? {
        if g.edge_set_sign(c.edges())? == Sign::Plus {
            found.insert(
                c.edges().clone(),
                FrameCircuit {
                    kind: FrameCircuitKind::PositiveCircle,
                    edges: c.edges().clone(),
                    circles: vec![c.edges().clone()],
                    path: EdgeSet::new(),
                },
            );
        }
    }
    for (i, e) in g.edges().iter().enumerate() {
        if e.is_loose() {
            let s: EdgeSet = [i].into_iter().collect();
            found.insert(
                s.clone(),
                FrameCircuit {
                    kind: FrameCircuitKind::LooseEdge,
                    edges: s,
                    circles: Vec::new(),
                    path: EdgeSet::new(),
                },
            );
        }
    }
    let negs = negative_circles(g, &all, lim)?;
    let adj = link_adjacency(g, &all);
    for (i, (ca, va)) in negs.iter().enumerate() {
        for (cb, vb) in &negs[i + 1..] {
            let shared = va.iter().filter(|v| vb.contains(v)).count();
            if shared == 1 {
                let edges = ca.union(cb);
                found.entry(edges.clone()).or_insert(FrameCircuit {
                    kind: FrameCircuitKind::TightHandcuff,
                    edges,
                    circles: vec![ca.clone(), cb.clone()],
                    path: EdgeSet::new(),
                });
            } else if shared == 0 {
                for path in connecting_paths(&adj, g.order(), va, vb) {
                    let edges = ca.union(cb).union(&path);
                    found.entry(edges.clone()).or_insert(FrameCircuit {
                        kind: FrameCircuitKind::LooseHandcuff,
                        edges,
                        circles: vec![ca.clone(), cb.clone()],
                        path,
                    });
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Simple paths from a vertex of `a` to a vertex of `b` whose interior avoids
/// both vertex sets.
fn connecting_paths(
    adj: &[Vec<(usize, usize)>],
    n: usize,
    a: &[usize],
    b: &[usize],
) -> Vec<EdgeSet> {
    let mut blocked = vec![false; n];
    for &v in a.iter().chain(b) {
        blocked[v] = true;
    }
    let mut out = Vec::new();
    let mut path = Vec::new();
    fn walk(
        adj: &[Vec<(usize, usize)>],
        at: usize,
        b: &[usize],
        blocked: &mut [bool],
        path: &mut Vec<usize>,
        out: &mut Vec<EdgeSet>,
    ) {
        for &(e, w) in &adj[at] {
            if b.contains(&w) {
                out.push(path.iter().copied().chain([e]).collect());
            } else if !blocked[w] {
                blocked[w] = true;
                path.push(e);
                walk(adj, w, b, blocked, path, out);
                path.pop();
                blocked[w] = false;
            }
        }
    }
    for &s in a {
        walk(adj, s, b, &mut blocked, &mut path, &mut out);
    }
    out
}

/// Classify `s` as a frame circuit by its structure alone.
pub fn is_frame_circuit(g: &SignedGraph, s: &EdgeSet) -> Option<FrameCircuit> {
    if s.is_empty() {
        return None;
    }
    if s.iter().any(|i| g.edge(i).is_loose()) {
        return (s.len() == 1).then(|| FrameCircuit {
            kind: FrameCircuitKind::LooseEdge,
            edges: s.clone(),
            circles: Vec::new(),
            path: EdgeSet::new(),
        });
    }
    // Degrees with half edges counted like loops.
    let mut deg = vec![0usize; g.order()];
    for i in s.iter() {
        match g.edge(i).kind {
            EdgeKind::Link { u, v, .. } => {
                deg[u] += 1;
                deg[v] += 1;
            }
            EdgeKind::Loop { v, .. } | EdgeKind::Half { v } => deg[v] += 2,
            EdgeKind::Loose => unreachable!(),
        }
    }
    let touched: Vec<usize> = (0..g.order()).filter(|&v| deg[v] > 0).collect();
    if touched.iter().any(|&v| deg[v] < 2) {
        return None;
    }
    let comp = g.components(s);
    if touched.iter().any(|&v| comp[v] != comp[touched[0]]) {
        return None;
    }
    // A connected graph without leaves has cyclomatic number 1 (a circle) or
    // 2 (theta or handcuff) when |E| - |V| is 0 or 1.
    let unlimited = Limits {
        max_edges: usize::MAX,
        ..Limits::default()
    };
    let mut cycles: Vec<EdgeSet> = enumerate_circles(g, s, &unlimited)
        .ok()?
        .into_iter()
        .map(|c| c.edges().clone())
        .collect();
    cycles.extend(
        s.iter()
            .filter(|&i| g.edge(i).is_half())
            .map(|i| [i].into_iter().collect::<EdgeSet>()),
    );
    let negative = |c: &EdgeSet| {
        c.iter().any(|i| g.edge(i).is_half())
            || g.edge_set_sign(c).is_ok_and(|x| x == Sign::Minus)
    };
    if s.len() == touched.len() {
        let c = &cycles[0];
        return (!negative(c)).then(|| FrameCircuit {
            kind: FrameCircuitKind::PositiveCircle,
            edges: s.clone(),
            circles: vec![c.clone()],
            path: EdgeSet::new(),
        });
    }
    if s.len() != touched.len() + 1 || cycles.len() != 2 {
        return None;
    }
    if !negative(&cycles[0]) || !negative(&cycles[1]) {
        return None;
    }
    let path = s.difference(&cycles[0].union(&cycles[1]));
    let kind = if path.is_empty() {
        FrameCircuitKind::TightHandcuff
    } else {
        FrameCircuitKind::LooseHandcuff
    };
    Some(FrameCircuit {
        kind,
        edges: s.clone(),
        circles: cycles,
        path,
    })
}

/// `bcl(S)`: add every edge that completes a positive circle with `S`, and all
/// loose edges.
pub fn balance_closure(g: &SignedGraph, s: &EdgeSet) -> EdgeSet {
    let run = run_switching(g, s);
    let adj = link_adjacency(g, s);
    let mut out = s.clone();
    for (i, e) in g.edges().iter().enumerate() {
        if s.contains(i) {
            continue;
        }
        let add = match e.kind {
            EdgeKind::Loose => true,
            EdgeKind::Loop { sign, .. } => sign == Sign::Plus,
            EdgeKind::Half { .. } => false,
            EdgeKind::Link { u, v, sign } => {
                if run.root[u] != run.root[v] {
                    false
                } else if run.balanced[run.root[u]] {
                    run.zeta[u] * run.zeta[v] == sign
                } else {
                    has_path_of_sign(g, &adj, u, v, sign)
                }
            }
        };
        if add {
            out.insert(i);
        }
    }
    out
}

/// Whether some simple `u`-`v` path in `adj` has sign `want`.
fn has_path_of_sign(
    g: &SignedGraph,
    adj: &[Vec<(usize, usize)>],
    u: usize,
    v: usize,
    want: Sign,
) -> bool {
    fn go(
        g: &SignedGraph,
        adj: &[Vec<(usize, usize)>],
        at: usize,
        v: usize,
        sign: Sign,
        want: Sign,
        seen: &mut [bool],
    ) -> bool {
        if at == v {
            return sign == want;
        }
        for &(e, w) in &adj[at] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            let s = sign * g.edge(e).sign().expect("link");
            if go(g, adj, w, v, s, want, seen) {
                return true;
            }
            seen[w] = false;
        }
        false
    }
    let mut seen = vec![false; g.order()];
    seen[u] = true;
    go(g, adj, u, v, Sign::Plus, want, &mut seen)
}

/// `clos(S) = (E:V_0(S)) ∪ bcl(S_1) ∪ .. ∪ bcl(S_k) ∪ E_0`.
pub fn closure(g: &SignedGraph, s: &EdgeSet) -> EdgeSet {
    let part = balance_partition(g, s);
    let mut in_v0 = vec![false; g.order()];
    for &v in &part.v0 {
        in_v0[v] = true;
    }
    let mut out: EdgeSet = (0..g.size())
        .filter(|&i| g.edge(i).vertices().iter().all(|&v| in_v0[v]))
        .collect();
    let comp = g.components(s);
    for block in &part.pib {
        let label = comp[block[0]];
        let si: EdgeSet = s
            .iter()
            .filter(|&i| g.edge(i).vertices().first().is_some_and(|&v| comp[v] == label))
            .collect();
        out = out.union(&balance_closure(g, &si));
    }
    out
}

/// `S ∪ {e : some frame circuit C has e ∈ C ⊆ S ∪ e}`.
pub fn closure_via_circuits(g: &SignedGraph, s: &EdgeSet, lim: &Limits) -> Result<EdgeSet> {
    let circuits = enumerate_frame_circuits(g, lim)?;
    Ok(closure_from_circuits(&circuits, s))
}

/// The same, over a precomputed circuit list.
pub fn closure_from_circuits(circuits: &[FrameCircuit], s: &EdgeSet) -> EdgeSet {
    let mut out = s.clone();
    for c in circuits {
        let outside = c.edges.difference(s);
        if outside.len() == 1 {
            out = out.union(&outside);
        }
    }
    out
}

/// The closed sets of `g` ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSetLattice {
    /// Closed sets sorted by size, then lexicographically.
    pub elements: Vec<EdgeSet>,
    /// `leq[i][j]` iff `elements[i] ⊆ elements[j]`.
    pub leq: Vec<Vec<bool>>,
}

impl ClosedSetLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> &EdgeSet {
        &self.elements[0]
    }

    pub fn top(&self) -> &EdgeSet {
        self.elements.last().expect("E is closed")
    }

    /// Elements covering `elements[i]`.
    pub fn covers(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| {
                j != i
                    && self.leq[i][j]
                    && !(0..self.len()).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j])
            })
            .collect()
    }
}

pub fn closed_sets(g: &SignedGraph, lim: &Limits) -> Result<ClosedSetLattice> {
    let m = g.size();
    limits::check("lattice edges", m, lim.max_lattice_edges)?;
    let mut elements: Vec<EdgeSet> = (0..1u64 << m)
        .into_par_iter()
        .filter_map(|mask| {
            let s = EdgeSet::from_mask(mask, m);
            (closure(g, &s) == s).then_some(s)
        })
        .collect();
    elements.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let leq = elements
        .iter()
        .map(|a| elements.iter().map(|b| a.is_subset(b)).collect())
        .collect();
    Ok(ClosedSetLattice { elements, leq })
}

/// Frame-matroid rank `n - b(S)`.
pub fn rank(g: &SignedGraph, s: &EdgeSet) -> usize {
    g.order() - b(g, s)
}

pub fn is_independent(g: &SignedGraph, s: &EdgeSet) -> bool {
    rank(g, s) == s.len()
}
