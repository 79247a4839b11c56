//! Seeded generators and brute-force oracles for tests.
//!
//! The oracles avoid the library's algorithms on purpose: they enumerate
//! switchings, edge subsets or colorations directly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgraph::{EdgeKind, EdgeSet, Sign, SignedGraph, SwitchingFunction};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of a random graph.
#[derive(Clone, Copy, Debug)]
pub struct GraphSpec {
    pub min_order: usize,
    pub max_order: usize,
    pub max_edges: usize,
    pub loops: bool,
    pub half_edges: bool,
    pub loose_edges: bool,
    /// Allow two links on the same pair of vertices.
    pub parallel: bool,
}

impl GraphSpec {
    /// Every edge kind, parallel edges allowed.
    pub fn any(max_order: usize, max_edges: usize) -> Self {
        GraphSpec {
            min_order: 1,
            max_order,
            max_edges,
            loops: true,
            half_edges: true,
            loose_edges: true,
            parallel: true,
        }
    }

    /// Links only, parallel edges allowed.
    pub fn links(max_order: usize, max_edges: usize) -> Self {
        GraphSpec {
            loops: false,
            half_edges: false,
            loose_edges: false,
            ..Self::any(max_order, max_edges)
        }
    }
}

fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A random signed graph; edge ids are `e1, e2, ...`.
pub fn random_graph(rng: &mut impl Rng, spec: &GraphSpec) -> SignedGraph {
    let n = rng.random_range(spec.min_order.max(1)..=spec.max_order.max(1));
    let m = rng.random_range(0..=spec.max_edges);
    let mut g = SignedGraph::new(n);
    let mut used = std::collections::HashSet::new();
    let mut tries = 0;
    while g.size() < m && tries < 50 * (m + 1) {
        tries += 1;
        let id = format!("e{}", g.size() + 1);
        let roll = rng.random_range(0..20);
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        let added = match roll {
            0 if spec.loose_edges => g.add_loose(id),
            1 | 2 if spec.half_edges => g.add_half(id, u),
            3 | 4 if spec.loops => g.add_edge(id, u, u, random_sign(rng)),
            _ if u != v => {
                let key = (u.min(v), u.max(v));
                if !spec.parallel && !used.insert(key) {
                    continue;
                }
                g.add_edge(id, u, v, random_sign(rng))
            }
            _ => continue,
        };
        added.expect("generated edge is valid");
    }
    g
}

/// A random signed simple graph on exactly `n` vertices, each pair an edge
/// with probability `p`.
pub fn random_simple(rng: &mut impl Rng, n: usize, p: f64) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                let id = format!("e{}", g.size() + 1);
                g.add_edge(id, u, v, random_sign(rng)).expect("valid");
            }
        }
    }
    g
}

pub fn random_switching(rng: &mut impl Rng, n: usize) -> SwitchingFunction {
    SwitchingFunction::from_signs((0..n).map(|_| random_sign(rng)).collect())
}

/// A random permutation of `0..n`.
pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `Γ` given by `edges` with the signs read from the bits of `signs` and a
/// half edge at every vertex in the bits of `halves`.
pub fn signed_over(n: usize, edges: &[(usize, usize)], signs: u64, halves: u64) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let s = if signs >> i & 1 == 1 { Sign::Minus } else { Sign::Plus };
        g.add_edge(format!("e{}", i + 1), u, v, s).expect("valid");
    }
    for v in 0..n {
        if halves >> v & 1 == 1 {
            g.add_half(format!("h{}", v + 1), v).expect("valid");
        }
    }
    g
}

/// A name, an order and an edge list.
pub type SmallBase = (&'static str, usize, Vec<(usize, usize)>);

/// Underlying graphs used for exhaustive signature sweeps.
pub fn small_bases() -> Vec<SmallBase> {
    vec![
        ("P3", 3, vec![(0, 1), (1, 2)]),
        ("C3", 3, vec![(0, 1), (1, 2), (0, 2)]),
        ("C4", 4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]),
        ("K4-e", 4, vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ]
}

/// Whether the components of `(V, S)` containing vertex set `comp` can be
/// switched all-positive, tried over every switching of `comp`.
fn switchable_positive(g: &SignedGraph, s: &EdgeSet, comp: &[usize]) -> bool {
    let inside = |v: usize| comp.contains(&v);
    let edges: Vec<&EdgeKind> = s
        .iter()
        .map(|i| &g.edge(i).kind)
        .filter(|k| match **k {
            EdgeKind::Link { u, .. } | EdgeKind::Loop { v: u, .. } | EdgeKind::Half { v: u } => inside(u),
            EdgeKind::Loose => false,
        })
        .collect();
    if edges.iter().any(|k| {
        matches!(
            k,
            EdgeKind::Half { .. } | EdgeKind::Loop { sign: Sign::Minus, .. }
        )
    }) {
        return false;
    }
    (0..1u64 << comp.len()).any(|mask| {
        let z = |v: usize| {
            let pos = comp.iter().position(|&w| w == v).expect("inside");
            if mask >> pos & 1 == 1 {
                -1
            } else {
                1
            }
        };
        edges.iter().all(|k| match **k {
            EdgeKind::Link { u, v, sign } => z(u) * sign.to_i64() * z(v) == 1,
            _ => true,
        })
    })
}

/// Vertex sets of the components of `(V, S)`, found by repeated scanning.
pub fn components_oracle(g: &SignedGraph, s: &EdgeSet) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for i in s.iter() {
            if let EdgeKind::Link { u, v, .. } = g.edge(i).kind {
                let m = label[u].min(label[v]);
                if label[u] != m || label[v] != m {
                    label[u] = m;
                    label[v] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut roots: Vec<usize> = label.clone();
    roots.sort_unstable();
    roots.dedup();
    roots
        .into_iter()
        .map(|r| (0..n).filter(|&v| label[v] == r).collect())
        .collect()
}

/// `b(S)` by brute-force switching of each component.
pub fn b_oracle(g: &SignedGraph, s: &EdgeSet) -> usize {
    components_oracle(g, s)
        .iter()
        .filter(|c| switchable_positive(g, s, c))
        .count()
}

/// Every circle of `g` as an edge set, found by testing every subset of the
/// links and loops: connected, all degrees 2.
pub fn circles_oracle(g: &SignedGraph) -> Vec<EdgeSet> {
    let ordinary: Vec<usize> = (0..g.size()).filter(|&i| g.edge(i).is_ordinary()).collect();
    assert!(ordinary.len() <= 20, "circle oracle is exponential");
    let mut out = Vec::new();
    for mask in 1u64..1 << ordinary.len() {
        let s: EdgeSet = ordinary
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        let mut deg = vec![0; g.order()];
        for i in s.iter() {
            for v in g.edge(i).ends() {
                deg[v] += 1;
            }
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        let touched = deg.iter().filter(|&&d| d == 2).count();
        let comps = components_oracle(g, &s);
        let nontrivial = comps
            .iter()
            .filter(|c| c.len() > 1 || deg[c[0]] == 2)
            .count();
        if touched > 0 && nontrivial == 1 {
            out.push(s);
        }
    }
    out
}

/// Balanced iff no half edge and every circle has positive sign product.
pub fn balanced_by_circles(g: &SignedGraph) -> bool {
    if g.edges().iter().any(|e| e.is_half()) {
        return false;
    }
    circles_oracle(g).iter().all(|c| {
        c.iter()
            .map(|i| g.edge(i).sign().expect("ordinary").to_i64())
            .product::<i64>()
            == 1
    })
}

/// Proper colorations counted by nested recursion.
pub fn count_colorings(g: &SignedGraph, k: i64, zero_free: bool) -> u64 {
    fn go(g: &SignedGraph, k: i64, zero_free: bool, c: &mut Vec<i64>) -> u64 {
        let v = c.len();
        if v == g.order() {
            let ok = g.edges().iter().all(|e| match e.kind {
                EdgeKind::Link { u, v, sign } => c[v] != sign.to_i64() * c[u],
                EdgeKind::Loop { v, sign } => c[v] != sign.to_i64() * c[v],
                EdgeKind::Half { v } => c[v] != 0,
                EdgeKind::Loose => false,
            });
            return u64::from(ok);
        }
        let mut total = 0;
        for x in -k..=k {
            if zero_free && x == 0 {
                continue;
            }
            c.push(x);
            total += go(g, k, zero_free, c);
            c.pop();
        }
        total
    }
    go(g, k, zero_free, &mut Vec::new())
}

/// Largest matching by trying every edge subset.
pub fn max_matching_oracle(n: usize, edges: &[(usize, usize)]) -> usize {
    (0u64..1 << edges.len())
        .filter(|&mask| {
            let mut seen = vec![false; n];
            edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .all(|(_, &(u, v))| !std::mem::replace(&mut seen[u], true) && !std::mem::replace(&mut seen[v], true))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// The complement of a simple graph on `n` vertices, as sorted pairs.
pub fn complement_edges(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let have: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !have.contains(e))
        .collect()
}

/// Rank over GF(2) of integer column vectors.
pub fn gf2_rank(columns: &[Vec<i64>]) -> usize {
    let mut rows: Vec<u64> = columns
        .iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .filter(|(_, x)| x.rem_euclid(2) == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r] >> bit & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// Every edge subset of `g` (bit `i` is edge `i`).
pub fn all_subsets(g: &SignedGraph) -> impl Iterator<Item = EdgeSet> + '_ {
    let m = g.size();
    (0u64..1 << m).map(move |mask| EdgeSet::from_mask(mask, m))
}
