//! Balance, switching, Harary bipartitions and balancing sets.

use crate::circles::{bfs_forest, enumerate_circles};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeKind, Sign, SignedGraph};
use crate::limits::{self, Limits};

/// A function `V -> {+, -}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction(vec![Sign::Plus; n])
    }

    /// The function that is `-` exactly on `x`.
    pub fn from_set(n: usize, x: &[usize]) -> Result<Self> {
        let mut z = vec![Sign::Plus; n];
        for &v in x {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            z[v] = Sign::Minus;
        }
        Ok(SwitchingFunction(z))
    }

    pub fn from_signs(signs: Vec<Sign>) -> Self {
        SwitchingFunction(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn at(&self, v: usize) -> Sign {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertices where the function is `-`.
    pub fn minus_set(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == Sign::Minus).collect()
    }

    pub fn negated(&self) -> Self {
        SwitchingFunction(self.0.iter().map(|&s| -s).collect())
    }
}

/// Balanced components of `(V, S)` and the vertices of unbalanced ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancePartition {
    /// Vertex sets of the balanced components, ordered by lowest vertex.
    pub pib: Vec<Vec<usize>>,
    /// Union of the vertex sets of the unbalanced components.
    pub v0: Vec<usize>,
    /// Number of balanced components.
    pub b: usize,
}

/// The result of running the switching algorithm on `(V, S)`.
#[derive(Clone, Debug)]
pub(crate) struct SwitchingRun {
    /// `zeta(v)` = sign of the tree path from the component root to `v`.
    pub zeta: Vec<Sign>,
    /// Component root (lowest vertex) of each vertex.
    pub root: Vec<usize>,
    /// Per root: whether the component is balanced.
    pub balanced: Vec<bool>,
}

pub(crate) fn run_switching(g: &SignedGraph, s: &EdgeSet) -> SwitchingRun {
    let forest = bfs_forest(g, s);
    let n = g.order();
    let mut zeta = vec![Sign::Plus; n];
    for &v in &forest.order {
        if let Some((e, p)) = forest.parent[v] {
            zeta[v] = zeta[p] * g.edge(e).sign().expect("tree edges are links");
        }
    }
    let mut balanced = vec![true; n];
    for i in s.iter() {
        match g.edge(i).kind {
            EdgeKind::Link { u, v, sign } => {
                if zeta[u] * sign * zeta[v] == Sign::Minus {
                    balanced[forest.root[u]] = false;
                }
            }
            EdgeKind::Loop { v, sign: Sign::Minus } | EdgeKind::Half { v } => {
                balanced[forest.root[v]] = false;
            }
            _ => {}
        }
    }
    SwitchingRun {
        zeta,
        root: forest.root,
        balanced,
    }
}

/// `pi_b(S)`, `V_0(S)` and `b(S)` by the switching algorithm.
pub fn balance_partition(g: &SignedGraph, s: &EdgeSet) -> BalancePartition {
    let run = run_switching(g, s);
    let n = g.order();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    let mut v0 = Vec::new();
    for v in 0..n {
        let r = run.root[v];
        if !run.balanced[r] {
            v0.push(v);
            continue;
        }
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(v);
    }
    BalancePartition {
        b: blocks.len(),
        pib: blocks,
        v0,
    }
}

/// `b(S)`.
pub fn b(g: &SignedGraph, s: &EdgeSet) -> usize {
    let run = run_switching(g, s);
    (0..g.order())
        .filter(|&v| run.root[v] == v && run.balanced[v])
        .count()
}

pub fn is_balanced(g: &SignedGraph, s: &EdgeSet) -> bool {
    let run = run_switching(g, s);
    run.balanced.iter().all(|&x| x) && s.iter().all(|i| !g.edge(i).is_half())
}

pub fn is_balanced_graph(g: &SignedGraph) -> bool {
    is_balanced(g, &g.all_edges())
}

/// `(V1, V2)` with negative edges exactly the crossing ones, when balanced.
/// The part holding vertex 0 comes first.
pub fn harary_bipartition(g: &SignedGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let all = g.all_edges();
    if !is_balanced(g, &all) {
        return None;
    }
    let run = run_switching(g, &all);
    let (v1, v2) = (0..g.order()).partition(|&v| run.zeta[v] == Sign::Plus);
    Some((v1, v2))
}

/// `sigma^zeta(e) = zeta(v) sigma(e) zeta(w)`; half and loose edges unchanged.
pub fn switch(g: &SignedGraph, z: &SwitchingFunction) -> Result<SignedGraph> {
    if z.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: z.len(),
        });
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Link { u, v, sign } => Edge {
                id: e.id.clone(),
                kind: EdgeKind::Link {
                    u,
                    v,
                    sign: z.at(u) * sign * z.at(v),
                },
            },
            _ => e.clone(),
        })
        .collect();
    SignedGraph::from_edges(g.order(), edges)
}

/// A switching function taking `g1` to `g2`, if any.
pub fn switching_equivalent(
    g1: &SignedGraph,
    g2: &SignedGraph,
) -> Result<Option<SwitchingFunction>> {
    if !g1.same_underlying(g2) {
        return Err(Error::UnderlyingMismatch(format!(
            "order {} with {} edges vs order {} with {} edges",
            g1.order(),
            g1.size(),
            g2.order(),
            g2.size()
        )));
    }
    let forest = bfs_forest(g1, &g1.all_edges());
    let mut zeta = vec![Sign::Plus; g1.order()];
    for &v in &forest.order {
        if let Some((e, p)) = forest.parent[v] {
            let s1 = g1.edge(e).sign().expect("link");
            let s2 = g2.edge(e).sign().expect("link");
            zeta[v] = zeta[p] * s1 * s2;
        }
    }
    let z = SwitchingFunction(zeta);
    let switched = switch(g1, &z)?;
    Ok((switched == *g2).then_some(z))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BalancingClass {
    None,
    Partial,
    Total,
}

impl BalancingClass {
    pub fn name(self) -> &'static str {
        match self {
            BalancingClass::None => "none",
            BalancingClass::Partial => "partial",
            BalancingClass::Total => "total",
        }
    }
}

/// Classify every edge as a total, partial, or non-balancing edge.
pub fn classify_balancing_edges(g: &SignedGraph) -> Vec<BalancingClass> {
    let all = g.all_edges();
    let b_all = b(g, &all);
    let balanced = is_balanced(g, &all);
    (0..g.size())
        .map(|i| {
            let mut rest = all.clone();
            rest.remove(i);
            if !balanced && is_balanced(g, &rest) {
                BalancingClass::Total
            } else if b(g, &rest) > b_all {
                BalancingClass::Partial
            } else {
                BalancingClass::None
            }
        })
        .collect()
}

/// Vertices whose deletion balances an unbalanced graph.
pub fn balancing_vertices(g: &SignedGraph) -> Vec<usize> {
    if is_balanced_graph(g) {
        return Vec::new();
    }
    (0..g.order())
        .filter(|&v| {
            let (h, _) = g.delete_vertices(&[v]).expect("valid vertex");
            is_balanced_graph(&h)
        })
        .collect()
}

/// Lexicographically first minimum-size `S` with `g \ S` balanced.
pub fn min_balancing_set(g: &SignedGraph, lim: &Limits) -> Result<EdgeSet> {
    let m = g.size();
    limits::check("balancing-set edges", m, lim.max_edges)?;
    let all = g.all_edges();
    for k in 0..=m {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let s: EdgeSet = pick.iter().copied().collect();
            if is_balanced(g, &all.difference(&s)) {
                return Ok(s);
            }
            if !next_combination(&mut pick, m) {
                break;
            }
        }
    }
    unreachable!("deleting every edge balances")
}

/// Advance `pick` to the next `k`-subset of `0..m` in lexicographic order.
pub(crate) fn next_combination(pick: &mut [usize], m: usize) -> bool {
    let k = pick.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if pick[i] < m - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Negative circles together with half edges (as one-vertex negative circles):
/// `(edge set, vertex set)` pairs.
pub(crate) fn negative_circles(
    g: &SignedGraph,
    s: &EdgeSet,
    lim: &Limits,
) -> Result<Vec<(EdgeSet, Vec<usize>)>> {
    let mut out = Vec::new();
    for c in enumerate_circles(g, s, lim)? {
        if g.edge_set_sign(c.edges())? == Sign::Minus {
            let mut vs = c.vertices().to_vec();
            vs.sort_unstable();
            out.push((c.edges().clone(), vs));
        }
    }
    for i in s.iter() {
        if let EdgeKind::Half { v } = g.edge(i).kind {
            out.push(([i].into_iter().collect(), vec![v]));
        }
    }
    out.sort();
    Ok(out)
}

pub fn has_two_disjoint_negative_circles(g: &SignedGraph, lim: &Limits) -> Result<bool> {
    let negs = negative_circles(g, &g.all_edges(), lim)?;
    for (i, (_, a)) in negs.iter().enumerate() {
        for (_, b) in &negs[i + 1..] {
            if a.iter().all(|v| !b.contains(v)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
