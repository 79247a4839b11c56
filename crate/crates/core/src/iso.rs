//! Isomorphism up to switching, by backtracking over vertex bijections.

use std::collections::BTreeMap;

use crate::balance::SwitchingFunction;
use crate::error::Result;
use crate::graph::{EdgeKind, Sign, SignedGraph};
use crate::limits::{self, Limits};

/// `g2` is `g1` switched by `zeta` and then relabeled by `map`
/// (`map[v]` is the image of vertex `v` of `g1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingIsomorphism {
    pub map: Vec<usize>,
    pub zeta: SwitchingFunction,
}

/// The switching-invariant data of a signed graph: sign counts per vertex
/// pair and the unsigned-under-switching edges at each vertex.
struct Profile {
    n: usize,
    /// `(plus, minus)` link counts, indexed `[u][v]` symmetrically.
    pair: Vec<Vec<(u32, u32)>>,
    /// `(half, negative loop, positive loop)` at each vertex.
    local: Vec<(u32, u32, u32)>,
    loose: u32,
    degree: Vec<u32>,
}

impl Profile {
    fn new(g: &SignedGraph) -> Self {
        let n = g.order();
        let mut p = Profile {
            n,
            pair: vec![vec![(0, 0); n]; n],
            local: vec![(0, 0, 0); n],
            loose: 0,
            degree: vec![0; n],
        };
        for e in g.edges() {
            match e.kind {
                EdgeKind::Link { u, v, sign } => {
                    for (a, b) in [(u, v), (v, u)] {
                        let slot = &mut p.pair[a][b];
                        match sign {
                            Sign::Plus => slot.0 += 1,
                            Sign::Minus => slot.1 += 1,
                        }
                    }
                    p.degree[u] += 1;
                    p.degree[v] += 1;
                }
                EdgeKind::Half { v } => p.local[v].0 += 1,
                EdgeKind::Loop { v, sign: Sign::Minus } => p.local[v].1 += 1,
                EdgeKind::Loop { v, sign: Sign::Plus } => p.local[v].2 += 1,
                EdgeKind::Loose => p.loose += 1,
            }
        }
        p
    }
}

/// How the sign counts between a pair constrain `ζ(u)ζ(v)`: `None` if they
/// cannot match at all.
fn pair_relation(a: (u32, u32), b: (u32, u32)) -> Option<Relation> {
    let same = a == b;
    let flipped = a == (b.1, b.0);
    match (same, flipped) {
        (true, true) => Some(Relation::Free),
        (true, false) => Some(Relation::Fixed(Sign::Plus)),
        (false, true) => Some(Relation::Fixed(Sign::Minus)),
        (false, false) => None,
    }
}

#[derive(Clone, Copy)]
enum Relation {
    Free,
    Fixed(Sign),
}

/// Find a switching isomorphism from `g1` to `g2`, if one exists.
pub fn switching_isomorphism(
    g1: &SignedGraph,
    g2: &SignedGraph,
    lim: &Limits,
) -> Result<Option<SwitchingIsomorphism>> {
    limits::check("isomorphism order", g1.order(), lim.max_iso_order)?;
    let (p1, p2) = (Profile::new(g1), Profile::new(g2));
    if p1.n != p2.n || p1.loose != p2.loose || g1.size() != g2.size() {
        return Ok(None);
    }
    let n = p1.n;
    // Highest degree first keeps the early choices tight.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(p1.degree[v]));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(search(&p1, &p2, &order, 0, &mut map, &mut used))
}

fn search(
    p1: &Profile,
    p2: &Profile,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<SwitchingIsomorphism> {
    if depth == order.len() {
        return solve_switching(p1, p2, map).map(|zeta| SwitchingIsomorphism {
            map: map.clone(),
            zeta,
        });
    }
    let v = order[depth];
    for w in 0..p2.n {
        if used[w] || p1.degree[v] != p2.degree[w] || p1.local[v] != p2.local[w] {
            continue;
        }
        let fits = order[..depth]
            .iter()
            .all(|&u| pair_relation(p1.pair[v][u], p2.pair[w][map[u]]).is_some());
        if !fits {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if let Some(found) = search(p1, p2, order, depth + 1, map, used) {
            return Some(found);
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    None
}

/// Propagate `ζ` along the forced pairs; fail on a contradiction.
fn solve_switching(p1: &Profile, p2: &Profile, map: &[usize]) -> Option<SwitchingFunction> {
    let n = p1.n;
    let mut rel: BTreeMap<usize, Vec<(usize, Sign)>> = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            match pair_relation(p1.pair[u][v], p2.pair[map[u]][map[v]])? {
                Relation::Free => {}
                Relation::Fixed(s) => {
                    rel.entry(u).or_default().push((v, s));
                    rel.entry(v).or_default().push((u, s));
                }
            }
        }
    }
    let mut zeta: Vec<Option<Sign>> = vec![None; n];
    for root in 0..n {
        if zeta[root].is_some() {
            continue;
        }
        zeta[root] = Some(Sign::Plus);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let zu = zeta[u].expect("assigned");
            for &(v, s) in rel.get(&u).map_or(&[][..], |x| x) {
                let want = zu * s;
                match zeta[v] {
                    None => {
                        zeta[v] = Some(want);
                        stack.push(v);
                    }
                    Some(z) if z != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(SwitchingFunction::from_signs(
        zeta.into_iter().map(|z| z.expect("assigned")).collect(),
    ))
}

/// Apply a switching isomorphism to `g`: switch, then relabel.
pub fn apply(g: &SignedGraph, iso: &SwitchingIsomorphism) -> Result<SignedGraph> {
    let switched = crate::balance::switch(g, &iso.zeta)?;
    let mut out = SignedGraph::new(g.order());
    for e in switched.edges() {
        let kind = match e.kind {
            EdgeKind::Link { u, v, sign } => EdgeKind::Link {
                u: iso.map[u],
                v: iso.map[v],
                sign,
            },
            EdgeKind::Loop { v, sign } => EdgeKind::Loop { v: iso.map[v], sign },
            EdgeKind::Half { v } => EdgeKind::Half { v: iso.map[v] },
            EdgeKind::Loose => EdgeKind::Loose,
        };
        out.push(crate::graph::Edge {
            id: e.id.clone(),
            kind,
        })?;
    }
    Ok(out)
}
