//! Deletion and contraction.
//!
//! Minors keep the ids and relative order of the surviving edges, so an edge
//! set of a minor is translated back and forth through [`carry`].

use crate::balance::run_switching;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeKind, Sign, SignedGraph};

/// Provenance of a minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorTrace {
    pub deleted: EdgeSet,
    pub contracted: EdgeSet,
    /// Image of every source vertex; `None` when the vertex was absorbed.
    pub vertex_image: Vec<Option<usize>>,
}

/// Translate an edge set of `from` into the matching edge set of `to`, by id.
pub fn carry(from: &SignedGraph, s: &EdgeSet, to: &SignedGraph) -> Result<EdgeSet> {
    s.iter().map(|i| to.edge_index(&from.edge(i).id)).collect()
}

/// `g \ S`: same vertices, edges of `s` removed.
pub fn delete_edges(g: &SignedGraph, s: &EdgeSet) -> SignedGraph {
    g.restrict(&g.all_edges().difference(s))
}

/// Rebuild `g` without the edges of `gone`, sending vertex `v` to `image[v]`
/// and multiplying edge signs by `zeta` at both ends. An edge end at an
/// absorbed vertex disappears: links become half edges, and loops and half
/// edges become loose edges.
fn rebuild(
    g: &SignedGraph,
    gone: &EdgeSet,
    image: &[Option<usize>],
    order: usize,
    zeta: &[Sign],
) -> SignedGraph {
    let mut edges = Vec::with_capacity(g.size());
    for (i, e) in g.edges().iter().enumerate() {
        if gone.contains(i) {
            continue;
        }
        let kind = match e.kind {
            EdgeKind::Link { u, v, sign } => match (image[u], image[v]) {
                (Some(a), Some(b)) => {
                    let sign = zeta[u] * sign * zeta[v];
                    if a == b {
                        EdgeKind::Loop { v: a, sign }
                    } else {
                        EdgeKind::Link { u: a, v: b, sign }
                    }
                }
                (Some(a), None) | (None, Some(a)) => EdgeKind::Half { v: a },
                (None, None) => EdgeKind::Loose,
            },
            EdgeKind::Loop { v, sign } => match image[v] {
                Some(a) => EdgeKind::Loop { v: a, sign },
                None => EdgeKind::Loose,
            },
            EdgeKind::Half { v } => match image[v] {
                Some(a) => EdgeKind::Half { v: a },
                None => EdgeKind::Loose,
            },
            EdgeKind::Loose => EdgeKind::Loose,
        };
        edges.push(Edge {
            id: e.id.clone(),
            kind,
        });
    }
    SignedGraph::from_edges(order, edges).expect("images are in range")
}

/// `g / e` by the single-edge case table.
pub fn contract_edge(g: &SignedGraph, id: &str) -> Result<(SignedGraph, MinorTrace)> {
    let i = g.edge_index(id)?;
    let n = g.order();
    let gone: EdgeSet = [i].into_iter().collect();
    let mut zeta = vec![Sign::Plus; n];
    let image: Vec<Option<usize>> = match g.edge(i).kind {
        EdgeKind::Link { u, v, sign } => {
            let (lo, hi) = (u.min(v), u.max(v));
            if sign == Sign::Minus {
                zeta[hi] = Sign::Minus;
            }
            (0..n)
                .map(|w| {
                    Some(match w.cmp(&hi) {
                        std::cmp::Ordering::Less => w,
                        std::cmp::Ordering::Equal => lo,
                        std::cmp::Ordering::Greater => w - 1,
                    })
                })
                .collect()
        }
        EdgeKind::Loop {
            sign: Sign::Plus, ..
        }
        | EdgeKind::Loose => (0..n).map(Some).collect(),
        EdgeKind::Loop { v, .. } | EdgeKind::Half { v } => (0..n)
            .map(|w| match w.cmp(&v) {
                std::cmp::Ordering::Less => Some(w),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(w - 1),
            })
            .collect(),
    };
    let order = match g.edge(i).kind {
        EdgeKind::Loop {
            sign: Sign::Plus, ..
        }
        | EdgeKind::Loose => n,
        _ => n - 1,
    };
    let h = rebuild(g, &gone, &image, order, &zeta);
    Ok((
        h,
        MinorTrace {
            deleted: EdgeSet::new(),
            contracted: gone,
            vertex_image: image,
        },
    ))
}

/// `g / S`: balanced components of `S` shrink to single vertices, `V_0(S)`
/// vanishes. The result is the canonical representative obtained by switching
/// each balanced component of `S` all-positive along its BFS tree.
pub fn contract_set(g: &SignedGraph, s: &EdgeSet) -> (SignedGraph, MinorTrace) {
    let run = run_switching(g, s);
    let n = g.order();
    let mut block_of_root = vec![None; n];
    let mut next = 0;
    let mut image = vec![None; n];
    for v in 0..n {
        let r = run.root[v];
        if !run.balanced[r] {
            continue;
        }
        // Roots are the lowest vertex of their component, so blocks are
        // numbered in order of their minimum.
        let slot = *block_of_root[r].get_or_insert_with(|| {
            next += 1;
            next - 1
        });
        image[v] = Some(slot);
    }
    let h = rebuild(g, s, &image, next, &run.zeta);
    (
        h,
        MinorTrace {
            deleted: EdgeSet::new(),
            contracted: s.clone(),
            vertex_image: image,
        },
    )
}

/// `(g \ D) / C` for disjoint edge sets `d`, `c` of `g`.
pub fn minor(g: &SignedGraph, d: &EdgeSet, c: &EdgeSet) -> Result<(SignedGraph, MinorTrace)> {
    if !d.is_disjoint(c) {
        return Err(Error::InvalidParameter(
            "deleted and contracted sets overlap".into(),
        ));
    }
    let kept = delete_edges(g, d);
    let (h, mut trace) = contract_set(&kept, &carry(g, c, &kept)?);
    trace.deleted = d.clone();
    trace.contracted = c.clone();
    Ok((h, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::switching_equivalent;
    use crate::fixtures::SIGMA4;
    use crate::graph::parse;
    use crate::matrices::adjacency_matrix;

    #[test]
    fn deletion() {
        let g = parse(SIGMA4).unwrap();
        assert_eq!(delete_edges(&g, &EdgeSet::new()), g);
        let none = delete_edges(&g, &g.all_edges());
        assert_eq!((none.order(), none.size()), (4, 0));
        let h = delete_edges(&g, &g.edge_set(&["d"]).unwrap());
        assert_eq!(adjacency_matrix(&h).get(0, 3), 1);
    }

    #[test]
    fn contract_positive_link_of_path() {
        let p = parse("sg 1\nn 3\nedge a 1 2 +\nedge b 2 3 +\n").unwrap();
        let (h, t) = contract_edge(&p, "a").unwrap();
        assert_eq!(h.to_sg_string(), "sg 1\nn 2\nedge b 1 2 +\n");
        assert_eq!(t.vertex_image, vec![Some(0), Some(0), Some(1)]);
    }

    #[test]
    fn contract_negative_loop_makes_half_edges() {
        let g = parse("sg 1\nn 3\nedge g 1 1 -\nedge a 1 2 +\nedge l 1 1 +\nhalf h 1\nedge b 2 3 -\n")
            .unwrap();
        let (h, t) = contract_edge(&g, "g").unwrap();
        assert_eq!(
            h.to_sg_string(),
            "sg 1\nn 2\nhalf a 1\nloose l\nloose h\nedge b 1 2 -\n"
        );
        assert_eq!(t.vertex_image, vec![None, Some(0), Some(1)]);
    }

    #[test]
    fn contract_digon_edge_leaves_negative_loop() {
        let g = parse(SIGMA4).unwrap();
        let (h, _) = contract_edge(&g, "e").unwrap();
        let d = h.edge(h.edge_index("d").unwrap());
        assert_eq!(d.kind, EdgeKind::Loop { v: 0, sign: Sign::Minus });
        let (h2, _) = contract_edge(&g, "d").unwrap();
        let e = h2.edge(h2.edge_index("e").unwrap());
        assert_eq!(e.kind, EdgeKind::Loop { v: 0, sign: Sign::Minus });
    }

    #[test]
    fn contract_set_basics() {
        let g = parse(SIGMA4).unwrap();
        let (h, _) = contract_set(&g, &EdgeSet::new());
        assert_eq!(h, g);

        // Spanning tree of a balanced connected graph.
        let b = parse("sg 1\nn 3\nedge a 1 2 -\nedge b 2 3 -\nedge c 1 3 +\nedge d 1 3 -\n").unwrap();
        let (h, _) = contract_set(&b, &b.edge_set(&["a", "b"]).unwrap());
        assert_eq!(h.to_sg_string(), "sg 1\nn 1\nedge c 1 1 +\nedge d 1 1 -\n");

        // Unbalanced component with a loop vanishes, loop becomes loose.
        let u = parse("sg 1\nn 3\nedge a 1 2 -\nedge b 1 2 +\nedge l 2 2 +\n").unwrap();
        let (h, t) = contract_set(&u, &u.edge_set(&["a", "b"]).unwrap());
        assert_eq!(h.to_sg_string(), "sg 1\nn 1\nloose l\n");
        assert_eq!(t.vertex_image, vec![None, None, Some(0)]);
    }

    #[test]
    fn single_edge_routes_agree() {
        let g = parse(SIGMA4).unwrap();
        for e in g.edges() {
            let (a, ta) = contract_edge(&g, &e.id).unwrap();
            let (b, tb) = contract_set(&g, &g.edge_set(&[&e.id]).unwrap());
            assert_eq!(ta.vertex_image, tb.vertex_image);
            assert!(switching_equivalent(&a, &b).unwrap().is_some(), "{}", e.id);
        }
    }

    #[test]
    fn minor_rejects_overlap() {
        let g = parse(SIGMA4).unwrap();
        let s = g.edge_set(&["a"]).unwrap();
        assert!(minor(&g, &s, &s).is_err());
    }
}
