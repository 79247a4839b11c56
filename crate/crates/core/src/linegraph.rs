//! Line graphs of bidirected and signed link graphs.
//!
//! Line vertex `i` is source edge `i`. The line edge joining `e` and `f` at
//! their common vertex `v` has id `e-f@v` (1-based `v`), and its end at `e`
//! takes the direction of `e` at `v`.

use crate::catalog::SimpleGraph;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeKind, Sign, SignedGraph};
use crate::iso::{switching_isomorphism, SwitchingIsomorphism};
use crate::limits::Limits;
use crate::matrices::{adjacency_matrix, incidence_matrix, reduce, IntMatrix};
use crate::orientation::{orient, BidirectedGraph};

/// Where a line edge came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LineEdgeSource {
    pub e: usize,
    pub f: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraphResult {
    pub line: BidirectedGraph,
    pub provenance: Vec<LineEdgeSource>,
}

/// `Λ(B)`: one line edge per pair of source edges per shared endpoint, so
/// parallel source edges become doubly adjacent.
pub fn line_graph(b: &BidirectedGraph) -> Result<LineGraphResult> {
    let g = b.graph();
    g.require_link_graph()?;
    let ends: Vec<Vec<(usize, Sign)>> = (0..g.size()).map(|e| b.ends(e)).collect();
    let mut line = SignedGraph::new(g.size());
    let mut tau = Vec::new();
    let mut provenance = Vec::new();
    for e in 0..g.size() {
        for f in e + 1..g.size() {
            for &(v, te) in &ends[e] {
                let Some(&(_, tf)) = ends[f].iter().find(|&&(w, _)| w == v) else {
                    continue;
                };
                let id = format!("{}-{}@{}", g.edge(e).id, g.edge(f).id, v + 1);
                line.push(Edge {
                    id,
                    kind: EdgeKind::Link {
                        u: e,
                        v: f,
                        sign: -(te * tf),
                    },
                })?;
                tau.push(vec![te, tf]);
                provenance.push(LineEdgeSource { e, f, vertex: v });
            }
        }
    }
    Ok(LineGraphResult {
        line: BidirectedGraph::new(line, tau)?,
        provenance,
    })
}

/// The representative of `Λ[Σ]` given by the canonical orientation.
pub fn line_graph_class(g: &SignedGraph) -> Result<SignedGraph> {
    g.require_link_graph()?;
    Ok(line_graph(&orient(g))?.line.graph().clone())
}

/// `Λ̄(Σ)`: the line graph with its negative digons cancelled.
pub fn reduced_line_graph(g: &SignedGraph) -> Result<SignedGraph> {
    Ok(reduce(&line_graph_class(g)?))
}

/// `A(Λ(Σ))` built from adjacencies, and `2I − ΗᵀΗ` built from the
/// incidence matrix, both for the canonical orientation.
pub fn line_adjacency_identity(g: &SignedGraph) -> Result<(IntMatrix, IntMatrix)> {
    let a = adjacency_matrix(&line_graph_class(g)?);
    let h = incidence_matrix(g);
    let gram = h.transpose().mul(&h)?;
    let rhs = IntMatrix::identity(g.size()).scale(2).sub(&gram)?;
    Ok((a, rhs))
}

/// `−Γ(m_1, …, m_n)`: `−Γ` with `m_i` negative digons hung at `v_i`, each on
/// a new vertex. Digon edges are `d<i>.<t>+` and `d<i>.<t>-`.
pub fn digon_extension(base: &SimpleGraph, m: &[usize]) -> Result<SignedGraph> {
    if m.len() != base.order() {
        return Err(Error::DimensionMismatch {
            expected: base.order(),
            found: m.len(),
        });
    }
    let extra: usize = m.iter().sum();
    let mut g = SignedGraph::new(base.order() + extra);
    for (i, &(u, v)) in base.edges().iter().enumerate() {
        g.add_edge(format!("e{}", i + 1), u, v, Sign::Minus)?;
    }
    let mut next = base.order();
    for (i, &k) in m.iter().enumerate() {
        for t in 1..=k {
            for s in [Sign::Plus, Sign::Minus] {
                g.add_edge(format!("d{}.{}{}", i + 1, t, s.symbol()), i, next, s)?;
            }
            next += 1;
        }
    }
    Ok(g)
}

/// Hoffman's `Λ(Γ; m_1, …, m_n)` with every edge negative: `−Λ(Γ)` plus a
/// cocktail party graph `CP_{m_i}` joined to the line vertices at `v_i`.
/// Cocktail vertices `2t` and `2t + 1` of each block are the unmatched pair.
pub fn negative_generalized_line_graph(base: &SimpleGraph, m: &[usize]) -> Result<SignedGraph> {
    if m.len() != base.order() {
        return Err(Error::DimensionMismatch {
            expected: base.order(),
            found: m.len(),
        });
    }
    let le = base.edges().len();
    let total = le + 2 * m.iter().sum::<usize>();
    let mut g = SignedGraph::new(total);
    let mut id = 0;
    let mut add = |g: &mut SignedGraph, u: usize, v: usize| -> Result<()> {
        id += 1;
        g.add_edge(format!("g{id}"), u, v, Sign::Minus).map(|_| ())
    };
    for i in 0..le {
        for j in i + 1..le {
            let (a, b) = (base.edges()[i], base.edges()[j]);
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                add(&mut g, i, j)?;
            }
        }
    }
    let mut start = le;
    for (v, &k) in m.iter().enumerate() {
        let block: Vec<usize> = (start..start + 2 * k).collect();
        for (x, &p) in block.iter().enumerate() {
            for (y, &q) in block.iter().enumerate().skip(x + 1) {
                if x / 2 != y / 2 {
                    add(&mut g, p, q)?;
                }
            }
            for (i, &(a, b)) in base.edges().iter().enumerate() {
                if a == v || b == v {
                    add(&mut g, i, p)?;
                }
            }
        }
        start += 2 * k;
    }
    Ok(g)
}

/// `(−Γ(m), −Λ(Γ; m))` together with a switching isomorphism from
/// `Λ̄(−Γ(m))` to `−Λ(Γ; m)`; fails if none exists.
pub fn generalized_line_graph(
    base: &SimpleGraph,
    m: &[usize],
    lim: &Limits,
) -> Result<(SignedGraph, SignedGraph, SwitchingIsomorphism)> {
    let source = digon_extension(base, m)?;
    let target = negative_generalized_line_graph(base, m)?;
    let reduced = reduced_line_graph(&source)?;
    let iso = switching_isomorphism(&reduced, &target, lim)?.ok_or_else(|| {
        Error::IdentityFailed("reduced line graph is not switching isomorphic to the generalized line graph".into())
    })?;
    Ok((source, target, iso))
}

/// The Harary–Norman line graph of a digraph given as an all-positive
/// bidirected graph: the positive line edges, which record head-to-tail
/// meetings only.
pub fn harary_norman(b: &BidirectedGraph) -> Result<SimpleGraph> {
    let g = b.graph();
    if let Some(e) = g.edges().iter().find(|e| e.sign() != Some(Sign::Plus) || !e.is_link()) {
        return Err(Error::InvalidParameter(format!(
            "edge `{}` is not a positive link",
            e.id
        )));
    }
    let lg = line_graph(b)?;
    SimpleGraph::new(
        g.size(),
        lg.line.graph().edges().iter().filter_map(|e| match e.kind {
            EdgeKind::Link {
                u,
                v,
                sign: Sign::Plus,
            } => Some((u, v)),
            _ => None,
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::switching_equivalent;
    use crate::fixtures::SIGMA4;
    use crate::graph::parse;
    use crate::matrices::max_eigenvalue;
    use crate::minors::delete_edges;

    fn digraph(text: &str) -> BidirectedGraph {
        // Directed u -> v: the end at v points in.
        let g = parse(text).unwrap();
        let tau = g
            .edges()
            .iter()
            .map(|_| vec![Sign::Minus, Sign::Plus])
            .collect();
        BidirectedGraph::new(g, tau).unwrap()
    }

    #[test]
    fn small_line_graphs() {
        let one = parse("sg 1\nn 2\nedge a 1 2 +\n").unwrap();
        let l = line_graph_class(&one).unwrap();
        assert_eq!((l.order(), l.size()), (1, 0));
        let p = parse("sg 1\nn 3\nedge a 1 2 +\nedge b 2 3 -\n").unwrap();
        let l = line_graph_class(&p).unwrap();
        assert_eq!((l.order(), l.size()), (2, 1));
        assert_eq!(l.edge(0).id, "a-b@2");
        let half = parse("sg 1\nn 1\nhalf h 1\n").unwrap();
        assert!(line_graph_class(&half).is_err());
    }

    #[test]
    fn extraverted_negative_graph_has_negative_line_graph() {
        let c4 = parse("sg 1\nn 4\nedge a 1 2 -\nedge b 2 3 -\nedge c 3 4 -\nedge d 1 4 -\n").unwrap();
        let tau = vec![vec![Sign::Plus, Sign::Plus]; 4];
        let lg = line_graph(&BidirectedGraph::new(c4, tau).unwrap()).unwrap();
        assert!(lg.line.graph().edges().iter().all(|e| e.sign() == Some(Sign::Minus)));
    }

    #[test]
    fn parallel_edges_are_doubly_adjacent_and_reduce() {
        let g = parse("sg 1\nn 3\nedge a 1 2 +\nedge b 1 2 -\nedge c 2 3 +\n").unwrap();
        let l = line_graph_class(&g).unwrap();
        assert_eq!(l.edges().iter().filter(|e| e.id.starts_with("a-b@")).count(), 2);
        let r = reduced_line_graph(&g).unwrap();
        assert!(r.edges().iter().all(|e| !e.id.starts_with("a-b@")));
        assert_eq!(r.size(), 2);
    }

    #[test]
    fn adjacency_identity_on_sigma4_links() {
        let s = parse(SIGMA4).unwrap();
        let h = s.edge_index("h").unwrap();
        let links = delete_edges(&s, &[h].into_iter().collect());
        let (a, rhs) = line_adjacency_identity(&links).unwrap();
        assert_eq!(a, rhs);
        assert!(max_eigenvalue(&a).unwrap() <= 2.0 + 1e-9);
    }

    #[test]
    fn reorienting_switches_one_line_vertex() {
        let s = parse("sg 1\nn 4\nedge a 1 2 +\nedge b 2 3 -\nedge c 3 1 +\nedge d 3 4 -\n").unwrap();
        let b = orient(&s);
        let l1 = line_graph(&b).unwrap().line.graph().clone();
        let l2 = line_graph(&b.reorient(1)).unwrap().line.graph().clone();
        let z = switching_equivalent(&l1, &l2).unwrap().unwrap();
        let flipped = z.minus_set();
        assert!(flipped == vec![1] || flipped == vec![0, 2, 3]);
    }

    #[test]
    fn harary_norman_examples() {
        let path = digraph("sg 1\nn 3\nedge a 1 2 +\nedge b 2 3 +\n");
        assert_eq!(harary_norman(&path).unwrap().edges(), &[(0, 1)]);
        let meet = digraph("sg 1\nn 3\nedge a 1 2 +\nedge b 3 2 +\n");
        assert!(harary_norman(&meet).unwrap().edges().is_empty());
        let tri = digraph("sg 1\nn 3\nedge a 1 2 +\nedge b 2 3 +\nedge c 3 1 +\n");
        assert_eq!(harary_norman(&tri).unwrap().edges().len(), 3);
        let neg = orient(&parse("sg 1\nn 2\nedge a 1 2 -\n").unwrap());
        assert!(harary_norman(&neg).is_err());
    }

    #[test]
    fn generalized_line_graphs() {
        let lim = Limits::default();
        let c4 = SimpleGraph::cycle(4);
        let (src, tgt, _) = generalized_line_graph(&c4, &[1, 2, 0, 0], &lim).unwrap();
        assert_eq!((src.order(), src.size()), (7, 10));
        assert_eq!(tgt.order(), 10);
        let plain = negative_generalized_line_graph(&c4, &[0; 4]).unwrap();
        assert_eq!(plain.size(), 4);
        let k2 = SimpleGraph::complete(2);
        assert!(generalized_line_graph(&k2, &[1, 0], &lim).is_ok());
        assert!(generalized_line_graph(&k2, &[1], &lim).is_err());
    }
}
