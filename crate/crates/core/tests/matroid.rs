use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use sgraph::balance::{b, balance_partition};
use sgraph::frame::{
    balance_closure, closed_sets, closure, closure_via_circuits, enumerate_frame_circuits,
    is_independent, rank, FrameCircuitKind,
};
use sgraph::matrices::{edge_vector_at, incidence_matrix, rational_rank};
use sgraph::orientation::arrangement;
use sgraph::{EdgeSet, Limits, SignedGraph};
use sgraph_testkit as kit;

fn graph(seed: u64, n: usize, m: usize) -> SignedGraph {
    kit::random_graph(&mut kit::rng(seed), &kit::GraphSpec::any(n, m))
}

fn column_rank(g: &SignedGraph, s: &EdgeSet) -> usize {
    let cols: Vec<usize> = s.iter().collect();
    rational_rank(&incidence_matrix(g).select_columns(&cols).to_rational())
}

/// Minimal dependent column sets of the incidence matrix, by brute force.
fn minimal_dependent(g: &SignedGraph) -> Vec<EdgeSet> {
    let dependent = |s: &EdgeSet| column_rank(g, s) < s.len();
    let mut out: Vec<EdgeSet> = kit::all_subsets(g)
        .filter(|s| dependent(s) && s.iter().all(|e| {
            let mut t = s.clone();
            t.remove(e);
            !dependent(&t)
        }))
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn rank_law_and_circuits(seed in any::<u64>()) {
        let g = graph(seed, 5, 8);
        for s in kit::all_subsets(&g) {
            prop_assert_eq!(column_rank(&g, &s), g.order() - b(&g, &s));
            prop_assert_eq!(rank(&g, &s), g.order() - kit::b_oracle(&g, &s));
        }
        let mut circuits: Vec<EdgeSet> = enumerate_frame_circuits(&g, &Limits::default())
            .unwrap()
            .into_iter()
            .map(|c| c.edges)
            .collect();
        circuits.sort();
        prop_assert_eq!(circuits, minimal_dependent(&g));
    }

    #[test]
    fn closure_axioms_and_exchange(seed in any::<u64>()) {
        let g = graph(seed, 5, 7);
        let lim = Limits::default();
        let m = g.size();
        for s in kit::all_subsets(&g) {
            let c = closure(&g, &s);
            prop_assert!(s.is_subset(&c));
            prop_assert_eq!(&closure(&g, &c), &c);
            prop_assert_eq!(&closure_via_circuits(&g, &s, &lim).unwrap(), &c);
            for e in 0..m {
                let mut se = s.clone();
                se.insert(e);
                let ce = closure(&g, &se);
                prop_assert!(c.is_subset(&ce));
                for f in 0..m {
                    if ce.contains(f) && !c.contains(f) {
                        let mut sf = s.clone();
                        sf.insert(f);
                        prop_assert!(closure(&g, &sf).contains(e));
                    }
                }
            }
        }
    }

    #[test]
    fn closure_keeps_the_partition(seed in any::<u64>()) {
        let g = graph(seed, 6, 8);
        for s in kit::all_subsets(&g) {
            let p = balance_partition(&g, &s);
            prop_assert_eq!(&balance_partition(&g, &closure(&g, &s)), &p);
            prop_assert_eq!(&balance_partition(&g, &balance_closure(&g, &s)), &p);
        }
    }

    #[test]
    fn closure_is_linear_span(seed in any::<u64>()) {
        let g = graph(seed, 5, 7);
        for s in kit::all_subsets(&g) {
            let r = column_rank(&g, &s);
            let span: EdgeSet = (0..g.size())
                .filter(|&e| {
                    let mut t = s.clone();
                    t.insert(e);
                    column_rank(&g, &t) == r
                })
                .collect();
            prop_assert_eq!(closure(&g, &s), span);
        }
    }

    #[test]
    fn rank_axioms(seed in any::<u64>()) {
        let g = graph(seed, 5, 7);
        let subsets: Vec<EdgeSet> = kit::all_subsets(&g).collect();
        for s in &subsets {
            let r = rank(&g, s);
            prop_assert!(r <= s.len());
            for e in 0..g.size() {
                let mut t = s.clone();
                t.insert(e);
                let rt = rank(&g, &t);
                prop_assert!(rt == r || rt == r + 1);
            }
            let independent = s.iter().all(|e| {
                let mut t = s.clone();
                t.remove(e);
                !closure(&g, &t).contains(e)
            });
            prop_assert_eq!(is_independent(&g, s), independent);
        }
        for s in subsets.iter().step_by(3) {
            for t in subsets.iter().step_by(5) {
                let lhs = rank(&g, &s.union(t)) + rank(&g, &s.intersection(t));
                prop_assert!(lhs <= rank(&g, s) + rank(&g, t));
            }
        }
    }

    #[test]
    fn flats_match_intersection_lattice(seed in any::<u64>()) {
        let g = graph(seed, 4, 7);
        let hs = arrangement(&g);
        let n = g.order();
        let normals = |s: &EdgeSet| {
            let rows: Vec<Vec<num_rational::BigRational>> = s
                .iter()
                .map(|e| hs[e].normal(n).into_iter().map(|x| BigInt::from(x).into()).collect())
                .collect();
            sgraph::RationalMatrix::from_rows(n, rows).unwrap()
        };
        let mut subspaces = BTreeSet::new();
        for s in kit::all_subsets(&g) {
            let r = rational_rank(&normals(&s));
            prop_assert_eq!(n - r, b(&g, &s));
            let contains: EdgeSet = (0..g.size())
                .filter(|&e| {
                    let mut t = s.clone();
                    t.insert(e);
                    rational_rank(&normals(&t)) == r
                })
                .collect();
            subspaces.insert(contains);
        }
        prop_assert_eq!(subspaces.len(), closed_sets(&g, &Limits::default()).unwrap().len());
    }

    #[test]
    fn binary_dependence_without_half_edges(seed in any::<u64>()) {
        let mut spec = kit::GraphSpec::any(5, 7);
        spec.half_edges = false;
        let g = kit::random_graph(&mut kit::rng(seed), &spec);
        let circles = kit::circles_oracle(&g);
        for s in kit::all_subsets(&g) {
            let cols: Vec<Vec<i64>> = s.iter().map(|e| edge_vector_at(&g, e)).collect();
            let dependent = kit::gf2_rank(&cols) < s.len();
            let has_circle = circles.iter().any(|c| c.is_subset(&s))
                || s.iter().any(|e| g.edge(e).is_loose());
            prop_assert_eq!(dependent, has_circle);
        }
    }
}

#[test]
fn half_edges_break_binary_dependence() {
    let g = sgraph::graph::parse("sg 1\nn 2\nhalf h 1\nedge a 1 2 +\nhalf k 2\n").unwrap();
    let cols: Vec<Vec<i64>> = (0..3).map(|e| edge_vector_at(&g, e)).collect();
    assert_eq!(kit::gf2_rank(&cols), 2);
    assert!(kit::circles_oracle(&g).is_empty());
}

#[test]
fn circuit_kinds_are_well_formed() {
    let lim = Limits::default();
    for seed in 0..60 {
        let g = graph(seed, 6, 9);
        for c in enumerate_frame_circuits(&g, &lim).unwrap() {
            let sign = |s: &EdgeSet| g.edge_set_sign(s).unwrap();
            match c.kind {
                FrameCircuitKind::PositiveCircle => {
                    assert_eq!(sign(&c.edges), sgraph::Sign::Plus);
                }
                FrameCircuitKind::LooseEdge => assert_eq!(c.edges.len(), 1),
                FrameCircuitKind::TightHandcuff | FrameCircuitKind::LooseHandcuff => {
                    assert_eq!(c.circles.len(), 2);
                    for circ in &c.circles {
                        assert!(g.edges().iter().any(|e| e.is_half())
                            || sign(circ) == sgraph::Sign::Minus);
                    }
                    assert_eq!(c.path.is_empty(), c.kind == FrameCircuitKind::TightHandcuff);
                }
            }
            assert_eq!(rank(&g, &c.edges), c.edges.len() - 1);
        }
    }
}
