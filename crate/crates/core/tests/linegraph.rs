use proptest::prelude::*;
use rand::Rng;
use sgraph::balance::{switch, switching_equivalent};
use sgraph::linegraph::{line_adjacency_identity, line_graph, reduced_line_graph};
use sgraph::matrices::{adjacency_matrix, incidence_matrix, max_eigenvalue, min_eigenvalue};
use sgraph::orientation::orient;
use sgraph::{BidirectedGraph, EdgeKind, IntMatrix, SignedGraph, SwitchingFunction};
use sgraph_testkit as kit;

fn link_graph(seed: u64, n: usize, m: usize) -> SignedGraph {
    kit::random_graph(&mut kit::rng(seed), &kit::GraphSpec::links(n, m))
}

/// Reorient random edges, then switch random vertices.
fn scramble(b: &BidirectedGraph, seed: u64) -> BidirectedGraph {
    let mut rng = kit::rng(seed);
    let mut out = b.clone();
    for e in 0..b.graph().size() {
        if rng.random_bool(0.5) {
            out = out.reorient(e);
        }
    }
    for v in 0..b.graph().order() {
        if rng.random_bool(0.5) {
            out = out.switch_vertex(v).unwrap();
        }
    }
    out
}

/// Check the closed-walk sign rule on every closed walk of `lambda` of
/// length at most `max_len` that starts at line vertex 0.
fn check_walk_signs(g: &SignedGraph, lambda: &SignedGraph, shared: &[usize], max_len: usize) {
    let mut adj = vec![Vec::new(); lambda.order()];
    for (k, e) in lambda.edges().iter().enumerate() {
        if let EdgeKind::Link { u, v, .. } = e.kind {
            adj[u].push((k, v));
            adj[v].push((k, u));
        }
    }
    // `steps` holds the line edges used; the walk is over line vertices.
    fn go(
        g: &SignedGraph,
        lambda: &SignedGraph,
        shared: &[usize],
        adj: &[Vec<(usize, usize)>],
        at: usize,
        steps: &mut Vec<(usize, usize)>,
        max_len: usize,
    ) {
        if !steps.is_empty() && at == 0 {
            let l = steps.len();
            let sign_lambda: i64 = steps
                .iter()
                .map(|&(k, _)| lambda.edge(k).sign().unwrap().to_i64())
                .product();
            // v_i is the source vertex where step i happens; the source edge
            // reached by step i sits between v_i and v_{i+1}.
            let verts: Vec<usize> = steps.iter().map(|&(k, _)| shared[k]).collect();
            let mut m = 0;
            let mut sign_base = 1;
            for i in 0..l {
                if verts[i] != verts[(i + 1) % l] {
                    m += 1;
                    sign_base *= g.edge(steps[i].1).sign().unwrap().to_i64();
                }
            }
            let parity = if (l - m).is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(sign_lambda, parity * sign_base, "walk {steps:?}");
        }
        if steps.len() == max_len {
            return;
        }
        for &(k, next) in &adj[at] {
            steps.push((k, next));
            go(g, lambda, shared, adj, next, steps, max_len);
            steps.pop();
        }
    }
    go(g, lambda, shared, &adj, 0, &mut Vec::new(), max_len);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn line_adjacency_is_two_minus_gram(seed in any::<u64>()) {
        let g = link_graph(seed, 6, 10);
        let (a, rhs) = line_adjacency_identity(&g).unwrap();
        prop_assert_eq!(&a, &rhs);
        let h = incidence_matrix(&g);
        let direct = adjacency_matrix(line_graph(&orient(&g)).unwrap().line.graph());
        let gram = IntMatrix::identity(g.size()).scale(2).sub(&h.transpose().mul(&h).unwrap()).unwrap();
        prop_assert_eq!(direct, gram);
    }

    #[test]
    fn reduced_line_graphs_have_eigenvalues_at_most_two(seed in any::<u64>()) {
        let g = link_graph(seed, 6, 10);
        let r = reduced_line_graph(&g).unwrap();
        if r.order() > 0 {
            prop_assert!(max_eigenvalue(&adjacency_matrix(&r)).unwrap() <= 2.0 + 1e-9);
            prop_assert!(min_eigenvalue(&adjacency_matrix(&r.negated())).unwrap() >= -2.0 - 1e-9);
        }
    }

    #[test]
    fn line_class_is_orientation_and_switching_independent(seed in any::<u64>()) {
        let g = link_graph(seed, 6, 10);
        let b1 = scramble(&orient(&g), seed ^ 11);
        let b2 = scramble(&orient(&g), seed ^ 22);
        let l1 = line_graph(&b1).unwrap().line.graph().clone();
        let l2 = line_graph(&b2).unwrap().line.graph().clone();
        prop_assert!(switching_equivalent(&l1, &l2).unwrap().is_some());
    }

    #[test]
    fn reorienting_an_edge_switches_its_line_vertex(seed in any::<u64>(), pick in any::<usize>()) {
        let g = link_graph(seed, 6, 10);
        prop_assume!(g.size() > 0);
        let e = pick % g.size();
        let b = scramble(&orient(&g), seed);
        let before = line_graph(&b).unwrap().line.graph().clone();
        let after = line_graph(&b.reorient(e)).unwrap().line.graph().clone();
        let z = SwitchingFunction::from_set(g.size(), &[e]).unwrap();
        prop_assert_eq!(switch(&before, &z).unwrap(), after);
    }

    #[test]
    fn closed_walk_signs(seed in any::<u64>()) {
        let g = link_graph(seed, 5, 6);
        prop_assume!(g.size() > 0);
        let b = scramble(&orient(&g), seed);
        let lg = line_graph(&b).unwrap();
        let shared: Vec<usize> = lg.provenance.iter().map(|p| p.vertex).collect();
        check_walk_signs(b.graph(), lg.line.graph(), &shared, 5);
    }
}
