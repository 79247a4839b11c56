use num_rational::Rational64;
use proptest::prelude::*;
use sgraph::angle::{
    construct_gramian, edge_vector_representation, gram_error, pairwise_dots, root_system,
    verify_representation, TOL,
};
use sgraph::linegraph::reduced_line_graph;
use sgraph::matrices::{adjacency_matrix, max_eigenvalue, min_eigenvalue};
use sgraph::{RootSystemKind, SignedGraph};
use sgraph_testkit as kit;

fn simple(seed: u64) -> SignedGraph {
    let mut rng = kit::rng(seed);
    let n = 1 + (seed % 7) as usize;
    let p = [0.3, 0.5, 0.8][(seed / 7 % 3) as usize];
    kit::random_simple(&mut rng, n, p)
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gramian_exists_iff_eigenvalues_allow(seed in any::<u64>()) {
        let g = simple(seed);
        let a = adjacency_matrix(&g);
        let (lo, hi) = (min_eigenvalue(&a).unwrap(), max_eigenvalue(&a).unwrap());
        for nu in [1.0, 2.0, 3.0] {
            let rep = construct_gramian(&g, nu, false).unwrap();
            prop_assert_eq!(rep.is_some(), lo >= -nu - TOL);
            if let Some(rep) = rep {
                prop_assert!(gram_error(&g, &rep).unwrap() < 1e-8);
                prop_assert!(verify_representation(&g, &rep).unwrap());
                for v in 0..g.order() {
                    prop_assert!((dot(&rep.rho[v], &rep.rho[v]) - nu).abs() < 1e-8);
                    for w in v + 1..g.order() {
                        let want = a.get(v, w) as f64;
                        prop_assert!((dot(&rep.rho[v], &rep.rho[w]) - want).abs() < 1e-8);
                    }
                }
            }
            let anti = construct_gramian(&g, nu, true).unwrap();
            prop_assert_eq!(anti.is_some(), hi <= nu + TOL);
            if let Some(anti) = anti {
                prop_assert!(gram_error(&g, &anti).unwrap() < 1e-8);
            }
        }
    }

    #[test]
    fn edge_vectors_represent_reduced_line_graphs(seed in any::<u64>()) {
        let mut spec = kit::GraphSpec::links(6, 9);
        spec.parallel = false;
        let g = kit::random_graph(&mut kit::rng(seed), &spec);
        let line = reduced_line_graph(&g).unwrap();
        let rep = edge_vector_representation(&g);
        prop_assert_eq!(rep.nu, Rational64::from(2));
        prop_assert!(verify_representation(&line, &rep).unwrap());
    }
}

#[test]
fn root_system_sizes_and_angles() {
    for n in 2..=6 {
        let d = root_system(RootSystemKind::D, n).unwrap();
        assert_eq!(d.len(), 2 * n * (n - 1));
        assert_eq!(root_system(RootSystemKind::B, n).unwrap().len(), 2 * n * n);
        assert_eq!(root_system(RootSystemKind::C, n).unwrap().len(), 2 * n * n);
        assert_eq!(root_system(RootSystemKind::A, n).unwrap().len(), n * (n - 1));
        let dots: Vec<Rational64> = pairwise_dots(&d).into_iter().collect();
        // D_2 splits into two orthogonal A_1 pieces.
        let want = if n == 2 { vec![0] } else { vec![0, 1] };
        assert_eq!(dots, want.into_iter().map(Rational64::from).collect::<Vec<_>>());
    }
    let e8 = root_system(RootSystemKind::E8, 8).unwrap();
    assert_eq!(e8.len(), 240);
    let dots: Vec<Rational64> = pairwise_dots(&e8).into_iter().collect();
    assert_eq!(dots, vec![Rational64::from(0), Rational64::from(1)]);
    assert!(e8.vectors.iter().all(|x| x.iter().map(|c| c * c).sum::<Rational64>() == Rational64::from(2)));
}
