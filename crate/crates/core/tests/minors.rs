use proptest::prelude::*;
use sgraph::balance::{switch, switching_equivalent};
use sgraph::coloring::{chromatic_poly_delcon, chromatic_poly_subset};
use sgraph::iso::switching_isomorphism;
use sgraph::minors::{carry, contract_edge, contract_set, delete_edges, minor};
use sgraph::{EdgeSet, Limits, SignedGraph};
use sgraph_testkit as kit;

fn graph(seed: u64) -> SignedGraph {
    kit::random_graph(&mut kit::rng(seed), &kit::GraphSpec::any(6, 9))
}

fn ids(g: &SignedGraph) -> Vec<String> {
    let mut v: Vec<String> = g.edges().iter().map(|e| e.id.clone()).collect();
    v.sort();
    v
}

/// Split the edges of `g` into two disjoint random sets.
fn two_sets(g: &SignedGraph, mask: u64) -> (EdgeSet, EdgeSet) {
    let mut a = EdgeSet::new();
    let mut c = EdgeSet::new();
    for i in 0..g.size() {
        match mask >> (2 * i) & 3 {
            1 => {
                a.insert(i);
            }
            2 => {
                c.insert(i);
            }
            _ => {}
        }
    }
    (a, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn single_edge_contraction_agrees(seed in any::<u64>()) {
        let g = graph(seed);
        for e in g.edges() {
            let (one, t1) = contract_edge(&g, &e.id).unwrap();
            let set: EdgeSet = [g.edge_index(&e.id).unwrap()].into_iter().collect();
            let (many, t2) = contract_set(&g, &set);
            prop_assert_eq!(&t1.vertex_image, &t2.vertex_image);
            prop_assert!(one.same_underlying(&many));
            prop_assert!(switching_equivalent(&one, &many).unwrap().is_some());
        }
    }

    #[test]
    fn minor_of_minor_is_minor(seed in any::<u64>(), mask in any::<u64>()) {
        let g = graph(seed);
        let lim = Limits::default();
        let (d1, c1) = two_sets(&g, mask);
        let (d2, c2) = two_sets(&g, mask.rotate_left(17));
        let d2 = d2.difference(&d1).difference(&c1);
        let c2 = c2.difference(&d1).difference(&c1).difference(&d2);
        let (step, _) = minor(&g, &d1, &c1).unwrap();
        let (twice, _) = minor(
            &step,
            &carry(&g, &d2, &step).unwrap(),
            &carry(&g, &c2, &step).unwrap(),
        ).unwrap();
        let (once, _) = minor(&g, &d1.union(&d2), &c1.union(&c2)).unwrap();
        prop_assert_eq!(ids(&twice), ids(&once));
        prop_assert!(switching_isomorphism(&twice, &once, &lim).unwrap().is_some());
        // Contraction before deletion gives the same minor.
        let contracted = contract_set(&g, &c1).0;
        let later = delete_edges(&contracted, &carry(&g, &d1, &contracted).unwrap());
        let (direct, _) = minor(&g, &d1, &c1).unwrap();
        prop_assert!(switching_isomorphism(&later, &direct, &lim).unwrap().is_some());
    }

    #[test]
    fn contraction_respects_switching(seed in any::<u64>(), mask in any::<u64>()) {
        let g = graph(seed);
        let z = kit::random_switching(&mut kit::rng(seed ^ 1), g.order());
        let h = switch(&g, &z).unwrap();
        let s = EdgeSet::from_mask(mask & ((1 << g.size()) - 1), g.size());
        let (gs, _) = contract_set(&g, &s);
        let (hs, _) = contract_set(&h, &s);
        prop_assert!(gs.same_underlying(&hs));
        prop_assert!(switching_equivalent(&gs, &hs).unwrap().is_some());
    }

    #[test]
    fn deletion_contraction_for_chi(seed in any::<u64>()) {
        let g = graph(seed);
        let lim = Limits::default();
        let sub = |h: &SignedGraph, zf: bool| chromatic_poly_subset(h, zf, &lim).unwrap();
        let chi = chromatic_poly_delcon(&g, false);
        for (i, e) in g.edges().iter().enumerate() {
            let del = delete_edges(&g, &[i].into_iter().collect());
            let con = contract_edge(&g, &e.id).unwrap().0;
            let rhs = &sub(&del, false) - &sub(&con, false);
            prop_assert_eq!(&chi, &rhs);
            if e.is_link() {
                let star = &sub(&del, true) - &sub(&con, true);
                prop_assert_eq!(chromatic_poly_delcon(&g, true), star);
            }
        }
    }
}
