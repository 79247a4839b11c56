use proptest::prelude::*;
use sgraph::catalog::{catalog, SimpleGraph};
use sgraph::coloring::{chromatic_numbers, chromatic_poly_delcon};
use sgraph::{CatalogFamily, Limits, Sign};
use sgraph_testkit as kit;

fn simple(seed: u64) -> SimpleGraph {
    let g = kit::random_simple(&mut kit::rng(seed), 1 + (seed % 6) as usize, 0.5);
    SimpleGraph::from_signed(&g).unwrap()
}

/// Proper colorings with `k` colors, by brute force.
fn proper_colorings(g: &SimpleGraph, k: u64) -> u64 {
    let n = g.order() as u32;
    (0..k.pow(n))
        .filter(|&code| {
            let c: Vec<u64> = (0..n).map(|i| code / k.pow(i) % k).collect();
            g.edges().iter().all(|&(u, v)| c[u] != c[v])
        })
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn matching_and_chromatic_number(seed in any::<u64>()) {
        let g = simple(seed);
        prop_assert_eq!(g.max_matching(), kit::max_matching_oracle(g.order(), g.edges()));
        let p = g.chromatic_polynomial();
        for k in 0..=4 {
            prop_assert_eq!(p.eval(k as i64), i128::from(proper_colorings(&g, k)));
        }
        let chi = g.chromatic_number();
        prop_assert!(proper_colorings(&g, chi) > 0);
        prop_assert!(chi == 0 || proper_colorings(&g, chi - 1) == 0);
        prop_assert_eq!(chromatic_poly_delcon(&g.signed(Sign::Plus), false), p);
    }

    #[test]
    fn every_family_matches_general_algorithms(seed in any::<u64>()) {
        let g = simple(seed);
        prop_assume!(g.order() <= 4);
        let base = g.signed(Sign::Plus);
        let lim = Limits::default();
        for family in CatalogFamily::ALL {
            let entry = catalog(family, &base, &lim).unwrap();
            if let Some(chi) = &entry.chi {
                prop_assert_eq!(&chromatic_poly_delcon(&entry.graph, false), chi);
            }
            if let Some(star) = &entry.chi_star {
                prop_assert_eq!(&chromatic_poly_delcon(&entry.graph, true), star);
            }
            if let Some(regions) = entry.regions {
                let report = sgraph::orientation::region_count(&entry.graph, false, &lim).unwrap();
                prop_assert_eq!(report.region_count, regions);
            }
            if let Some(numbers) = entry.numbers {
                let general = chromatic_numbers(&entry.graph);
                if numbers.chi.is_some() {
                    prop_assert_eq!(numbers.chi, general.chi);
                }
                // The all-negative zero-free prediction is the matching number,
                // checked separately.
                if numbers.chi_star.is_some() && family != CatalogFamily::AllNegative {
                    prop_assert_eq!(numbers.chi_star, general.chi_star);
                }
            }
        }
    }
}
