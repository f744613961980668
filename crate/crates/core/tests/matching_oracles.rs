mod common;

use matchext::harness::tutte_berge_matching_number;
use matchext::matching::{extends_to_perfect, has_perfect_matching, matchings_of_size, maximum_matching, Matching};
use matchext::Graph;
use proptest::prelude::*;

#[test]
fn blossom_agrees_with_brute_force_on_all_small_graphs() {
    for g in common::all_graphs(8) {
        let m = maximum_matching(&g);
        // the returned edges form a matching of g
        assert_eq!(Matching::new(&g, m.edges()).unwrap().len(), m.len());
        assert_eq!(m.len(), common::matching_number(&g, common::full(&g)), "{g:?}");
        assert_eq!(m.len(), tutte_berge_matching_number(&g));
        assert_eq!(has_perfect_matching(&g), common::pm(&g, common::full(&g)));
        assert_eq!(extends_to_perfect(&g, &Matching::empty()), has_perfect_matching(&g));
    }
}

#[test]
fn sweep_maximum_equals_matching_number() {
    for g in common::all_graphs(7) {
        let top = (0..=g.order() / 2)
            .filter(|&k| matchings_of_size(&g, k).unwrap().next().is_some())
            .max()
            .unwrap();
        assert_eq!(top, maximum_matching(&g).len());
    }
}

#[test]
fn matching_counts_equal_polynomial_coefficients() {
    for g in common::all_graphs(8) {
        let mut poly = Vec::new();
        common::matching_counts(&g.edges(), 0, &mut poly, 0);
        for (k, &expected) in poly.iter().enumerate() {
            let n = matchings_of_size(&g, k).unwrap().count() as u64;
            assert_eq!(n, expected, "{g:?} k={k}");
        }
        if poly.len() <= g.order() / 2 {
            assert_eq!(matchings_of_size(&g, poly.len()).unwrap().count(), 0);
        }
    }
}

#[test]
fn enumeration_yields_valid_distinct_matchings() {
    let g = Graph::petersen();
    let all: Vec<Matching> = matchings_of_size(&g, 3).unwrap().collect();
    let mut sorted = all.clone();
    sorted.dedup();
    assert_eq!(sorted.len(), all.len());
    for m in &all {
        assert_eq!(Matching::new(&g, m.edges()).unwrap(), *m);
    }
    assert!(matchings_of_size(&g, 6).is_err());
}

proptest! {
    #[test]
    fn blossom_on_random_graphs(n in 1usize..=14, p in 0.05f64..0.9, seed in any::<u64>()) {
        let g = common::random_graph(&mut common::rng(seed), n, p);
        prop_assert_eq!(maximum_matching(&g).len(), common::matching_number(&g, common::full(&g)));
    }

    #[test]
    fn forced_matchings_extend_iff_rest_has_pm(n in 2usize..=10, p in 0.2f64..0.9, seed in any::<u64>()) {
        let g = common::random_graph(&mut common::rng(seed), n, p);
        for m in matchings_of_size(&g, 1).unwrap().chain(matchings_of_size(&g, 2).unwrap_or_else(|_| matchings_of_size(&g, 0).unwrap())) {
            let rest = common::full(&g) & !m.covered().bits();
            prop_assert_eq!(extends_to_perfect(&g, &m), common::pm(&g, rest));
        }
    }
}
