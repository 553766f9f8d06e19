mod common;

use bei::complex::{
    f_vector, h_vector, initial_complex, is_s2, multiplicity, s2_report, FaceStrategy, S2Options,
};
use bei::graph::Graph;
use bei::ideal::{is_accessible, is_unmixed};
use bei::pipeline::enumerate_connected;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>(), 0.1f64..0.7).prop_map(|(n, seed, p)| {
        common::random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

#[test]
fn purity_iff_unmixed_small() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let c = initial_complex(&g);
            let pure = c.is_pure() && c.max_facet_size() == n + 1;
            assert_eq!(pure, is_unmixed(&g), "{g:?}");
        }
    }
}

#[test]
fn s2_implies_accessible_up_to_eight() {
    for n in 1..=8 {
        for g in enumerate_connected(n).unwrap() {
            if is_s2(&g) {
                assert!(is_accessible(&g), "{g:?}");
            }
        }
    }
}

#[test]
fn pruned_faces_never_change_the_verdict() {
    let plain = S2Options {
        strategy: FaceStrategy::Exhaustive,
        prune_monotone: false,
    };
    let pruned = S2Options {
        strategy: FaceStrategy::Exhaustive,
        prune_monotone: true,
    };
    let shortcut = S2Options {
        strategy: FaceStrategy::Intersections,
        prune_monotone: true,
    };
    for n in 1..=7 {
        for g in enumerate_connected(n)
            .unwrap()
            .into_iter()
            .filter(is_unmixed)
        {
            let a = s2_report(&g, &plain).holds();
            assert_eq!(a, s2_report(&g, &pruned).holds(), "{g:?}");
            assert_eq!(a, s2_report(&g, &shortcut).holds(), "{g:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn purity_iff_unmixed(g in connected(2, 8)) {
        let c = initial_complex(&g);
        prop_assert_eq!(c.is_pure() && c.max_facet_size() == g.n() + 1, is_unmixed(&g));
    }

    #[test]
    fn s2_ignores_labels(g in connected(2, 7), seed in any::<u64>()) {
        let perm = common::random_permutation(&mut ChaCha8Rng::seed_from_u64(seed), g.n());
        prop_assert_eq!(is_s2(&g), is_s2(&g.permute(&perm)));
    }

    #[test]
    fn h_sums_to_multiplicity(g in connected(2, 8)) {
        prop_assume!(is_unmixed(&g));
        let c = initial_complex(&g);
        let f = f_vector(&c);
        let h = h_vector(&f, f.len() - 1).unwrap();
        prop_assert_eq!(h.iter().sum::<i64>(), multiplicity(&c) as i64);
        prop_assert_eq!(h, common::straight_h(&f, f.len() - 1));
    }
}
