mod common;

use std::collections::{BTreeMap, HashSet};

use bei::graph::{canonical_certificate, VertexSet};
use bei::ideal::is_cutset;
use bei::pipeline::enumerate_connected;
use common::*;

#[test]
fn burnside_totals() {
    // unlabelled graphs, connected or not
    let totals: Vec<u128> = (1..=8).map(unlabelled_graphs).collect();
    assert_eq!(totals, vec![1, 2, 4, 11, 34, 156, 1044, 12346]);
}

#[test]
fn connected_counts_match_the_counting_oracle() {
    let oracle = connected_unlabelled(8);
    assert_eq!(oracle, vec![1, 1, 2, 6, 21, 112, 853, 11117]);
    for n in 1..=8 {
        assert_eq!(
            enumerate_connected(n).unwrap().len() as i128,
            oracle[n - 1],
            "n = {n}"
        );
    }
}

#[test]
fn connected_counts_match_brute_canonicalisation() {
    for n in 1..=6 {
        let perms = permutations(n);
        let classes: HashSet<Vec<(usize, usize)>> = all_labelled(n)
            .filter(is_connected)
            .map(|g| brute_canonical(&g, &perms))
            .collect();
        assert_eq!(
            classes.len(),
            enumerate_connected(n).unwrap().len(),
            "n = {n}"
        );
    }
}

#[test]
fn certificates_separate_exactly_the_isomorphism_classes() {
    for n in 1..=6 {
        let perms = permutations(n);
        let mut by_cert: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
        let mut classes = HashSet::new();
        for g in all_labelled(n) {
            let brute = brute_canonical(&g, &perms);
            let cert = canonical_certificate(&g).unwrap().as_str().to_string();
            let prev = by_cert.entry(cert).or_insert_with(|| brute.clone());
            assert_eq!(*prev, brute, "one certificate for two classes at n = {n}");
            classes.insert(brute);
        }
        assert_eq!(by_cert.len(), classes.len(), "n = {n}");
    }
}

#[test]
fn cutset_criterion_matches_the_definition() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            for mask in 0u64..1 << n {
                let t: HashSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                assert_eq!(
                    is_cutset(&g, VertexSet(mask)),
                    definitional_cutset(&g, &t),
                    "{g:?} {mask:b}"
                );
            }
        }
    }
}

#[test]
fn straight_h_on_a_simplex_boundary() {
    // boundary of a triangle: f = (1, 3, 3), h = (1, 1, 1)
    assert_eq!(straight_h(&[1, 3, 3], 2), vec![1, 1, 1]);
    assert_eq!(face_counts(&[0b011, 0b110, 0b101]), vec![1, 3, 3]);
}
