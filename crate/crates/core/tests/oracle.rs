mod common;

use std::collections::BTreeSet;

use common::{matroids_of_rank, matroids_up_to_rank, min_above, Labeled};
use matdegen::degenerations::{min_above_general, min_above_rank4};
use matdegen::isomorphism::canonical_form;
use matdegen::weak_order::compare;

/// Known numbers of matroids on `d` labeled points, `d = 0..=6`.
const LABELED_COUNTS: [usize; 7] = [1, 2, 5, 16, 68, 406, 3807];

/// One labeled matroid per isomorphism class.
fn representatives(all: &[Labeled]) -> Vec<Labeled> {
    let mut seen = BTreeSet::new();
    all.iter().filter(|l| seen.insert(canonical_form(&l.matroid()))).copied().collect()
}

#[test]
fn enumerator_matches_known_counts() {
    for (d, &count) in LABELED_COUNTS.iter().enumerate() {
        assert_eq!(matroids_up_to_rank(d, d).len(), count, "d = {d}");
    }
}

#[test]
fn round_trip_through_the_library() {
    for d in 0..=5 {
        for l in matroids_up_to_rank(d, d) {
            let m = l.matroid();
            assert!(m.satisfies_axioms());
            assert_eq!(m.rank(), l.rank);
            assert_eq!(Labeled::of(&m), l);
        }
    }
}

#[test]
fn general_search_matches_oracle() {
    for d in 1..=6 {
        let all = matroids_up_to_rank(d, 3);
        for m in representatives(&all) {
            let expected = min_above(&m, &all);
            let mut found: Vec<Labeled> = min_above_general(&m.matroid()).maximal.iter().map(Labeled::of).collect();
            found.sort();
            assert_eq!(found, expected, "d = {d}, matroid {:?}", m.matroid());
        }
    }
}

#[test]
fn compare_matches_oracle() {
    for d in 1..=6 {
        let all = matroids_up_to_rank(d, 3);
        let built: Vec<_> = all.iter().map(Labeled::matroid).collect();
        // Pairs up to simultaneous relabeling: a representative against everything.
        for a in representatives(&all) {
            let ma = a.matroid();
            for (b, mb) in all.iter().zip(&built) {
                assert_eq!(compare(&ma, mb).unwrap(), a.leq(b), "{ma:?} vs {mb:?}");
                assert_eq!(compare(mb, &ma).unwrap(), b.leq(&a), "{mb:?} vs {ma:?}");
            }
        }
    }
}

#[test]
fn rank4_search_matches_oracle() {
    for d in 5..=6 {
        let all = matroids_up_to_rank(d, 4);
        for m in representatives(&matroids_of_rank(d, 4)) {
            let mm = m.matroid();
            if !mm.is_simple() {
                continue;
            }
            let mut found: Vec<Labeled> = min_above_rank4(&mm).unwrap().maximal.iter().map(Labeled::of).collect();
            found.sort();
            assert_eq!(found, min_above(&m, &all), "{mm:?}");
        }
    }
}
