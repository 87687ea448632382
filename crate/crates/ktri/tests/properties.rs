//! Property-based invariants across the crate.

use std::collections::BTreeSet;

use proptest::prelude::*;

use ktri::polygon::contains_mutual_crossing;
use ktri::subword::VertexId;
use ktri::{
    Diagonal, Permutation, PipeDream, SimplicialComplex, SubwordComplex, Triangulation, Word,
};

fn word_strategy() -> impl Strategy<Value = Word> {
    (2usize..=6).prop_flat_map(|m| {
        prop::collection::vec(1..m, 0..=12).prop_map(move |letters| Word::new(m, letters).unwrap())
    })
}

fn permutation_strategy(m: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|oneline| Permutation::from_oneline(oneline).unwrap())
}

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(1usize..=8, 0..=4), 1..=6).prop_map(|faces| {
        let vertices: BTreeSet<VertexId> = (1..=8).collect();
        SimplicialComplex::from_faces(vertices, faces)
    })
}

proptest! {
    #[test]
    fn demazure_length_dominates(w in word_strategy()) {
        let product = w.product();
        let demazure = w.demazure_product();
        prop_assert!(demazure.length() >= product.length());
        prop_assert_eq!(demazure.length() == w.len(), w.is_reduced());
        if w.is_reduced() {
            prop_assert_eq!(demazure, product);
        }
    }

    #[test]
    fn product_of_word_and_inverse_word(w in word_strategy()) {
        // appending the reversed word always cancels to the identity
        let mut letters: Vec<usize> = w.indices().collect();
        let mut back: Vec<usize> = letters.clone();
        back.reverse();
        letters.extend(back);
        let round = Word::new(w.group_size(), letters).unwrap();
        prop_assert!(round.product().is_identity());
    }

    #[test]
    fn permutation_text_round_trip(p in (1usize..=8).prop_flat_map(permutation_strategy)) {
        let shown = p.to_string();
        let parsed: Permutation = shown.parse().unwrap();
        prop_assert_eq!(parsed, p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.inverse().length(), p.length());
    }

    #[test]
    fn link_and_deletion_are_valid_complexes(
        c in complex_strategy(),
        pivot in 1usize..=8,
    ) {
        let face: BTreeSet<VertexId> = [pivot].into_iter().collect();
        let del = c.deletion(&face);
        // facets of a valid complex form an antichain over its vertices
        prop_assert!(SimplicialComplex::from_facets(
            del.vertices().clone(),
            del.facets().clone()
        )
        .is_ok());
        if c.has_face(&face) {
            let link = c.link(&face).unwrap();
            prop_assert!(SimplicialComplex::from_facets(
                link.vertices().clone(),
                link.facets().clone()
            )
            .is_ok());
            // every link facet extends by the pivot to a face of c
            for f in link.facets() {
                let mut g = f.clone();
                g.insert(pivot);
                prop_assert!(c.has_face(&g));
            }
        }
    }

    #[test]
    fn subword_facets_are_pure_and_reduced(
        (w, target) in (2usize..=4)
            .prop_flat_map(|m| {
                (
                    prop::collection::vec(1..m, 0..=8)
                        .prop_map(move |letters| Word::new(m, letters).unwrap()),
                    permutation_strategy(m),
                )
            })
    ) {
        let sc = SubwordComplex::new(w.clone(), target.clone()).unwrap();
        let all: BTreeSet<usize> = w.positions().collect();
        for facet in sc.facets() {
            prop_assert_eq!(facet.len(), w.len() - target.length());
            let complement: BTreeSet<usize> = all.difference(&facet).copied().collect();
            let sub = w.subword_at(&complement);
            prop_assert!(sub.is_reduced());
            prop_assert_eq!(sub.product(), target.clone());
        }
    }

    #[test]
    fn crossing_is_symmetric_and_irreflexive(
        a in 1usize..=12, b in 1usize..=12, c in 1usize..=12, d in 1usize..=12,
    ) {
        prop_assume!(a != b && c != d);
        let d1 = Diagonal::new(a, b).unwrap();
        let d2 = Diagonal::new(c, d).unwrap();
        prop_assert_eq!(d1.crosses(&d2), d2.crosses(&d1));
        prop_assert!(!d1.crosses(&d1));
        if d1.crosses(&d2) {
            prop_assert!(contains_mutual_crossing(&[d1, d2], 2));
        }
    }

    #[test]
    fn dream_text_round_trip(
        (m, mask) in (1usize..=5).prop_flat_map(|m| (Just(m), any::<u32>())),
    ) {
        let boxes: Vec<(usize, usize)> = ktri::pipedream::staircase_boxes(m).collect();
        let crosses: BTreeSet<(usize, usize)> = boxes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, b)| *b)
            .collect();
        let dream = PipeDream::new(m, crosses).unwrap();
        prop_assert_eq!(PipeDream::parse(&dream.to_text()).unwrap(), dream.clone());
        // cross count never drops below the permutation length
        prop_assert!(dream.cross_count() >= dream.permutation().length());
    }
}

#[test]
fn triangulation_round_trip_over_enumeration() {
    for (n, k) in [(5, 1), (6, 2), (7, 2), (8, 3)] {
        for t in ktri::enumerate_triangulations(n, k).unwrap() {
            let text = t.to_string();
            assert_eq!(Triangulation::parse(n, k, &text).unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            let value: serde_json::Value = serde_json::from_str(&json).unwrap();
            assert_eq!(value["n"], serde_json::json!(n));
            assert_eq!(
                value["diagonals"].as_array().unwrap().len(),
                t.diagonals().len()
            );
        }
    }
}
