//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test -p ktri --test acceptance -- --nocapture`
//! to see the report.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ktri::counting::{count_determinant, count_product};
use ktri::pipedream::position_box;
use ktri::{
    dream_from_triangulation, enumerate_triangulations, k_stars, relevant_word,
    schubert_polynomial, target_permutation, triangulation_from_dream, Diagonal, Permutation,
    SubwordComplex, Topology, Triangulation, Word,
};

fn parameter_range(max_n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for k in 1..=(n - 1) / 2 {
            out.push((n, k));
        }
    }
    out
}

fn report(criterion: &str, detail: &str) {
    println!("PASS {criterion}: {detail}");
}

fn facet_triangulations(n: usize, k: usize) -> BTreeSet<Triangulation> {
    let word = relevant_word(n, k).unwrap();
    let target = target_permutation(n, k).unwrap();
    let sc = SubwordComplex::new(word, target).unwrap();
    sc.facets()
        .into_iter()
        .map(|facet| {
            let diagonals: BTreeSet<Diagonal> = facet
                .into_iter()
                .map(|pos| {
                    let (r, c) = position_box(pos, n - k).unwrap();
                    ktri::pipedream::box_diagonal(r, c, n).unwrap()
                })
                .collect();
            Triangulation::new(n, k, diagonals).unwrap()
        })
        .collect()
}

#[test]
fn criterion_1_four_way_count_agreement() {
    let frozen: &[(usize, usize, u64)] = &[
        (5, 1, 5),
        (6, 1, 14),
        (7, 1, 42),
        (8, 1, 132),
        (7, 2, 14),
        (8, 2, 84),
        (9, 2, 594),
        (7, 3, 1),
    ];
    for (n, k) in parameter_range(9) {
        let enumerated = enumerate_triangulations(n, k).unwrap().len();
        let facets = SubwordComplex::new(
            relevant_word(n, k).unwrap(),
            target_permutation(n, k).unwrap(),
        )
        .unwrap()
        .facets()
        .len();
        let schubert = schubert_polynomial(&target_permutation(n, k).unwrap())
            .unwrap()
            .evaluate_ones();
        let det = count_determinant(n, k).unwrap();
        let product = count_product(n, k).unwrap();
        assert_eq!(enumerated, facets, "n={n} k={k}");
        assert_eq!(BigInt::from(enumerated), schubert, "n={n} k={k}");
        assert_eq!(BigInt::from(enumerated), det, "n={n} k={k}");
        assert_eq!(det, product, "n={n} k={k}");
        if let Some(&(_, _, expected)) = frozen.iter().find(|&&(fn_, fk, _)| fn_ == n && fk == k) {
            assert_eq!(enumerated as u64, expected, "n={n} k={k}");
        }
    }
    report(
        "criterion 1",
        "brute force, facet count, Schubert at 1, and determinant agree for all 2k+1 <= n <= 9",
    );
}

#[test]
fn criterion_2_determinant_equals_product() {
    for n in 3..=20 {
        for k in 1..=5.min((n - 1) / 2) {
            assert_eq!(
                count_determinant(n, k).unwrap(),
                count_product(n, k).unwrap(),
                "n={n} k={k}"
            );
        }
    }
    report(
        "criterion 2",
        "determinant equals product exactly for all 2k+1 <= n <= 20, k <= 5",
    );
}

#[test]
fn criterion_3_facets_are_triangulations() {
    for (n, k) in parameter_range(9) {
        let from_facets = facet_triangulations(n, k);
        let enumerated: BTreeSet<Triangulation> = enumerate_triangulations(n, k)
            .unwrap()
            .into_iter()
            .collect();
        let missing: Vec<_> = enumerated.difference(&from_facets).collect();
        let extra: Vec<_> = from_facets.difference(&enumerated).collect();
        assert!(
            missing.is_empty() && extra.is_empty(),
            "n={n} k={k}: {} missing, {} extra",
            missing.len(),
            extra.len()
        );
    }
    report(
        "criterion 3",
        "subword facets map exactly onto the k-triangulations for all 2k+1 <= n <= 9",
    );
}

#[test]
fn criterion_4_facet_dimension() {
    for (n, k) in parameter_range(9) {
        let expected = k * (n - 2 * k - 1);
        let sc = SubwordComplex::new(
            relevant_word(n, k).unwrap(),
            target_permutation(n, k).unwrap(),
        )
        .unwrap();
        for facet in sc.facets() {
            assert_eq!(facet.len(), expected, "n={n} k={k}");
        }
        for t in enumerate_triangulations(n, k).unwrap() {
            assert_eq!(t.diagonals().len(), expected, "n={n} k={k}");
        }
    }
    report(
        "criterion 4",
        "every facet has exactly k(n-2k-1) vertices for all 2k+1 <= n <= 9",
    );
}

#[test]
fn criterion_5_golden_case() {
    let input = "2-5,2-6,2-7,3-6,3-8,5-8";
    let t = Triangulation::parse(8, 2, input).unwrap();
    let dream = dream_from_triangulation(&t);

    let expected_crosses: BTreeSet<(usize, usize)> =
        [(1, 4), (2, 3), (2, 4), (3, 1), (4, 1), (5, 1)]
            .into_iter()
            .collect();
    assert_eq!(dream.crosses(), &expected_crosses);
    assert_eq!(
        dream.permutation(),
        "1,2,6,5,4,3".parse::<Permutation>().unwrap()
    );
    assert_eq!(
        dream.word().indices().collect::<Vec<_>>(),
        vec![4, 5, 4, 3, 4, 5]
    );

    // the four stars, given as the edge walks of the star polygons
    let walks: [&[(usize, usize)]; 4] = [
        &[(3, 8), (8, 2), (2, 7), (7, 1), (1, 3)],
        &[(4, 6), (6, 3), (3, 5), (5, 2), (2, 4)],
        &[(5, 8), (8, 3), (3, 6), (6, 2), (2, 5)],
        &[(6, 8), (8, 5), (5, 7), (7, 2), (2, 6)],
    ];
    let expected_stars: BTreeSet<BTreeSet<Diagonal>> = walks
        .iter()
        .map(|walk| {
            walk.iter()
                .map(|&(x, y)| Diagonal::new(x, y).unwrap())
                .collect()
        })
        .collect();
    let stars = k_stars(&t);
    assert_eq!(stars.stars().len(), 4);
    let actual_stars: BTreeSet<BTreeSet<Diagonal>> =
        stars.stars().iter().map(|s| s.edges()).collect();
    assert_eq!(actual_stars, expected_stars);

    // byte-exact round trip
    let back = triangulation_from_dream(&dream, 8, 2).unwrap();
    assert_eq!(back.to_string(), input);

    report(
        "criterion 5",
        "golden 8-gon example maps to the expected dream, word, permutation, and stars",
    );
}

#[test]
fn criterion_6_sphere_certificate() {
    for (n, k) in parameter_range(8) {
        let word = relevant_word(n, k).unwrap();
        let target = target_permutation(n, k).unwrap();
        assert_eq!(word.demazure_product(), target, "n={n} k={k}");
        let sc = SubwordComplex::new(word, target).unwrap();
        assert_eq!(sc.classify().unwrap(), Topology::Sphere, "n={n} k={k}");
        let d = k * (n - 2 * k - 1); // facet size; the sphere has dimension d-1
        let expected_chi: i64 = if d % 2 == 0 { 0 } else { 2 };
        assert_eq!(
            sc.complex().euler_characteristic().unwrap(),
            expected_chi,
            "n={n} k={k}"
        );
    }
    report(
        "criterion 6",
        "Demazure product certifies a sphere and Euler characteristics match for all 2k+1 <= n <= 8",
    );
}

#[test]
fn criterion_7_vertex_decomposability() {
    for (n, k) in parameter_range(8) {
        let sc = SubwordComplex::new(
            relevant_word(n, k).unwrap(),
            target_permutation(n, k).unwrap(),
        )
        .unwrap();
        let complex = sc.complex();
        let tree = complex
            .vertex_decomposition_min_pivot()
            .unwrap_or_else(|e| panic!("n={n} k={k}: {e}"));
        assert!(tree.certifies(&complex), "n={n} k={k}");
    }
    let pentagon = SubwordComplex::new(
        relevant_word(5, 1).unwrap(),
        target_permutation(5, 1).unwrap(),
    )
    .unwrap()
    .complex();
    let tree = pentagon.vertex_decomposition_min_pivot().unwrap();
    assert!(tree.depth() <= 5, "pentagon depth {}", tree.depth());
    report(
        "criterion 7",
        "first-letter pivots decompose every complex with 2k+1 <= n <= 8; pentagon in <= 5 levels",
    );
}

#[test]
fn criterion_8_star_incidence() {
    for (n, k) in parameter_range(9) {
        let boundary: Vec<Diagonal> = {
            let mut v = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    let d = Diagonal::new(a, b).unwrap();
                    if d.is_boundary(n, k) {
                        v.push(d);
                    }
                }
            }
            v
        };
        for t in enumerate_triangulations(n, k).unwrap() {
            let stars = k_stars(&t);
            assert_eq!(stars.stars().len(), n - 2 * k, "n={n} k={k} t={t}");
            let incidence = stars.incidence();
            for d in t.diagonals() {
                assert_eq!(incidence.get(d), Some(&2), "n={n} k={k} t={t} d={d}");
            }
            for b in &boundary {
                assert_eq!(incidence.get(b), Some(&1), "n={n} k={k} t={t} b={b}");
            }
            for e in incidence.keys() {
                assert!(t.contains(e) || e.is_boundary(n, k));
            }
        }
    }
    report(
        "criterion 8",
        "n-2k stars per triangulation; diagonals lie in 2 stars, boundary edges in 1, for n <= 9",
    );
}

/// Generate-and-filter oracle: every subset of positions whose ordered
/// complement multiplies to the target with length equal to the target's
/// length is a facet.
fn oracle_facets(word: &Word, target: &Permutation) -> BTreeSet<BTreeSet<usize>> {
    let positions: Vec<usize> = word.positions().collect();
    let target_len = target.length();
    let mut out = BTreeSet::new();
    for mask in 0..(1u32 << positions.len()) {
        let face: BTreeSet<usize> = positions
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| *p)
            .collect();
        let complement: BTreeSet<usize> = positions
            .iter()
            .filter(|p| !face.contains(p))
            .copied()
            .collect();
        let sub = word.subword_at(&complement);
        if sub.len() == target_len && &sub.product() == target {
            out.insert(face);
        }
    }
    out
}

/// Euler characteristic straight from a facet list, independent of the
/// library's face enumeration.
fn oracle_chi(facets: &BTreeSet<BTreeSet<usize>>) -> i64 {
    let mut faces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for facet in facets {
        let items: Vec<usize> = facet.iter().copied().collect();
        for mask in 0..(1u32 << items.len()) {
            let sub: BTreeSet<usize> = items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, v)| *v)
                .collect();
            if !sub.is_empty() {
                faces.insert(sub);
            }
        }
    }
    faces
        .iter()
        .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

#[test]
fn criterion_9_randomized_against_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut nonvoid = 0usize;
    for case in 0..1000 {
        let m = rng.gen_range(2..=4usize);
        let len = rng.gen_range(0..=8usize);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..m)).collect();
        let mut oneline: Vec<usize> = (1..=m).collect();
        oneline.shuffle(&mut rng);
        let word = Word::new(m, letters).unwrap();
        let target = Permutation::from_oneline(oneline).unwrap();

        let sc = SubwordComplex::new(word.clone(), target.clone()).unwrap();
        let facets = sc.facets();
        let expected = oracle_facets(&word, &target);
        assert_eq!(facets, expected, "case {case}: word={word} target={target}");

        if facets.is_empty() {
            assert!(sc.is_void());
            assert!(sc.classify().is_err());
            continue;
        }
        nonvoid += 1;

        // pureness
        let size = facets.iter().next().unwrap().len();
        assert!(facets.iter().all(|f| f.len() == size));
        assert_eq!(size, word.len() - target.length());

        // sphere/ball against the Euler characteristic of the oracle's
        // facet list: a (d-1)-sphere has chi 1 + (-1)^(d-1), a ball has 1
        let chi = oracle_chi(&expected);
        let sphere_chi: i64 = if size.is_multiple_of(2) { 0 } else { 2 };
        let classified = sc.classify().unwrap();
        if size == 0 {
            // the only complex here is {∅}, which is the empty sphere
            assert_eq!(classified, Topology::Sphere);
            continue;
        }
        assert!(
            chi == sphere_chi || chi == 1,
            "case {case}: chi={chi} outside sphere/ball values"
        );
        let expected_topology = if chi == sphere_chi {
            Topology::Sphere
        } else {
            Topology::Ball
        };
        assert_eq!(
            classified, expected_topology,
            "case {case}: word={word} target={target}"
        );
    }
    report(
        "criterion 9",
        &format!(
            "1000 randomized subword complexes ({nonvoid} nonvoid) match the generate-and-filter oracle"
        ),
    );
}
