//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Known discrepancies with published worked-example values are printed as
//! REPORT lines and never asserted silently in either direction.

mod common;

use std::collections::HashSet;

use common::*;
use orbitcodes::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn field(q: u64, poly: &str) -> ExtField {
    ExtField::new(PolyFq::parse(q, poly).unwrap()).unwrap()
}

#[test]
fn criterion_01_spread_g2_3_6() {
    let f = field(2, "x^6+x+1");
    let start = spread_starting_point(&f, 3).unwrap();
    assert_eq!(start.row_strings(), vec!["100000", "011010", "000110"]);
    let code = build_spread_code(&f, 3).unwrap();
    assert_eq!(code.cardinality(), 9);
    assert_eq!((64 - 1) / (8 - 1), 9);
    assert_eq!(code.min_distance(), Some(6));
    assert_eq!(min_distance_pairwise(&code).unwrap(), 6);
    println!(
        "[PASS] criterion 1: spread G_2(3,6) via x^6+x+1 — published RREF, 9 codewords, distance 6"
    );
}

#[test]
fn criterion_02_spread_g2_2_6() {
    let f = field(2, "x^6+x+1");
    // independent oracle for the subfield F_4 ⊂ F_64: close {1, α^21}
    // under repeated multiplication by α^21 and take the span
    let omega = f.alpha_power(21);
    let omega_sq = f.mul(&omega, &omega).unwrap();
    assert_eq!(f.mul(&omega_sq, &omega).unwrap(), f.one());
    let subfield = Subspace::from_vectors(
        2,
        &[
            f.one().coords().to_vec(),
            omega.coords().to_vec(),
            omega_sq.coords().to_vec(),
        ],
    )
    .unwrap();
    assert_eq!(subfield.row_strings(), vec!["100000", "010111"]);

    let start = spread_starting_point(&f, 2).unwrap();
    assert_eq!(start, subfield);
    let code = build_spread_code(&f, 2).unwrap();
    assert_eq!(code.cardinality(), 21);
    assert_eq!(code.min_distance(), Some(4));

    // The published worked example displays this starting point as
    // rs[[100000],[011000]], i.e. claims α^21 = (111000). That value is
    // internally inconsistent: (111000) is α^26, and the generator of F_4
    // must satisfy ω² = 1 + ω, which (111000) fails. The displayed matrix
    // spans a different subspace whose orbit is a (63, 2) code.
    let displayed = Subspace::parse(2, "100000,011000").unwrap();
    assert_ne!(start, displayed);
    let displayed_code =
        enumerate_orbit(&displayed, &companion_matrix(f.modulus()).unwrap()).unwrap();
    assert_eq!(
        (displayed_code.cardinality(), displayed_code.min_distance()),
        (63, Some(2))
    );
    println!("[PASS] criterion 2: spread G_2(2,6) via x^6+x+1 — 21 codewords, distance 4; construction RREF [[100000],[010111]]");
    println!("[REPORT] criterion 2: the published display [[100000],[011000]] misprints α^21 (it shows α^26 = (111000); the true α^21 = (110111)); the displayed subspace would give a (63, 2) code, not the required (21, 4) spread");
}

#[test]
fn criterion_03_nonprimitive_example() {
    let poly = PolyFq::parse(2, "x^4+x^3+x^2+x+1").unwrap();
    let generator = companion_matrix(&poly).unwrap();
    let partition = vector_orbit_partition(&generator).unwrap();
    assert_eq!(partition.orbit_count(), 3);
    assert_eq!(partition.orbit_length(), 5);
    assert!(partition.orbits().iter().all(|o| o.len() == 5));
    let start = Subspace::parse(2, "1000,0011,1011").unwrap();
    let code = enumerate_orbit(&start, &generator).unwrap();
    assert_eq!(code.cardinality(), 5);
    assert_eq!(code.min_distance(), Some(4));
    let prediction = predict_params_nonprimitive(&start, &generator).unwrap();
    assert_eq!(prediction.cardinality, 5);
    assert_eq!(prediction.min_distance, Some(4));
    println!("[PASS] criterion 3: x^4+x^3+x^2+x+1 partitions F_16^× into 3 orbits of length 5; the example orbit is a (5, 4) spread");
}

#[test]
fn criterion_04_quartic_orders() {
    assert_eq!(PolyFq::parse(2, "x^4+x+1").unwrap().order().unwrap(), 15);
    assert_eq!(PolyFq::parse(2, "x^4+x^3+1").unwrap().order().unwrap(), 15);
    assert_eq!(
        PolyFq::parse(2, "x^4+x^3+x^2+x+1")
            .unwrap()
            .order()
            .unwrap(),
        5
    );
    println!("[PASS] criterion 4: degree-4 orders over F_2 are 15, 15, 5");
}

#[test]
fn criterion_05_pluecker_orbit() {
    let f = field(2, "x^4+x+1");
    let u = Subspace::parse(2, "1000,0110").unwrap();
    assert_eq!(pluecker_embed(&u).to_string(), "1:1:0:0:0:0");
    let orbit = pluecker_orbit(&u, &f).unwrap();
    let rendered: Vec<String> = orbit.iter().map(|p| p.to_string()).collect();
    assert_eq!(
        rendered,
        vec![
            "1:1:0:0:0:0",
            "0:0:0:1:1:0",
            "0:1:0:1:0:1",
            "0:0:1:0:0:1",
            "1:0:1:0:1:0",
        ]
    );
    println!("[PASS] criterion 5: Plücker embedding [1:1:0:0:0:0] and the five published orbit vectors, in generator order");
}

#[test]
fn criterion_06_ball_example() {
    let u0 = Subspace::parse(2, "1000,0100").unwrap();
    let det_index = MultiIndex::new(vec![3, 4], 4).unwrap();
    let all = grassmannian(2, 2, 4).unwrap();
    assert_eq!(all.len(), 35);
    for v in &all {
        let by_minor = pluecker_embed(v).coord(&det_index).unwrap() == 0;
        let by_vanishing = ball_membership_center0(v, 1).unwrap();
        let by_intersection = ball_membership(v, &u0, 1).unwrap();
        let by_translation = ball_membership_via_center(v, &u0, 1).unwrap();
        let by_distance = u0.distance(v).unwrap() <= 2;
        assert_eq!(by_minor, by_vanishing);
        assert_eq!(by_minor, by_intersection);
        assert_eq!(by_minor, by_translation);
        assert_eq!(by_minor, by_distance);
    }
    println!("[PASS] criterion 6: B_2(U_0) in G_2(2,4) is exactly det(V[3,4]) = 0; all membership routes agree on all 35 subspaces");
}

#[test]
fn criterion_07_predictor_oracle_sweep() {
    let polys = [
        ("x^4+x+1", true),
        ("x^4+x^3+1", true),
        ("x^4+x^3+x^2+x+1", false),
    ];
    let points = grassmannian(2, 2, 4).unwrap();
    let mut degenerate_cases = 0usize;
    let mut published_formula_disagreements = 0usize;
    for (text, primitive) in polys {
        let poly = PolyFq::parse(2, text).unwrap();
        assert_eq!(poly.is_primitive().unwrap(), primitive);
        let generator = companion_matrix(&poly).unwrap();
        for u in &points {
            let code = enumerate_orbit(u, &generator).unwrap();
            let prediction = predict_params(u, &poly).unwrap();
            assert_eq!(
                (prediction.cardinality, prediction.min_distance),
                (code.cardinality(), code.min_distance()),
                "unexplained mismatch for {text} at {u}"
            );
            if prediction.degenerate {
                degenerate_cases += 1;
                if prediction.published_degenerate_cardinality != Some(code.cardinality()) {
                    published_formula_disagreements += 1;
                }
            }
        }
    }
    assert_eq!(degenerate_cases, 10);
    println!("[PASS] criterion 7: predictor equals brute force on all 35 × 3 sweep cases; zero unexplained mismatches");
    println!("[REPORT] criterion 7: {degenerate_cases} degenerate-branch cases; the published m−1 cardinality formula disagrees with the oracle-confirmed value m in {published_formula_disagreements} of them (reported, not failed)");
}

#[test]
fn criterion_08_conjugation_invariance() {
    let mut rng = StdRng::seed_from_u64(8);
    let poly = PolyFq::parse(2, "x^6+x+1").unwrap();
    let generator = companion_matrix(&poly).unwrap();
    for _ in 0..100 {
        let u = rand_subspace(&mut rng, 2, 3, 6);
        let s = rand_invertible(&mut rng, 2, 6);
        let conjugated = s
            .inverse()
            .unwrap()
            .mul(&generator)
            .unwrap()
            .mul(&s)
            .unwrap();
        let code = enumerate_orbit(&u, &generator).unwrap();
        let moved = enumerate_orbit(&u.apply(&s).unwrap(), &conjugated).unwrap();
        assert_eq!(code.cardinality(), moved.cardinality());
        assert_eq!(code.min_distance(), moved.min_distance());
    }
    println!("[PASS] criterion 8: 100 random conjugations in G_2(3,6) preserve cardinality and minimum distance");
}

#[test]
fn criterion_09_commuting_diagrams() {
    // vector/matrix vs field multiplication by α, all 64 vectors
    let f = field(2, "x^6+x+1");
    let generator = companion_matrix(f.modulus()).unwrap();
    let alpha = f.alpha_power(1);
    for idx in 0..64u64 {
        let coords: Vec<u64> = (0..6).map(|b| (idx >> b) & 1).collect();
        let elem = f.element(coords.clone()).unwrap();
        assert_eq!(
            vector_mul(&coords, &generator).unwrap(),
            f.mul(&elem, &alpha).unwrap().coords()
        );
    }
    // wedge-star orbit vs embedded matrix orbit, all 35 subspaces
    let f4 = field(2, "x^4+x+1");
    let gen4 = companion_matrix(f4.modulus()).unwrap();
    for u in grassmannian(2, 2, 4).unwrap() {
        let code = enumerate_orbit(&u, &gen4).unwrap();
        let orbit = pluecker_orbit(&u, &f4).unwrap();
        assert_eq!(orbit.len() as u64, code.cardinality());
        for (point, word) in orbit.iter().zip(code.codewords()) {
            assert_eq!(point, &pluecker_embed(word));
        }
    }
    println!("[PASS] criterion 9: companion/α diagram exhaustive on all 2^6 vectors; wedge-star diagram exhaustive on all 35 subspaces of G_2(2,4)");
}

#[test]
fn criterion_10_metric_and_embedding_properties() {
    // triangle inequality, exhaustive over ~42k triples
    let points = grassmannian(2, 2, 4).unwrap();
    let dist: Vec<Vec<usize>> = points
        .iter()
        .map(|a| points.iter().map(|b| a.distance(b).unwrap()).collect())
        .collect();
    for i in 0..points.len() {
        for j in 0..points.len() {
            for k in 0..points.len() {
                assert!(dist[i][j] <= dist[i][k] + dist[k][j]);
            }
        }
    }
    // injectivity on G_2(2,4) and G_2(2,5)
    for (k, n) in [(2usize, 4usize), (2, 5)] {
        let g = grassmannian(2, k, n).unwrap();
        let images: HashSet<PlueckerPoint> = g.iter().map(pluecker_embed).collect();
        assert_eq!(images.len(), g.len());
    }
    // quadratic relations on every embedded point of G_2(2,4)
    for v in &points {
        assert!(grassmann_pluecker_ok(&pluecker_embed(v)));
    }
    println!("[PASS] criterion 10: triangle inequality on all G_2(2,4) triples; embedding injective on G_2(2,4) and G_2(2,5); quadratic relations hold on every embedded point");
}
