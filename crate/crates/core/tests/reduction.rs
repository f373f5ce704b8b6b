use proptest::prelude::*;

use tutte_core::generators::random_multigraphs;
use tutte_core::graph::{Decompositions, Multigraph};
use tutte_core::oracle::{brute_counts, brute_tutte};
use tutte_core::poly::{interpolate, UniPoly};
use tutte_core::reduction::{
    chromatic_evaluator, curve_restriction, eval_curve, general_evaluator, ising_evaluator, k_stretch, k_thicken,
};
use tutte_core::scalar::{int, ratio};
use tutte_core::Scalar;

proptest! {
    #[test]
    fn interpolation_round_trip(coeffs in prop::collection::vec((-20i64..=20, 1i64..=5), 1..=8), shift in -4i64..=4) {
        let p = UniPoly::from_coeffs(coeffs.iter().map(|&(a, b)| ratio(a, b)).collect());
        let samples: Vec<(Scalar, Scalar)> =
            (0..coeffs.len() as i64).map(|i| { let t = int(i + shift); (t.clone(), p.eval(&t).unwrap()) }).collect();
        prop_assert_eq!(interpolate(&samples).unwrap(), p);
    }
}

#[test]
fn curve_is_evaluator_independent() {
    for g in random_multigraphs(31, 25, 4, 5) {
        let d = Decompositions::trivial(&g);
        let reference = brute_counts(&g).unwrap().h_alpha_curve(&int(2));
        let ising = curve_restriction(&g, &d, &int(3), &int(2), &ising_evaluator(int(3), int(2))).unwrap();
        let general = curve_restriction(&g, &d, &int(2), &int(3), &general_evaluator(int(2), int(3))).unwrap();
        assert_eq!(ising, reference, "{:?}", g.edges());
        assert_eq!(general, reference, "{:?}", g.edges());
    }
}

#[test]
fn chromatic_curve_handles_loops_and_parallels() {
    for g in random_multigraphs(32, 20, 4, 5) {
        let d = Decompositions::trivial(&g);
        let curve = curve_restriction(&g, &d, &int(-3), &int(0), &chromatic_evaluator(4)).unwrap();
        for y in [int(3), ratio(1, 2), int(-4)] {
            let x = int(4) / (&y - int(1)) + int(1);
            assert_eq!(eval_curve(&curve, &g, &y).unwrap(), brute_tutte(&g, &x, &y).unwrap());
        }
    }
}

#[test]
fn transforms_match_their_tutte_identities() {
    // A k-stretch of a tree is a tree with k|E| edges; thickening a loop adds loops.
    let star = Multigraph::star(3);
    let d = Decompositions::trivial(&star);
    let stretched = k_stretch(&star, &d, 3).unwrap().graph;
    assert_eq!(brute_tutte(&stretched, &int(2), &int(5)).unwrap(), int(512));
    let looped = Multigraph::new(1, vec![(0, 0)]).unwrap();
    let thick = k_thicken(&looped, &Decompositions::trivial(&looped), 4).unwrap().graph;
    assert_eq!(brute_tutte(&thick, &int(1), &int(3)).unwrap(), int(81));
}
