use num::{BigUint, One};
use proptest::prelude::*;

use tutte_core::graph::Multigraph;
use tutte_core::oracle::{brute_counts, brute_tutte};
use tutte_core::scalar::{int, ratio};
use tutte_core::{eval_from_counts, Scalar};

fn multigraph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |edges| Multigraph::new(n, edges).unwrap())
    })
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn deletion_contraction(g in multigraph(5, 7), x in rational(), y in rational()) {
        let t = brute_tutte(&g, &x, &y).unwrap();
        for e in 0..g.edge_count() {
            let expected = if g.is_loop(e) {
                &y * brute_tutte(&g.delete_edge(e), &x, &y).unwrap()
            } else if g.is_bridge(e) {
                &x * brute_tutte(&g.contract_edge(e), &x, &y).unwrap()
            } else {
                brute_tutte(&g.delete_edge(e), &x, &y).unwrap() + brute_tutte(&g.contract_edge(e), &x, &y).unwrap()
            };
            prop_assert_eq!(&t, &expected, "edge {}", e);
        }
    }

    #[test]
    fn disjoint_union_multiplies(a in multigraph(4, 5), b in multigraph(4, 5), x in rational(), y in rational()) {
        let joint = brute_tutte(&a.disjoint_union(&b), &x, &y).unwrap();
        prop_assert_eq!(joint, brute_tutte(&a, &x, &y).unwrap() * brute_tutte(&b, &x, &y).unwrap());
    }

    #[test]
    fn counting_points(g in multigraph(6, 8)) {
        let m = g.edge_count();
        prop_assert_eq!(brute_tutte(&g, &int(2), &int(2)).unwrap(), int(1 << m));
        let spanning = brute_tutte(&g, &int(1), &int(2)).unwrap();
        prop_assert!(spanning >= int(0) && spanning <= int(1 << m));
    }

    #[test]
    fn counts_reproduce_point_values(g in multigraph(6, 8), x in rational(), y in rational()) {
        let counts = brute_counts(&g).unwrap();
        prop_assert_eq!(counts.total(), BigUint::one() << g.edge_count());
        prop_assert_eq!(eval_from_counts(&counts, &x, &y), brute_tutte(&g, &x, &y).unwrap());
    }
}

#[test]
fn spanning_connected_subgraphs_of_k3() {
    // The whole edge set and the three 2-edge paths.
    assert_eq!(brute_tutte(&Multigraph::complete(3), &int(1), &int(2)).unwrap(), int(4));
}
