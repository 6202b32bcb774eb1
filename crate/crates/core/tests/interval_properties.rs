use grundy::interval::{
    build_endpoint_sequence, count_ab_pairs, grundy_interval, intersection_graph, EndpointKind, Interval,
    IntervalModel,
};
use grundy::sequence::check_legal;
use grundy::solver::{grundy_domination_number, SolverConfig};
use proptest::prelude::*;
use rust_decimal::Decimal;

/// Integer-grid models (many coincidences) and finer decimal models.
fn model_strategy() -> impl Strategy<Value = IntervalModel> {
    let grid = proptest::collection::vec((0i64..6, 0i64..6), 1..=12).prop_map(|v| {
        IntervalModel::from_integers(&v.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect::<Vec<_>>()).unwrap()
    });
    let fine = proptest::collection::vec((-5000i64..5000, 0i64..3000), 1..=12).prop_map(|v| {
        IntervalModel::new(
            v.into_iter()
                .map(|(a, len)| Interval {
                    left: Decimal::new(a, 2),
                    right: Decimal::new(a + len, 2),
                })
                .collect(),
        )
        .unwrap()
    });
    prop_oneof![grid, fine]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sweep_length_equals_pair_count(m in model_strategy()) {
        prop_assert_eq!(grundy_interval(&m).len(), count_ab_pairs(&build_endpoint_sequence(&m)));
    }

    #[test]
    fn sweep_matches_exact_solver(m in model_strategy()) {
        let g = intersection_graph(&m);
        let exact = grundy_domination_number(&g, &SolverConfig::default()).unwrap().gamma_gr;
        prop_assert_eq!(grundy_interval(&m).len(), exact);
    }

    #[test]
    fn sweep_output_is_legal_and_dominating(m in model_strategy()) {
        let g = intersection_graph(&m);
        let r = check_legal(&g, &grundy_interval(&m)).unwrap();
        prop_assert!(r.legal && r.dominating);
    }

    #[test]
    fn first_vertex_has_smallest_right_endpoint(m in model_strategy()) {
        let s = grundy_interval(&m);
        let first = s.as_slice()[0];
        prop_assert_eq!(first, m.right_endpoint_order()[0]);
    }

    #[test]
    fn translation_and_scaling_do_not_change_output(
        m in model_strategy(),
        shift in -1000i64..1000,
        factor in 1i64..500,
    ) {
        let base = grundy_interval(&m);
        prop_assert_eq!(&grundy_interval(&m.translate(Decimal::new(shift, 1))), &base);
        prop_assert_eq!(&grundy_interval(&m.scale(Decimal::new(factor, 2)).unwrap()), &base);
    }

    #[test]
    fn endpoint_sequence_is_well_formed(m in model_strategy()) {
        let e = build_endpoint_sequence(&m);
        prop_assert_eq!(e.len(), 2 * m.len());
        for w in e.events().windows(2) {
            prop_assert!(w[0].coord <= w[1].coord);
            if w[0].coord == w[1].coord {
                prop_assert!(w[0].kind <= w[1].kind);
                if w[0].kind == w[1].kind {
                    prop_assert!(w[0].vertex < w[1].vertex);
                }
            }
        }
        for v in 0..m.len() {
            let lefts = e.events().iter().filter(|x| x.vertex == v && x.kind == EndpointKind::Left).count();
            let rights = e.events().iter().filter(|x| x.vertex == v && x.kind == EndpointKind::Right).count();
            prop_assert_eq!((lefts, rights), (1, 1));
        }
    }

    #[test]
    fn intersection_graph_matches_pairwise_overlap(m in model_strategy()) {
        let g = intersection_graph(&m);
        let iv = m.intervals();
        for i in 0..m.len() {
            for j in 0..m.len() {
                let overlap = i != j && iv[i].left.max(iv[j].left) <= iv[i].right.min(iv[j].right);
                prop_assert_eq!(g.has_edge(i, j), overlap);
            }
        }
    }
}

#[test]
fn identical_intervals_give_one_vertex() {
    for n in 1..=8 {
        let m = IntervalModel::from_integers(&vec![(3, 9); n]).unwrap();
        assert_eq!(grundy_interval(&m).as_slice(), [0]);
        let g = intersection_graph(&m);
        assert_eq!(grundy_domination_number(&g, &SolverConfig::default()).unwrap().gamma_gr, 1);
    }
}

#[test]
fn disjoint_intervals_give_all_vertices_by_right_endpoint() {
    let m = IntervalModel::from_integers(&[(10, 11), (0, 1), (5, 6), (2, 3)]).unwrap();
    assert_eq!(grundy_interval(&m).as_slice(), [1, 3, 2, 0]);
}
