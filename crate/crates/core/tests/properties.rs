use proptest::prelude::*;

use twonest::c1p::{has_c1p, is_valid_tucker_witness, minimal_non_c1p_submatrix};
use twonest::certificate::input_digest;
use twonest::generators::{gen_random_split_graph, gen_random_two_nested};
use twonest::graphs::{
    find_split_partition, is_nested_graph, is_two_nested_graph, nested_under_partition, SplitResult,
};
use twonest::oracle::{oracle_c1p, oracle_nested, oracle_two_nested};
use twonest::recognition::{build_crossing_graph, first_crossing_pair, NestedResult};
use twonest::stress::{check_graph, check_matrix};
use twonest::{
    find_induced_gem, is_nested, is_two_nested, test_c1p, verify_certificate, BinaryMatrix,
    C1pResult, CertClass, CertificateDocument, Graph, MatrixCertificate, Payload, RowRelation,
};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max_rows, 1..=max_cols, 0.1f64..0.9).prop_flat_map(|(n, m, p)| {
        proptest::collection::vec(proptest::bool::weighted(p), n * m)
            .prop_map(move |bits| BinaryMatrix::from_fn(n, m, |i, j| bits[i * m + j]).unwrap())
    })
}

fn with_permutation(
    max_rows: usize,
    max_cols: usize,
) -> impl Strategy<Value = (BinaryMatrix, Vec<usize>)> {
    matrix(max_rows, max_cols).prop_flat_map(|a| {
        let m = a.n_cols();
        (Just(a), Just((0..m).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut b = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if b.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn support(a: &BinaryMatrix, i: usize) -> std::collections::BTreeSet<usize> {
    a.row_support(i).into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn relation_is_symmetric_and_set_based((a, pi) in with_permutation(6, 7)) {
        let b = a.permute_columns(&pi).unwrap();
        for i in 0..a.n_rows() {
            for k in 0..a.n_rows() {
                if i == k {
                    continue;
                }
                let r = a.relate_rows(i, k).unwrap();
                prop_assert_eq!(a.relate_rows(k, i).unwrap(), r.swapped());
                prop_assert_eq!(b.relate_rows(i, k).unwrap(), r);

                let (x, y) = (support(&a, i), support(&a, k));
                let crossing = !x.is_disjoint(&y) && !x.is_subset(&y) && !y.is_subset(&x);
                prop_assert_eq!(r == RowRelation::Crossing, crossing);
                prop_assert_eq!(build_crossing_graph(&a).adjacent(i, k), crossing);
            }
        }
    }

    #[test]
    fn interval_ends_carry_ones((a, pi) in with_permutation(6, 7)) {
        let b = a.permute_columns(&pi).unwrap();
        for i in 0..b.n_rows() {
            let iv = b.row_interval(i).unwrap();
            match (iv.l(), iv.r()) {
                (Some(l), Some(r)) => prop_assert!(l <= r && b.get(i, l) && b.get(i, r)),
                _ => prop_assert_eq!(b.row_weight(i), 0),
            }
        }
        prop_assert_eq!(b.permute_columns(&twonest::matrix::invert_permutation(&pi)).unwrap(), a);
    }

    #[test]
    fn c1p_matches_oracle(a in matrix(8, 8)) {
        let expected = oracle_c1p(&a).unwrap();
        match test_c1p(&a) {
            C1pResult::Ordering(pi) => {
                prop_assert!(expected);
                prop_assert!(a.permute_columns(&pi).unwrap().has_consecutive_rows());
            }
            C1pResult::Witness(w) => {
                prop_assert!(!expected);
                prop_assert!(is_valid_tucker_witness(&a, &w).unwrap());
                let sub = a.submatrix(&w.rows, &w.cols).unwrap();
                prop_assert!(!oracle_c1p(&sub).unwrap());
                for r in 0..w.rows.len() {
                    let rows: Vec<usize> = w.rows.iter().copied().enumerate()
                        .filter(|&(x, _)| x != r).map(|(_, i)| i).collect();
                    prop_assert!(rows.is_empty() || oracle_c1p(&a.submatrix(&rows, &w.cols).unwrap()).unwrap());
                }
                for c in 0..w.cols.len() {
                    let cols: Vec<usize> = w.cols.iter().copied().enumerate()
                        .filter(|&(x, _)| x != c).map(|(_, j)| j).collect();
                    prop_assert!(cols.is_empty() || oracle_c1p(&a.submatrix(&w.rows, &cols).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn c1p_is_column_permutation_invariant((a, pi) in with_permutation(7, 8)) {
        prop_assert_eq!(has_c1p(&a), has_c1p(&a.permute_columns(&pi).unwrap()));
    }

    #[test]
    fn nested_matches_oracle_and_crossing_test(a in matrix(7, 7)) {
        let result = is_nested(&a).unwrap();
        prop_assert_eq!(result.accepted(), oracle_nested(&a).unwrap());
        prop_assert_eq!(result.accepted(), first_crossing_pair(&a).is_none());
        let cert = match result {
            NestedResult::Nested { ordering } => MatrixCertificate::Nested { ordering },
            NestedResult::NotNested(w) => MatrixCertificate::G0(w),
        };
        prop_assert!(verify_certificate(&a, &cert).unwrap());
    }

    #[test]
    fn two_nested_matches_oracle(a in matrix(8, 7)) {
        let outcome = check_matrix(&a);
        prop_assert!(outcome.problems.is_empty(), "{:?}", outcome.problems);
        prop_assert_eq!(is_two_nested(&a).unwrap().accepted(), oracle_two_nested(&a).unwrap());
    }

    #[test]
    fn generated_two_nested_is_accepted(n in 1usize..10, m in 1usize..8, seed in any::<u64>()) {
        let a = gen_random_two_nested(n, m, seed).unwrap();
        prop_assert!(is_two_nested(&a).unwrap().accepted());
    }

    #[test]
    fn minimal_witness_exists_exactly_for_non_c1p(a in matrix(6, 6)) {
        match minimal_non_c1p_submatrix(&a) {
            Ok(w) => prop_assert!(!has_c1p(&a) && is_valid_tucker_witness(&a, &w).unwrap()),
            Err(_) => prop_assert!(has_c1p(&a)),
        }
    }

    #[test]
    fn matrix_text_round_trips(a in matrix(9, 12)) {
        let text = a.to_text();
        let back = BinaryMatrix::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn graph_text_round_trips(g in graph(9)) {
        let text = g.to_text();
        let back = Graph::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn graph_checks_hold(g in graph(8)) {
        let outcome = check_graph(&g);
        prop_assert!(outcome.problems.is_empty(), "{:?}", outcome.problems);
    }

    #[test]
    fn split_graph_classes(n in 1usize..9, seed in any::<u64>()) {
        let g = gen_random_split_graph(n, seed).unwrap();
        let SplitResult::Split(sg) = find_split_partition(&g) else {
            return Err(TestCaseError::fail("generated graph is not split"));
        };
        let nested = is_nested_graph(&g).unwrap().accepted();
        prop_assert_eq!(nested, find_induced_gem(&g).is_none());
        if nested {
            prop_assert!(is_two_nested_graph(&g).unwrap().accepted());
        }
        if let Err(gem) = nested_under_partition(&sg).unwrap() {
            prop_assert!(gem.holds_in(&g));
        }
    }

    #[test]
    fn threshold_graphs_are_nested(choices in proptest::collection::vec(any::<bool>(), 0..8)) {
        let n = choices.len() + 1;
        let mut g = Graph::empty(n).unwrap();
        for (v, universal) in choices.iter().enumerate().map(|(i, &u)| (i + 1, u)) {
            if universal {
                for u in 0..v {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        prop_assert!(is_nested_graph(&g).unwrap().accepted());
    }

    #[test]
    fn certificate_text_round_trips(a in matrix(8, 8)) {
        let digest = input_digest(a.to_text().as_bytes());
        let cert = match is_two_nested(&a).unwrap() {
            twonest::recognition::TwoNestedResult::TwoNested { ordering, bipartition } => {
                MatrixCertificate::TwoNested { ordering, bipartition }
            }
            twonest::recognition::TwoNestedResult::NotC1p(w) => MatrixCertificate::Tucker(w),
            twonest::recognition::TwoNestedResult::OddCycle { ordering, witness } => {
                MatrixCertificate::Configuration { ordering, witness }
            }
        };
        let doc = CertificateDocument::new(CertClass::TwoNested, Payload::Matrix(cert), digest);
        let text = doc.to_text();
        let back = CertificateDocument::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn certificate_parser_never_panics(text in "[a-z0-9: \n]{0,80}") {
        let _ = CertificateDocument::parse(&text);
    }

    #[test]
    fn corrupted_orderings_do_not_verify(a in matrix(6, 6), swap in (0usize..6, 0usize..6)) {
        if let C1pResult::Ordering(mut pi) = test_c1p(&a) {
            let (x, y) = (swap.0 % pi.len(), swap.1 % pi.len());
            pi.swap(x, y);
            let ok = a.permute_columns(&pi).unwrap().has_consecutive_rows();
            prop_assert_eq!(verify_certificate(&a, &MatrixCertificate::C1p { ordering: pi }).unwrap(), ok);
        }
    }
}
