mod common;

use avgconn_core::connectivity::{all_pairs_report, is_minimally_k_connected, ConnectivityMode};
use avgconn_core::search::{canonical_code, find_optimal, find_optimal_native, judge, SearchReport, Verdict};
use avgconn_core::{graph6, Rational};
use common::connected_fixture;

fn code_of(g6: &str) -> u64 {
    canonical_code(&graph6::decode(g6).unwrap()).unwrap()
}

fn optimum_codes(r: &SearchReport) -> Vec<u64> {
    r.optima.iter().map(|g| canonical_code(g).unwrap()).collect()
}

fn reverify(r: &SearchReport) {
    for g in &r.optima {
        assert!(is_minimally_k_connected(g, r.k as u32, r.mode).unwrap().minimal);
        assert_eq!(Some(all_pairs_report(g, r.mode).unwrap().average()), r.best_value);
    }
}

#[test]
fn two_connected_optima() {
    let expected = [(5, "D]o", (21, 10), [2, 3]), (6, "E?~o", (32, 15), [3, 4]), (7, "F]rE?", (15, 7), [6, 11])];
    for (n, g6, (num, den), minimal) in expected {
        for (mode, count) in [(ConnectivityMode::Vertex, minimal[0]), (ConnectivityMode::Edge, minimal[1])] {
            let r = find_optimal_native(n, 2, mode).unwrap();
            assert_eq!(r.best_value, Some(Rational::new(num, den)), "n={n} {mode:?}");
            assert_eq!(optimum_codes(&r), vec![code_of(g6)]);
            assert_eq!(r.count_minimal, count);
            assert!(r.all_optima_degree_partitioned);
            assert_eq!(r.bound_satisfied, Some(true));
            assert!(r.best_value.unwrap() < Rational::new(9, 4));
            reverify(&r);
        }
    }
}

#[test]
fn three_connected_optima() {
    let v4 = find_optimal_native(4, 3, ConnectivityMode::Vertex).unwrap();
    assert_eq!((v4.best_value, optimum_codes(&v4)), (Some(Rational::from_integer(3)), vec![code_of("C~")]));
    let v5 = find_optimal_native(5, 3, ConnectivityMode::Vertex).unwrap();
    assert_eq!((v5.best_value, optimum_codes(&v5)), (Some(Rational::from_integer(3)), vec![code_of("Dl{")]));
    let v6 = find_optimal_native(6, 3, ConnectivityMode::Vertex).unwrap();
    assert_eq!(v6.best_value, Some(Rational::from_integer(3)));
    assert_eq!(v6.optima.len(), 3);
    assert!(!v6.all_optima_degree_partitioned);
    assert_eq!(v6.bound_satisfied, None);
    let e6 = find_optimal_native(6, 3, ConnectivityMode::Edge).unwrap();
    assert_eq!((e6.best_value, optimum_codes(&e6)), (Some(Rational::new(46, 15)), vec![code_of("EyUw")]));
    for mode in [ConnectivityMode::Vertex, ConnectivityMode::Edge] {
        let r = find_optimal_native(7, 3, mode).unwrap();
        assert_eq!((r.best_value, optimum_codes(&r)), (Some(Rational::new(22, 7)), vec![code_of("FreRW")]));
        assert!(r.all_optima_degree_partitioned);
        reverify(&r);
    }
    // orders below 2k+1 are reported but not judged
    assert_eq!(judge(3, &[v4, v5, v6]).unwrap(), Verdict::Vacuous);
}

#[test]
fn ingested_corpus_gives_the_native_report() {
    for n in 5..=7 {
        let native = find_optimal_native(n, 2, ConnectivityMode::Vertex).unwrap();
        let ingested = find_optimal(n, 2, ConnectivityMode::Vertex, connected_fixture(n)).unwrap();
        assert_eq!(native, ingested);
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let single = pool.install(|| find_optimal_native(7, 2, ConnectivityMode::Edge).unwrap());
    let pool = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let many = pool.install(|| find_optimal_native(7, 2, ConnectivityMode::Edge).unwrap());
    assert_eq!(single, many);
}
