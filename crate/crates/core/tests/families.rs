use avgconn_core::connectivity::{
    is_degree_partitioned, is_minimally_k_connected, local_vertex_connectivity, ConnectivityMode,
};
use avgconn_core::separators::minimum_separator;
use avgconn_core::{graph6, ConstructionSpec, Graph};
use proptest::prelude::*;

#[test]
fn gkp_is_minimally_k_connected_up_to_p_15() {
    for k in 3..=5 {
        for p in k..=15 {
            let g = ConstructionSpec::gkp(k, p).unwrap().build().unwrap();
            for mode in [ConnectivityMode::Vertex, ConnectivityMode::Edge] {
                assert!(is_minimally_k_connected(&g, k as u32, mode).unwrap().minimal, "k={k} p={p} {mode:?}");
            }
        }
    }
}

#[test]
fn four_block_families_are_degree_partitioned() {
    let specs = [
        ConstructionSpec::gamma(3, 3).unwrap(),
        ConstructionSpec::gamma(4, 9).unwrap(),
        ConstructionSpec::psi(3, 72).unwrap(),
        ConstructionSpec::psi(4, 192).unwrap(),
        ConstructionSpec::phi(6, 7).unwrap(),
    ];
    for spec in specs {
        let g = spec.build().unwrap();
        g.check_invariants().unwrap();
        assert!(is_degree_partitioned(&g, spec.k).unwrap(), "{spec:?}");
    }
}

#[test]
fn minimum_separators_match_local_connectivity() {
    for spec in [ConstructionSpec::gkp(3, 9).unwrap(), ConstructionSpec::gamma(3, 8).unwrap()] {
        let g = spec.build().unwrap();
        for (u, v) in g.edges_complement() {
            let cert = minimum_separator(&g, u, v).unwrap();
            assert!(cert.minimal);
            assert_eq!(cert.set.len() as u32, local_vertex_connectivity(&g, u, v).unwrap());
        }
    }
}

#[test]
fn constructed_graphs_round_trip_through_graph6() {
    for spec in [ConstructionSpec::gkp(3, 31).unwrap(), ConstructionSpec::gamma(3, 15).unwrap(), ConstructionSpec::gkp(5, 8).unwrap()] {
        let g = spec.build().unwrap();
        assert!(g.order() <= 62);
        let back = graph6::decode(&graph6::encode(&g)).unwrap();
        assert!(back.same_edges(&g));
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..70).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let text = graph6::encode(&g);
        let back = graph6::decode(&text).unwrap();
        prop_assert!(back.same_edges(&g));
        prop_assert_eq!(graph6::encode(&back), text);
    }

    #[test]
    fn induced_on_everything_is_identity(g in arb_graph()) {
        let all = (0..g.order()).collect();
        prop_assert!(g.induced_subgraph(&all).unwrap().graph.same_edges(&g));
    }
}
