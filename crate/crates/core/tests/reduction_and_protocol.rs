mod common;

use linecover::duality::{dualize_lpc, lpc_brute_force};
use linecover::order_type::enumerate_grid_order_types;
use linecover::plc::decide;
use linecover::protocol::{
    cost_bound, max_rounds, run_protocol, run_protocol_with_catalog, Direction, ProtocolConfig,
};
use linecover::vc::{
    double_graph, grid_side, in_grid, special_point_set, vc_brute_force, vc_to_lpc,
    verify_special_properties, Graph, VcInstance,
};
use linecover::{PlcInstance, Point};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn doubling_doubles_the_cover(g in graph(8), k in 0usize..8) {
        let k = k.min(g.n());
        let d = double_graph(&g);
        prop_assert_eq!(d.edge_count(), 4 * g.edge_count());
        for v in 0..g.n() {
            prop_assert_eq!(d.neighbors(v), d.neighbors(v + g.n()));
        }
        let direct = vc_brute_force(&VcInstance::new(g.clone(), k).unwrap()).unwrap();
        let doubled = vc_brute_force(&VcInstance::new(d, 2 * k).unwrap()).unwrap();
        prop_assert_eq!(direct, doubled);
    }

    #[test]
    fn special_sets_hold_for_any_seed(m in 1usize..9, seed in any::<u64>()) {
        let pts = special_point_set(m, seed);
        prop_assert_eq!(pts.len(), m);
        prop_assert!(verify_special_properties(&pts).unwrap());
        prop_assert!(pts.iter().all(|p| in_grid(p, grid_side(m))));
    }
}

#[test]
fn lpc_side_of_the_chain_agrees() {
    // Line Point Cover answers on the phase-two output, for every graph on
    // at most three vertices (the brute-force LPC cap is 16 lines).
    for n in 1..=3usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            for k in 0..=n {
                let inst = VcInstance::new(g.clone(), k).unwrap();
                let lpc = vc_to_lpc(&inst, 99).unwrap();
                let expected = vc_brute_force(&inst).unwrap();
                assert_eq!(lpc_brute_force(&lpc).unwrap(), expected, "{g:?} k={k}");
                assert_eq!(decide(&dualize_lpc(&lpc).unwrap()), expected, "{g:?} k={k}");
            }
        }
    }
}

#[test]
fn protocol_on_every_three_grid_subset() {
    let cfg = ProtocolConfig::new(3).unwrap();
    let cells: Vec<Point> = (0..3)
        .flat_map(|x| (0..3).map(move |y| Point::from_ints(x, y)))
        .collect();
    for n in 1..=4usize {
        let catalog = enumerate_grid_order_types(n, 3).unwrap();
        for mask in 0u32..1 << cells.len() {
            if mask.count_ones() as usize != n {
                continue;
            }
            let pts: Vec<Point> = (0..cells.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| cells[i].clone())
                .collect();
            for k in 0..=3 {
                let inst = PlcInstance::new(pts.clone(), k).unwrap();
                let t = run_protocol_with_catalog(&inst, &cfg, &catalog).unwrap();
                assert_eq!(t.answer, decide(&inst));
                assert!(t.alice_cost_bits <= cost_bound(n, catalog.len()));
                assert!(t.rounds <= max_rounds(catalog.len()));
                let alice: usize = t
                    .messages
                    .iter()
                    .filter(|m| m.direction == Direction::AliceToBob)
                    .map(|m| m.bits.len())
                    .sum();
                assert_eq!(alice, t.alice_cost_bits);
            }
        }
    }
}

#[test]
fn protocol_builds_its_own_catalog() {
    let cfg = ProtocolConfig::new(4).unwrap();
    let inst = PlcInstance::new(
        [(0, 0), (1, 1), (2, 2), (3, 0)]
            .map(|(x, y)| Point::from_ints(x, y))
            .to_vec(),
        2,
    )
    .unwrap();
    let t = run_protocol(&inst, &cfg).unwrap();
    assert!(t.answer);
    assert_eq!(t.min_cover, 2);
    let n4 = enumerate_grid_order_types(4, 4).unwrap();
    assert_eq!(t.catalog_size, n4.len());
    assert!(t.alice_cost_bits <= cost_bound(4, n4.len()));
    assert_eq!(t.render(), run_protocol(&inst, &cfg).unwrap().render());

    // a catalog for the wrong n is refused
    let n3 = enumerate_grid_order_types(3, 4).unwrap();
    assert!(run_protocol_with_catalog(&inst, &cfg, &n3).is_err());
}

#[test]
fn protocol_rejects_oversized_instances() {
    let cfg = ProtocolConfig::new(4).unwrap();
    let pts: Vec<Point> = (0..3)
        .flat_map(|x| (0..3).map(move |y| Point::from_ints(x, y)))
        .collect();
    let inst = PlcInstance::new(pts, 3).unwrap();
    assert!(matches!(
        run_protocol(&inst, &cfg),
        Err(linecover::Error::CapExceeded { .. })
    ));
}
