use proptest::prelude::*;

use ocdom_core::combinations::{binomial, rank, unrank};
use ocdom_core::products::{cartesian, corona, direct, lexicographic, pair_index, unpair};
use ocdom_core::scan::scan_small_sets;
use ocdom_core::solvers::{
    baseline::solve_exact, bnb::solve_bnb, is_dominating, is_total_dominating, is_valid, Budget,
    DominationKind, Exact,
};
use ocdom_core::witness::{cartesian_prediction, corona_prediction, lex_prediction};
use ocdom_core::{emit_graph6, parse_graph6, Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (1..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn nonempty(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("non-empty", |g| g.order() > 0)
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    nonempty(max_n).prop_filter("connected", Graph::is_connected)
}

fn value(g: &Graph, kind: DominationKind) -> usize {
    solve_bnb(g, kind, Budget::UNLIMITED).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn adjacency_is_symmetric_and_loop_free(g in graph(12)) {
        let mut degree_sum = 0;
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
            degree_sum += g.degree(u);
        }
        prop_assert_eq!(degree_sum, 2 * g.size());
    }

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let text = emit_graph6(&g);
        let back = parse_graph6(text.as_bytes()).unwrap();
        prop_assert_eq!(emit_graph6(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn induced_on_everything_is_identity(g in graph(10)) {
        let (h, keep) = g.induced_subgraph(&VertexSet::full(g.order()));
        prop_assert_eq!(keep, (0..g.order()).collect::<Vec<_>>());
        prop_assert_eq!(h, g);
    }

    #[test]
    fn small_induced_subgraphs_are_connected(g in nonempty(10), v in 0usize..10) {
        let v = v % g.order();
        let (h, _) = g.induced_subgraph(&VertexSet::from_ids(g.order(), [v]).unwrap());
        prop_assert!(h.is_connected());
        prop_assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn domination_is_superset_closed(g in nonempty(9), mask in any::<u16>(), extra in 0usize..9) {
        let n = g.order();
        let s = VertexSet::from_mask(n, mask as u128 & ((1u128 << n) - 1)).unwrap();
        let bigger = VertexSet::from_mask(n, s.mask() | 1 << (extra % n)).unwrap();
        if is_dominating(&g, &s) {
            prop_assert!(is_dominating(&g, &bigger));
        }
        if is_total_dominating(&g, &s) {
            prop_assert!(is_total_dominating(&g, &bigger));
        }
    }

    #[test]
    fn parameter_ordering(g in nonempty(9)) {
        let gamma = value(&g, DominationKind::Domination);
        prop_assert!(gamma <= value(&g, DominationKind::OuterConnected));
        if !g.has_isolated_vertex() {
            prop_assert!(gamma <= value(&g, DominationKind::Total));
        }
    }

    #[test]
    fn outer_connected_bound(g in connected(9)) {
        let oc = value(&g, DominationKind::OuterConnected);
        prop_assert!(oc <= g.order() - g.min_degree().unwrap());
    }

    #[test]
    fn bnb_matches_baseline(g in graph(9)) {
        for kind in DominationKind::ALL {
            let a = solve_exact(&g, kind, Budget::UNLIMITED);
            let b = solve_bnb(&g, kind, Budget::UNLIMITED);
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    prop_assert!(a.agrees_with(&b), "{:?} {}: {:?} vs {:?}", g, kind, a, b);
                    prop_assert!(is_valid(&g, kind, &b.witness));
                    prop_assert_eq!(b.witness.len(), b.value);
                }
                (Err(a), Err(b)) => prop_assert_eq!(a, b),
                (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
            }
        }
    }

    #[test]
    fn scan_finds_canonical_witness(g in nonempty(8)) {
        for kind in [DominationKind::Domination, DominationKind::OuterConnected] {
            let cert = solve_exact(&g, kind, Budget::UNLIMITED).unwrap();
            prop_assert_eq!(scan_small_sets(&g, kind, cert.value).first_valid, Some(cert.witness));
        }
    }

    #[test]
    fn product_degree_laws(g in nonempty(5), h in nonempty(5)) {
        let (ng, nh) = (g.order(), h.order());
        let cart = cartesian(&g, &h).unwrap().product;
        let lex = lexicographic(&g, &h).unwrap().product;
        let dir = direct(&g, &h).unwrap().product;
        for p in [&cart, &lex, &dir] {
            prop_assert_eq!(p.order(), ng * nh);
        }
        for u in 0..ng {
            for v in 0..nh {
                let id = pair_index(u, v, nh).unwrap();
                prop_assert_eq!(unpair(id, nh).unwrap(), (u, v));
                prop_assert_eq!(cart.degree(id), g.degree(u) + h.degree(v));
                prop_assert_eq!(lex.degree(id), nh * g.degree(u) + h.degree(v));
                prop_assert_eq!(dir.degree(id), g.degree(u) * h.degree(v));
            }
        }
        let cor = corona(&g, &h).unwrap().product;
        prop_assert_eq!(cor.order(), ng * (1 + nh));
        for x in 0..ng {
            prop_assert_eq!(cor.degree(x), g.degree(x) + nh);
        }
    }

    #[test]
    fn emitted_witnesses_validate(g in connected(4), h in connected(4)) {
        let exact = Exact::default();
        if g.order() >= 2 && h.order() >= 2 {
            let p = lex_prediction(&g, &h, &exact).unwrap();
            let w = p.witness.unwrap();
            prop_assert_eq!(w.len(), p.value);
            prop_assert!(is_valid(&p.instance.product, DominationKind::OuterConnected, &w));
        }
        let p = cartesian_prediction(&g, &h, &exact).unwrap();
        prop_assert!(is_valid(&p.instance.product, DominationKind::OuterConnected, p.witness.as_ref().unwrap()));
        let p = corona_prediction(&g, &h, &exact).unwrap();
        prop_assert!(is_valid(&p.instance.product, DominationKind::OuterConnected, p.witness.as_ref().unwrap()));
    }

    #[test]
    fn combination_rank_round_trip((n, k) in (0usize..20).prop_flat_map(|n| (Just(n), 0..=n.min(6))), r in any::<u64>()) {
        let total = binomial(n, k);
        let r = r as u128 % total;
        let combo = unrank(n, k, r).unwrap();
        prop_assert_eq!(rank(n, &combo), r);
        prop_assert!(combo.windows(2).all(|w| w[0] < w[1]));
    }
}
