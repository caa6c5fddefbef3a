//! Property tests for the shared model: format round-trips, cut-weight
//! recomputation, cotree reconstruction and oracle monotonicity.

use proptest::prelude::*;

use tscu_core::cograph::build_cotree;
use tscu_core::generators::{gen_random, RandomKind, RandomParams, Rng};
use tscu_core::graph::Graph;
use tscu_core::instance::{normalize, Instance, Normalized, SolutionCut};
use tscu_core::oracle::brute_force_solve;

fn arbitrary_instance() -> impl Strategy<Value = Instance> {
    (
        2usize..10,
        any::<u64>(),
        0usize..3,
        0usize..3,
        proptest::option::of(0u64..20),
    )
        .prop_map(|(n, seed, s_size, t_size, ell)| {
            let mut rng = Rng::new(seed);
            let max_m = n * (n - 1) / 2;
            let m = (n - 1) + rng.below(max_m + 2 - n);
            gen_random(&RandomParams {
                kind: RandomKind::Connected { n, m },
                s_size: s_size.min(n),
                t_size: t_size.min(n - s_size.min(n)),
                ell,
                seed,
            })
            .expect("parameters in range")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialize_parse_round_trip(inst in arbitrary_instance()) {
        let again = Instance::parse(&inst.serialize()).unwrap();
        prop_assert_eq!(again, inst);
    }

    #[test]
    fn cut_weight_matches_recomputation(inst in arbitrary_instance(), mask in any::<u32>()) {
        let red: Vec<usize> = inst
            .graph
            .vertices()
            .filter(|&v| mask >> (v % 32) & 1 == 1)
            .collect();
        let cut = SolutionCut::from_red(&inst.graph, red);
        let direct: u64 = inst
            .graph
            .edges()
            .iter()
            .filter(|e| {
                cut.red.binary_search(&e.u).is_ok() != cut.red.binary_search(&e.v).is_ok()
            })
            .map(|e| e.w)
            .sum();
        prop_assert_eq!(cut.cut_weight, direct);
        prop_assert_eq!(cut.red.len() + cut.blue.len(), inst.graph.n());
    }

    #[test]
    fn cotree_reproduces_random_cographs(n in 2usize..16, seed in any::<u64>()) {
        let inst = gen_random(&RandomParams {
            kind: RandomKind::CographPlusModulator { n, modulator: 0 },
            s_size: 0,
            t_size: 0,
            ell: None,
            seed,
        })
        .unwrap();
        let tree = build_cotree(&inst.graph).expect("generated graph is a cograph");
        prop_assert_eq!(tree.evaluate(n), inst.graph.clone());
    }

    #[test]
    fn adding_monochromatic_edges_never_hurts(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let n = 5 + rng.below(3);
        let max_m = n * (n - 1) / 2;
        let m = (n - 1) + rng.below(max_m + 1 - n);
        let inst = gen_random(&RandomParams {
            kind: RandomKind::Connected { n, m },
            s_size: 1,
            t_size: 1,
            ell: None,
            seed,
        })
        .unwrap();
        let Normalized::Reduced(r) = normalize(&inst) else { return Ok(()) };
        let base = r.instance;
        let before = brute_force_solve(&base).unwrap().literal;
        let Some(witness) = before.witness else { return Ok(()) };
        // first non-adjacent pair inside a color class of the witness
        let pair = witness
            .red
            .iter()
            .flat_map(|&u| witness.red.iter().map(move |&v| (u, v)))
            .chain(
                witness
                    .blue
                    .iter()
                    .flat_map(|&u| witness.blue.iter().map(move |&v| (u, v))),
            )
            .find(|&(u, v)| u < v && !base.graph.has_edge(u, v));
        let Some((u, v)) = pair else { return Ok(()) };
        let edges = base
            .graph
            .edges()
            .iter()
            .map(|e| (e.u, e.v, e.w))
            .chain([(u, v, 1)]);
        let bigger = Graph::from_weighted_edges(base.graph.n(), edges).unwrap();
        let denser = Instance::new(bigger, base.s.clone(), base.t.clone(), base.ell);
        let after = brute_force_solve(&denser).unwrap().literal;
        prop_assert!(after.optimum.unwrap() <= before.optimum.unwrap());
    }

    #[test]
    fn generator_output_round_trips(seed in any::<u64>(), which in 0usize..4) {
        let mut rng = Rng::new(seed);
        let kind = match which {
            0 => {
                let n = 3 + rng.below(8);
                let max_m = n * (n - 1) / 2;
                RandomKind::Connected { n, m: ((n - 1) + rng.below(3)).min(max_m) }
            }
            1 => RandomKind::CographPlusModulator { n: 4 + rng.below(8), modulator: rng.below(3) },
            2 => RandomKind::LowIndependence { n: 4 + rng.below(6), complement_edges: rng.below(6) },
            _ => RandomKind::Grid { rows: 1 + rng.below(3), cols: 2 + rng.below(3) },
        };
        let inst = gen_random(&RandomParams { kind, s_size: 1, t_size: 1, ell: None, seed })
            .unwrap();
        prop_assert_eq!(Instance::parse(&inst.serialize()).unwrap(), inst);
    }
}
