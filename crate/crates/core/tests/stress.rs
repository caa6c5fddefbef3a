//! Long-running differential sweep across all solvers and kernels; run
//! on demand with `cargo test -p tscu-core --test stress -- --ignored`.

use tscu_core::cograph::solve_cograph;
use tscu_core::generators::{gen_random, RandomKind, RandomParams, Rng};
use tscu_core::indset::{max_independent_set, solve_indset, Alpha};
use tscu_core::instance::{normalize, verify_solution, Instance, Normalized};
use tscu_core::kernel::{feedback_edge_number, kernelize_fes, kernelize_vc_2dcs, KernelOutcome};
use tscu_core::oracle::brute_force_solve;
use tscu_core::treewidth::{heuristic_td, heuristic_td_min_fill, solve_treewidth};

fn random_instance(seed: u64) -> Option<Instance> {
    let mut rng = Rng::new(seed.wrapping_mul(0x9e3779b9) + 17);
    let n = 4 + rng.below(9); // up to 12
    let max_m = n * (n - 1) / 2;
    let kind = match rng.below(4) {
        0 => RandomKind::Connected {
            n,
            m: (n - 1) + rng.below(max_m + 2 - n),
        },
        1 => RandomKind::CographPlusModulator {
            n,
            modulator: rng.below(n.min(4)),
        },
        2 => RandomKind::LowIndependence {
            n,
            complement_edges: rng.below(max_m + 1),
        },
        _ => RandomKind::Grid {
            rows: 2 + rng.below(2),
            cols: 2 + rng.below(3),
        },
    };
    let s_size = 1 + rng.below(3);
    let t_size = 1 + rng.below(3);
    if s_size + t_size > n {
        return None;
    }
    let ell = if rng.chance(1, 3) {
        Some(rng.below(2 * n) as u64)
    } else {
        None
    };
    gen_random(&RandomParams {
        kind,
        s_size,
        t_size,
        ell,
        seed,
    })
    .ok()
}

#[test]
#[ignore = "long differential sweep"]
fn differential_sweep() {
    let mut solved = 0usize;
    let mut kernels = 0usize;
    for seed in 0..4000u64 {
        let Some(inst) = random_instance(seed) else {
            continue;
        };
        let expect = match normalize(&inst) {
            Normalized::Trivial(v) => v,
            Normalized::Reduced(r) => {
                let red = r.instance;
                let oracle = brute_force_solve(&red).unwrap();
                assert_eq!(oracle.literal.yes, oracle.connected.yes, "seed {seed}");
                assert_eq!(
                    oracle.literal.optimum, oracle.connected.optimum,
                    "seed {seed}"
                );

                let tw = solve_treewidth(&red, &heuristic_td(&red.graph)).unwrap();
                assert_eq!(
                    tw.optimum, oracle.connected.optimum,
                    "treewidth, seed {seed}"
                );
                let tw2 = solve_treewidth(&red, &heuristic_td_min_fill(&red.graph)).unwrap();
                assert_eq!(tw2.optimum, tw.optimum, "decompositions, seed {seed}");

                if red.graph.is_unit_weight() {
                    if let Some(cg) = solve_cograph(&red, 4).unwrap() {
                        assert_eq!(cg.optimum, oracle.literal.optimum, "cograph, seed {seed}");
                        if let Some(w) = &cg.witness {
                            assert!(verify_solution(&red, w).valid, "seed {seed}");
                        }
                    }
                }
                if let Alpha::Exact(k) = max_independent_set(&red.graph, 3) {
                    let out = solve_indset(&red, k).unwrap();
                    assert_eq!(
                        out.verdict.optimum, oracle.literal.optimum,
                        "indset, seed {seed}"
                    );
                }
                solved += 1;
                oracle.literal
            }
        };

        if inst.graph.is_unit_weight() {
            match kernelize_fes(&inst).unwrap() {
                KernelOutcome::Trivial(v, _) => assert_eq!(v.yes, expect.yes, "fes, seed {seed}"),
                KernelOutcome::Kernel(out, _) => {
                    let got = brute_force_solve(&out).unwrap().literal;
                    assert_eq!(got.yes, expect.yes, "fes kernel, seed {seed}");
                    let k = feedback_edge_number(&out.graph);
                    assert!(
                        out.graph.n() <= 5 * k && out.graph.edge_count() <= 6 * k,
                        "fes bound, seed {seed}"
                    );
                    kernels += 1;
                }
            }
        }
        if inst.is_budget_free() {
            let (out, _) = kernelize_vc_2dcs(&inst, None).unwrap();
            let got = match normalize(&out) {
                Normalized::Trivial(v) => v.yes,
                Normalized::Reduced(r) => brute_force_solve(&r.instance).unwrap().literal.yes,
            };
            assert_eq!(got, expect.yes, "vc kernel, seed {seed}");
        }
    }
    println!("differential sweep: {solved} solved instances, {kernels} nontrivial kernels");
    assert!(solved > 2000);
}
