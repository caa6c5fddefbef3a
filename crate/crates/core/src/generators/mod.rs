//! Instance generators: hardness-construction families used as verified
//! benchmarks, plus seeded random families for the test suites.

pub mod cnf;
pub mod mcc;
pub mod random;

pub use cnf::{gen_sat34, CnfFormula};
pub use mcc::{gen_mcc, MccInput, MccOutput};
pub use random::{gen_random, RandomKind, RandomParams, Rng};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;

/// Bipartite reduction for budget-free instances: add a terminal-free
/// copy of the graph, connect it by a single edge to the smallest
/// S-vertex, and subdivide every edge once. The copy can always be
/// colored red, and subdividing preserves the answer, so the output is an
/// equivalent bipartite instance whose two halves hang on one edge.
pub fn transform_bipartite(inst: &Instance) -> Result<Instance> {
    if !inst.is_budget_free() {
        return Err(Error::Mode(
            "bipartite transform applies only to budget-free instances".into(),
        ));
    }
    if inst.s.is_empty() {
        return Err(Error::Param("transform needs a nonempty S".into()));
    }
    let g = &inst.graph;
    if !g.is_connected() {
        return Err(Error::Param("transform needs a connected graph".into()));
    }
    let n = g.n();
    let anchor = inst.s[0];
    // vertices: originals 0..n, copy n..2n, then one vertex per edge
    let mut base_edges: Vec<(usize, usize, u64)> = Vec::new();
    for e in g.edges() {
        base_edges.push((e.u, e.v, e.w));
        base_edges.push((e.u + n, e.v + n, e.w));
    }
    base_edges.push((anchor, anchor + n, 1));
    let total = 2 * n + base_edges.len();
    let mut edges: Vec<(usize, usize, u64)> = Vec::with_capacity(2 * base_edges.len());
    for (i, &(u, v, w)) in base_edges.iter().enumerate() {
        let mid = 2 * n + i;
        edges.push((u, mid, w));
        edges.push((mid, v, w));
    }
    let graph = Graph::from_weighted_edges(total, edges)?;
    Ok(Instance::new(graph, inst.s.clone(), inst.t.clone(), None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_force_solve, brute_force_solve_opts, BruteOptions};

    fn parse(text: &str) -> Instance {
        Instance::parse(text).unwrap()
    }

    fn is_bipartite(g: &Graph) -> bool {
        let mut color = vec![None; g.n()];
        for start in g.vertices() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(u, _) in g.neighbors(v) {
                    match color[u] {
                        None => {
                            color[u] = Some(!color[v].unwrap());
                            queue.push_back(u);
                        }
                        Some(c) if c == color[v].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    #[test]
    fn p3_transform_sizes() {
        let inst = parse("p tscu 3 2\ne 1 2\ne 2 3\ns 1\nt 3\n");
        let out = transform_bipartite(&inst).unwrap();
        assert_eq!(out.graph.n(), 11); // 2*3 originals + 5 subdivision vertices
        assert!(is_bipartite(&out.graph));
        assert_eq!(out.ell, None);
    }

    #[test]
    fn transform_preserves_answer_small() {
        for (text, _) in [
            ("p tscu 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ns 1\nt 3\n", "c4"),
            ("p tscu 4 3\ne 1 2\ne 1 3\ne 1 4\ns 2\nt 3\n", "star"),
            (
                "p tscu 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ns 1 3\nt 2\n",
                "c5",
            ),
        ] {
            let inst = parse(text);
            let before = brute_force_solve(&inst).unwrap().literal.yes;
            let out = transform_bipartite(&inst).unwrap();
            let after = brute_force_solve_opts(
                &out,
                BruteOptions {
                    cap: 24,
                    parallel: true,
                },
            )
            .unwrap()
            .literal
            .yes;
            assert_eq!(before, after, "{text}");
        }
    }

    #[test]
    fn transform_rejects_budgeted() {
        let inst = parse("p tscu 3 2\ne 1 2\ne 2 3\ns 1\nt 3\nl 1\n");
        assert!(matches!(transform_bipartite(&inst), Err(Error::Mode(_))));
    }
}
