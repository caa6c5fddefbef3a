//! Smallest vertex set whose removal leaves a cograph, found by branching
//! on induced four-vertex paths: any such path must lose one of its four
//! vertices, so iterative deepening over the deletion budget yields a
//! smallest modulator within the cap.

use crate::bits::BitSet;
use crate::graph::Graph;

/// First induced P4 (a-b-c-d) among `alive` vertices, scanning middle
/// edges in sorted order so branching is reproducible.
pub fn find_induced_p4(g: &Graph, alive: &[bool]) -> Option<[usize; 4]> {
    let adj = adjacency_bitsets(g);
    let mut alive_bs = BitSet::new(g.n());
    for (v, &a) in alive.iter().enumerate() {
        if a {
            alive_bs.insert(v);
        }
    }
    p4_scan(g, &adj, &alive_bs)
}

fn adjacency_bitsets(g: &Graph) -> Vec<BitSet> {
    (0..g.n())
        .map(|v| {
            let mut b = BitSet::new(g.n());
            for &(u, _) in g.neighbors(v) {
                b.insert(u);
            }
            b
        })
        .collect()
}

fn p4_scan(g: &Graph, adj: &[BitSet], alive: &BitSet) -> Option<[usize; 4]> {
    // For each middle edge {b,c}: a ranges over alive N(b) \ N[c],
    // d over alive N(c) \ N[b]; any non-adjacent pair (a, d) closes a P4.
    for e in g.edges() {
        let (b, c) = (e.u, e.v);
        if !alive.contains(b) || !alive.contains(c) {
            continue;
        }
        let mut cand_a = adj[b].clone();
        cand_a.intersect_with(alive);
        cand_a.subtract(&adj[c]);
        cand_a.remove(c);
        if cand_a.is_empty() {
            continue;
        }
        let mut cand_d = adj[c].clone();
        cand_d.intersect_with(alive);
        cand_d.subtract(&adj[b]);
        cand_d.remove(b);
        if cand_d.is_empty() {
            continue;
        }
        for a in cand_a.iter_ones() {
            let mut rest = cand_d.clone();
            rest.subtract(&adj[a]);
            if let Some(d) = rest.first() {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

/// Smallest vertex set of size at most `cap` whose deletion leaves the
/// graph without induced P4s; `None` when no such set exists within the
/// cap. The empty graph counts as a cograph, so a cograph input yields
/// the empty set.
pub fn find_modulator(g: &Graph, cap: usize) -> Option<Vec<usize>> {
    let adj = adjacency_bitsets(g);
    let mut alive = BitSet::new(g.n().max(1));
    for v in 0..g.n() {
        alive.insert(v);
    }
    for budget in 0..=cap {
        let mut deleted = Vec::with_capacity(budget);
        if branch(g, &adj, &mut alive, budget, &mut deleted) {
            deleted.sort_unstable();
            return Some(deleted);
        }
    }
    None
}

fn branch(
    g: &Graph,
    adj: &[BitSet],
    alive: &mut BitSet,
    budget: usize,
    deleted: &mut Vec<usize>,
) -> bool {
    match p4_scan(g, adj, alive) {
        None => true,
        Some(p4) => {
            if budget == 0 {
                return false;
            }
            for v in p4 {
                alive.remove(v);
                deleted.push(v);
                if branch(g, adj, alive, budget - 1, deleted) {
                    return true;
                }
                deleted.pop();
                alive.insert(v);
            }
            false
        }
    }
}
