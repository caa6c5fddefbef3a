//! Weighted minimum edge cut between two anchored vertex sets, via Dinic's
//! blocking-flow algorithm with integer capacities.
//!
//! Each undirected weight-w edge becomes two opposing capacity-w arcs.
//! Multiple anchors are handled by a virtual super-source and super-sink
//! joined to the anchors with capacity 1 + total edge weight, which no
//! finite cut can afford to cross.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Minimum cut value together with the side containing the source anchors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub value: u64,
    /// Vertices reachable from the source anchors in the residual network
    /// after a maximum flow; sorted.
    pub source_side: Vec<usize>,
}

struct FlowNet {
    // arcs stored in pairs; arc a's reverse is a ^ 1
    to: Vec<usize>,
    cap: Vec<u64>,
    head: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); n],
        }
    }

    fn add_pair(&mut self, u: usize, v: usize, cap_uv: u64, cap_vu: u64) {
        let a = self.to.len();
        self.to.push(v);
        self.cap.push(cap_uv);
        self.to.push(u);
        self.cap.push(cap_vu);
        self.head[u].push(a);
        self.head[v].push(a + 1);
    }

    fn bfs_levels(&self, s: usize, t: usize, level: &mut [i32]) -> bool {
        level.fill(-1);
        level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && level[v] == -1 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level[t] != -1
    }

    fn dfs_push(
        &mut self,
        u: usize,
        t: usize,
        pushed: u64,
        level: &[i32],
        it: &mut [usize],
    ) -> u64 {
        if u == t {
            return pushed;
        }
        while it[u] < self.head[u].len() {
            let a = self.head[u][it[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && level[v] == level[u] + 1 {
                let got = self.dfs_push(v, t, pushed.min(self.cap[a]), level, it);
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            it[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let n = self.head.len();
        let mut flow = 0u64;
        let mut level = vec![-1i32; n];
        while self.bfs_levels(s, t, &mut level) {
            let mut it = vec![0usize; n];
            loop {
                let pushed = self.dfs_push(s, t, u64::MAX, &level, &mut it);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        flow
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Minimum total weight of edges separating anchor set `a` from anchor set
/// `b`, with the bipartition realizing it.
pub fn min_cut(g: &Graph, a: &[usize], b: &[usize]) -> Result<CutResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Anchors("anchor sets must be nonempty".into()));
    }
    let mut in_a = vec![false; g.n()];
    for &v in a {
        in_a[v] = true;
    }
    if b.iter().any(|&v| in_a[v]) {
        return Err(Error::Anchors("anchor sets intersect".into()));
    }
    let n = g.n();
    let source = n;
    let sink = n + 1;
    let inf = g.total_weight() + 1;
    let mut net = FlowNet::new(n + 2);
    for e in g.edges() {
        net.add_pair(e.u, e.v, e.w, e.w);
    }
    for &v in a {
        net.add_pair(source, v, inf, 0);
    }
    for &v in b {
        net.add_pair(v, sink, inf, 0);
    }
    let value = net.max_flow(source, sink);
    let reach = net.residual_reachable(source);
    let source_side: Vec<usize> = (0..n).filter(|&v| reach[v]).collect();
    Ok(CutResult { value, source_side })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_cut() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let r = min_cut(&p3, &[0], &[2]).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.source_side == vec![0] || r.source_side == vec![0, 1]);
    }

    #[test]
    fn k4_isolates_a_vertex() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = min_cut(&k4, &[0], &[1]).unwrap();
        assert_eq!(r.value, 3);
    }

    #[test]
    fn weighted_pair() {
        let g = Graph::from_weighted_edges(2, [(0, 1, 3)]).unwrap();
        let r = min_cut(&g, &[0], &[1]).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.source_side, vec![0]);
    }

    #[test]
    fn intersecting_anchors_rejected() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(min_cut(&g, &[0, 1], &[1]).is_err());
        assert!(min_cut(&g, &[], &[1]).is_err());
    }

    #[test]
    fn value_matches_recomputed_crossing_weight() {
        let g = Graph::from_weighted_edges(
            5,
            [
                (0, 1, 2),
                (1, 2, 1),
                (2, 3, 4),
                (3, 4, 1),
                (0, 4, 1),
                (1, 3, 2),
            ],
        )
        .unwrap();
        let r = min_cut(&g, &[0], &[3]).unwrap();
        let mut on_side = [false; 5];
        for &v in &r.source_side {
            on_side[v] = true;
        }
        let crossing: u64 = g
            .edges()
            .iter()
            .filter(|e| on_side[e.u] != on_side[e.v])
            .map(|e| e.w)
            .sum();
        assert_eq!(crossing, r.value);
    }
}
