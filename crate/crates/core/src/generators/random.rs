//! Seeded random instance families. A small hand-rolled generator keeps
//! fixtures byte-stable across toolchain and dependency updates.

use crate::cograph::cotree::CotreeNode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;

/// SplitMix64; deterministic for a fixed seed.
#[derive(Clone, Debug)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..bound (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn chance(&mut self, num: usize, den: usize) -> bool {
        self.below(den) < num
    }

    /// First `take` elements of a seeded shuffle of 0..n.
    pub fn sample(&mut self, n: usize, take: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..n).collect();
        for i in 0..take.min(n) {
            let j = i + self.below(n - i);
            ids.swap(i, j);
        }
        ids.truncate(take);
        ids
    }
}

#[derive(Clone, Debug)]
pub enum RandomKind {
    /// Random connected graph with exactly `m` edges.
    Connected { n: usize, m: usize },
    /// Random cotree-built graph plus `modulator` extra vertices with
    /// random attachments; the distance to cographs is at most `modulator`.
    CographPlusModulator { n: usize, modulator: usize },
    /// Complement of a sparse random graph with `complement_edges` edges;
    /// independent sets stay small.
    LowIndependence { n: usize, complement_edges: usize },
    /// Grid graph.
    Grid { rows: usize, cols: usize },
}

#[derive(Clone, Debug)]
pub struct RandomParams {
    pub kind: RandomKind,
    pub s_size: usize,
    pub t_size: usize,
    pub ell: Option<u64>,
    pub seed: u64,
}

pub fn gen_random(params: &RandomParams) -> Result<Instance> {
    let mut rng = Rng::new(params.seed);
    let graph = match params.kind {
        RandomKind::Connected { n, m } => connected(n, m, &mut rng)?,
        RandomKind::CographPlusModulator { n, modulator } => {
            cograph_plus_modulator(n, modulator, &mut rng)?
        }
        RandomKind::LowIndependence {
            n,
            complement_edges,
        } => low_independence(n, complement_edges, &mut rng)?,
        RandomKind::Grid { rows, cols } => grid(rows, cols)?,
    };
    let n = graph.n();
    if params.s_size + params.t_size > n {
        return Err(Error::Param("more terminals than vertices".into()));
    }
    let picks = rng.sample(n, params.s_size + params.t_size);
    let s = picks[..params.s_size].to_vec();
    let t = picks[params.s_size..].to_vec();
    Ok(Instance::new(graph, s, t, params.ell))
}

fn connected(n: usize, m: usize, rng: &mut Rng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Param("need at least one vertex".into()));
    }
    let max = n * n.saturating_sub(1) / 2;
    if m + 1 < n || m > max {
        return Err(Error::Param(format!(
            "edge count {m} outside [{}, {max}]",
            n - 1
        )));
    }
    let mut edges: std::collections::BTreeSet<(usize, usize)> = Default::default();
    for v in 1..n {
        let u = rng.below(v);
        edges.insert((u.min(v), u.max(v)));
    }
    while edges.len() < m {
        let u = rng.below(n);
        let v = rng.below(n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, edges)
}

fn cograph_plus_modulator(n: usize, modulator: usize, rng: &mut Rng) -> Result<Graph> {
    if modulator >= n {
        return Err(Error::Param(
            "modulator must leave at least one vertex".into(),
        ));
    }
    let leaves = n - modulator;
    let mut nodes: Vec<CotreeNode> = Vec::new();
    let mut next_leaf = 0usize;
    // root is a join so the cograph part is connected
    let root = random_cotree(leaves, true, rng, &mut nodes, &mut next_leaf);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for id in 0..nodes.len() {
        match nodes[id] {
            CotreeNode::Leaf(v) => below[id] = vec![v],
            CotreeNode::Union(l, r) => {
                let mut set = below[l].clone();
                set.extend(&below[r]);
                below[id] = set;
            }
            CotreeNode::Join(l, r) => {
                for &a in &below[l] {
                    for &b in &below[r] {
                        edges.push((a, b));
                    }
                }
                let mut set = below[l].clone();
                set.extend(&below[r]);
                below[id] = set;
            }
        }
    }
    let _ = root;
    for x in leaves..n {
        let mut attached = false;
        for v in 0..x {
            if rng.chance(1, 3) {
                edges.push((x, v));
                attached = true;
            }
        }
        if !attached {
            edges.push((x, rng.below(x)));
        }
    }
    Graph::from_edges(n, edges)
}

fn random_cotree(
    count: usize,
    force_join: bool,
    rng: &mut Rng,
    nodes: &mut Vec<CotreeNode>,
    next_leaf: &mut usize,
) -> usize {
    if count == 1 {
        nodes.push(CotreeNode::Leaf(*next_leaf));
        *next_leaf += 1;
        return nodes.len() - 1;
    }
    let left_count = 1 + rng.below(count - 1);
    let left = random_cotree(left_count, false, rng, nodes, next_leaf);
    let right = random_cotree(count - left_count, false, rng, nodes, next_leaf);
    let join = force_join || rng.chance(1, 2);
    nodes.push(if join {
        CotreeNode::Join(left, right)
    } else {
        CotreeNode::Union(left, right)
    });
    nodes.len() - 1
}

fn low_independence(n: usize, complement_edges: usize, rng: &mut Rng) -> Result<Graph> {
    let max = n * n.saturating_sub(1) / 2;
    if complement_edges > max {
        return Err(Error::Param("too many complement edges".into()));
    }
    let mut missing: std::collections::BTreeSet<(usize, usize)> = Default::default();
    while missing.len() < complement_edges {
        let u = rng.below(n);
        let v = rng.below(n);
        if u != v {
            missing.insert((u.min(v), u.max(v)));
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !missing.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(Error::Param("grid dimensions must be positive".into()));
    }
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cograph::build_cotree;

    #[test]
    fn fixed_seed_reproduces_bytes() {
        let params = RandomParams {
            kind: RandomKind::Connected { n: 10, m: 14 },
            s_size: 2,
            t_size: 2,
            ell: None,
            seed: 42,
        };
        let a = gen_random(&params).unwrap().serialize();
        let b = gen_random(&params).unwrap().serialize();
        assert_eq!(a, b);
    }

    #[test]
    fn plain_cograph_builds_a_cotree() {
        let params = RandomParams {
            kind: RandomKind::CographPlusModulator {
                n: 12,
                modulator: 0,
            },
            s_size: 1,
            t_size: 1,
            ell: None,
            seed: 7,
        };
        let inst = gen_random(&params).unwrap();
        assert!(build_cotree(&inst.graph).is_some());
    }

    #[test]
    fn grid_3x3_shape() {
        let params = RandomParams {
            kind: RandomKind::Grid { rows: 3, cols: 3 },
            s_size: 1,
            t_size: 1,
            ell: None,
            seed: 0,
        };
        let inst = gen_random(&params).unwrap();
        assert_eq!(inst.graph.n(), 9);
        assert_eq!(inst.graph.edge_count(), 12);
    }

    #[test]
    fn impossible_params_error() {
        let params = RandomParams {
            kind: RandomKind::Connected { n: 5, m: 11 },
            s_size: 1,
            t_size: 1,
            ell: None,
            seed: 0,
        };
        assert!(gen_random(&params).is_err());
        let params = RandomParams {
            kind: RandomKind::Connected { n: 5, m: 6 },
            s_size: 4,
            t_size: 2,
            ell: None,
            seed: 0,
        };
        assert!(gen_random(&params).is_err());
    }

    #[test]
    fn terminals_are_disjoint() {
        for seed in 0..20 {
            let params = RandomParams {
                kind: RandomKind::Connected { n: 8, m: 10 },
                s_size: 2,
                t_size: 2,
                ell: None,
                seed,
            };
            let inst = gen_random(&params).unwrap();
            assert!(inst.s.iter().all(|v| inst.t.binary_search(v).is_err()));
        }
    }
}
