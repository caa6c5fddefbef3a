//! Reduction from regular multicolored clique: the generated family is
//! W[1]-hard in the clique cover number, has a dominating vertex, and its
//! budget satisfies ell = c1 + |T| (c2 - |T|).
//!
//! Construction, starting from a d-regular graph with k equal color
//! classes: keep an induced copy of the input, attach a class terminal
//! t_i adjacent to all vertices of color i, one apex s adjacent to
//! everything outside T, and n + 2m pairwise-adjacent padding vertices
//! per original vertex, each adjacent to its vertex and to s. Same-color
//! vertices become cliques. A multicolored clique C in the input yields
//! the witness with blue side T ∪ C, whose cut weight is exactly ell.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, SolutionCut};

#[derive(Clone, Debug)]
pub struct MccInput {
    pub graph: Graph,
    /// Color classes; must partition the vertices into equal-size parts.
    pub classes: Vec<Vec<usize>>,
}

impl MccInput {
    /// Checks d-regularity and the equal-partition shape; returns d.
    pub fn validate(&self) -> Result<usize> {
        let g = &self.graph;
        let n = g.n();
        let k = self.classes.len();
        if k == 0 || n == 0 || !n.is_multiple_of(k) {
            return Err(Error::Param(
                "color classes must evenly partition the vertices".into(),
            ));
        }
        let mut seen = vec![false; n];
        for class in &self.classes {
            if class.len() != n / k {
                return Err(Error::Param("color classes must have equal sizes".into()));
            }
            for &v in class {
                if v >= n || seen[v] {
                    return Err(Error::Param("classes must partition the vertex set".into()));
                }
                seen[v] = true;
            }
        }
        if n == 0 {
            return Err(Error::Param("empty input".into()));
        }
        let d = g.degree(0);
        if (0..n).any(|v| g.degree(v) != d) {
            return Err(Error::Param("input graph must be regular".into()));
        }
        Ok(d)
    }
}

#[derive(Clone, Debug)]
pub struct MccOutput {
    pub instance: Instance,
    /// Budget offset: 2n.
    pub c1: u64,
    /// Budget slope base: n + 2m + d + 1.
    pub c2: u64,
    /// ell = c1 + k (c2 - k).
    pub ell: u64,
    /// Vertex of the generated instance holding the copy of input vertex i.
    pub copy_of: Vec<usize>,
    /// The k class terminals.
    pub terminals: Vec<usize>,
}

pub fn gen_mcc(input: &MccInput) -> Result<MccOutput> {
    let d = input.validate()? as u64;
    let g = &input.graph;
    let n = g.n();
    let m = g.edge_count();
    let k = input.classes.len();
    let pad = n + 2 * m;

    // layout: copies 0..n, terminals n..n+k, apex s, padding blocks
    let copy_of: Vec<usize> = (0..n).collect();
    let terminals: Vec<usize> = (n..n + k).collect();
    let s = n + k;
    let pad_v = |i: usize, j: usize| n + k + 1 + i * pad + j;
    let total = n + k + 1 + n * pad;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for e in g.edges() {
        edges.push((e.u, e.v));
    }
    for (ci, class) in input.classes.iter().enumerate() {
        for &v in class {
            edges.push((terminals[ci], v));
        }
        // same-color vertices form a clique
        for (a, &u) in class.iter().enumerate() {
            for &v in &class[a + 1..] {
                edges.push((u, v));
            }
        }
    }
    for v in 0..n {
        edges.push((s, v));
        for j in 0..pad {
            edges.push((pad_v(v, j), v));
            edges.push((pad_v(v, j), s));
        }
    }
    for t in &terminals {
        edges.push((s, *t));
    }
    // all padding vertices are pairwise adjacent
    let all_pads: Vec<usize> = (0..n)
        .flat_map(|i| (0..pad).map(move |j| pad_v(i, j)))
        .collect();
    for (a, &u) in all_pads.iter().enumerate() {
        for &v in &all_pads[a + 1..] {
            edges.push((u, v));
        }
    }

    let c1 = 2 * n as u64;
    let c2 = (n + 2 * m) as u64 + d + 1;
    let ell = c1 + (k as u64) * (c2 - k as u64);
    let graph = Graph::from_edges(total, edges)?;
    let instance = Instance::new(graph, vec![s], terminals.clone(), Some(ell));
    Ok(MccOutput {
        instance,
        c1,
        c2,
        ell,
        copy_of,
        terminals,
    })
}

/// Witness for a known multicolored clique: blue side T ∪ C, everything
/// else red. When `clique` is one vertex per class and pairwise adjacent,
/// this verifies with cut weight exactly ell.
pub fn clique_witness(out: &MccOutput, clique: &[usize]) -> SolutionCut {
    let blue: std::collections::BTreeSet<usize> = out
        .terminals
        .iter()
        .copied()
        .chain(clique.iter().map(|&v| out.copy_of[v]))
        .collect();
    let red: Vec<usize> = out
        .instance
        .graph
        .vertices()
        .filter(|v| !blue.contains(v))
        .collect();
    SolutionCut::from_red(&out.instance.graph, red)
}
