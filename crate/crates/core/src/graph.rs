//! Undirected weighted simple graph with 0-based vertex ids.
//!
//! Weights are positive integers. Inputs carry unit weights; heavier edges
//! only arise from contraction, where parallel edges merge and their
//! weights add up. Neighbor lists and the edge list are kept sorted so
//! that every traversal in the crate is reproducible.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<(usize, u64)>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from weighted edge triples. Parallel edges are merged
    /// into a single edge with summed weight; self-loops are rejected.
    pub fn from_weighted_edges(
        n: usize,
        iter: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Graph> {
        let mut merged: std::collections::BTreeMap<(usize, usize), u64> =
            std::collections::BTreeMap::new();
        for (u, v, w) in iter {
            if u >= n || v >= n {
                return Err(Error::Contract(format!(
                    "edge ({u}, {v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Contract(format!("self-loop on vertex {u}")));
            }
            if w == 0 {
                return Err(Error::Contract(format!("edge ({u}, {v}) has zero weight")));
            }
            let key = (u.min(v), u.max(v));
            *merged.entry(key).or_insert(0) += w;
        }
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(merged.len());
        for (&(u, v), &w) in &merged {
            adj[u].push((v, w));
            adj[v].push((u, w));
            edges.push(Edge { u, v, w });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, edges })
    }

    /// Unit-weight convenience constructor. Duplicate pairs merge into a
    /// weight-2 edge, matching the parser's treatment of repeated lines.
    pub fn from_edges(n: usize, iter: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        Self::from_weighted_edges(n, iter.into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, u64)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weight_between(u, v).is_some()
    }

    pub fn weight_between(&self, u: usize, v: usize) -> Option<u64> {
        self.adj[u]
            .binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn is_unit_weight(&self) -> bool {
        self.edges.iter().all(|e| e.w == 1)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all: Vec<usize> = (0..self.n).collect();
        self.connected_components(&all).len() == 1
    }

    /// Connected components of the subgraph induced by `restrict`, returned
    /// in deterministic order: components sorted by their smallest vertex,
    /// vertices sorted within each component.
    pub fn connected_components(&self, restrict: &[usize]) -> Vec<Vec<usize>> {
        let mut member = vec![false; self.n];
        for &v in restrict {
            member[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        let mut order: Vec<usize> = restrict.to_vec();
        order.sort_unstable();
        order.dedup();
        for &start in &order {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if member[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Contracts each part into a single vertex. Parts must be disjoint and
    /// each must induce a connected subgraph. Vertices outside every part
    /// survive as singletons. Returns the contracted graph and the old-id to
    /// new-id mapping; new ids are assigned by the smallest original vertex
    /// of each group.
    pub fn contract_components(&self, parts: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
        let mut group_of = vec![usize::MAX; self.n];
        for (pi, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::Contract("empty part".into()));
            }
            for &v in part {
                if v >= self.n {
                    return Err(Error::Contract(format!("vertex {v} out of range")));
                }
                if group_of[v] != usize::MAX {
                    return Err(Error::Contract(format!("vertex {v} in two parts")));
                }
                group_of[v] = pi;
            }
            if self.connected_components(part).len() != 1 {
                return Err(Error::Contract(format!(
                    "part containing vertex {} is not connected",
                    part[0]
                )));
            }
        }
        // Groups ordered by minimum original vertex id.
        let mut groups: Vec<Vec<usize>> = parts.to_vec();
        for (v, &g) in group_of.iter().enumerate() {
            if g == usize::MAX {
                groups.push(vec![v]);
            }
        }
        groups.sort_by_key(|g| *g.iter().min().unwrap());
        let mut mapping = vec![usize::MAX; self.n];
        for (new_id, group) in groups.iter().enumerate() {
            for &v in group {
                mapping[v] = new_id;
            }
        }
        let contracted_edges = self.edges.iter().filter_map(|e| {
            let (nu, nv) = (mapping[e.u], mapping[e.v]);
            (nu != nv).then_some((nu, nv, e.w))
        });
        let graph = Graph::from_weighted_edges(groups.len(), contracted_edges)?;
        Ok((graph, mapping))
    }

    /// Subgraph induced by `verts`, with vertices renumbered in ascending
    /// order of their original id. Returns the new-id to old-id table.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = verts.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self.edges.iter().filter_map(|e| {
            (new_id[e.u] != usize::MAX && new_id[e.v] != usize::MAX).then_some((
                new_id[e.u],
                new_id[e.v],
                e.w,
            ))
        });
        let g = Graph::from_weighted_edges(keep.len(), edges).expect("induced edges are valid");
        (g, keep)
    }
}
