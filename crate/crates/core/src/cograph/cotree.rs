//! Cotree construction by recursive complement splitting.
//!
//! A cograph decomposes as a rooted binary tree whose leaves are the
//! vertices: a disconnected graph is the disjoint union of its components,
//! a graph with disconnected complement is the join of its co-components,
//! and a single vertex is a leaf. A graph that is neither (on two or more
//! vertices) contains an induced path on four vertices and is rejected.

use crate::bits::BitSet;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CotreeNode {
    /// Leaf holding a graph vertex.
    Leaf(usize),
    /// Disjoint union of the two child graphs.
    Union(usize, usize),
    /// Join: union plus all edges between the two child graphs.
    Join(usize, usize),
}

#[derive(Clone, Debug)]
pub struct Cotree {
    pub nodes: Vec<CotreeNode>,
    pub root: usize,
    /// Number of leaves below each node.
    pub leaf_count: Vec<usize>,
}

impl Cotree {
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                order.push(id);
                continue;
            }
            stack.push((id, true));
            match self.nodes[id] {
                CotreeNode::Leaf(_) => {}
                CotreeNode::Union(l, r) | CotreeNode::Join(l, r) => {
                    stack.push((r, false));
                    stack.push((l, false));
                }
            }
        }
        order
    }

    /// Leaves below `node`, in ascending order.
    pub fn leaves_below(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(id) = stack.pop() {
            match self.nodes[id] {
                CotreeNode::Leaf(v) => out.push(v),
                CotreeNode::Union(l, r) | CotreeNode::Join(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Rebuilds the graph the cotree represents; used to check that
    /// construction lost nothing.
    pub fn evaluate(&self, n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut leaves: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for id in self.postorder() {
            match self.nodes[id] {
                CotreeNode::Leaf(v) => leaves[id] = vec![v],
                CotreeNode::Union(l, r) => {
                    let mut set = leaves[l].clone();
                    set.extend(&leaves[r]);
                    leaves[id] = set;
                }
                CotreeNode::Join(l, r) => {
                    for &a in &leaves[l] {
                        for &b in &leaves[r] {
                            edges.push((a, b));
                        }
                    }
                    let mut set = leaves[l].clone();
                    set.extend(&leaves[r]);
                    leaves[id] = set;
                }
            }
        }
        Graph::from_edges(n, edges).expect("cotree edges are simple")
    }
}

/// Builds a cotree, or returns `None` when the graph is not a cograph
/// (equivalently: it has an induced path on four vertices).
pub fn build_cotree(g: &Graph) -> Option<Cotree> {
    if g.n() == 0 {
        return None;
    }
    let adj: Vec<BitSet> = (0..g.n())
        .map(|v| {
            let mut b = BitSet::new(g.n());
            for &(u, _) in g.neighbors(v) {
                b.insert(u);
            }
            b
        })
        .collect();
    let mut nodes = Vec::new();
    let all: Vec<usize> = g.vertices().collect();
    let root = split(&adj, g.n(), &all, &mut nodes)?;
    let mut leaf_count = vec![0usize; nodes.len()];
    for id in 0..nodes.len() {
        // nodes are appended children-first, so a single pass suffices
        leaf_count[id] = match nodes[id] {
            CotreeNode::Leaf(_) => 1,
            CotreeNode::Union(l, r) | CotreeNode::Join(l, r) => leaf_count[l] + leaf_count[r],
        };
    }
    Some(Cotree {
        nodes,
        root,
        leaf_count,
    })
}

fn split(adj: &[BitSet], n: usize, verts: &[usize], nodes: &mut Vec<CotreeNode>) -> Option<usize> {
    if verts.len() == 1 {
        nodes.push(CotreeNode::Leaf(verts[0]));
        return Some(nodes.len() - 1);
    }
    let comps = components(adj, n, verts, false);
    if comps.len() > 1 {
        return chain(adj, n, &comps, nodes, false);
    }
    let cocomps = components(adj, n, verts, true);
    if cocomps.len() > 1 {
        return chain(adj, n, &cocomps, nodes, true);
    }
    None
}

// Right-deep binary chain over the parts: op(p1, op(p2, ... op(pk-1, pk))).
fn chain(
    adj: &[BitSet],
    n: usize,
    parts: &[Vec<usize>],
    nodes: &mut Vec<CotreeNode>,
    join: bool,
) -> Option<usize> {
    let ids: Vec<usize> = parts
        .iter()
        .map(|p| split(adj, n, p, nodes))
        .collect::<Option<Vec<_>>>()?;
    let mut acc = *ids.last().unwrap();
    for &id in ids[..ids.len() - 1].iter().rev() {
        nodes.push(if join {
            CotreeNode::Join(id, acc)
        } else {
            CotreeNode::Union(id, acc)
        });
        acc = nodes.len() - 1;
    }
    Some(acc)
}

/// Connected components of the induced subgraph (or of its complement),
/// ordered by smallest member.
fn components(adj: &[BitSet], n: usize, verts: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut in_set = BitSet::new(n);
    for &v in verts {
        in_set.insert(v);
    }
    let mut remaining = in_set.clone();
    let mut comps = Vec::new();
    for &seed in verts {
        if !remaining.contains(seed) {
            continue;
        }
        let mut comp = Vec::new();
        let mut frontier = vec![seed];
        remaining.remove(seed);
        while let Some(v) = frontier.pop() {
            comp.push(v);
            let mut reach = if complement {
                let mut r = remaining.clone();
                r.subtract(&adj[v]);
                r
            } else {
                let mut r = adj[v].clone();
                r.intersect_with(&remaining);
                r
            };
            reach.intersect_with(&in_set);
            for u in reach.iter_ones().collect::<Vec<_>>() {
                remaining.remove(u);
                frontier.push(u);
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by_key(|c| c[0]);
    comps
}
