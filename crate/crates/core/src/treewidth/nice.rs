//! Conversion of a tree decomposition into nice form: a rooted binary
//! tree built from empty leaves, single-vertex introduce and forget
//! steps, and joins of equal bags, finishing in an empty root bag. The
//! width never grows: chains between two bags only pass through their
//! union's subsets.

use super::TreeDecomposition;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag after this node's operation.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct NiceTd {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTd {
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                order.push(id);
                continue;
            }
            stack.push((id, true));
            for &c in &self.nodes[id].children {
                stack.push((c, false));
            }
        }
        order
    }

    /// View as a plain decomposition, so the standard validator applies.
    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let mut edges = Vec::new();
        for (id, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                edges.push((c, id));
            }
        }
        TreeDecomposition { bags, edges }
    }

    pub fn max_bag(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0)
    }
}

/// Rewrites `td` into nice form. Fails if the bag tree is malformed or an
/// occurrence set is not a subtree; coverage of vertices and edges is the
/// solver's concern since it needs the graph.
pub fn nice_decomposition(td: &TreeDecomposition) -> Result<NiceTd> {
    td.validate_structure()?;
    let mut builder = Builder { nodes: Vec::new() };
    if td.bags.is_empty() {
        let root = builder.push(NiceKind::Leaf, Vec::new(), vec![]);
        return Ok(NiceTd {
            nodes: builder.nodes,
            root,
        });
    }
    let b = td.bags.len();
    let mut adj = vec![Vec::new(); b];
    for &(i, j) in &td.edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let top = builder.build(td, &adj, 0, usize::MAX);
    // Forget the root bag down to the empty set.
    let mut cur = top;
    let mut bag = td.bags[0].clone();
    while let Some(&v) = bag.first() {
        bag.remove(0);
        cur = builder.push(NiceKind::Forget(v), bag.clone(), vec![cur]);
    }
    Ok(NiceTd {
        nodes: builder.nodes,
        root: cur,
    })
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    /// Introduce chain from the empty bag up to `bag`.
    fn leaf_chain(&mut self, bag: &[usize]) -> usize {
        let mut cur = self.push(NiceKind::Leaf, Vec::new(), vec![]);
        let mut acc: Vec<usize> = Vec::new();
        for &v in bag {
            acc.push(v);
            acc.sort_unstable();
            cur = self.push(NiceKind::Introduce(v), acc.clone(), vec![cur]);
        }
        cur
    }

    /// Forget/introduce chain morphing a node with bag `from` into `to`.
    fn morph(&mut self, mut cur: usize, from: &[usize], to: &[usize]) -> usize {
        let mut bag: Vec<usize> = from.to_vec();
        for &v in from {
            if to.binary_search(&v).is_err() {
                bag.retain(|&u| u != v);
                cur = self.push(NiceKind::Forget(v), bag.clone(), vec![cur]);
            }
        }
        for &v in to {
            if from.binary_search(&v).is_err() {
                bag.push(v);
                bag.sort_unstable();
                cur = self.push(NiceKind::Introduce(v), bag.clone(), vec![cur]);
            }
        }
        cur
    }

    fn build(
        &mut self,
        td: &TreeDecomposition,
        adj: &[Vec<usize>],
        bag_id: usize,
        parent: usize,
    ) -> usize {
        let bag = &td.bags[bag_id];
        let children: Vec<usize> = adj[bag_id]
            .iter()
            .copied()
            .filter(|&c| c != parent)
            .collect();
        if children.is_empty() {
            return self.leaf_chain(bag);
        }
        let mut arms: Vec<usize> = Vec::new();
        for c in children {
            let child_top = self.build(td, adj, c, bag_id);
            arms.push(self.morph(child_top, &td.bags[c], bag));
        }
        let mut acc = arms[0];
        for &arm in &arms[1..] {
            acc = self.push(NiceKind::Join, bag.clone(), vec![acc, arm]);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::treewidth::heuristic_td;

    #[test]
    fn single_bag_becomes_leaf_plus_introduces() {
        let td = TreeDecomposition {
            bags: vec![vec![0, 1]],
            edges: vec![],
        };
        let nice = nice_decomposition(&td).unwrap();
        let kinds: Vec<_> = nice
            .postorder()
            .into_iter()
            .map(|i| nice.nodes[i].kind.clone())
            .collect();
        assert_eq!(
            kinds,
            vec![
                NiceKind::Leaf,
                NiceKind::Introduce(0),
                NiceKind::Introduce(1),
                NiceKind::Forget(0),
                NiceKind::Forget(1),
            ]
        );
    }

    #[test]
    fn two_bags_make_a_chain() {
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2]],
            edges: vec![(0, 1)],
        };
        let nice = nice_decomposition(&td).unwrap();
        assert!(nice.nodes[nice.root].bag.is_empty());
        assert!(nice.max_bag() <= 2);
        // Every vertex introduced at least once.
        let intros: std::collections::BTreeSet<usize> = nice
            .nodes
            .iter()
            .filter_map(|n| match n.kind {
                NiceKind::Introduce(v) => Some(v),
                _ => None,
            })
            .collect();
        assert_eq!(intros, [0, 1, 2].into_iter().collect());
    }

    #[test]
    fn nice_form_still_validates() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]).unwrap();
        let td = heuristic_td(&g);
        let nice = nice_decomposition(&td).unwrap();
        let as_td = nice.as_tree_decomposition();
        as_td.validate(&g).unwrap();
        assert_eq!(as_td.width(), td.width());
    }
}
