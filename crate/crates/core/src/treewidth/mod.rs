//! Tree decompositions: validation, elimination heuristics, the PACE-style
//! file format, and the connectivity dynamic program.

pub mod dp;
pub mod nice;

pub use dp::solve_treewidth;
pub use nice::{nice_decomposition, NiceKind, NiceNode, NiceTd};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Bags of vertices; each bag sorted.
    pub bags: Vec<Vec<usize>>,
    /// Edges of the bag tree (unordered pairs of bag indices).
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Checks the three decomposition axioms against `g`, plus tree shape.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.validate_structure()?;
        let mut covered = vec![false; g.n()];
        for bag in &self.bags {
            for &v in bag {
                if v >= g.n() {
                    return Err(Error::Decomposition(format!(
                        "bag vertex {} out of range",
                        v + 1
                    )));
                }
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::Decomposition(format!(
                "vertex {} not covered by any bag",
                v + 1
            )));
        }
        for e in g.edges() {
            let inside = self
                .bags
                .iter()
                .any(|b| b.binary_search(&e.u).is_ok() && b.binary_search(&e.v).is_ok());
            if !inside {
                return Err(Error::Decomposition(format!(
                    "edge {{{}, {}}} not inside any bag",
                    e.u + 1,
                    e.v + 1
                )));
            }
        }
        Ok(())
    }

    /// Tree shape and the subtree-connectivity axiom (graph-independent).
    pub fn validate_structure(&self) -> Result<()> {
        let b = self.bags.len();
        if b == 0 {
            return if self.edges.is_empty() {
                Ok(())
            } else {
                Err(Error::Decomposition("edges without bags".into()))
            };
        }
        if self.edges.len() + 1 != b {
            return Err(Error::Decomposition("bag tree is not a tree".into()));
        }
        let mut adj = vec![Vec::new(); b];
        for &(i, j) in &self.edges {
            if i >= b || j >= b || i == j {
                return Err(Error::Decomposition("bag tree edge out of range".into()));
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; b];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Decomposition("bag tree is not a tree".into()));
        }
        // Occurrences of each vertex must induce a connected subtree.
        let mut verts: Vec<usize> = self.bags.iter().flatten().copied().collect();
        verts.sort_unstable();
        verts.dedup();
        for v in verts {
            let holding: Vec<usize> = (0..b)
                .filter(|&i| self.bags[i].binary_search(&v).is_ok())
                .collect();
            let mut reach = vec![false; b];
            reach[holding[0]] = true;
            let mut stack = vec![holding[0]];
            while let Some(i) = stack.pop() {
                for &j in &adj[i] {
                    if !reach[j] && self.bags[j].binary_search(&v).is_ok() {
                        reach[j] = true;
                        stack.push(j);
                    }
                }
            }
            if holding.iter().any(|&i| !reach[i]) {
                return Err(Error::Decomposition(format!(
                    "occurrences of vertex {} do not form a subtree",
                    v + 1
                )));
            }
        }
        Ok(())
    }

    /// PACE-style text: `s td <#bags> <maxbagsize> <n>`, bag lines
    /// `b <id> <v...>`, then bag-tree edges `<i> <j>`.
    pub fn serialize(&self, n: usize) -> String {
        let maxbag = self.bags.iter().map(|b| b.len()).max().unwrap_or(0);
        let mut out = format!("s td {} {} {}\n", self.bags.len(), maxbag, n);
        for (i, bag) in self.bags.iter().enumerate() {
            out.push_str(&format!("b {}", i + 1));
            for &v in bag {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("{} {}\n", i + 1, j + 1));
        }
        out
    }

    pub fn parse(text: &str, n: usize) -> Result<TreeDecomposition> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line == "c" || line.starts_with("c ") {
                continue;
            }
            let mut tok = line.split_whitespace();
            match tok.next().unwrap() {
                "s" => {
                    if header.is_some() {
                        return Err(Error::parse(lineno, "duplicate s line"));
                    }
                    if tok.next() != Some("td") {
                        return Err(Error::parse(lineno, "expected `s td`"));
                    }
                    let nb: usize = next_num(lineno, tok.next())?;
                    let mb: usize = next_num(lineno, tok.next())?;
                    let nn: usize = next_num(lineno, tok.next())?;
                    header = Some((nb, mb, nn));
                    bags = vec![None; nb];
                }
                "b" => {
                    let (nb, _, nn) =
                        header.ok_or_else(|| Error::parse(lineno, "b before s line"))?;
                    let id: usize = next_num(lineno, tok.next())?;
                    if id == 0 || id > nb {
                        return Err(Error::parse(lineno, format!("bag id {id} out of range")));
                    }
                    if bags[id - 1].is_some() {
                        return Err(Error::parse(lineno, format!("duplicate bag {id}")));
                    }
                    let mut bag = Vec::new();
                    for t in tok {
                        let v: usize = t
                            .parse()
                            .map_err(|_| Error::parse(lineno, "malformed vertex id"))?;
                        if v == 0 || v > nn {
                            return Err(Error::VertexRange {
                                line: lineno,
                                id: v,
                                n: nn,
                            });
                        }
                        bag.push(v - 1);
                    }
                    bag.sort_unstable();
                    bag.dedup();
                    bags[id - 1] = Some(bag);
                }
                first => {
                    let (nb, _, _) =
                        header.ok_or_else(|| Error::parse(lineno, "edge before s line"))?;
                    let i: usize = first
                        .parse()
                        .map_err(|_| Error::parse(lineno, "malformed bag-tree edge"))?;
                    let j: usize = next_num(lineno, tok.next())?;
                    if i == 0 || i > nb || j == 0 || j > nb {
                        return Err(Error::parse(lineno, "bag-tree edge out of range"));
                    }
                    edges.push((i - 1, j - 1));
                }
            }
        }
        let (_, _, nn) = header.ok_or_else(|| Error::parse(1, "missing s td line"))?;
        if nn != n {
            return Err(Error::Decomposition(format!(
                "decomposition is for {nn} vertices, instance has {n}"
            )));
        }
        let bags: Vec<Vec<usize>> = bags.into_iter().map(|b| b.unwrap_or_default()).collect();
        Ok(TreeDecomposition { bags, edges })
    }
}

fn next_num(line: usize, tok: Option<&str>) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, "missing number"))?
        .parse()
        .map_err(|_| Error::parse(line, "malformed number"))
}

/// Min-degree elimination heuristic; ties broken by smallest vertex id.
/// The result always satisfies the decomposition axioms.
pub fn heuristic_td(g: &Graph) -> TreeDecomposition {
    elimination_td(g, |sets, alive| {
        alive
            .iter()
            .copied()
            .min_by_key(|&v| (sets[v].len(), v))
            .expect("alive vertices remain")
    })
}

/// Min-fill-in variant; picks the vertex whose neighborhood needs the
/// fewest added edges to become a clique. Used to cross-check that the
/// answer does not depend on the decomposition.
pub fn heuristic_td_min_fill(g: &Graph) -> TreeDecomposition {
    elimination_td(g, |sets, alive| {
        alive
            .iter()
            .copied()
            .min_by_key(|&v| {
                let nb: Vec<usize> = sets[v].iter().copied().collect();
                let mut fill = 0usize;
                for (i, &a) in nb.iter().enumerate() {
                    for &b in &nb[i + 1..] {
                        if !sets[a].contains(&b) {
                            fill += 1;
                        }
                    }
                }
                (fill, v)
            })
            .expect("alive vertices remain")
    })
}

fn elimination_td(
    g: &Graph,
    pick: impl Fn(&[std::collections::BTreeSet<usize>], &[usize]) -> usize,
) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![],
            edges: vec![],
        };
    }
    let mut sets: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&(u, _)| u).collect())
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut position = vec![usize::MAX; n];
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut bag_of = vec![usize::MAX; n];
    for step in 0..n {
        let v = pick(&sets, &alive);
        alive.retain(|&u| u != v);
        position[v] = step;
        let nb: Vec<usize> = sets[v].iter().copied().collect();
        let mut bag = nb.clone();
        bag.push(v);
        bag.sort_unstable();
        bag_of[v] = bags.len();
        bags.push(bag);
        for (i, &a) in nb.iter().enumerate() {
            sets[a].remove(&v);
            for &b in &nb[i + 1..] {
                sets[a].insert(b);
                sets[b].insert(a);
            }
        }
    }
    // Each bag attaches to the bag of its earliest-eliminated surviving
    // member; the final elimination is the root.
    let mut edges = Vec::new();
    for v in 0..n {
        let rest: Option<usize> = bags[bag_of[v]]
            .iter()
            .copied()
            .filter(|&u| u != v)
            .min_by_key(|&u| position[u]);
        match rest {
            Some(u) => edges.push((bag_of[v], bag_of[u])),
            None => {
                // isolated remainder (only for the last vertex of each
                // component); attach to the next elimination if any
                if position[v] + 1 < n {
                    let next = position.iter().position(|&p| p == position[v] + 1).unwrap();
                    edges.push((bag_of[v], bag_of[next]));
                }
            }
        }
    }
    TreeDecomposition { bags, edges }
}
