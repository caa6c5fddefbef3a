//! Solver parameterized by the vertex-deletion distance to cographs.
//!
//! Outline: find a smallest modulator X whose removal leaves a cograph,
//! make sure X holds at least one vertex of each terminal set, and try
//! every red/blue coloring of X (terminals forced). Per coloring, edges
//! inside X crossing the colors are deleted and paid for up front, the
//! monochromatic components of X contract into single weighted
//! supernodes, and a table over the cotree of the remaining cograph is
//! filled bottom-up. A table state is (node, red count, red blocks, blue
//! blocks): the blocks partition the supernodes of that color by which
//! component of the partially colored graph they currently share, so the
//! root can insist that each color class ends up in one piece.
//!
//! Per-coloring table semantics, for a cotree node t with graph G_t:
//! an entry at (t, r, C_r, C_b) is the minimum crossing weight inside
//! G_t plus the X-incident edges of V_t, over colorings of V_t with r red
//! vertices whose red components (those touching V_t) trace exactly C_r
//! on the red supernodes, and likewise for blue. Leaves charge their
//! opposite-colored supernode neighbors; union nodes merge block
//! partitions of shared supernodes; join nodes add the full bipartite
//! crossing r1(n2-r2) + r2(n1-r1) and collapse the touched blocks of each
//! color into one.

use std::collections::HashMap;

use crate::cograph::cotree::{build_cotree, CotreeNode};
use crate::cograph::modulator::find_modulator;
use crate::cograph::partition::BlockPartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, SolutionCut, Verdict};
use crate::parallel;

#[derive(Clone, Copy, Debug)]
pub struct CographOptions {
    pub modulator_cap: usize,
    pub parallel: bool,
}

impl Default for CographOptions {
    fn default() -> Self {
        CographOptions {
            modulator_cap: 8,
            parallel: true,
        }
    }
}

/// Runs the full pipeline. `None` means no modulator of size `cap` exists.
/// The instance must be normalized (connected, both terminal sets
/// nonempty) and unit-weight.
pub fn solve_cograph(inst: &Instance, cap: usize) -> Result<Option<Verdict>> {
    solve_cograph_opts(
        inst,
        CographOptions {
            modulator_cap: cap,
            parallel: true,
        },
    )
}

pub fn solve_cograph_opts(inst: &Instance, opts: CographOptions) -> Result<Option<Verdict>> {
    let Some(mut x) = find_modulator(&inst.graph, opts.modulator_cap) else {
        return Ok(None);
    };
    // The table's root condition needs a red and a blue vertex inside X,
    // so adopt one terminal from each side if missing.
    if !x.iter().any(|v| inst.s.binary_search(v).is_ok()) {
        x.push(inst.s[0]);
    }
    if !x.iter().any(|v| inst.t.binary_search(v).is_ok()) {
        x.push(inst.t[0]);
    }
    x.sort_unstable();
    x.dedup();
    dp_solve_opts(inst, &x, opts.parallel).map(Some)
}

pub fn dp_solve(inst: &Instance, modulator: &[usize]) -> Result<Verdict> {
    dp_solve_opts(inst, modulator, true)
}

pub fn dp_solve_opts(inst: &Instance, modulator: &[usize], par: bool) -> Result<Verdict> {
    if !inst.graph.is_unit_weight() {
        return Err(Error::Unsupported(
            "cograph solver requires unit edge weights".into(),
        ));
    }
    if inst.s.is_empty() || inst.t.is_empty() {
        return Err(Error::Param("terminal sets must be nonempty".into()));
    }
    let n = inst.graph.n();
    let mut x: Vec<usize> = modulator.to_vec();
    x.sort_unstable();
    x.dedup();
    if x.iter().any(|&v| v >= n) {
        return Err(Error::Param("modulator vertex out of range".into()));
    }
    if !x.iter().any(|v| inst.s.binary_search(v).is_ok())
        || !x.iter().any(|v| inst.t.binary_search(v).is_ok())
    {
        return Err(Error::Param(
            "modulator must contain a vertex of S and a vertex of T".into(),
        ));
    }

    let mut in_x = vec![false; n];
    for &v in &x {
        in_x[v] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !in_x[v]).collect();
    let (g_rest, _) = inst.graph.induced(&rest);
    let cotree =
        if rest.is_empty() {
            None
        } else {
            Some(build_cotree(&g_rest).ok_or_else(|| {
                Error::Contract("modulator removal does not leave a cograph".into())
            })?)
        };

    // Coloring of X: S-members red, T-members blue, the rest free.
    let mut forced_red: Vec<usize> = Vec::new();
    let mut forced_blue: Vec<usize> = Vec::new();
    let mut free_x: Vec<usize> = Vec::new();
    for &v in &x {
        if inst.s.binary_search(&v).is_ok() {
            forced_red.push(v);
        } else if inst.t.binary_search(&v).is_ok() {
            forced_blue.push(v);
        } else {
            free_x.push(v);
        }
    }
    let colorings: Vec<u64> = (0..1u64 << free_x.len()).collect();

    let ctx = Context {
        inst,
        in_x: &in_x,
        rest: &rest,
        cotree: cotree.as_ref(),
        forced_red: &forced_red,
        forced_blue: &forced_blue,
        free_x: &free_x,
    };
    let best = parallel::map_reduce(
        par,
        &colorings,
        |&mask| ctx.solve_coloring(mask),
        |a, b| match (a, b) {
            (Some(a), Some(b)) => Some(if (a.0, &a.1) <= (b.0, &b.1) { a } else { b }),
            (a, b) => a.or(b),
        },
    )
    .flatten();

    match best {
        None => Ok(Verdict::no()),
        Some((value, red)) => {
            let cut = SolutionCut::from_red(&inst.graph, red);
            debug_assert_eq!(cut.cut_weight, value);
            Ok(Verdict::yes(value, cut))
        }
    }
}

type Key = (u32, BlockPartition, BlockPartition);

enum Back {
    Leaf { red: bool },
    Pair { left: Key, right: Key },
}

struct Entry {
    val: u64,
    back: Back,
}

type Table = HashMap<Key, Entry>;

struct Context<'a> {
    inst: &'a Instance,
    in_x: &'a [bool],
    rest: &'a [usize],
    cotree: Option<&'a crate::cograph::cotree::Cotree>,
    forced_red: &'a [usize],
    forced_blue: &'a [usize],
    free_x: &'a [usize],
}

impl Context<'_> {
    /// Solves one coloring of X; returns total crossing weight plus the
    /// red vertex set, or `None` when this coloring cannot beat the budget.
    fn solve_coloring(&self, mask: u64) -> Option<(u64, Vec<usize>)> {
        let inst = self.inst;
        let budget = inst.budget();
        let mut red_x: Vec<usize> = self.forced_red.to_vec();
        let mut blue_x: Vec<usize> = self.forced_blue.to_vec();
        for (j, &v) in self.free_x.iter().enumerate() {
            if mask >> j & 1 == 1 {
                red_x.push(v);
            } else {
                blue_x.push(v);
            }
        }
        red_x.sort_unstable();
        blue_x.sort_unstable();
        let mut x_red = vec![false; inst.graph.n()];
        for &v in &red_x {
            x_red[v] = true;
        }

        // Delete and pay for the bichromatic edges inside X, then contract
        // each monochromatic X-component into one weighted supernode.
        let mut ell_prime = 0u64;
        let kept: Vec<(usize, usize, u64)> = inst
            .graph
            .edges()
            .iter()
            .filter_map(|e| {
                if self.in_x[e.u] && self.in_x[e.v] && x_red[e.u] != x_red[e.v] {
                    ell_prime += e.w;
                    None
                } else {
                    Some((e.u, e.v, e.w))
                }
            })
            .collect();
        if ell_prime > budget {
            return None;
        }
        let g_del = Graph::from_weighted_edges(inst.graph.n(), kept).expect("edges stay valid");
        let red_comps = g_del.connected_components(&red_x);
        let blue_comps = g_del.connected_components(&blue_x);
        let mut parts = red_comps.clone();
        parts.extend(blue_comps.iter().cloned());
        let (cg, map) = g_del
            .contract_components(&parts)
            .expect("components contract");
        let red_super: Vec<u32> = {
            let mut v: Vec<u32> = red_comps.iter().map(|c| map[c[0]] as u32).collect();
            v.sort_unstable();
            v
        };
        let blue_super: Vec<u32> = {
            let mut v: Vec<u32> = blue_comps.iter().map(|c| map[c[0]] as u32).collect();
            v.sort_unstable();
            v
        };

        let Some(cotree) = self.cotree else {
            // Everything is in X; both sides must be single components.
            if red_comps.len() == 1 && blue_comps.len() == 1 {
                return Some((ell_prime, red_x));
            }
            return None;
        };

        // Supernode neighborhoods per cograph vertex (local leaf ids).
        let mut super_color: Vec<Option<bool>> = vec![None; cg.n()];
        for &s in &red_super {
            super_color[s as usize] = Some(true);
        }
        for &s in &blue_super {
            super_color[s as usize] = Some(false);
        }
        let mut red_nbs: Vec<Vec<u32>> = vec![Vec::new(); self.rest.len()];
        let mut blue_nbs: Vec<Vec<u32>> = vec![Vec::new(); self.rest.len()];
        let mut red_w = vec![0u64; self.rest.len()];
        let mut blue_w = vec![0u64; self.rest.len()];
        for (local, &orig) in self.rest.iter().enumerate() {
            let cid = map[orig];
            for &(nb, w) in cg.neighbors(cid) {
                match super_color[nb] {
                    Some(true) => {
                        red_nbs[local].push(nb as u32);
                        red_w[local] += w;
                    }
                    Some(false) => {
                        blue_nbs[local].push(nb as u32);
                        blue_w[local] += w;
                    }
                    None => {}
                }
            }
        }

        let mut tables: Vec<Table> = (0..cotree.nodes.len()).map(|_| Table::new()).collect();
        for id in cotree.postorder() {
            match cotree.nodes[id] {
                CotreeNode::Leaf(local) => {
                    let orig = self.rest[local];
                    let mut t = Table::new();
                    if inst.t.binary_search(&orig).is_err() {
                        // color the leaf red: pay its blue supernode edges
                        let val = blue_w[local];
                        if ell_prime + val <= budget {
                            let key = (
                                1,
                                BlockPartition::singleton(red_nbs[local].iter().copied()),
                                BlockPartition::empty(),
                            );
                            t.insert(
                                key,
                                Entry {
                                    val,
                                    back: Back::Leaf { red: true },
                                },
                            );
                        }
                    }
                    if inst.s.binary_search(&orig).is_err() {
                        let val = red_w[local];
                        if ell_prime + val <= budget {
                            let key = (
                                0,
                                BlockPartition::empty(),
                                BlockPartition::singleton(blue_nbs[local].iter().copied()),
                            );
                            t.insert(
                                key,
                                Entry {
                                    val,
                                    back: Back::Leaf { red: false },
                                },
                            );
                        }
                    }
                    tables[id] = t;
                }
                CotreeNode::Union(l, r) | CotreeNode::Join(l, r) => {
                    let join = matches!(cotree.nodes[id], CotreeNode::Join(_, _));
                    let (n1, n2) = (cotree.leaf_count[l] as u64, cotree.leaf_count[r] as u64);
                    let mut left: Vec<(&Key, &Entry)> = tables[l].iter().collect();
                    left.sort_by(|a, b| a.0.cmp(b.0));
                    let mut right: Vec<(&Key, &Entry)> = tables[r].iter().collect();
                    right.sort_by(|a, b| a.0.cmp(b.0));
                    let mut t = Table::new();
                    for &(k1, e1) in &left {
                        for &(k2, e2) in &right {
                            let (r1, r2) = (k1.0 as u64, k2.0 as u64);
                            let mut val = e1.val + e2.val;
                            if join {
                                val += r1 * (n2 - r2) + r2 * (n1 - r1);
                            }
                            if ell_prime + val > budget {
                                continue;
                            }
                            let (cr, cb) = if join {
                                (k1.1.pjoin(&k2.1), k1.2.pjoin(&k2.2))
                            } else {
                                (k1.1.pmerge(&k2.1), k1.2.pmerge(&k2.2))
                            };
                            let key = (k1.0 + k2.0, cr, cb);
                            let should_insert = t.get(&key).is_none_or(|old| val < old.val);
                            if should_insert {
                                t.insert(
                                    key,
                                    Entry {
                                        val,
                                        back: Back::Pair {
                                            left: k1.clone(),
                                            right: k2.clone(),
                                        },
                                    },
                                );
                            }
                        }
                    }
                    tables[id] = t;
                }
            }
        }

        // Root acceptance: all red supernodes in one traced block (or, at
        // r = 0, the red side is X alone and must be one contracted
        // component); symmetrically for blue at r = n_root.
        let n_root = self.rest.len() as u32;
        let red_block = BlockPartition::from_blocks([red_super.clone()]);
        let blue_block = BlockPartition::from_blocks([blue_super.clone()]);
        let mut best: Option<(u64, Key)> = None;
        for r in 0..=n_root {
            if r == 0 && red_comps.len() != 1 {
                continue;
            }
            if r == n_root && blue_comps.len() != 1 {
                continue;
            }
            let cr = if r == 0 {
                BlockPartition::empty()
            } else {
                red_block.clone()
            };
            let cb = if r == n_root {
                BlockPartition::empty()
            } else {
                blue_block.clone()
            };
            let key = (r, cr, cb);
            if let Some(e) = tables[cotree.root].get(&key) {
                if best.as_ref().is_none_or(|(bv, _)| e.val < *bv) {
                    best = Some((e.val, key));
                }
            }
        }
        let (val, root_key) = best?;

        // Reconstruct the leaf coloring through the back-pointers.
        let mut red: Vec<usize> = red_x.clone();
        let mut stack: Vec<(usize, Key)> = vec![(cotree.root, root_key)];
        while let Some((node, key)) = stack.pop() {
            let entry = &tables[node][&key];
            match (&entry.back, cotree.nodes[node]) {
                (Back::Leaf { red: is_red }, CotreeNode::Leaf(local)) => {
                    if *is_red {
                        red.push(self.rest[local]);
                    }
                }
                (Back::Pair { left, right }, CotreeNode::Union(l, r))
                | (Back::Pair { left, right }, CotreeNode::Join(l, r)) => {
                    stack.push((l, left.clone()));
                    stack.push((r, right.clone()));
                }
                _ => unreachable!("back-pointer shape matches node shape"),
            }
        }
        red.sort_unstable();
        Some((ell_prime + val, red))
    }
}
