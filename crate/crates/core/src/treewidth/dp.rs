//! Connectivity dynamic program over a nice tree decomposition.
//!
//! The table state for a node holds the coloring of its bag, one block
//! partition per color tracking which bag vertices currently share a
//! component of that color (restricted to the processed part of the
//! graph), and one "closed" flag per color that records a component of
//! that color having been completely forgotten. Each side may close at
//! most once: the program solves the variant where the red side and the
//! blue side each form a single connected component, which on connected
//! normalized instances has the same optimum as the literal acceptance
//! condition (a floating terminal-free component could always be merged
//! into a neighboring one, shrinking the cut).
//!
//! Edges are charged when their later endpoint is introduced; a join adds
//! the two child values and subtracts the bag-internal crossing weight,
//! which both subtrees counted. Terminal forcing happens at introduce
//! time: an S-vertex cannot be blue, a T-vertex cannot be red.

use std::collections::{BTreeMap, HashMap};

use super::nice::{nice_decomposition, NiceKind, NiceTd};
use super::TreeDecomposition;
use crate::cograph::partition::BlockPartition;
use crate::error::{Error, Result};
use crate::instance::{Instance, SolutionCut, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct State {
    mask: u32,
    red: BlockPartition,
    blue: BlockPartition,
    red_closed: bool,
    blue_closed: bool,
}

enum Back {
    Leaf,
    Intro { child: State, red: bool },
    Forget { child: State },
    Join { left: State, right: State },
}

struct Entry {
    val: u64,
    back: Back,
}

type Table = HashMap<State, Entry>;

pub fn solve_treewidth(inst: &Instance, td: &TreeDecomposition) -> Result<Verdict> {
    td.validate(&inst.graph)?;
    let nice = nice_decomposition(td)?;
    if nice.max_bag() > 30 {
        return Err(Error::Decomposition(format!(
            "bag size {} too large for this solver",
            nice.max_bag()
        )));
    }
    let budget = inst.budget();
    let g = &inst.graph;

    let mut tables: Vec<Table> = (0..nice.nodes.len()).map(|_| Table::new()).collect();
    for id in nice.postorder() {
        let node = &nice.nodes[id];
        let mut table = Table::new();
        match &node.kind {
            NiceKind::Leaf => {
                table.insert(
                    State {
                        mask: 0,
                        red: BlockPartition::empty(),
                        blue: BlockPartition::empty(),
                        red_closed: false,
                        blue_closed: false,
                    },
                    Entry {
                        val: 0,
                        back: Back::Leaf,
                    },
                );
            }
            NiceKind::Introduce(v) => {
                let v = *v;
                let child_id = node.children[0];
                let child_bag = &nice.nodes[child_id].bag;
                let bag = &node.bag;
                let pv = bag.binary_search(&v).expect("introduced vertex in bag");
                // position of child bag vertex inside this bag
                let child_pos: Vec<usize> = child_bag
                    .iter()
                    .map(|u| bag.binary_search(u).expect("child bag is a subset"))
                    .collect();
                // weighted bag neighbors of v, as child-bag indices
                let nbs: Vec<(usize, u64)> = child_bag
                    .iter()
                    .enumerate()
                    .filter_map(|(j, &u)| g.weight_between(v, u).map(|w| (j, w)))
                    .collect();
                let force_red = inst.s.binary_search(&v).is_ok();
                let force_blue = inst.t.binary_search(&v).is_ok();
                for (cs, ce) in sorted(&tables[child_id]) {
                    let base_mask: u32 = child_pos
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| cs.mask >> j & 1 == 1)
                        .map(|(_, &p)| 1u32 << p)
                        .sum();
                    for &red in &[true, false] {
                        if red && force_blue || !red && force_red {
                            continue;
                        }
                        // a closed color admits no further vertices
                        if red && cs.red_closed || !red && cs.blue_closed {
                            continue;
                        }
                        let mut crossing = 0u64;
                        let mut links: Vec<u32> = Vec::new();
                        for &(j, w) in &nbs {
                            let nb_red = cs.mask >> j & 1 == 1;
                            if nb_red == red {
                                links.push(child_bag[j] as u32);
                            } else {
                                crossing += w;
                            }
                        }
                        let val = ce.val + crossing;
                        if val > budget {
                            continue;
                        }
                        let state = State {
                            mask: base_mask | if red { 1 << pv } else { 0 },
                            red: if red {
                                cs.red.insert_linked(v as u32, &links)
                            } else {
                                cs.red.clone()
                            },
                            blue: if red {
                                cs.blue.clone()
                            } else {
                                cs.blue.insert_linked(v as u32, &links)
                            },
                            red_closed: cs.red_closed,
                            blue_closed: cs.blue_closed,
                        };
                        upsert(&mut table, state, val, || Back::Intro {
                            child: cs.clone(),
                            red,
                        });
                    }
                }
            }
            NiceKind::Forget(v) => {
                let v = *v;
                let child_id = node.children[0];
                let child_bag = &nice.nodes[child_id].bag;
                let bag = &node.bag;
                let pv = child_bag
                    .binary_search(&v)
                    .expect("forgotten vertex in child bag");
                let keep_pos: Vec<usize> = child_bag
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|u| bag.binary_search(u).expect("bag keeps the rest"))
                    .collect();
                for (cs, ce) in sorted(&tables[child_id]) {
                    let red = cs.mask >> pv & 1 == 1;
                    let mut mask: u32 = 0;
                    let mut k = 0usize;
                    for j in 0..child_bag.len() {
                        if j == pv {
                            continue;
                        }
                        if cs.mask >> j & 1 == 1 {
                            mask |= 1 << keep_pos[k];
                        }
                        k += 1;
                    }
                    let (parts, emptied) = if red {
                        cs.red.remove_elem(v as u32)
                    } else {
                        cs.blue.remove_elem(v as u32)
                    };
                    let mut red_closed = cs.red_closed;
                    let mut blue_closed = cs.blue_closed;
                    if emptied {
                        // a component of this color just finished; each
                        // color affords exactly one
                        let flag = if red {
                            &mut red_closed
                        } else {
                            &mut blue_closed
                        };
                        if *flag {
                            continue;
                        }
                        *flag = true;
                    }
                    let state = State {
                        mask,
                        red: if red { parts.clone() } else { cs.red.clone() },
                        blue: if red { cs.blue.clone() } else { parts },
                        red_closed,
                        blue_closed,
                    };
                    upsert(&mut table, state, ce.val, || Back::Forget {
                        child: cs.clone(),
                    });
                }
            }
            NiceKind::Join => {
                let (lid, rid) = (node.children[0], node.children[1]);
                let bag = &node.bag;
                let bag_edges: Vec<(usize, usize, u64)> = {
                    let mut es = Vec::new();
                    for (i, &a) in bag.iter().enumerate() {
                        for (j, &b) in bag.iter().enumerate().skip(i + 1) {
                            if let Some(w) = g.weight_between(a, b) {
                                es.push((i, j, w));
                            }
                        }
                    }
                    es
                };
                let mut right_by_mask: BTreeMap<u32, Vec<(&State, &Entry)>> = BTreeMap::new();
                for (rs, re) in sorted(&tables[rid]) {
                    right_by_mask.entry(rs.mask).or_default().push((rs, re));
                }
                for (ls, le) in sorted(&tables[lid]) {
                    let Some(partners) = right_by_mask.get(&ls.mask) else {
                        continue;
                    };
                    let double: u64 = bag_edges
                        .iter()
                        .filter(|&&(i, j, _)| (ls.mask >> i & 1) != (ls.mask >> j & 1))
                        .map(|&(_, _, w)| w)
                        .sum();
                    for &(rs, re) in partners {
                        if ls.red_closed && rs.red_closed || ls.blue_closed && rs.blue_closed {
                            continue;
                        }
                        let val = le.val + re.val - double;
                        if val > budget {
                            continue;
                        }
                        let state = State {
                            mask: ls.mask,
                            red: ls.red.pmerge(&rs.red),
                            blue: ls.blue.pmerge(&rs.blue),
                            red_closed: ls.red_closed || rs.red_closed,
                            blue_closed: ls.blue_closed || rs.blue_closed,
                        };
                        upsert(&mut table, state, val, || Back::Join {
                            left: ls.clone(),
                            right: rs.clone(),
                        });
                    }
                }
            }
        }
        tables[id] = table;
    }

    // The root bag is empty, so every live block has been forgotten and
    // each surviving state describes colorings where each used color
    // forms exactly one component (an unused color passes vacuously).
    let mut best: Option<(&State, &Entry)> = None;
    for (s, e) in sorted(&tables[nice.root]) {
        if best.is_none_or(|(_, be)| e.val < be.val) {
            best = Some((s, e));
        }
    }
    let Some((root_state, root_entry)) = best else {
        return Ok(Verdict::no());
    };
    let value = root_entry.val;
    let red = reconstruct(&nice, &tables, root_state);
    let cut = SolutionCut::from_red(g, red);
    debug_assert_eq!(cut.cut_weight, value);
    Ok(Verdict::yes(value, cut))
}

fn sorted(table: &Table) -> Vec<(&State, &Entry)> {
    let mut items: Vec<(&State, &Entry)> = table.iter().collect();
    items.sort_by(|a, b| a.0.cmp(b.0));
    items
}

fn upsert(table: &mut Table, state: State, val: u64, back: impl FnOnce() -> Back) {
    match table.get(&state) {
        Some(e) if e.val <= val => {}
        _ => {
            table.insert(state, Entry { val, back: back() });
        }
    }
}

fn reconstruct(nice: &NiceTd, tables: &[Table], root_state: &State) -> Vec<usize> {
    let mut red = Vec::new();
    let mut stack: Vec<(usize, State)> = vec![(nice.root, root_state.clone())];
    while let Some((id, state)) = stack.pop() {
        let entry = &tables[id][&state];
        let node = &nice.nodes[id];
        match &entry.back {
            Back::Leaf => {}
            Back::Intro { child, red: is_red } => {
                if *is_red {
                    if let NiceKind::Introduce(v) = node.kind {
                        red.push(v);
                    }
                }
                stack.push((node.children[0], child.clone()));
            }
            Back::Forget { child } => stack.push((node.children[0], child.clone())),
            Back::Join { left, right } => {
                stack.push((node.children[0], left.clone()));
                stack.push((node.children[1], right.clone()));
            }
        }
    }
    red.sort_unstable();
    red
}
