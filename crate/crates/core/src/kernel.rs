//! Kernelizations.
//!
//! `kernelize_fes` applies degree-based reduction rules until the graph
//! has no degree-one vertices and every maximal degree-two path keeps at
//! most one internal vertex; the survivor has at most 5k vertices and 6k
//! edges for k its feedback edge number. `kernelize_vc_2dcs` is the
//! marking kernel for budget-free instances, parameterized by a
//! 2-approximate vertex cover.
//!
//! Rules, applied in a fixed order with a full restart (including
//! re-normalization) after every change:
//!
//! 1. a non-terminal of degree one disappears;
//! 2. a degree-one vertex that is its terminal set's only member decides
//!    the instance: yes iff the budget covers its single edge;
//! 3. a degree-one terminal with siblings hands its role to its neighbor
//!    (a clash with the other terminal set decides no);
//! 4. a maximal degree-two path with no internal terminals shrinks to one
//!    internal vertex (a terminal-free pendant cycle disappears);
//! 5. a path whose internal terminals all belong to one set shrinks the
//!    same way, the kept vertex adopting the role; pendant cycles keep a
//!    triangle when the whole set lives inside, and otherwise dissolve
//!    into their attachment vertex;
//! 6. a path with internal terminals of both kinds must lose an edge
//!    between the first opposite pair: the edge goes away and the budget
//!    drops by one.
//!
//! Every application preserves the yes/no answer, and the optimum shifts
//! by exactly one per rule-6 deletion.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{normalize, Instance, Normalized, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceStats {
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub t: usize,
    pub ell: Option<u64>,
}

impl InstanceStats {
    pub fn of(inst: &Instance) -> Self {
        InstanceStats {
            n: inst.graph.n(),
            m: inst.graph.edge_count(),
            s: inst.s.len(),
            t: inst.t.len(),
            ell: inst.ell,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub input: InstanceStats,
    pub output: InstanceStats,
    /// Feedback edge number of the output (degree rules) or the size of
    /// the vertex cover used (marking kernel).
    pub parameter: u64,
    pub rules_applied: Vec<(&'static str, usize)>,
    pub trivially_decided: Option<Verdict>,
}

#[derive(Clone, Debug)]
pub enum KernelOutcome {
    Kernel(Instance, KernelReport),
    /// Instance decided during reduction. The verdict talks about the
    /// input instance; its witness is gone (vertex ids changed underway).
    Trivial(Verdict, KernelReport),
}

/// Minimum number of edges whose removal leaves a forest.
pub fn feedback_edge_number(g: &Graph) -> usize {
    let all: Vec<usize> = g.vertices().collect();
    g.edge_count() + g.connected_components(&all).len() - g.n()
}

const RULE_NAMES: [&str; 6] = ["r1", "r2", "r3", "r4", "r5", "r6"];

pub fn kernelize_fes(inst: &Instance) -> Result<KernelOutcome> {
    if !inst.graph.is_unit_weight() {
        return Err(Error::Unsupported(
            "degree reduction rules require unit edge weights".into(),
        ));
    }
    let input = InstanceStats::of(inst);
    let mut cur = inst.clone();
    let mut counts = [0usize; 6];
    let mut forced_cuts: u64 = 0;

    let finish_trivial = |verdict: Verdict, cur: &Instance, counts: [usize; 6], forced: u64| {
        let adjusted = if verdict.yes {
            Verdict::yes_bare(verdict.optimum.map(|o| o + forced))
        } else {
            Verdict::no()
        };
        let report = KernelReport {
            input: input.clone(),
            output: InstanceStats::of(cur),
            parameter: feedback_edge_number(&cur.graph) as u64,
            rules_applied: RULE_NAMES.iter().copied().zip(counts).collect(),
            trivially_decided: Some(adjusted.clone()),
        };
        KernelOutcome::Trivial(adjusted, report)
    };

    loop {
        match normalize(&cur) {
            Normalized::Trivial(v) => {
                return Ok(finish_trivial(v, &cur, counts, forced_cuts));
            }
            Normalized::Reduced(r) => cur = r.instance,
        }
        match apply_first_rule(&cur) {
            Step::Changed(next, rule) => {
                counts[rule] += 1;
                if rule == 5 {
                    forced_cuts += 1;
                }
                cur = next;
            }
            Step::Decided(v, rule) => {
                counts[rule] += 1;
                return Ok(finish_trivial(v, &cur, counts, forced_cuts));
            }
            Step::Exhausted => break,
        }
    }

    let report = KernelReport {
        input,
        output: InstanceStats::of(&cur),
        parameter: feedback_edge_number(&cur.graph) as u64,
        rules_applied: RULE_NAMES.iter().copied().zip(counts).collect(),
        trivially_decided: None,
    };
    debug_assert!(feedback_edge_number(&cur.graph) <= feedback_edge_number(&inst.graph));
    Ok(KernelOutcome::Kernel(cur, report))
}

enum Step {
    Changed(Instance, usize),
    Decided(Verdict, usize),
    Exhausted,
}

fn apply_first_rule(inst: &Instance) -> Step {
    let g = &inst.graph;
    let in_s = |v: usize| inst.s.binary_search(&v).is_ok();
    let in_t = |v: usize| inst.t.binary_search(&v).is_ok();

    // R1: non-terminal of degree one.
    for v in g.vertices() {
        if g.degree(v) == 1 && !in_s(v) && !in_t(v) {
            return Step::Changed(rebuild(inst, &[v], &[], &[], &[], &[], inst.ell), 0);
        }
    }
    // R2: degree-one vertex forming a whole terminal set by itself.
    for v in g.vertices() {
        if g.degree(v) != 1 {
            continue;
        }
        let lone_s = in_s(v) && inst.s.len() == 1;
        let lone_t = in_t(v) && inst.t.len() == 1;
        if lone_s || lone_t {
            let w = g.neighbors(v)[0].1;
            let verdict = if inst.budget() >= w {
                Verdict::yes_bare(Some(w))
            } else {
                Verdict::no()
            };
            return Step::Decided(verdict, 1);
        }
    }
    // R3: degree-one terminal with siblings passes its role inward.
    for v in g.vertices() {
        if g.degree(v) != 1 {
            continue;
        }
        let nb = g.neighbors(v)[0].0;
        if in_s(v) {
            if in_t(nb) {
                return Step::Decided(Verdict::no(), 2);
            }
            return Step::Changed(rebuild(inst, &[v], &[], &[], &[nb], &[], inst.ell), 2);
        }
        if in_t(v) {
            if in_s(nb) {
                return Step::Decided(Verdict::no(), 2);
            }
            return Step::Changed(rebuild(inst, &[v], &[], &[], &[], &[nb], inst.ell), 2);
        }
    }

    // From here on the minimum degree is two.
    if g.n() > 0 && g.vertices().all(|v| g.degree(v) == 2) {
        return cycle_rule(inst);
    }
    let paths: Vec<DegPath> = find_paths(g)
        .into_iter()
        .filter(|p| p.internals.len() >= 2)
        .collect();

    // R4: no internal terminals.
    for p in &paths {
        if p.internals.iter().all(|&v| !in_s(v) && !in_t(v)) {
            if p.pendant() {
                return Step::Changed(rebuild(inst, &p.internals, &[], &[], &[], &[], inst.ell), 3);
            }
            let keep = p.internals[0];
            return Step::Changed(
                rebuild(
                    inst,
                    &p.internals[1..],
                    &[],
                    &[(keep, p.vp)],
                    &[],
                    &[],
                    inst.ell,
                ),
                3,
            );
        }
    }
    // R5: internal terminals from exactly one set.
    for p in &paths {
        let has_s = p.internals.iter().any(|&v| in_s(v));
        let has_t = p.internals.iter().any(|&v| in_t(v));
        if has_s == has_t {
            continue;
        }
        let (class, other): (&[usize], &dyn Fn(usize) -> bool) = if has_s {
            (&inst.s, &in_t)
        } else {
            (&inst.t, &in_s)
        };
        if p.pendant() {
            let inside = class.iter().all(|v| p.internals.contains(v));
            if inside {
                if p.internals.len() < 3 {
                    continue; // already a pendant triangle, nothing to do
                }
                // keep two internals: the first adopts the whole set
                let keep0 = p.internals[0];
                let keep1 = p.internals[1];
                let remove: Vec<usize> = p.internals[2..].to_vec();
                let (s_add, t_add): (&[usize], &[usize]) = if has_s {
                    (&[keep0], &[])
                } else {
                    (&[], &[keep0])
                };
                let mut next =
                    rebuild(inst, &remove, &[], &[(keep1, p.v0)], s_add, t_add, inst.ell);
                // the adopted vertex is the set's only member now
                if has_s {
                    next.s = vec![map_alive(&remove, keep0)];
                } else {
                    next.t = vec![map_alive(&remove, keep0)];
                }
                return Step::Changed(next, 4);
            }
            // the set reaches outside the pendant cycle, so the attachment
            // vertex must carry the color
            if other(p.v0) {
                return Step::Decided(Verdict::no(), 4);
            }
            let (s_add, t_add): (&[usize], &[usize]) = if has_s {
                (&[p.v0], &[])
            } else {
                (&[], &[p.v0])
            };
            return Step::Changed(
                rebuild(inst, &p.internals, &[], &[], s_add, t_add, inst.ell),
                4,
            );
        }
        let keep = p.internals[0];
        let (s_add, t_add): (&[usize], &[usize]) = if has_s {
            (&[keep], &[])
        } else {
            (&[], &[keep])
        };
        return Step::Changed(
            rebuild(
                inst,
                &p.internals[1..],
                &[],
                &[(keep, p.vp)],
                s_add,
                t_add,
                inst.ell,
            ),
            4,
        );
    }
    // R6: internal terminals of both kinds.
    for p in &paths {
        let has_s = p.internals.iter().any(|&v| in_s(v));
        let has_t = p.internals.iter().any(|&v| in_t(v));
        if !(has_s && has_t) {
            continue;
        }
        let terminals: Vec<(usize, bool)> = p
            .internals
            .iter()
            .enumerate()
            .filter_map(|(i, &v)| {
                if in_s(v) {
                    Some((i, true))
                } else if in_t(v) {
                    Some((i, false))
                } else {
                    None
                }
            })
            .collect();
        let pair = terminals.windows(2).find(|w| w[0].1 != w[1].1);
        if let Some(w) = pair {
            let i = w[0].0;
            return cut_forced_edge(inst, p.internals[i], p.internals[i + 1]);
        }
    }
    Step::Exhausted
}

/// The whole graph is a cycle (every degree two). Arcs between
/// consecutive terminals compress to one internal vertex, just like open
/// paths; afterwards the cycle holds at most two vertices per terminal.
/// With three or more terminals that can still be too big for the size
/// bound, but then two consecutive terminals of opposite kind exist and
/// every solution cuts the stretch between them, so the forced-edge rule
/// breaks the cycle and the degree-one cascade finishes the job.
fn cycle_rule(inst: &Instance) -> Step {
    let g = &inst.graph;
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = 0usize;
    for _ in 0..n {
        order.push(cur);
        let (a, _) = g.neighbors(cur)[0];
        let (b, _) = g.neighbors(cur)[1];
        let next = if a == prev {
            b
        } else if b == prev {
            a
        } else {
            a.min(b)
        };
        prev = cur;
        cur = next;
    }
    let terminals: Vec<(usize, bool)> = order
        .iter()
        .enumerate()
        .filter_map(|(pos, &v)| {
            if inst.s.binary_search(&v).is_ok() {
                Some((pos, true))
            } else if inst.t.binary_search(&v).is_ok() {
                Some((pos, false))
            } else {
                None
            }
        })
        .collect();
    let t_count = terminals.len();
    // arc compression, in walk order
    for i in 0..t_count {
        let (p, _) = terminals[i];
        let (q, _) = terminals[(i + 1) % t_count];
        let between = (q + n - p - 1) % n;
        if between >= 2 {
            let keep = order[(p + 1) % n];
            let remove: Vec<usize> = (2..=between).map(|d| order[(p + d) % n]).collect();
            return Step::Changed(
                rebuild(inst, &remove, &[], &[(keep, order[q])], &[], &[], inst.ell),
                3,
            );
        }
    }
    if t_count >= 3 {
        for i in 0..t_count {
            let (pos, kind) = terminals[i];
            let (_, next_kind) = terminals[(i + 1) % t_count];
            if kind != next_kind {
                return cut_forced_edge(inst, order[pos], order[(pos + 1) % n]);
            }
        }
    }
    Step::Exhausted
}

/// Rule 6 edge deletion: the edge is in every solution, so remove it and
/// lower the budget.
fn cut_forced_edge(inst: &Instance, a: usize, b: usize) -> Step {
    let ell = match inst.ell {
        Some(0) => return Step::Decided(Verdict::no(), 5),
        Some(l) => Some(l - 1),
        None => None,
    };
    Step::Changed(rebuild(inst, &[], &[(a, b)], &[], &[], &[], ell), 5)
}

/// Rebuilds the instance after removing vertices/edges, adding edges and
/// extending terminal sets (all in current ids), then compacting ids.
fn rebuild(
    inst: &Instance,
    remove_verts: &[usize],
    remove_edges: &[(usize, usize)],
    add_edges: &[(usize, usize)],
    s_add: &[usize],
    t_add: &[usize],
    ell: Option<u64>,
) -> Instance {
    let g = &inst.graph;
    let mut dead = vec![false; g.n()];
    for &v in remove_verts {
        dead[v] = true;
    }
    let keep: Vec<usize> = g.vertices().filter(|&v| !dead[v]).collect();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let gone = |u: usize, v: usize| {
        remove_edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    };
    let mut edges: Vec<(usize, usize, u64)> = g
        .edges()
        .iter()
        .filter(|e| !dead[e.u] && !dead[e.v] && !gone(e.u, e.v))
        .map(|e| (new_id[e.u], new_id[e.v], e.w))
        .collect();
    edges.extend(add_edges.iter().map(|&(u, v)| (new_id[u], new_id[v], 1)));
    let graph = Graph::from_weighted_edges(keep.len(), edges).expect("rebuild is valid");
    let remap = |set: &[usize], add: &[usize]| -> Vec<usize> {
        set.iter()
            .chain(add)
            .filter(|&&v| !dead[v])
            .map(|&v| new_id[v])
            .collect()
    };
    Instance::new(graph, remap(&inst.s, s_add), remap(&inst.t, t_add), ell)
}

/// Current id of `v` after removing `remove` (for post-rebuild fixups).
fn map_alive(remove: &[usize], v: usize) -> usize {
    let mut id = v;
    for &r in remove {
        if r < v {
            id -= 1;
        }
    }
    id
}

/// Maximal path whose internal vertices have degree two; endpoints have
/// degree at least three. A pendant cycle comes back with v0 == vp.
#[derive(Clone, Debug)]
struct DegPath {
    v0: usize,
    internals: Vec<usize>,
    vp: usize,
}

impl DegPath {
    fn pendant(&self) -> bool {
        self.v0 == self.vp
    }
}

fn find_paths(g: &Graph) -> Vec<DegPath> {
    let mut seen_first: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for v0 in g.vertices() {
        if g.degree(v0) < 3 {
            continue;
        }
        for &(start, _) in g.neighbors(v0) {
            if g.degree(start) != 2 {
                continue;
            }
            let mut internals = vec![start];
            let mut prev = v0;
            let mut cur = start;
            let vp = loop {
                let (a, _) = g.neighbors(cur)[0];
                let (b, _) = g.neighbors(cur)[1];
                let next = if a == prev { b } else { a };
                if g.degree(next) == 2 {
                    internals.push(next);
                    prev = cur;
                    cur = next;
                } else {
                    break next;
                }
            };
            let marker = *internals.iter().min().unwrap();
            if !seen_first.insert(marker) {
                continue;
            }
            let mut path = DegPath { v0, internals, vp };
            if path.vp < path.v0 {
                path.internals.reverse();
                std::mem::swap(&mut path.v0, &mut path.vp);
            } else if path.pendant() && path.internals.first() > path.internals.last() {
                path.internals.reverse();
            }
            out.push(path);
        }
    }
    out.sort_by_key(|p| (p.v0, p.vp, p.internals[0]));
    out
}

/// Greedy 2-approximate vertex cover: keep taking both endpoints of an
/// uncovered edge.
pub fn two_approx_vertex_cover(g: &Graph) -> Vec<usize> {
    let mut taken = vec![false; g.n()];
    for e in g.edges() {
        if !taken[e.u] && !taken[e.v] {
            taken[e.u] = true;
            taken[e.v] = true;
        }
    }
    (0..g.n()).filter(|&v| taken[v]).collect()
}

/// Marking kernel for budget-free instances, parameterized by the vertex
/// cover: for each cover pair, keep up to k common non-terminal
/// neighbors (k = half the cover size, rounded up); every other
/// non-terminal vertex outside the cover disappears. The output has at
/// most 2k + 4k^3 + |S ∪ T| vertices.
pub fn kernelize_vc_2dcs(
    inst: &Instance,
    cover: Option<&[usize]>,
) -> Result<(Instance, KernelReport)> {
    if !inst.is_budget_free() {
        return Err(Error::Mode(
            "marking kernel applies only to budget-free instances".into(),
        ));
    }
    let g = &inst.graph;
    let cover: Vec<usize> = match cover {
        Some(c) => {
            let mut c: Vec<usize> = c.to_vec();
            c.sort_unstable();
            c.dedup();
            let mut in_cover = vec![false; g.n()];
            for &v in &c {
                if v >= g.n() {
                    return Err(Error::Param(format!("cover vertex {} out of range", v + 1)));
                }
                in_cover[v] = true;
            }
            if let Some(e) = g.edges().iter().find(|e| !in_cover[e.u] && !in_cover[e.v]) {
                return Err(Error::UncoveredEdge {
                    u: e.u + 1,
                    v: e.v + 1,
                });
            }
            c
        }
        None => two_approx_vertex_cover(g),
    };
    let k = cover.len().div_ceil(2);
    let is_terminal =
        |v: usize| inst.s.binary_search(&v).is_ok() || inst.t.binary_search(&v).is_ok();
    let mut in_cover = vec![false; g.n()];
    for &v in &cover {
        in_cover[v] = true;
    }
    let mut marked: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
    for (i, &a) in cover.iter().enumerate() {
        for &b in &cover[i + 1..] {
            let mut taken = 0usize;
            let nb_b: Vec<usize> = g.neighbors(b).iter().map(|&(u, _)| u).collect();
            for &(u, _) in g.neighbors(a) {
                if taken == k {
                    break;
                }
                if !in_cover[u] && !is_terminal(u) && nb_b.binary_search(&u).is_ok() {
                    marked.insert(u);
                    taken += 1;
                }
            }
        }
    }
    let mut keep: Vec<usize> = cover.clone();
    keep.extend(marked.iter().copied());
    keep.extend(inst.s.iter().copied());
    keep.extend(inst.t.iter().copied());
    keep.sort_unstable();
    keep.dedup();
    let (graph, old_ids) = g.induced(&keep);
    let back: std::collections::BTreeMap<usize, usize> = old_ids
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let s: Vec<usize> = inst.s.iter().map(|v| back[v]).collect();
    let t: Vec<usize> = inst.t.iter().map(|v| back[v]).collect();
    let deleted = g.n() - keep.len();
    let out = Instance::new(graph, s, t, None);
    let report = KernelReport {
        input: InstanceStats::of(inst),
        output: InstanceStats::of(&out),
        parameter: cover.len() as u64,
        rules_applied: vec![("marked", marked.len()), ("deleted", deleted)],
        trivially_decided: None,
    };
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_solve;

    fn parse(text: &str) -> Instance {
        Instance::parse(text).unwrap()
    }

    #[test]
    fn fes_examples() {
        let tree = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(feedback_edge_number(&tree), 0);
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(feedback_edge_number(&c5), 1);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(feedback_edge_number(&k4), 3);
    }

    #[test]
    fn pendant_nonterminal_removed() {
        let inst = parse("p tscu 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\ns 1\nt 2\n");
        match kernelize_fes(&inst).unwrap() {
            KernelOutcome::Kernel(out, report) => {
                assert_eq!(out.graph.n(), 3);
                assert_eq!(report.rules_applied[0], ("r1", 1));
            }
            _ => panic!("expected kernel"),
        }
    }

    #[test]
    fn p5_with_budget_one_is_trivially_yes() {
        let inst = parse("p tscu 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1\nt 5\nl 1\n");
        match kernelize_fes(&inst).unwrap() {
            KernelOutcome::Trivial(v, _) => {
                assert!(v.yes);
                assert_eq!(v.optimum, Some(1));
            }
            _ => panic!("expected trivial"),
        }
    }

    #[test]
    fn nine_cycle_compresses_to_four_cycle() {
        let mut text = String::from("p tscu 9 9\n");
        for i in 0..9 {
            text.push_str(&format!("e {} {}\n", i + 1, (i + 1) % 9 + 1));
        }
        text.push_str("s 1\nt 5\n");
        let inst = parse(&text);
        let oracle = brute_force_solve(&inst).unwrap().literal;
        assert_eq!(oracle.optimum, Some(2));
        match kernelize_fes(&inst).unwrap() {
            KernelOutcome::Kernel(out, _) => {
                // both arcs keep one internal vertex
                assert_eq!(out.graph.n(), 4);
                assert_eq!(out.graph.edge_count(), 4);
                let again = brute_force_solve(&out).unwrap().literal;
                assert_eq!(again.yes, oracle.yes);
                assert_eq!(again.optimum, oracle.optimum);
            }
            _ => panic!("expected kernel"),
        }
        // with budget 1 the answer flips to no
        let mut budgeted = inst.clone();
        budgeted.ell = Some(1);
        match kernelize_fes(&budgeted).unwrap() {
            KernelOutcome::Trivial(v, _) => assert!(!v.yes),
            KernelOutcome::Kernel(out, _) => {
                assert!(!brute_force_solve(&out).unwrap().literal.yes);
            }
        }
    }

    #[test]
    fn dense_terminal_cycle_breaks_to_meet_bound() {
        // C6 with three terminals: no arc has two internal vertices, so
        // only the forced-cut rule can shrink it below the size bound.
        let mut text = String::from("p tscu 6 6\n");
        for i in 0..6 {
            text.push_str(&format!("e {} {}\n", i + 1, (i + 1) % 6 + 1));
        }
        text.push_str("s 1 5\nt 3\n");
        let inst = parse(&text);
        let oracle = brute_force_solve(&inst).unwrap().literal;
        match kernelize_fes(&inst).unwrap() {
            KernelOutcome::Trivial(v, _) => {
                assert_eq!(v.yes, oracle.yes);
                assert_eq!(v.optimum, oracle.optimum);
            }
            KernelOutcome::Kernel(out, _) => {
                let k = feedback_edge_number(&out.graph);
                assert!(out.graph.n() <= 5 * k);
                let again = brute_force_solve(&out).unwrap().literal;
                assert_eq!(again.yes, oracle.yes);
            }
        }
    }

    #[test]
    fn mixed_path_cuts_forced_edge() {
        // two K4 blocks joined by a path whose interior holds one S and
        // one T vertex; nothing else is reducible, so rule 6 must fire
        let inst = parse(
            "p tscu 12 16\n\
             e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n\
             e 4 5\ne 5 6\ne 6 7\ne 7 8\ne 8 9\n\
             e 9 10\ne 9 11\ne 9 12\ne 10 11\ne 10 12\n\
             s 5\nt 7\nl 4\n",
        );
        let oracle = brute_force_solve(&inst).unwrap().literal;
        let report = match kernelize_fes(&inst).unwrap() {
            KernelOutcome::Trivial(v, report) => {
                assert_eq!(v.yes, oracle.yes);
                assert_eq!(v.optimum, oracle.optimum);
                report
            }
            KernelOutcome::Kernel(out, report) => {
                let again = brute_force_solve(&out).unwrap().literal;
                assert_eq!(again.yes, oracle.yes);
                report
            }
        };
        let r6 = report
            .rules_applied
            .iter()
            .find(|(n, _)| *n == "r6")
            .unwrap();
        assert!(r6.1 >= 1);
    }

    #[test]
    fn stable_graph_meets_size_bound() {
        let inst = parse("p tscu 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ns 1\nt 2\n");
        match kernelize_fes(&inst).unwrap() {
            KernelOutcome::Kernel(out, report) => {
                let k = feedback_edge_number(&out.graph);
                assert!(out.graph.n() <= 5 * k);
                assert!(out.graph.edge_count() <= 6 * k);
                assert!(report.trivially_decided.is_none());
            }
            _ => panic!("expected kernel"),
        }
    }

    #[test]
    fn vc_kernel_star() {
        // K1,8 with terminals on two leaves. Supplying the center as the
        // cover keeps only the center and the terminals (no cover pairs,
        // so nothing gets marked); the greedy cover grabs one extra leaf.
        let mut text = String::from("p tscu 9 8\n");
        for leaf in 2..=9 {
            text.push_str(&format!("e 1 {leaf}\n"));
        }
        text.push_str("s 2\nt 3\n");
        let inst = parse(&text);
        let (out, report) = kernelize_vc_2dcs(&inst, Some(&[0])).unwrap();
        assert_eq!(out.graph.n(), 3);
        assert_eq!(report.parameter, 1);
        let before = brute_force_solve(&inst).unwrap().literal.yes;
        let after = brute_force_solve(&out).unwrap().literal.yes;
        assert_eq!(before, after);

        let (out2, report2) = kernelize_vc_2dcs(&inst, None).unwrap();
        assert_eq!(report2.parameter, 2);
        assert!(out2.graph.n() <= 4);
        assert_eq!(brute_force_solve(&out2).unwrap().literal.yes, before);
    }

    #[test]
    fn vc_kernel_size_bound_k2() {
        // bound arithmetic for k = 2: 2k + 4k^3 = 36 plus terminals
        let k = 2usize;
        assert_eq!(2 * k + 4 * k * k * k, 36);
    }

    #[test]
    fn vc_kernel_keeps_small_instances_unchanged() {
        // triangle: cover {1,2}, the third vertex is marked for the pair
        let inst = parse("p tscu 3 3\ne 1 2\ne 2 3\ne 1 3\ns 1\nt 2\n");
        let (out, _) = kernelize_vc_2dcs(&inst, None).unwrap();
        assert_eq!(out, inst);
    }

    #[test]
    fn vc_kernel_rejects_budgeted_instances() {
        let inst = parse("p tscu 3 2\ne 1 2\ne 2 3\ns 1\nt 3\nl 1\n");
        assert!(matches!(
            kernelize_vc_2dcs(&inst, None),
            Err(Error::Mode(_))
        ));
    }

    #[test]
    fn vc_kernel_rejects_bad_cover() {
        let inst = parse("p tscu 3 2\ne 1 2\ne 2 3\ns 1\nt 3\n");
        assert!(matches!(
            kernelize_vc_2dcs(&inst, Some(&[0])),
            Err(Error::UncoveredEdge { .. })
        ));
    }

    #[test]
    fn fes_idempotent() {
        // two K4 blocks and a bridge with two internal vertices; the
        // bridge compresses once and the result is stable
        let inst = parse(
            "p tscu 10 15\n\
             e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n\
             e 4 5\ne 5 6\ne 6 7\n\
             e 7 8\ne 7 9\ne 7 10\ne 8 9\ne 8 10\ne 9 10\n\
             s 1\nt 8\n",
        );
        let KernelOutcome::Kernel(out1, report1) = kernelize_fes(&inst).unwrap() else {
            panic!("expected kernel");
        };
        assert_eq!(out1.graph.n(), 9);
        let r4 = report1
            .rules_applied
            .iter()
            .find(|(n, _)| *n == "r4")
            .unwrap();
        assert_eq!(r4.1, 1);
        let KernelOutcome::Kernel(out2, report2) = kernelize_fes(&out1).unwrap() else {
            panic!("expected kernel");
        };
        assert_eq!(out1, out2);
        assert!(report2.rules_applied.iter().all(|&(_, c)| c == 0));
    }
}
