//! Exhaustive brute-force solver; the ground truth everything else is
//! validated against.
//!
//! Terminal colors are fixed and only the remaining free vertices are
//! enumerated, in Gray-code order so each step flips one vertex and the
//! cut weight updates in O(degree). Candidates are evaluated under both
//! acceptance conditions at once: the literal one (terminals inside single
//! components of their sides) and the stricter one (both sides connected).
//! The candidate range splits into fixed-size chunks for the parallel
//! sweep; the merge is a min with a lexicographic tie-break on the red
//! set, so the result is independent of worker count.

use crate::error::{Error, Result};
use crate::instance::{Instance, SolutionCut, Verdict};
use crate::parallel;

pub const DEFAULT_CAP: usize = 24;
const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug)]
pub struct BruteOptions {
    /// Refuse instances with more vertices than this.
    pub cap: usize,
    pub parallel: bool,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            cap: DEFAULT_CAP,
            parallel: true,
        }
    }
}

/// Optima under both acceptance conditions, from one enumeration.
#[derive(Clone, Debug)]
pub struct OracleResult {
    /// Terminals confined to single components of their sides.
    pub literal: Verdict,
    /// Both sides connected outright.
    pub connected: Verdict,
}

pub fn brute_force_solve(inst: &Instance) -> Result<OracleResult> {
    brute_force_solve_opts(inst, BruteOptions::default())
}

pub fn brute_force_solve_opts(inst: &Instance, opts: BruteOptions) -> Result<OracleResult> {
    let n = inst.graph.n();
    if n > opts.cap {
        return Err(Error::Capacity { n, cap: opts.cap });
    }
    let mut fixed_red = vec![false; n];
    let mut is_free = vec![true; n];
    for &v in &inst.s {
        fixed_red[v] = true;
        is_free[v] = false;
    }
    for &v in &inst.t {
        is_free[v] = false;
    }
    let free: Vec<usize> = (0..n).filter(|&v| is_free[v]).collect();
    if free.len() >= 40 {
        // 2^40 candidates is already far beyond desk scale
        return Err(Error::Capacity { n, cap: opts.cap });
    }
    let total: u64 = 1u64 << free.len();

    let ranges: Vec<(u64, u64)> = (0..total)
        .step_by(CHUNK as usize)
        .map(|lo| (lo, (lo + CHUNK).min(total)))
        .collect();

    let scan = |&(lo, hi): &(u64, u64)| scan_range(inst, &fixed_red, &free, lo, hi);
    let best = parallel::map_reduce(opts.parallel, &ranges, scan, merge_best).unwrap_or_default();

    let budget = inst.budget();
    let to_verdict = |cand: Option<(u64, Vec<usize>)>| match cand {
        Some((w, red)) if w <= budget => Verdict::yes(w, SolutionCut::from_red(&inst.graph, red)),
        _ => Verdict::no(),
    };
    Ok(OracleResult {
        literal: to_verdict(best.literal),
        connected: to_verdict(best.connected),
    })
}

#[derive(Clone, Debug, Default)]
struct Best {
    literal: Option<(u64, Vec<usize>)>,
    connected: Option<(u64, Vec<usize>)>,
}

fn better(a: &(u64, Vec<usize>), b: &(u64, Vec<usize>)) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1 < b.1)
}

fn merge_best(a: Best, b: Best) -> Best {
    let pick = |x: Option<(u64, Vec<usize>)>, y: Option<(u64, Vec<usize>)>| match (x, y) {
        (Some(a), Some(b)) => Some(if better(&a, &b) { a } else { b }),
        (a, b) => a.or(b),
    };
    Best {
        literal: pick(a.literal, b.literal),
        connected: pick(a.connected, b.connected),
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, u: usize, v: usize) {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru != rv {
            self.parent[ru] = rv;
        }
    }

    fn all_same_root(&mut self, verts: &[usize]) -> bool {
        match verts.first() {
            None => true,
            Some(&v0) => {
                let r = self.find(v0);
                verts.iter().all(|&v| self.find(v) == r)
            }
        }
    }
}

fn scan_range(inst: &Instance, fixed_red: &[bool], free: &[usize], lo: u64, hi: u64) -> Best {
    let n = inst.graph.n();
    let mut is_red: Vec<bool> = fixed_red.to_vec();
    let gray = lo ^ (lo >> 1);
    for (j, &v) in free.iter().enumerate() {
        if gray >> j & 1 == 1 {
            is_red[v] = true;
        }
    }
    let mut cutw: u64 = inst
        .graph
        .edges()
        .iter()
        .filter(|e| is_red[e.u] != is_red[e.v])
        .map(|e| e.w)
        .sum();

    let mut dsu = Dsu::new(n);
    let mut best = Best::default();
    let mut red_buf: Vec<usize> = Vec::with_capacity(n);

    let mut idx = lo;
    loop {
        let lit_candidate = best.literal.as_ref().is_none_or(|b| cutw <= b.0);
        let conn_candidate = best.connected.as_ref().is_none_or(|b| cutw <= b.0);
        if lit_candidate || conn_candidate {
            dsu.reset();
            for e in inst.graph.edges() {
                if is_red[e.u] == is_red[e.v] {
                    dsu.union(e.u, e.v);
                }
            }
            let conn_ok = conn_candidate && {
                let mut red_comps = 0usize;
                let mut blue_comps = 0usize;
                for (v, &red) in is_red.iter().enumerate() {
                    if dsu.find(v) == v {
                        if red {
                            red_comps += 1;
                        } else {
                            blue_comps += 1;
                        }
                    }
                }
                red_comps == 1 && blue_comps == 1
            };
            let lit_ok = lit_candidate && dsu.all_same_root(&inst.s) && dsu.all_same_root(&inst.t);
            if lit_ok || conn_ok {
                red_buf.clear();
                red_buf.extend((0..n).filter(|&v| is_red[v]));
                if lit_ok {
                    let cand = (cutw, red_buf.clone());
                    if best.literal.as_ref().is_none_or(|b| better(&cand, b)) {
                        best.literal = Some(cand);
                    }
                }
                if conn_ok {
                    let cand = (cutw, red_buf.clone());
                    if best.connected.as_ref().is_none_or(|b| better(&cand, b)) {
                        best.connected = Some(cand);
                    }
                }
            }
        }
        idx += 1;
        if idx >= hi {
            break;
        }
        // Gray step: candidate idx differs from idx-1 in exactly one bit.
        let bit = idx.trailing_zeros() as usize;
        let v = free[bit];
        let was_red = is_red[v];
        is_red[v] = !was_red;
        for &(u, w) in inst.graph.neighbors(v) {
            if is_red[u] == was_red {
                cutw += w;
            } else {
                cutw -= w;
            }
        }
    }
    best
}
