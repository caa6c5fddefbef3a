//! Solver parameterized by the independence number: when every independent
//! set has at most k vertices, the red side of a solution needs at most
//! (k-1)(2k-2) non-terminal vertices to glue the components of S together
//! (induced paths between them are short, and there are few components),
//! and likewise for blue. Guessing both connector sets and finishing with
//! a minimum anchored cut is exact.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, SolutionCut, Verdict};
use crate::mincut::min_cut;
use crate::parallel;

/// Exact independence number, or a signal that it exceeds `cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alpha {
    Exact(usize),
    AboveCap,
}

/// Branch-and-bound on a maximum-degree vertex (take it or leave it),
/// aborting as soon as some independent set beats the cap.
pub fn max_independent_set(g: &Graph, cap: usize) -> Alpha {
    let mut best = 0usize;
    let alive: Vec<bool> = vec![true; g.n()];
    if branch(g, alive, 0, &mut best, cap) {
        Alpha::AboveCap
    } else {
        Alpha::Exact(best)
    }
}

fn branch(g: &Graph, alive: Vec<bool>, chosen: usize, best: &mut usize, cap: usize) -> bool {
    let live: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    if chosen + live.len() <= *best {
        return false; // cannot improve
    }
    let pick = live
        .iter()
        .copied()
        .max_by_key(|&v| {
            let deg = g.neighbors(v).iter().filter(|&&(u, _)| alive[u]).count();
            (deg, usize::MAX - v)
        })
        .filter(|&v| g.neighbors(v).iter().any(|&(u, _)| alive[u]));
    match pick {
        None => {
            // alive set is independent
            let total = chosen + live.len();
            if total > *best {
                *best = total;
            }
            *best > cap
        }
        Some(v) => {
            let mut with = alive.clone();
            with[v] = false;
            for &(u, _) in g.neighbors(v) {
                with[u] = false;
            }
            if branch(g, with, chosen + 1, best, cap) {
                return true;
            }
            let mut without = alive;
            without[v] = false;
            branch(g, without, chosen, best, cap)
        }
    }
}

/// Verdict plus the number of connector guesses the sweep evaluated.
#[derive(Clone, Debug)]
pub struct IndsetOutcome {
    pub verdict: Verdict,
    pub guesses_examined: u64,
}

/// Connector budget per color for independence number k.
pub fn guess_budget(k: usize) -> usize {
    k.saturating_sub(1) * (2 * k).saturating_sub(2)
}

pub fn solve_indset(inst: &Instance, k: usize) -> Result<IndsetOutcome> {
    solve_indset_opts(inst, k, true)
}

pub fn solve_indset_opts(inst: &Instance, k: usize, par: bool) -> Result<IndsetOutcome> {
    if k < 1 {
        return Err(Error::Param("independence bound must be at least 1".into()));
    }
    if inst.s.is_empty() || inst.t.is_empty() {
        return Err(Error::Param("terminal sets must be nonempty".into()));
    }
    let g = &inst.graph;
    let q = guess_budget(k);
    let nonterm: Vec<usize> = g
        .vertices()
        .filter(|v| inst.s.binary_search(v).is_err() && inst.t.binary_search(v).is_err())
        .collect();

    let reds = subsets_up_to(&nonterm, q, 1 << 22)
        .ok_or_else(|| Error::Param("guess space too large for exhaustive enumeration".into()))?;

    // One work item per red-connector guess; blue guesses stream inside.
    let results = parallel::map_reduce(
        par,
        &reds,
        |red_guess| evaluate_red_guess(inst, &nonterm, red_guess, q),
        |a, b| {
            let best = match (a.0, b.0) {
                (Some(x), Some(y)) => Some(if (x.0, &x.1) <= (y.0, &y.1) { x } else { y }),
                (x, y) => x.or(y),
            };
            (best, a.1 + b.1)
        },
    )
    .unwrap_or((None, 0));

    let (best, guesses_examined) = results;
    let verdict = match best {
        Some((value, side)) if value <= inst.budget() => {
            Verdict::yes(value, SolutionCut::from_red(g, side))
        }
        _ => Verdict::no(),
    };
    Ok(IndsetOutcome {
        verdict,
        guesses_examined,
    })
}

type Cand = Option<(u64, Vec<usize>)>;

fn evaluate_red_guess(
    inst: &Instance,
    nonterm: &[usize],
    red_guess: &[usize],
    q: usize,
) -> (Cand, u64) {
    let g = &inst.graph;
    let mut anchors_a: Vec<usize> = inst.s.to_vec();
    anchors_a.extend_from_slice(red_guess);
    anchors_a.sort_unstable();
    if g.connected_components(&anchors_a).len() != 1 {
        return (None, 0);
    }
    let remaining: Vec<usize> = nonterm
        .iter()
        .copied()
        .filter(|v| red_guess.binary_search(v).is_err())
        .collect();
    let blues = match subsets_up_to(&remaining, q, u64::MAX) {
        Some(b) => b,
        None => unreachable!("no cap"),
    };
    let mut best: Cand = None;
    let mut examined = 0u64;
    for blue_guess in &blues {
        examined += 1;
        let mut anchors_b: Vec<usize> = inst.t.to_vec();
        anchors_b.extend_from_slice(blue_guess);
        anchors_b.sort_unstable();
        if g.connected_components(&anchors_b).len() != 1 {
            continue;
        }
        let cut = min_cut(g, &anchors_a, &anchors_b).expect("anchors disjoint and nonempty");
        let cand = (cut.value, cut.source_side);
        if best
            .as_ref()
            .is_none_or(|b| (cand.0, &cand.1) < (b.0, &b.1))
        {
            best = Some(cand);
        }
    }
    (best, examined)
}

/// All subsets of `items` with at most `q` elements (sorted), refusing to
/// materialize more than `cap` of them.
fn subsets_up_to(items: &[usize], q: usize, cap: u64) -> Option<Vec<Vec<usize>>> {
    let mut count: u64 = 0;
    let mut binom: u64 = 1;
    for i in 0..=q.min(items.len()) {
        if i > 0 {
            binom = binom.saturating_mul((items.len() - i + 1) as u64) / i as u64;
        }
        count = count.saturating_add(binom);
        if count > cap {
            return None;
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(count as usize);
    let mut cur: Vec<usize> = Vec::new();
    gen_subsets(items, 0, q, &mut cur, &mut out);
    Some(out)
}

fn gen_subsets(
    items: &[usize],
    from: usize,
    q: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    out.push(cur.clone());
    if cur.len() == q {
        return;
    }
    for i in from..items.len() {
        cur.push(items[i]);
        gen_subsets(items, i + 1, q, cur, out);
        cur.pop();
    }
}
