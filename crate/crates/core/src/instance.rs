//! Instance model, file formats, the solution verifier and normalization.
//!
//! Instance file format (line oriented, ASCII, `c` lines are comments):
//!
//! ```text
//! p tscu <n> <m>
//! e <u> <v>          m lines, 1-based, u != v
//! s <u1> <u2> ...    any number of lines, unioned
//! t <v1> <v2> ...    any number of lines, unioned
//! l <ell>            at most one line; absent means ell = m
//! ```
//!
//! A weight-w edge serializes as w repeated `e` lines, so parse/serialize
//! round-trips exactly even for contracted instances. A missing `l` line
//! puts the instance in budget-free mode, where the budget equals the
//! total edge weight and the question degenerates to the existence of two
//! disjoint connected subgraphs covering the terminal sets.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    /// Sorted, deduplicated. Must end up red.
    pub s: Vec<usize>,
    /// Sorted, deduplicated. Must end up blue.
    pub t: Vec<usize>,
    /// `None` means budget-free mode (budget = total edge weight).
    pub ell: Option<u64>,
}

impl Instance {
    pub fn new(graph: Graph, mut s: Vec<usize>, mut t: Vec<usize>, ell: Option<u64>) -> Instance {
        s.sort_unstable();
        s.dedup();
        t.sort_unstable();
        t.dedup();
        Instance { graph, s, t, ell }
    }

    /// Effective edge budget.
    pub fn budget(&self) -> u64 {
        self.ell.unwrap_or_else(|| self.graph.total_weight())
    }

    /// True when the budget never binds, i.e. the instance only asks for
    /// two disjoint connected subgraphs.
    pub fn is_budget_free(&self) -> bool {
        match self.ell {
            None => true,
            Some(l) => l >= self.graph.total_weight(),
        }
    }

    pub fn parse(text: &str) -> Result<Instance> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut s: Vec<usize> = Vec::new();
        let mut t: Vec<usize> = Vec::new();
        let mut ell: Option<u64> = None;
        let mut edge_lines = 0usize;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line == "c" || line.starts_with("c ") {
                continue;
            }
            let mut tok = line.split_whitespace();
            let kind = tok.next().unwrap();
            match kind {
                "p" => {
                    if header.is_some() {
                        return Err(Error::parse(lineno, "duplicate p line"));
                    }
                    if tok.next() != Some("tscu") {
                        return Err(Error::parse(lineno, "expected `p tscu <n> <m>`"));
                    }
                    let n = parse_num(lineno, tok.next())?;
                    let m = parse_num(lineno, tok.next())?;
                    if tok.next().is_some() {
                        return Err(Error::parse(lineno, "trailing tokens on p line"));
                    }
                    header = Some((n, m));
                }
                "e" => {
                    let (n, _) = header.ok_or_else(|| Error::parse(lineno, "e before p line"))?;
                    let u = parse_vertex(lineno, tok.next(), n)?;
                    let v = parse_vertex(lineno, tok.next(), n)?;
                    if tok.next().is_some() {
                        return Err(Error::parse(lineno, "trailing tokens on e line"));
                    }
                    if u == v {
                        return Err(Error::SelfLoop {
                            line: lineno,
                            id: u + 1,
                        });
                    }
                    edges.push((u, v));
                    edge_lines += 1;
                }
                "s" | "t" => {
                    let (n, _) =
                        header.ok_or_else(|| Error::parse(lineno, "terminals before p line"))?;
                    let dest = if kind == "s" { &mut s } else { &mut t };
                    for item in tok {
                        dest.push(parse_vertex(lineno, Some(item), n)?);
                    }
                }
                "l" => {
                    if header.is_none() {
                        return Err(Error::parse(lineno, "l before p line"));
                    }
                    if ell.is_some() {
                        return Err(Error::parse(lineno, "duplicate l line"));
                    }
                    let v: u64 = tok
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "missing budget"))?
                        .parse()
                        .map_err(|_| Error::parse(lineno, "budget is not a nonnegative integer"))?;
                    if tok.next().is_some() {
                        return Err(Error::parse(lineno, "trailing tokens on l line"));
                    }
                    ell = Some(v);
                }
                other => {
                    return Err(Error::parse(lineno, format!("unknown line type `{other}`")));
                }
            }
        }

        let (n, m) = header.ok_or_else(|| Error::parse(1, "missing p line"))?;
        if edge_lines != m {
            return Err(Error::parse(
                1,
                format!("header announces {m} edges but {edge_lines} e lines found"),
            ));
        }
        let graph = Graph::from_edges(n, edges)?;
        Ok(Instance::new(graph, s, t, ell))
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let m: u64 = self.graph.total_weight();
        out.push_str(&format!("p tscu {} {}\n", self.graph.n(), m));
        for e in self.graph.edges() {
            for _ in 0..e.w {
                out.push_str(&format!("e {} {}\n", e.u + 1, e.v + 1));
            }
        }
        if !self.s.is_empty() {
            out.push('s');
            for &v in &self.s {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        if !self.t.is_empty() {
            out.push('t');
            for &v in &self.t {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        if let Some(l) = self.ell {
            out.push_str(&format!("l {l}\n"));
        }
        out
    }
}

fn parse_num(line: usize, tok: Option<&str>) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, "missing number"))?
        .parse()
        .map_err(|_| Error::parse(line, "malformed number"))
}

fn parse_vertex(line: usize, tok: Option<&str>, n: usize) -> Result<usize> {
    let id: usize = tok
        .ok_or_else(|| Error::parse(line, "missing vertex id"))?
        .parse()
        .map_err(|_| Error::parse(line, "malformed vertex id"))?;
    if id == 0 || id > n {
        return Err(Error::VertexRange { line, id, n });
    }
    Ok(id - 1)
}

/// A red/blue vertex bipartition with its induced cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionCut {
    pub red: Vec<usize>,
    pub blue: Vec<usize>,
    pub cut_edges: Vec<(usize, usize)>,
    pub cut_weight: u64,
}

impl SolutionCut {
    /// Derives the full cut certificate from the red side.
    pub fn from_red(graph: &Graph, red: impl IntoIterator<Item = usize>) -> SolutionCut {
        let mut red: Vec<usize> = red.into_iter().collect();
        red.sort_unstable();
        red.dedup();
        let mut is_red = vec![false; graph.n()];
        for &v in &red {
            is_red[v] = true;
        }
        let blue: Vec<usize> = graph.vertices().filter(|&v| !is_red[v]).collect();
        let mut cut_edges = Vec::new();
        let mut cut_weight = 0u64;
        for e in graph.edges() {
            if is_red[e.u] != is_red[e.v] {
                cut_edges.push((e.u, e.v));
                cut_weight += e.w;
            }
        }
        SolutionCut {
            red,
            blue,
            cut_edges,
            cut_weight,
        }
    }

    /// Parses a solution file: lines `r <u>` list the red vertices.
    pub fn parse(graph: &Graph, text: &str) -> Result<SolutionCut> {
        let mut red = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line == "c" || line.starts_with("c ") {
                continue;
            }
            let mut tok = line.split_whitespace();
            if tok.next() != Some("r") {
                return Err(Error::parse(lineno, "expected `r <u>`"));
            }
            red.push(parse_vertex(lineno, tok.next(), graph.n())?);
            if tok.next().is_some() {
                return Err(Error::parse(lineno, "trailing tokens on r line"));
            }
        }
        Ok(SolutionCut::from_red(graph, red))
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for &v in &self.red {
            out.push_str(&format!("r {}\n", v + 1));
        }
        out
    }
}

/// Result of checking a solution against an instance. `reason` names the
/// first violated condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub reason: Option<String>,
}

impl Verification {
    fn ok() -> Self {
        Verification {
            valid: true,
            reason: None,
        }
    }
    fn fail(reason: impl Into<String>) -> Self {
        Verification {
            valid: false,
            reason: Some(reason.into()),
        }
    }
}

/// Checks a red/blue bipartition against the acceptance condition: S red,
/// T blue, S inside one component of the red side, T inside one component
/// of the blue side, cut weight within budget. The red and blue sides are
/// not themselves required to be connected.
pub fn verify_solution(inst: &Instance, sol: &SolutionCut) -> Verification {
    let n = inst.graph.n();
    let mut is_red = vec![false; n];
    for &v in &sol.red {
        if v >= n {
            return Verification::fail(format!("red vertex {} out of range", v + 1));
        }
        is_red[v] = true;
    }
    if let Some(&v) = inst.s.iter().find(|&&v| !is_red[v]) {
        return Verification::fail(format!("S not red: vertex {}", v + 1));
    }
    if let Some(&v) = inst.t.iter().find(|&&v| is_red[v]) {
        return Verification::fail(format!("T not blue: vertex {}", v + 1));
    }
    let red_set: Vec<usize> = (0..n).filter(|&v| is_red[v]).collect();
    let blue_set: Vec<usize> = (0..n).filter(|&v| !is_red[v]).collect();
    if !in_single_component(&inst.graph, &red_set, &inst.s) {
        return Verification::fail("S not in a single red component");
    }
    if !in_single_component(&inst.graph, &blue_set, &inst.t) {
        return Verification::fail("T not in a single blue component");
    }
    let recomputed = SolutionCut::from_red(&inst.graph, sol.red.iter().copied());
    if recomputed.cut_weight != sol.cut_weight || recomputed.cut_edges != sol.cut_edges {
        return Verification::fail("cut certificate inconsistent with bipartition");
    }
    if recomputed.cut_weight > inst.budget() {
        return Verification::fail(format!(
            "cut weight {} exceeds budget {}",
            recomputed.cut_weight,
            inst.budget()
        ));
    }
    Verification::ok()
}

fn in_single_component(graph: &Graph, side: &[usize], terminals: &[usize]) -> bool {
    if terminals.is_empty() {
        return true;
    }
    let comps = graph.connected_components(side);
    comps
        .iter()
        .any(|c| terminals.iter().all(|v| c.binary_search(v).is_ok()))
}

/// Solver output. `optimum` and `witness` are populated exactly when the
/// answer is yes; every witness passes [`verify_solution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub yes: bool,
    pub optimum: Option<u64>,
    pub witness: Option<SolutionCut>,
}

impl Verdict {
    pub fn yes(optimum: u64, witness: SolutionCut) -> Verdict {
        Verdict {
            yes: true,
            optimum: Some(optimum),
            witness: Some(witness),
        }
    }

    /// Yes-verdict whose witness got lost in a transformation; used by
    /// kernelization when only equivalence, not a certificate, survives.
    pub fn yes_bare(optimum: Option<u64>) -> Verdict {
        Verdict {
            yes: true,
            optimum,
            witness: None,
        }
    }

    pub fn no() -> Verdict {
        Verdict {
            yes: false,
            optimum: None,
            witness: None,
        }
    }

    /// Stable machine-readable line: `YES <cutweight>` or `NO`.
    pub fn machine_line(&self) -> String {
        if self.yes {
            match self.optimum {
                Some(w) => format!("YES {w}"),
                None => "YES".to_string(),
            }
        } else {
            "NO".to_string()
        }
    }
}

/// Outcome of [`normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    /// Instance already decided without running any solver.
    Trivial(Verdict),
    /// Connected instance with both terminal sets nonempty, plus the
    /// mapping from its vertex ids back to the input instance's ids.
    Reduced(Reduction),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub instance: Instance,
    /// new id -> original id
    pub original_ids: Vec<usize>,
}

/// Resolves trivial instances and strips irrelevant components.
///
/// Decision table:
/// - S and T intersect: no.
/// - S and T both empty: yes with cut 0 (everything blue).
/// - a nonempty terminal set spans two components: no (its vertices can
///   never share a component of any induced side).
/// - exactly one terminal set nonempty: yes with cut 0, monochromatic.
/// - S and T live in different components: yes with cut 0.
/// - otherwise: keep only the component holding all terminals.
pub fn normalize(inst: &Instance) -> Normalized {
    let g = &inst.graph;
    if inst.s.iter().any(|v| inst.t.binary_search(v).is_ok()) {
        return Normalized::Trivial(Verdict::no());
    }
    if inst.s.is_empty() && inst.t.is_empty() {
        let w = SolutionCut::from_red(g, []);
        return Normalized::Trivial(Verdict::yes(0, w));
    }
    let all: Vec<usize> = g.vertices().collect();
    let comps = g.connected_components(&all);
    let comp_of = |v: usize| {
        comps
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
            .unwrap()
    };
    let s_comps: std::collections::BTreeSet<usize> = inst.s.iter().map(|&v| comp_of(v)).collect();
    let t_comps: std::collections::BTreeSet<usize> = inst.t.iter().map(|&v| comp_of(v)).collect();
    if s_comps.len() > 1 || t_comps.len() > 1 {
        return Normalized::Trivial(Verdict::no());
    }
    if inst.t.is_empty() {
        // All red is a valid zero-cut solution: S sits in one component.
        let w = SolutionCut::from_red(g, g.vertices());
        return Normalized::Trivial(Verdict::yes(0, w));
    }
    if inst.s.is_empty() {
        let w = SolutionCut::from_red(g, []);
        return Normalized::Trivial(Verdict::yes(0, w));
    }
    let sc = *s_comps.iter().next().unwrap();
    let tc = *t_comps.iter().next().unwrap();
    if sc != tc {
        // Color the S-component red, the rest blue: no edge crosses.
        let w = SolutionCut::from_red(g, comps[sc].iter().copied());
        return Normalized::Trivial(Verdict::yes(0, w));
    }
    let keep = &comps[sc];
    let (graph, original_ids) = g.induced(keep);
    let back: std::collections::BTreeMap<usize, usize> = original_ids
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let s: Vec<usize> = inst.s.iter().map(|v| back[v]).collect();
    let t: Vec<usize> = inst.t.iter().map(|v| back[v]).collect();
    // Budget-free mode survives the component restriction as-is; a finite
    // budget is kept unchanged (discarded components carry no cut edges).
    let instance = Instance::new(graph, s, t, inst.ell);
    Normalized::Reduced(Reduction {
        instance,
        original_ids,
    })
}
