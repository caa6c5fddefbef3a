//! CNF formulas (DIMACS format) and the reduction from bounded-occurrence
//! SAT to budget-free instances of maximum degree three.
//!
//! Each variable becomes two six-vertex paths (positive and negative
//! rail); consecutive variable gadgets are chained by four rail-end
//! edges, with `f1` and `f2` closing the two ends. Each clause vertex
//! attaches to one free slot (positions 2..5) on the rail of each of its
//! literals. S = {f1, f2}, T = the clause vertices: separating them while
//! keeping both sides connected forces one monochromatic rail per
//! variable (a truth assignment), and a clause vertex can only reach the
//! blue side through a rail carrying a satisfying literal.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    /// Clauses as signed 1-based literals (DIMACS convention).
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Parses DIMACS cnf: `p cnf <vars> <clauses>`, clause lines of signed
    /// integers terminated by 0, `c` comment lines.
    pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('p') {
                let mut tok = line.split_whitespace();
                tok.next();
                if tok.next() != Some("cnf") {
                    return Err(Error::parse(lineno, "expected `p cnf <vars> <clauses>`"));
                }
                let nv = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "malformed variable count"))?;
                let nc = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "malformed clause count"))?;
                header = Some((nv, nc));
                continue;
            }
            let (nv, _) = header.ok_or_else(|| Error::parse(lineno, "clause before p line"))?;
            for t in line.split_whitespace() {
                let lit: i32 = t
                    .parse()
                    .map_err(|_| Error::parse(lineno, "malformed literal"))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    if lit.unsigned_abs() as usize > nv {
                        return Err(Error::parse(lineno, format!("literal {lit} out of range")));
                    }
                    current.push(lit);
                }
            }
        }
        let (nv, nc) = header.ok_or_else(|| Error::parse(1, "missing p cnf line"))?;
        if !current.is_empty() {
            return Err(Error::parse(1, "unterminated clause"));
        }
        if clauses.len() != nc {
            return Err(Error::parse(
                1,
                format!("header announces {nc} clauses, found {}", clauses.len()),
            ));
        }
        Ok(CnfFormula {
            num_vars: nv,
            clauses,
        })
    }

    /// Checks the bounded shape: at most three literals per clause, each
    /// variable occurring in at most four clauses.
    pub fn check_shape34(&self) -> Result<()> {
        let mut occurrences = vec![0usize; self.num_vars];
        for (ci, clause) in self.clauses.iter().enumerate() {
            if clause.len() > 3 {
                return Err(Error::Shape(format!(
                    "clause {} has {} literals",
                    ci + 1,
                    clause.len()
                )));
            }
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if var == 0 || var > self.num_vars {
                    return Err(Error::Shape(format!("literal {lit} out of range")));
                }
                occurrences[var - 1] += 1;
            }
        }
        if let Some(v) = occurrences.iter().position(|&c| c > 4) {
            return Err(Error::Shape(format!(
                "variable {} occurs {} times",
                v + 1,
                occurrences[v]
            )));
        }
        Ok(())
    }
}

/// Vertex layout of the generated instance: variable i (0-based) owns
/// positions 12i..12i+6 (positive rail x^1..x^6) and 12i+6..12i+12
/// (negative rail); clause j sits at 12n + j; the two S-vertices close
/// the layout.
pub fn gen_sat34(f: &CnfFormula) -> Result<Instance> {
    f.check_shape34()?;
    let n = f.num_vars;
    let m = f.clauses.len();
    let pos_rail = |i: usize, p: usize| 12 * i + p; // p in 0..6 for x^1..x^6
    let neg_rail = |i: usize, p: usize| 12 * i + 6 + p;
    let clause_v = |j: usize| 12 * n + j;
    let f1 = 12 * n + m;
    let f2 = 12 * n + m + 1;
    let total = 12 * n + m + 2;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for p in 0..5 {
            edges.push((pos_rail(i, p), pos_rail(i, p + 1)));
            edges.push((neg_rail(i, p), neg_rail(i, p + 1)));
        }
    }
    for i in 0..n.saturating_sub(1) {
        edges.push((pos_rail(i, 5), neg_rail(i + 1, 0)));
        edges.push((neg_rail(i, 5), pos_rail(i + 1, 0)));
        edges.push((pos_rail(i, 5), pos_rail(i + 1, 0)));
        edges.push((neg_rail(i, 5), neg_rail(i + 1, 0)));
    }
    if n > 0 {
        edges.push((f1, pos_rail(0, 0)));
        edges.push((f1, neg_rail(0, 0)));
        edges.push((f2, pos_rail(n - 1, 5)));
        edges.push((f2, neg_rail(n - 1, 5)));
    }

    // clause attachment: first free slot among positions 2..5 of the rail
    let mut used = vec![[false; 4]; 2 * n]; // rail id -> slot usage
    for (j, clause) in f.clauses.iter().enumerate() {
        for &lit in clause {
            let var = lit.unsigned_abs() as usize - 1;
            let rail = 2 * var + usize::from(lit < 0);
            let slot = (0..4)
                .find(|&s| !used[rail][s])
                .expect("at most four occurrences per variable");
            used[rail][slot] = true;
            let anchor = if lit > 0 {
                pos_rail(var, slot + 1)
            } else {
                neg_rail(var, slot + 1)
            };
            edges.push((clause_v(j), anchor));
        }
    }

    let graph = Graph::from_edges(total, edges)?;
    let s = vec![f1, f2];
    let t: Vec<usize> = (0..m).map(clause_v).collect();
    Ok(Instance::new(graph, s, t, None))
}

#[cfg(test)]
pub fn sat_brute_force(f: &CnfFormula) -> bool {
    (0..1u64 << f.num_vars).any(|assignment| {
        f.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let var = lit.unsigned_abs() as usize - 1;
                (assignment >> var & 1 == 1) == (lit > 0)
            })
        })
    })
}
