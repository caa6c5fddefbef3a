//! Exact solvers for the two-sets cut-uncut problem and its budget-free
//! special case (two disjoint connected subgraphs), together with the
//! kernelizations, instance generators and the brute-force oracle used to
//! cross-validate everything at desk scale.
//!
//! An instance is an undirected graph with two terminal sets `S` and `T`
//! and an edge budget `ell`. The question is whether the vertices can be
//! colored red and blue so that all of `S` is red, all of `T` is blue,
//! `S` lies in a single component of the red side, `T` in a single
//! component of the blue side, and at most `ell` edge weight crosses the
//! color classes.

pub mod bits;
pub mod cograph;
pub mod error;
pub mod generators;
pub mod graph;
pub mod indset;
pub mod instance;
pub mod kernel;
pub mod mincut;
pub mod oracle;
pub mod parallel;
pub mod treewidth;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use instance::{
    normalize, verify_solution, Instance, Normalized, Reduction, SolutionCut, Verdict,
};
