//! MFP and MOP solvers, plus brute-force oracles for both.
//!
//! [`solve_mfp`] runs descending worklist iteration from top. [`solve_mop`]
//! is exact: it builds the product graph over (polarity, vertex, element)
//! triples and reads off which path-function values are realizable at each
//! vertex. The [`oracle`] module recomputes both by enumeration and shares
//! no code with these paths.

mod mfp;
mod mop;
pub mod oracle;
mod product;

pub use mfp::solve_mfp;
pub use mop::{gmr_decide, gmr_meet, solve_mop};
pub use product::{build_product_graph, Polarity, ProductGraph, ProductVertex};

use thiserror::Error;

use crate::dfa::Vertex;
use crate::lattice::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("transfer function at vertex {0} is not monotone")]
    NonMonotoneFunction(Vertex),
    #[error("iteration bound of {0} evaluations exceeded")]
    IterationBoundExceeded(usize),
    #[error("instance too large for brute force: {size} exceeds cap {cap}")]
    InstanceTooLarge { size: u128, cap: u128 },
    #[error("no fixed point found")]
    NoFixedPoint,
    #[error("fixed points exist but none is maximum")]
    NoMaximum,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// Per-vertex solution with the decision for the system's query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub solution: Vec<Elem>,
    /// MFP: number of vertex evaluations. MOP: number of product vertices visited.
    pub work: usize,
    pub decision: bool,
}
