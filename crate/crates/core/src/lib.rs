//! Data-flow analysis over arbitrary finite lattices.
//!
//! Two solvers answer the same question from different ends: [`solvers::solve_mfp`]
//! computes the maximum fixed point of the data-flow equations by descending
//! iteration, and [`solvers::solve_mop`] computes the exact meet over all
//! paths by reachability in a product graph of CFG vertices and lattice
//! elements. Brute-force oracles in [`solvers::oracle`] check both on small
//! instances.
//!
//! [`reductions`] turns monotone Boolean circuits into MFP instances and
//! graph reachability questions into MOP instances. [`cli`] reads and writes
//! the JSON instance format and renders DOT.

pub mod cli;
pub mod dfa;
pub mod lattice;
pub mod reductions;
pub mod solvers;
