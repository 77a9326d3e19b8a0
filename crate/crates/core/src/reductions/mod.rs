//! Monotone circuits, the circuit-value to MFP reduction and the graph
//! reachability to MOP reduction.
//!
//! Pair-lattice elements `(a₁, a₂)` are indexed `2·a₁ + a₂`, so the pair
//! lattice is [`Lattice::powerset`] over two bits and meet is bitwise AND.

mod circuit;
mod gr;
mod mcv;

pub use circuit::{CircuitError, Gate, MonotoneCircuit, Node, RawCircuit};
pub use gr::{reduce_gr_to_mop, Digraph, GrReduction};
pub use mcv::{reduce_mcv_to_mfp, McvReduction};

use std::collections::BTreeMap;

use rand::Rng;
use thiserror::Error;

use crate::dfa::{DfaError, TransferFunction};
use crate::lattice::{Elem, Lattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("graph vertex {vertex} out of range for {n} vertices")]
    GraphVertexOutOfRange { vertex: usize, n: usize },
    #[error(transparent)]
    Dfa(#[from] DfaError),
}

pub fn validate_circuit(raw: &RawCircuit) -> Result<MonotoneCircuit, CircuitError> {
    MonotoneCircuit::new(raw)
}

pub fn circuit_level(c: &MonotoneCircuit, v: usize) -> usize {
    c.level(v)
}

pub fn eval_circuit(c: &MonotoneCircuit) -> Vec<bool> {
    c.evaluate()
}

/// Index of the pair `(a₁, a₂)`.
pub fn pair(a1: bool, a2: bool) -> Elem {
    2 * a1 as usize + a2 as usize
}

/// Components of a pair index.
pub fn unpair(e: Elem) -> (bool, bool) {
    debug_assert!(e < 4);
    (e & 2 != 0, e & 1 != 0)
}

/// The four-element lattice `{0,1}²` with componentwise order.
pub fn pair_lattice() -> Lattice {
    Lattice::powerset(2).with_names(["(0,0)", "(0,1)", "(1,0)", "(1,1)"])
}

/// The six gadget functions over the pair lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSet {
    pub identity: TransferFunction,
    pub zero: TransferFunction,
    pub one: TransferFunction,
    pub swap: TransferFunction,
    pub and: TransferFunction,
    pub or: TransferFunction,
}

impl GadgetSet {
    pub fn input(&self, value: bool) -> &TransferFunction {
        if value {
            &self.one
        } else {
            &self.zero
        }
    }

    pub fn gate(&self, kind: Gate) -> &TransferFunction {
        match kind {
            Gate::And => &self.and,
            Gate::Or => &self.or,
        }
    }

    /// `(name, function)` in a fixed order.
    pub fn named(&self) -> [(&'static str, &TransferFunction); 6] {
        [
            ("g_I", &self.identity),
            ("g_0", &self.zero),
            ("g_1", &self.one),
            ("g_sw", &self.swap),
            ("g_and", &self.and),
            ("g_or", &self.or),
        ]
    }
}

pub fn gadget_tables() -> GadgetSet {
    let tab = |f: fn(bool, bool) -> Elem| {
        TransferFunction::new(
            (0..4)
                .map(|e| {
                    let (a1, a2) = unpair(e);
                    f(a1, a2)
                })
                .collect(),
        )
    };
    GadgetSet {
        identity: tab(pair),
        zero: tab(|_, _| pair(true, false)),
        one: tab(|_, _| pair(true, true)),
        swap: tab(|a1, a2| pair(a2, a1)),
        and: tab(|a1, a2| pair(true, a1 && a2)),
        or: tab(|a1, a2| pair(true, a1 || a2)),
    }
}

/// A random circuit with `inputs` inputs and `gates` gates. Every gate draws
/// two operands from earlier vertices; unused vertices are then folded into
/// the output by extra gates so the sink is unique, which may add gates
/// beyond `gates`.
pub fn random_circuit<R: Rng>(rng: &mut R, inputs: usize, gates: usize) -> RawCircuit {
    assert!(inputs > 0, "a circuit needs an input");
    let mut edges = Vec::new();
    let mut kinds = BTreeMap::new();
    let mut used = vec![false; inputs];
    let mut n = inputs;
    let mut add_gate = |kind: Gate, a: usize, b: usize, n: &mut usize, used: &mut Vec<bool>| {
        edges.push((a, *n));
        edges.push((b, *n));
        used[a] = true;
        used[b] = true;
        kinds.insert(*n, kind);
        used.push(false);
        *n += 1;
    };
    for _ in 0..gates {
        let kind = if rng.gen_bool(0.5) {
            Gate::And
        } else {
            Gate::Or
        };
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        add_gate(kind, a, b, &mut n, &mut used);
    }
    let mut open: Vec<usize> = (0..n).filter(|&v| !used[v]).collect();
    while open.len() > 1 {
        let a = open.remove(0);
        let b = open.remove(0);
        let kind = if rng.gen_bool(0.5) {
            Gate::And
        } else {
            Gate::Or
        };
        add_gate(kind, a, b, &mut n, &mut used);
        open.push(n - 1);
    }
    let inputs = (0..inputs).map(|v| (v, rng.gen_range(0..=1))).collect();
    RawCircuit {
        vertices: n,
        edges,
        gates: kinds,
        inputs,
        output: open[0],
    }
}

/// A random digraph with edge probability `density`; self-loops allowed.
pub fn random_digraph<R: Rng>(rng: &mut R, vertices: usize, density: f64) -> Digraph {
    assert!(vertices > 0);
    let mut edges = Vec::new();
    for u in 0..vertices {
        for v in 0..vertices {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Digraph {
        vertices,
        edges,
        source: rng.gen_range(0..vertices),
        target: rng.gen_range(0..vertices),
    }
}
