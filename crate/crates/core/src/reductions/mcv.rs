use super::circuit::{MonotoneCircuit, Node};
use super::{gadget_tables, pair, pair_lattice, ReductionError};
use crate::dfa::{ControlFlowGraph, DfaSystem, Query, TransferFunction, Vertex};

/// A DFA system built from a circuit, with the vertex correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McvReduction {
    pub system: DfaSystem,
    /// The fresh entry vertex.
    pub entry: Vertex,
    /// `upper[i]` carries `(1, ν(vᵢ))` at the fixed point.
    pub upper: Vec<Vertex>,
    /// `lower[i]` exists for gates only and feeds the first operand through the swap gadget.
    pub lower: Vec<Option<Vertex>>,
}

/// Builds the MFP instance whose query holds iff the circuit outputs 1.
///
/// Vertex 0 is the entry; then for each circuit vertex in index order the
/// lower copy (gates only) followed by the upper copy.
pub fn reduce_mcv_to_mfp(c: &MonotoneCircuit) -> Result<McvReduction, ReductionError> {
    let g = gadget_tables();
    let n = c.vertex_count();
    let entry = 0;
    let mut upper = vec![0; n];
    let mut lower = vec![None; n];
    let mut functions: Vec<TransferFunction> = vec![g.identity.clone()];
    let mut names = vec!["root".to_string()];
    for i in 0..n {
        match c.node(i) {
            Node::Input(b) => {
                upper[i] = functions.len();
                functions.push(g.input(b).clone());
                names.push(format!("v{i}"));
            }
            Node::Gate { kind, .. } => {
                lower[i] = Some(functions.len());
                functions.push(g.swap.clone());
                names.push(format!("v{i}.sw"));
                upper[i] = functions.len();
                functions.push(g.gate(kind).clone());
                names.push(format!("v{i}"));
            }
        }
    }

    let mut edges = Vec::new();
    for i in 0..n {
        match c.node(i) {
            Node::Input(_) => edges.push((entry, upper[i])),
            Node::Gate { first, second, .. } => {
                let lo = lower[i].expect("gates have a lower copy");
                edges.push((lo, upper[i]));
                edges.push((upper[first], lo));
                edges.push((upper[second], upper[i]));
            }
        }
    }

    let exit = upper[c.output()];
    let cfg = ControlFlowGraph::new(functions.len(), &edges, entry, exit)?;
    let system = DfaSystem::new(
        cfg,
        pair_lattice(),
        functions,
        Query {
            vertex: exit,
            value: pair(true, true),
        },
    )?
    .with_vertex_names(Some(names));
    Ok(McvReduction {
        system,
        entry,
        upper,
        lower,
    })
}
