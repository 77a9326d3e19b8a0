use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::dfa::{ControlFlowGraph, DfaSystem, Query, TransferFunction, Vertex};
use crate::lattice::Lattice;

/// A reachability question: is `target` reachable from `source`?
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub source: usize,
    pub target: usize,
}

impl Digraph {
    fn check(&self) -> Result<(), ReductionError> {
        let n = self.vertices;
        let bad = [self.source, self.target]
            .into_iter()
            .chain(self.edges.iter().flat_map(|&(u, v)| [u, v]))
            .find(|&v| v >= n);
        match bad {
            Some(vertex) => Err(ReductionError::GraphVertexOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    /// Vertices reachable from `source`, including itself.
    pub fn reachable_from_source(&self) -> Result<Vec<bool>, ReductionError> {
        self.check()?;
        let mut succs = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            succs[u].push(v);
        }
        let mut seen = vec![false; self.vertices];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &w in &succs[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(seen)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrReduction {
    pub system: DfaSystem,
    /// CFG vertex of each original vertex; `None` when unreachable from the source.
    pub vertex_map: Vec<Option<Vertex>>,
}

/// Builds an MOP instance over the two-element chain whose query
/// `mop(exit) = 0` holds iff the target is reachable from the source.
///
/// Only the source-reachable part of the graph is kept. Vertex 0 is a fresh
/// entry, retained vertices follow in index order, the last vertex is a
/// fresh exit fed by every retained vertex.
pub fn reduce_gr_to_mop(g: &Digraph) -> Result<GrReduction, ReductionError> {
    let keep = g.reachable_from_source()?;
    let mut vertex_map = vec![None; g.vertices];
    let mut next = 1;
    for (v, slot) in vertex_map.iter_mut().enumerate() {
        if keep[v] {
            *slot = Some(next);
            next += 1;
        }
    }
    let entry = 0;
    let exit = next;
    let n = exit + 1;

    let mut edges = BTreeSet::new();
    edges.insert((entry, vertex_map[g.source].expect("source is kept")));
    for &(u, v) in &g.edges {
        if let (Some(a), Some(b)) = (vertex_map[u], vertex_map[v]) {
            edges.insert((a, b));
        }
    }
    for mapped in vertex_map.iter().flatten() {
        edges.insert((*mapped, exit));
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let cfg = ControlFlowGraph::new(n, &edges, entry, exit)?;

    let mut functions = vec![TransferFunction::identity(2); n];
    if let Some(t) = vertex_map[g.target] {
        functions[t] = TransferFunction::constant(2, 0);
    }
    let mut names = vec!["entry".to_string()];
    names.extend(
        (0..g.vertices)
            .filter(|&v| keep[v])
            .map(|v| format!("g{v}")),
    );
    names.push("exit".into());
    let system = DfaSystem::new(
        cfg,
        Lattice::chain(2),
        functions,
        Query {
            vertex: exit,
            value: 0,
        },
    )?
    .with_vertex_names(Some(names));
    Ok(GrReduction { system, vertex_map })
}
