use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gate {
    And,
    Or,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("circuit has no vertices")]
    Empty,
    #[error("vertex {vertex} out of range for {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("circuit graph has a cycle through vertex {0}")]
    CycleDetected(usize),
    #[error("vertex {vertex} has indegree {indegree}, expected 0 or 2")]
    BadIndegree { vertex: usize, indegree: usize },
    #[error("expected exactly one vertex with no successors, found {0:?}")]
    NoUniqueOutput(Vec<usize>),
    #[error("declared output {declared} is not the sink vertex {actual}")]
    OutputMismatch { declared: usize, actual: usize },
    #[error("input assignment mismatch at vertex {0}")]
    AssignmentMismatch(usize),
    #[error("gate kind mismatch at vertex {0}")]
    GateKindMismatch(usize),
}

/// Circuit as written in instance files: vertices `0..vertices`, edge list,
/// gate kind for every non-input, 0/1 value for every input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCircuit {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub gates: BTreeMap<usize, Gate>,
    pub inputs: BTreeMap<usize, u8>,
    pub output: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Input(bool),
    /// Gate with its two operand ports; `first` is the lower-index predecessor
    /// (or the first listed edge when both ports share a predecessor).
    Gate {
        kind: Gate,
        first: usize,
        second: usize,
    },
}

/// A validated monotone Boolean circuit with its input assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneCircuit {
    nodes: Vec<Node>,
    succs: Vec<Vec<usize>>,
    output: usize,
}

impl MonotoneCircuit {
    pub fn new(raw: &RawCircuit) -> Result<Self, CircuitError> {
        let n = raw.vertices;
        if n == 0 {
            return Err(CircuitError::Empty);
        }
        let range = |v: usize| {
            if v < n {
                Ok(())
            } else {
                Err(CircuitError::IndexOutOfRange { vertex: v, n })
            }
        };
        range(raw.output)?;
        let mut preds = vec![Vec::new(); n];
        let mut succs = vec![Vec::new(); n];
        for &(u, v) in &raw.edges {
            range(u)?;
            range(v)?;
            preds[v].push(u);
            succs[u].push(v);
        }
        for v in raw.gates.keys().chain(raw.inputs.keys()) {
            range(*v)?;
        }
        if let Some(v) = cycle_vertex(&succs) {
            return Err(CircuitError::CycleDetected(v));
        }
        for (v, p) in preds.iter().enumerate() {
            if !p.is_empty() && p.len() != 2 {
                return Err(CircuitError::BadIndegree {
                    vertex: v,
                    indegree: p.len(),
                });
            }
        }
        let sinks: Vec<usize> = (0..n).filter(|&v| succs[v].is_empty()).collect();
        if sinks.len() != 1 {
            return Err(CircuitError::NoUniqueOutput(sinks));
        }
        if sinks[0] != raw.output {
            return Err(CircuitError::OutputMismatch {
                declared: raw.output,
                actual: sinks[0],
            });
        }
        let mut nodes = Vec::with_capacity(n);
        for (v, p) in preds.iter().enumerate() {
            let node = if p.is_empty() {
                if raw.gates.contains_key(&v) {
                    return Err(CircuitError::GateKindMismatch(v));
                }
                match raw.inputs.get(&v) {
                    Some(0) => Node::Input(false),
                    Some(1) => Node::Input(true),
                    _ => return Err(CircuitError::AssignmentMismatch(v)),
                }
            } else {
                if raw.inputs.contains_key(&v) {
                    return Err(CircuitError::AssignmentMismatch(v));
                }
                let kind = *raw.gates.get(&v).ok_or(CircuitError::GateKindMismatch(v))?;
                let (a, b) = (p[0], p[1]);
                Node::Gate {
                    kind,
                    first: a.min(b),
                    second: a.max(b),
                }
            };
            nodes.push(node);
        }
        Ok(MonotoneCircuit {
            nodes,
            succs,
            output: raw.output,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, v: usize) -> Node {
        self.nodes[v]
    }

    pub fn is_input(&self, v: usize) -> bool {
        matches!(self.nodes[v], Node::Input(_))
    }

    pub fn output(&self) -> usize {
        self.output
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succs[v]
    }

    /// Vertices sorted so every gate comes after both operands.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut levels: Vec<(usize, usize)> = self
            .levels()
            .into_iter()
            .enumerate()
            .map(|(v, l)| (l, v))
            .collect();
        levels.sort_unstable();
        levels.into_iter().map(|(_, v)| v).collect()
    }

    /// 0 for inputs, otherwise one more than the deepest operand.
    pub fn levels(&self) -> Vec<usize> {
        let n = self.nodes.len();
        let mut level: Vec<Option<usize>> = vec![None; n];
        for start in 0..n {
            let mut stack = vec![start];
            while let Some(&v) = stack.last() {
                if level[v].is_some() {
                    stack.pop();
                    continue;
                }
                match self.nodes[v] {
                    Node::Input(_) => {
                        level[v] = Some(0);
                        stack.pop();
                    }
                    Node::Gate { first, second, .. } => match (level[first], level[second]) {
                        (Some(a), Some(b)) => {
                            level[v] = Some(1 + a.max(b));
                            stack.pop();
                        }
                        (a, b) => {
                            if a.is_none() {
                                stack.push(first);
                            }
                            if b.is_none() {
                                stack.push(second);
                            }
                        }
                    },
                }
            }
        }
        level.into_iter().map(|l| l.expect("acyclic")).collect()
    }

    pub fn level(&self, v: usize) -> usize {
        self.levels()[v]
    }

    /// Value of every vertex under the input assignment.
    pub fn evaluate(&self) -> Vec<bool> {
        let mut value = vec![false; self.nodes.len()];
        for v in self.topological_order() {
            value[v] = match self.nodes[v] {
                Node::Input(b) => b,
                Node::Gate {
                    kind: Gate::And,
                    first,
                    second,
                } => value[first] && value[second],
                Node::Gate {
                    kind: Gate::Or,
                    first,
                    second,
                } => value[first] || value[second],
            };
        }
        value
    }

    pub fn output_value(&self) -> bool {
        self.evaluate()[self.output]
    }
}

fn cycle_vertex(succs: &[Vec<usize>]) -> Option<usize> {
    let n = succs.len();
    let mut indeg = vec![0usize; n];
    for out in succs {
        for &w in out {
            indeg[w] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut done = vec![false; n];
    while let Some(v) = queue.pop_front() {
        done[v] = true;
        for &w in &succs[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    (0..n).find(|&v| !done[v])
}
