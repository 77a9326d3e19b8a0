use std::collections::{BTreeSet, VecDeque};

use super::DfaError;

/// Index of a control-flow vertex.
pub type Vertex = usize;

/// A control flow graph: one entry with no predecessors, one exit with no
/// successors, every vertex reachable from the entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlFlowGraph {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
    entry: Vertex,
    exit: Vertex,
    preds: Vec<Vec<Vertex>>,
    succs: Vec<Vec<Vertex>>,
}

impl ControlFlowGraph {
    pub fn new(
        n: usize,
        edges: &[(Vertex, Vertex)],
        entry: Vertex,
        exit: Vertex,
    ) -> Result<Self, DfaError> {
        if n == 0 {
            return Err(DfaError::EmptyGraph);
        }
        for v in [entry, exit] {
            if v >= n {
                return Err(DfaError::VertexOutOfRange { vertex: v, n });
            }
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(DfaError::VertexOutOfRange { vertex: w, n });
                }
            }
            if !set.insert((u, v)) {
                return Err(DfaError::DuplicateEdge(u, v));
            }
        }
        let mut preds = vec![Vec::new(); n];
        let mut succs = vec![Vec::new(); n];
        for &(u, v) in &set {
            succs[u].push(v);
            preds[v].push(u);
        }
        if !preds[entry].is_empty() {
            return Err(DfaError::EntryHasPredecessor(entry));
        }
        if !succs[exit].is_empty() {
            return Err(DfaError::ExitHasSuccessor(exit));
        }
        let cfg = ControlFlowGraph {
            n,
            edges: set,
            entry,
            exit,
            preds,
            succs,
        };
        let seen = cfg.reachable_from_entry();
        // Any second indegree-0 vertex is unreachable, so entry uniqueness is covered here.
        if let Some(v) = (0..n).find(|&v| !seen[v]) {
            return Err(DfaError::UnreachableVertex(v));
        }
        if let Some(v) = (0..n).find(|&v| v != exit && cfg.succs[v].is_empty()) {
            return Err(DfaError::NotUniqueExit(v));
        }
        Ok(cfg)
    }

    fn reachable_from_entry(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[self.entry] = true;
        let mut queue = VecDeque::from([self.entry]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.succs[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn entry(&self) -> Vertex {
        self.entry
    }

    pub fn exit(&self) -> Vertex {
        self.exit
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn preds(&self, v: Vertex) -> &[Vertex] {
        &self.preds[v]
    }

    pub fn succs(&self, v: Vertex) -> &[Vertex] {
        &self.succs[v]
    }

    /// Reverse postorder of a depth-first search from the entry.
    pub fn reverse_postorder(&self) -> Vec<Vertex> {
        let mut visited = vec![false; self.n];
        let mut post = Vec::with_capacity(self.n);
        // Iterative DFS; the second tuple field is the next successor slot to try.
        let mut stack = vec![(self.entry, 0usize)];
        visited[self.entry] = true;
        while let Some((v, next)) = stack.last_mut() {
            if let Some(&w) = self.succs[*v].get(*next) {
                *next += 1;
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                post.push(*v);
                stack.pop();
            }
        }
        post.reverse();
        post
    }
}
