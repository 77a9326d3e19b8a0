//! Control flow graphs, tabulated transfer functions and DFA systems.

mod catalog;
mod cfg;

pub use catalog::{
    bitvector_system, diamond_example, random_bitvector_system, random_cfg, random_function,
    random_lattice, random_monotone_function, random_monotone_system, random_system,
    worked_example_tables, SystemSpec,
};
pub use cfg::{ControlFlowGraph, Vertex};

use thiserror::Error;

use crate::lattice::{Elem, Lattice, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DfaError {
    #[error("control flow graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph of {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("entry vertex {0} has a predecessor")]
    EntryHasPredecessor(Vertex),
    #[error("exit vertex {0} has a successor")]
    ExitHasSuccessor(Vertex),
    #[error("vertex {0} has no successor but is not the exit")]
    NotUniqueExit(Vertex),
    #[error("vertex {0} is not reachable from the entry")]
    UnreachableVertex(Vertex),
    #[error("expected {expected} transfer functions, found {found}")]
    FunctionCount { expected: usize, found: usize },
    #[error("transfer function at vertex {vertex} has {found} entries, lattice has {m} elements")]
    FunctionArity {
        vertex: Vertex,
        m: usize,
        found: usize,
    },
    #[error("transfer function at vertex {vertex} maps to out-of-range element {value}")]
    FunctionValue { vertex: Vertex, value: Elem },
    #[error("query element {0} is not in the lattice")]
    QueryValue(Elem),
    #[error("tuple has {found} components, system has {n} vertices")]
    DimensionMismatch { n: usize, found: usize },
    #[error("path is empty")]
    EmptyPath,
    #[error("not a path: no edge ({0}, {1})")]
    NotAPath(Vertex, Vertex),
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("could not generate a valid instance after {0} attempts")]
    GenerationFailed(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A function `L → L` stored as its value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransferFunction {
    table: Vec<Elem>,
}

impl TransferFunction {
    pub fn new(table: Vec<Elem>) -> Self {
        TransferFunction { table }
    }

    pub fn identity(m: usize) -> Self {
        TransferFunction {
            table: (0..m).collect(),
        }
    }

    pub fn constant(m: usize, value: Elem) -> Self {
        TransferFunction {
            table: vec![value; m],
        }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// `x <= y` implies `f(x) <= f(y)`, checked over all pairs.
    pub fn is_monotone(&self, lattice: &Lattice) -> bool {
        let m = lattice.element_count();
        (0..m).all(|x| {
            (0..m).all(|y| !lattice.leq(x, y) || lattice.leq(self.apply(x), self.apply(y)))
        })
    }

    /// `f(x ∧ y) = f(x) ∧ f(y)` for all pairs.
    pub fn is_distributive(&self, lattice: &Lattice) -> bool {
        let m = lattice.element_count();
        (0..m).all(|x| {
            (0..m).all(|y| {
                self.apply(lattice.meet(x, y)) == lattice.meet(self.apply(x), self.apply(y))
            })
        })
    }
}

/// The decision question attached to a system: is the solution at `vertex`
/// equal to `value`?
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Query {
    pub vertex: Vertex,
    pub value: Elem,
}

/// A CFG, a lattice, one transfer function per vertex and a query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaSystem {
    cfg: ControlFlowGraph,
    lattice: Lattice,
    functions: Vec<TransferFunction>,
    query: Query,
    vertex_names: Option<Vec<String>>,
}

impl DfaSystem {
    pub fn new(
        cfg: ControlFlowGraph,
        lattice: Lattice,
        functions: Vec<TransferFunction>,
        query: Query,
    ) -> Result<Self, DfaError> {
        let n = cfg.vertex_count();
        let m = lattice.element_count();
        if functions.len() != n {
            return Err(DfaError::FunctionCount {
                expected: n,
                found: functions.len(),
            });
        }
        for (vertex, f) in functions.iter().enumerate() {
            if f.table.len() != m {
                return Err(DfaError::FunctionArity {
                    vertex,
                    m,
                    found: f.table.len(),
                });
            }
            if let Some(&value) = f.table.iter().find(|&&v| v >= m) {
                return Err(DfaError::FunctionValue { vertex, value });
            }
        }
        if query.vertex >= n {
            return Err(DfaError::VertexOutOfRange {
                vertex: query.vertex,
                n,
            });
        }
        if query.value >= m {
            return Err(DfaError::QueryValue(query.value));
        }
        Ok(DfaSystem {
            cfg,
            lattice,
            functions,
            query,
            vertex_names: None,
        })
    }

    pub fn with_vertex_names(mut self, names: Option<Vec<String>>) -> Self {
        if let Some(n) = &names {
            assert_eq!(n.len(), self.cfg.vertex_count(), "one name per vertex");
        }
        self.vertex_names = names;
        self
    }

    pub fn cfg(&self) -> &ControlFlowGraph {
        &self.cfg
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn functions(&self) -> &[TransferFunction] {
        &self.functions
    }

    pub fn function(&self, v: Vertex) -> &TransferFunction {
        &self.functions[v]
    }

    pub fn query(&self) -> Query {
        self.query
    }

    pub fn vertex_count(&self) -> usize {
        self.cfg.vertex_count()
    }

    pub fn vertex_names(&self) -> Option<&[String]> {
        self.vertex_names.as_deref()
    }

    pub fn vertex_name(&self, v: Vertex) -> String {
        match &self.vertex_names {
            Some(n) => n[v].clone(),
            None => format!("v{v}"),
        }
    }

    /// First vertex whose function is not monotone, if any.
    pub fn first_non_monotone(&self) -> Option<Vertex> {
        self.functions
            .iter()
            .position(|f| !f.is_monotone(&self.lattice))
    }

    pub fn is_monotone(&self) -> bool {
        self.first_non_monotone().is_none()
    }

    pub fn is_distributive(&self) -> bool {
        self.functions
            .iter()
            .all(|f| f.is_distributive(&self.lattice))
    }

    /// Value flowing into `v` under `x`: the meet of the predecessors'
    /// components, top when there are none.
    #[inline]
    pub(crate) fn incoming(&self, v: Vertex, x: &[Elem]) -> Elem {
        self.cfg
            .preds(v)
            .iter()
            .fold(self.lattice.top(), |acc, &p| self.lattice.meet(acc, x[p]))
    }

    /// One application of the simultaneous equations:
    /// component `i` becomes `f_i(⋀ { x_j : j ∈ pred(i) })`.
    pub fn transfer_step(&self, x: &[Elem]) -> Result<Vec<Elem>, DfaError> {
        let n = self.vertex_count();
        if x.len() != n {
            return Err(DfaError::DimensionMismatch { n, found: x.len() });
        }
        let m = self.lattice.element_count();
        if let Some(&bad) = x.iter().find(|&&e| e >= m) {
            return Err(LatticeError::IndexOutOfRange { index: bad, m }.into());
        }
        Ok((0..n)
            .map(|v| self.functions[v].apply(self.incoming(v, x)))
            .collect())
    }

    /// `f_p(top)` for the path `p`, innermost function first.
    pub fn apply_path_function(&self, path: &[Vertex]) -> Result<Elem, DfaError> {
        let (&first, _) = path.split_first().ok_or(DfaError::EmptyPath)?;
        let n = self.vertex_count();
        if let Some(&v) = path.iter().find(|&&v| v >= n) {
            return Err(DfaError::VertexOutOfRange { vertex: v, n });
        }
        for w in path.windows(2) {
            if !self.cfg.has_edge(w[0], w[1]) {
                return Err(DfaError::NotAPath(w[0], w[1]));
            }
        }
        let start = self.functions[first].apply(self.lattice.top());
        Ok(path[1..]
            .iter()
            .fold(start, |acc, &v| self.functions[v].apply(acc)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotonicity() {
        let chain = Lattice::chain(2);
        assert!(TransferFunction::constant(2, 1).is_monotone(&chain));
        assert!(TransferFunction::identity(2).is_monotone(&chain));
        assert!(!TransferFunction::new(vec![1, 0]).is_monotone(&chain));
    }

    #[test]
    fn distributivity() {
        let d = Lattice::diamond();
        assert!(TransferFunction::identity(4).is_distributive(&d));
        for c in 0..4 {
            assert!(TransferFunction::constant(4, c).is_distributive(&d));
        }
        let f = TransferFunction::new(vec![0, 3, 3, 3]);
        assert!(f.is_monotone(&d));
        assert!(!f.is_distributive(&d));
    }

    #[test]
    fn transfer_step_on_diamond_example() {
        let sys = diamond_example();
        let top = sys.lattice().top();
        // s: id(top) = top; u: const a; w: const b; t: f_t(top ∧ top) = top.
        assert_eq!(sys.transfer_step(&[top; 4]).unwrap(), vec![3, 1, 2, 3]);
        // Entry ignores its own component.
        assert_eq!(sys.transfer_step(&[0, 0, 0, 0]).unwrap()[0], 3);
        assert_eq!(
            sys.transfer_step(&[3, 3]),
            Err(DfaError::DimensionMismatch { n: 4, found: 2 })
        );
    }

    #[test]
    fn identity_system_fixes_top() {
        let cfg = ControlFlowGraph::new(3, &[(0, 1), (1, 1), (1, 2)], 0, 2).unwrap();
        let l = Lattice::chain(3);
        let sys = DfaSystem::new(
            cfg,
            l,
            vec![TransferFunction::identity(3); 3],
            Query {
                vertex: 2,
                value: 2,
            },
        )
        .unwrap();
        assert_eq!(sys.transfer_step(&[2, 2, 2]).unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn path_functions() {
        let sys = diamond_example();
        assert_eq!(sys.apply_path_function(&[0]), Ok(3));
        assert_eq!(sys.apply_path_function(&[0, 1, 3]), Ok(3));
        assert_eq!(
            sys.apply_path_function(&[0, 3]),
            Err(DfaError::NotAPath(0, 3))
        );
        assert_eq!(sys.apply_path_function(&[]), Err(DfaError::EmptyPath));
    }

    #[test]
    fn worked_example_path_functions() {
        // Vertices v1..v6 as 0..5; any lattice with l1 bottom and l5 top works,
        // since path functions only read the tables and the top element.
        let tables = worked_example_tables();
        let cfg = ControlFlowGraph::new(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)], 0, 5)
            .unwrap();
        let sys = DfaSystem::new(
            cfg,
            Lattice::chain(5),
            tables.to_vec(),
            Query {
                vertex: 5,
                value: 4,
            },
        )
        .unwrap();
        // f2(f1(l5)) = l5, f3(f1(l5)) = l3.
        assert_eq!(sys.apply_path_function(&[0, 1]), Ok(4));
        assert_eq!(sys.apply_path_function(&[0, 2]), Ok(2));
    }

    #[test]
    fn system_validation() {
        let cfg = ControlFlowGraph::new(1, &[], 0, 0).unwrap();
        let l = Lattice::chain(2);
        let q = Query {
            vertex: 0,
            value: 1,
        };
        assert_eq!(
            DfaSystem::new(cfg.clone(), l.clone(), vec![], q),
            Err(DfaError::FunctionCount {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            DfaSystem::new(
                cfg.clone(),
                l.clone(),
                vec![TransferFunction::new(vec![0])],
                q
            ),
            Err(DfaError::FunctionArity {
                vertex: 0,
                m: 2,
                found: 1
            })
        );
        assert_eq!(
            DfaSystem::new(
                cfg.clone(),
                l.clone(),
                vec![TransferFunction::new(vec![0, 2])],
                q
            ),
            Err(DfaError::FunctionValue {
                vertex: 0,
                value: 2
            })
        );
        assert_eq!(
            DfaSystem::new(
                cfg,
                l,
                vec![TransferFunction::identity(2)],
                Query {
                    vertex: 0,
                    value: 7
                }
            ),
            Err(DfaError::QueryValue(7))
        );
    }
}
