use std::collections::{BTreeSet, VecDeque};

use crate::dfa::{DfaSystem, Vertex};
use crate::lattice::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    /// Value about to enter a vertex's transfer function.
    In = 0,
    /// Value produced by a vertex's transfer function.
    Out = 1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertex {
    pub polarity: Polarity,
    pub vertex: Vertex,
    pub value: Elem,
}

impl ProductVertex {
    pub fn new(polarity: Polarity, vertex: Vertex, value: Elem) -> Self {
        ProductVertex {
            polarity,
            vertex,
            value,
        }
    }
}

/// Explicit graph over `2·n·m` triples. Function edges
/// `(In, i, j) → (Out, i, f_i(j))` and propagation edges
/// `(Out, i, k) → (In, j, k)` for every CFG edge `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    n: usize,
    m: usize,
    source: ProductVertex,
    succs: Vec<Vec<usize>>,
}

/// Builds the product graph of a system. Monotonicity is not required.
pub fn build_product_graph(sys: &DfaSystem) -> ProductGraph {
    let n = sys.vertex_count();
    let m = sys.lattice().element_count();
    let mut pg = ProductGraph {
        n,
        m,
        source: ProductVertex::new(Polarity::In, sys.cfg().entry(), sys.lattice().top()),
        succs: vec![Vec::new(); 2 * n * m],
    };
    for i in 0..n {
        let f = sys.function(i);
        for j in 0..m {
            let from = pg.id(ProductVertex::new(Polarity::In, i, j));
            let to = pg.id(ProductVertex::new(Polarity::Out, i, f.apply(j)));
            pg.succs[from].push(to);
        }
    }
    for (i, j) in sys.cfg().edges() {
        for k in 0..m {
            let from = pg.id(ProductVertex::new(Polarity::Out, i, k));
            let to = pg.id(ProductVertex::new(Polarity::In, j, k));
            pg.succs[from].push(to);
        }
    }
    pg
}

impl ProductGraph {
    /// A product graph with arbitrary edges, for graph meet reachability
    /// instances that do not come from a DFA system.
    pub fn from_edges(
        n: usize,
        m: usize,
        source: ProductVertex,
        edges: &[(ProductVertex, ProductVertex)],
    ) -> Result<Self, String> {
        if n == 0 || m == 0 {
            return Err("product graph needs at least one vertex and one element".into());
        }
        let mut pg = ProductGraph {
            n,
            m,
            source,
            succs: vec![Vec::new(); 2 * n * m],
        };
        let check = |v: ProductVertex| {
            if v.vertex < n && v.value < m {
                Ok(())
            } else {
                Err(format!("product vertex {v:?} out of range"))
            }
        };
        check(source)?;
        for &(a, b) in edges {
            check(a)?;
            check(b)?;
            let (from, to) = (pg.id(a), pg.id(b));
            if !pg.succs[from].contains(&to) {
                pg.succs[from].push(to);
            }
        }
        Ok(pg)
    }

    #[inline]
    fn id(&self, v: ProductVertex) -> usize {
        (v.polarity as usize * self.n + v.vertex) * self.m + v.value
    }

    fn vertex(&self, id: usize) -> ProductVertex {
        let value = id % self.m;
        let rest = id / self.m;
        let polarity = if rest / self.n == 0 {
            Polarity::In
        } else {
            Polarity::Out
        };
        ProductVertex::new(polarity, rest % self.n, value)
    }

    pub fn cfg_vertex_count(&self) -> usize {
        self.n
    }

    pub fn lattice_size(&self) -> usize {
        self.m
    }

    pub fn source(&self) -> ProductVertex {
        self.source
    }

    pub fn vertex_count(&self) -> usize {
        self.succs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succs.iter().map(Vec::len).sum()
    }

    /// All vertices in id order: polarity, then CFG vertex, then element.
    pub fn vertices(&self) -> impl Iterator<Item = ProductVertex> + '_ {
        (0..self.succs.len()).map(|id| self.vertex(id))
    }

    pub fn edges(&self) -> impl Iterator<Item = (ProductVertex, ProductVertex)> + '_ {
        self.succs.iter().enumerate().flat_map(move |(from, out)| {
            out.iter()
                .map(move |&to| (self.vertex(from), self.vertex(to)))
        })
    }

    pub fn has_edge(&self, from: ProductVertex, to: ProductVertex) -> bool {
        self.succs[self.id(from)].contains(&self.id(to))
    }

    pub fn successors(&self, v: ProductVertex) -> impl Iterator<Item = ProductVertex> + '_ {
        self.succs[self.id(v)].iter().map(|&id| self.vertex(id))
    }

    /// Breadth-first search from the source. Returns the reachability flags
    /// indexed like [`ProductGraph::is_reachable`] and the number of visited vertices.
    pub fn search(&self) -> Reachability<'_> {
        let mut seen = vec![false; self.succs.len()];
        let start = self.id(self.source);
        seen[start] = true;
        let mut visited = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            visited += 1;
            for &w in &self.succs[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Reachability {
            graph: self,
            seen,
            visited,
        }
    }

    /// Elements `j` such that `(Out, target, j)` is reachable from the source.
    pub fn reachable_values(&self, target: Vertex) -> BTreeSet<Elem> {
        self.search().values_at(target)
    }
}

/// Result of one search over a product graph.
#[derive(Debug, Clone)]
pub struct Reachability<'g> {
    graph: &'g ProductGraph,
    seen: Vec<bool>,
    visited: usize,
}

impl Reachability<'_> {
    pub fn is_reachable(&self, v: ProductVertex) -> bool {
        self.seen[self.graph.id(v)]
    }

    pub fn visited(&self) -> usize {
        self.visited
    }

    pub fn values_at(&self, target: Vertex) -> BTreeSet<Elem> {
        (0..self.graph.m)
            .filter(|&j| self.is_reachable(ProductVertex::new(Polarity::Out, target, j)))
            .collect()
    }
}
