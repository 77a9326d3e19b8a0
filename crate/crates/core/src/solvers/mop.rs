use super::product::{build_product_graph, Polarity, ProductGraph, ProductVertex, Reachability};
use super::SolveReport;
use crate::dfa::{DfaSystem, Vertex};
use crate::lattice::{Elem, Lattice};

fn meet_reachable(reach: &Reachability<'_>, target: Vertex, lattice: &Lattice) -> Elem {
    let mut temp = lattice.top();
    for j in 0..lattice.element_count() {
        if reach.is_reachable(ProductVertex::new(Polarity::Out, target, j)) {
            temp = lattice.meet(temp, j);
        }
    }
    temp
}

/// Meet of every element reachable at `(Out, target, ·)`; top if none is.
pub fn gmr_meet(pg: &ProductGraph, target: Vertex, lattice: &Lattice) -> Elem {
    meet_reachable(&pg.search(), target, lattice)
}

/// Graph meet reachability: does the meet of the reachable elements at
/// `target` equal `expected`?
pub fn gmr_decide(pg: &ProductGraph, target: Vertex, expected: Elem, lattice: &Lattice) -> bool {
    gmr_meet(pg, target, lattice) == expected
}

/// Exact meet-over-all-paths solution via product-graph reachability.
/// Works for non-monotone systems too.
pub fn solve_mop(sys: &DfaSystem) -> SolveReport {
    let pg = build_product_graph(sys);
    let reach = pg.search();
    let lattice = sys.lattice();
    let solution: Vec<Elem> = (0..sys.vertex_count())
        .map(|v| meet_reachable(&reach, v, lattice))
        .collect();
    let q = sys.query();
    SolveReport {
        decision: solution[q.vertex] == q.value,
        solution,
        work: reach.visited(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::{diamond_example, ControlFlowGraph, Query, TransferFunction};

    fn single(f: TransferFunction, lattice: Lattice, expected: Elem) -> DfaSystem {
        let cfg = ControlFlowGraph::new(1, &[], 0, 0).unwrap();
        DfaSystem::new(
            cfg,
            lattice,
            vec![f],
            Query {
                vertex: 0,
                value: expected,
            },
        )
        .unwrap()
    }

    #[test]
    fn empty_reachable_set_meets_to_top() {
        let d = Lattice::diamond();
        // No edges at all: nothing at polarity Out is reachable.
        let pg =
            ProductGraph::from_edges(1, 4, ProductVertex::new(Polarity::In, 0, 3), &[]).unwrap();
        assert!(pg.reachable_values(0).is_empty());
        assert!(gmr_decide(&pg, 0, d.top(), &d));
        for other in 0..3 {
            assert!(!gmr_decide(&pg, 0, other, &d));
        }
    }

    #[test]
    fn incomparable_pair_meets_to_bottom() {
        let d = Lattice::diamond();
        let src = ProductVertex::new(Polarity::In, 0, 3);
        let pg = ProductGraph::from_edges(
            1,
            4,
            src,
            &[
                (src, ProductVertex::new(Polarity::Out, 0, 1)),
                (src, ProductVertex::new(Polarity::Out, 0, 2)),
            ],
        )
        .unwrap();
        assert!(gmr_decide(&pg, 0, d.bottom(), &d));
    }

    #[test]
    fn singleton_and_pair_reachable_sets() {
        let d = Lattice::diamond();
        let sys = single(TransferFunction::constant(4, 2), d.clone(), 2);
        let pg = build_product_graph(&sys);
        assert!(gmr_decide(&pg, 0, 2, &d));
        assert!(!gmr_decide(&pg, 0, 0, &d));

        let diamond = diamond_example();
        let pg = build_product_graph(&diamond);
        // Values at the join point's predecessors are a and b; their meet is bottom.
        let mut reach = pg.reachable_values(1);
        reach.extend(pg.reachable_values(2));
        assert_eq!(d.meet_of_set(reach).unwrap(), d.bottom());
    }

    #[test]
    fn single_vertex_mop_is_entry_function_of_top() {
        let sys = single(TransferFunction::new(vec![1, 0]), Lattice::chain(2), 0);
        let r = solve_mop(&sys);
        assert_eq!(r.solution, vec![0]);
        assert!(r.decision);
    }

    #[test]
    fn diamond_mop_is_top_at_join_point() {
        let r = solve_mop(&diamond_example());
        assert_eq!(r.solution, vec![3, 1, 2, 3]);
        assert!(r.decision);
    }
}
