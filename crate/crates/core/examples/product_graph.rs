// The product graph behind the exact MOP solver, built from six tabulated
// functions on a five-element chain.

use std::error::Error;

use latflow::cli::{emit_dot, DotMode};
use latflow::dfa::{worked_example_tables, ControlFlowGraph, DfaSystem, Query};
use latflow::lattice::Lattice;
use latflow::solvers::{build_product_graph, gmr_meet, Polarity, ProductVertex};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = ControlFlowGraph::new(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)], 0, 5)?;
    let lattice = Lattice::chain(5);
    let sys = DfaSystem::new(
        cfg,
        lattice.clone(),
        worked_example_tables().to_vec(),
        Query {
            vertex: 5,
            value: 4,
        },
    )?;
    let pg = build_product_graph(&sys);
    println!(
        "{} product vertices, {} edges",
        pg.vertex_count(),
        pg.edge_count()
    );
    assert!(pg.has_edge(
        ProductVertex::new(Polarity::In, 0, 1),
        ProductVertex::new(Polarity::Out, 0, 3)
    ));
    for v in 0..sys.vertex_count() {
        let values = pg.reachable_values(v);
        println!(
            "f{}: reachable {:?}, meet {}",
            v + 1,
            values,
            gmr_meet(&pg, v, &lattice)
        );
    }
    let dot = emit_dot(&sys, DotMode::Product);
    assert!(dot.contains("v0_1_2 -> v1_1_4;"));
    println!("{} lines of DOT", dot.lines().count());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
