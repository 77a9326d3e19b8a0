// A reaching-definitions style gen/kill problem. Gen/kill functions
// distribute over union, so the fixed point equals the meet over paths.

use std::error::Error;

use latflow::dfa::{bitvector_system, ControlFlowGraph, Query};
use latflow::solvers::{solve_mfp, solve_mop};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // entry -> header <-> body, header -> exit; definitions d0, d1, d2 as bits.
    let cfg = ControlFlowGraph::new(4, &[(0, 1), (1, 2), (2, 1), (1, 3)], 0, 3)?;
    let gen = [0b001, 0b000, 0b010, 0b100];
    let kill = [0b000, 0b000, 0b001, 0b000];
    let sys = bitvector_system(
        3,
        &gen,
        &kill,
        cfg,
        Query {
            vertex: 3,
            value: 0b111,
        },
    )?;
    assert!(sys.is_distributive());

    let mfp = solve_mfp(&sys)?;
    let mop = solve_mop(&sys);
    for v in 0..sys.vertex_count() {
        println!("{}: reaching {:03b}", sys.vertex_name(v), mfp.solution[v]);
    }
    assert_eq!(mfp.solution, mop.solution);
    assert!(mfp.decision);
    println!(
        "MFP took {} evaluations, MOP visited {} product vertices",
        mfp.work, mop.work
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
