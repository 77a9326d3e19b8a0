// Reachability as a meet-over-paths question over the two-element chain.

use std::error::Error;

use latflow::reductions::{reduce_gr_to_mop, Digraph};
use latflow::solvers::solve_mop;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let edges = vec![(0, 1), (1, 2), (2, 0), (3, 4)];
    for target in 0..5 {
        let g = Digraph {
            vertices: 5,
            edges: edges.clone(),
            source: 0,
            target,
        };
        let red = reduce_gr_to_mop(&g)?;
        let r = solve_mop(&red.system);
        println!(
            "0 ->* {target}: {} (CFG of {} vertices)",
            r.decision,
            red.system.vertex_count()
        );
        assert_eq!(r.decision, target <= 2);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
