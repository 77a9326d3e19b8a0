// The classic gap: on a non-distributive framework the fixed point loses
// precision at a join point that every individual path keeps.

use std::error::Error;

use latflow::dfa::diamond_example;
use latflow::solvers::{solve_mfp, solve_mop};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sys = diamond_example();
    let lattice = sys.lattice();
    let mfp = solve_mfp(&sys)?;
    let mop = solve_mop(&sys);

    println!("vertex mfp   mop");
    for v in 0..sys.vertex_count() {
        println!(
            "{:<6} {:<5} {}",
            sys.vertex_name(v),
            lattice.name(mfp.solution[v]),
            lattice.name(mop.solution[v])
        );
    }
    // Each path s,u,t and s,w,t yields top; merging first yields a ∧ b = bot.
    for path in [[0, 1, 3], [0, 2, 3]] {
        let value = sys.apply_path_function(&path)?;
        println!("path {path:?} -> {}", lattice.name(value));
        assert_eq!(value, lattice.top());
    }
    assert!(lattice.slice_leq(&mfp.solution, &mop.solution));
    assert_ne!(mfp.solution[3], mop.solution[3]);
    assert!(!sys.is_distributive());
    println!(
        "MFP decision {}, MOP decision {}",
        mfp.decision, mop.decision
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
