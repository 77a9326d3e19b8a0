// Cross-check both solvers against exhaustive search on seeded systems.

use std::error::Error;

use latflow::dfa::{random_monotone_system, random_system};
use latflow::solvers::oracle::{fixed_points, mfp_oracle, mop_oracle_all, OracleLimits};
use latflow::solvers::{solve_mfp, solve_mop};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let limits = OracleLimits::default();
    for seed in 0..20 {
        let sys = random_monotone_system(seed, 4, 4, 0.3)?;
        let fast = solve_mfp(&sys)?.solution;
        assert_eq!(fast, mfp_oracle(&sys, &limits)?);
        let count = fixed_points(&sys, &limits)?.len();
        if seed < 5 {
            println!("seed {seed}: mfp {fast:?} among {count} fixed points");
        }
    }
    let mut non_monotone = 0;
    for seed in 0..20 {
        let sys = random_system(seed, 4, 3, 0.4)?;
        non_monotone += !sys.is_monotone() as usize;
        assert_eq!(solve_mop(&sys).solution, mop_oracle_all(&sys, &limits)?);
    }
    println!("MOP agrees on 20 systems, {non_monotone} of them non-monotone");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
