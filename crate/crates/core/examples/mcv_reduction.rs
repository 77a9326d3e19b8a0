// Evaluate a monotone circuit by solving a data-flow problem.

use std::collections::BTreeMap;
use std::error::Error;

use latflow::reductions::{
    circuit_level, eval_circuit, reduce_mcv_to_mfp, unpair, validate_circuit, Gate, RawCircuit,
};
use latflow::solvers::solve_mfp;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // OR(AND(x0, x1), AND(x2, x3)) with x = 1, 0, 1, 1.
    let raw = RawCircuit {
        vertices: 7,
        edges: vec![(0, 4), (1, 4), (2, 5), (3, 5), (4, 6), (5, 6)],
        gates: BTreeMap::from([(4, Gate::And), (5, Gate::And), (6, Gate::Or)]),
        inputs: BTreeMap::from([(0, 1), (1, 0), (2, 1), (3, 1)]),
        output: 6,
    };
    let circuit = validate_circuit(&raw)?;
    let values = eval_circuit(&circuit);

    let red = reduce_mcv_to_mfp(&circuit)?;
    let sys = &red.system;
    println!(
        "reduced system: {} vertices, {} edges",
        sys.vertex_count(),
        sys.cfg().edge_count()
    );
    let mfp = solve_mfp(sys)?;
    for (v, &value) in values.iter().enumerate() {
        let (one, nu) = unpair(mfp.solution[red.upper[v]]);
        println!(
            "v{v}: level {}, circuit {}, fixed point ({}, {})",
            circuit_level(&circuit, v),
            value as u8,
            one as u8,
            nu as u8
        );
        assert!(one);
        assert_eq!(nu, value);
    }
    assert_eq!(mfp.decision, circuit.output_value());
    println!("output = {}", circuit.output_value() as u8);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
