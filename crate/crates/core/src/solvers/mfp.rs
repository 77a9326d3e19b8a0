use std::collections::VecDeque;

use super::{SolveError, SolveReport};
use crate::dfa::DfaSystem;

/// Maximum fixed point of the simultaneous equations, by descending
/// iteration from top with a worklist seeded in reverse postorder.
///
/// Rejects systems with a non-monotone transfer function.
pub fn solve_mfp(sys: &DfaSystem) -> Result<SolveReport, SolveError> {
    if let Some(v) = sys.first_non_monotone() {
        return Err(SolveError::NonMonotoneFunction(v));
    }
    let cfg = sys.cfg();
    let lattice = sys.lattice();
    let n = sys.vertex_count();

    // Each component can strictly drop at most `height` times.
    let bound = n * (n * lattice.height() + 1);

    let mut value = vec![lattice.top(); n];
    let mut queued = vec![true; n];
    let mut worklist: VecDeque<_> = cfg.reverse_postorder().into();
    let mut evaluations = 0usize;

    while let Some(v) = worklist.pop_front() {
        queued[v] = false;
        evaluations += 1;
        if evaluations > bound {
            return Err(SolveError::IterationBoundExceeded(bound));
        }
        let new = sys.function(v).apply(sys.incoming(v, &value));
        if new != value[v] {
            debug_assert!(lattice.leq(new, value[v]), "iteration must descend");
            value[v] = new;
            for &s in cfg.succs(v) {
                if !queued[s] {
                    queued[s] = true;
                    worklist.push_back(s);
                }
            }
        }
    }

    let q = sys.query();
    Ok(SolveReport {
        decision: value[q.vertex] == q.value,
        solution: value,
        work: evaluations,
    })
}
