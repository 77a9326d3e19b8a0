//! Brute-force reference solvers for small instances.
//!
//! Nothing here calls into the worklist solver, the product graph or
//! [`DfaSystem::transfer_step`]; the equations and path functions are
//! re-evaluated from the raw tables.

use super::SolveError;
use crate::dfa::{DfaSystem, Vertex};
use crate::lattice::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest `mⁿ` the MFP oracle will enumerate.
    pub tuple_cap: u128,
    /// Largest `n·m` (maximum path length in vertices) the MOP oracle accepts.
    pub path_length_cap: usize,
    /// Number of path prefixes the MOP oracle may visit before giving up.
    pub path_budget: u64,
    /// Enumerate every bounded path with no pruning at all.
    pub strict: bool,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            tuple_cap: 1_000_000,
            path_length_cap: 64,
            path_budget: 50_000_000,
            strict: false,
        }
    }
}

impl OracleLimits {
    pub fn strict() -> Self {
        OracleLimits {
            strict: true,
            ..Self::default()
        }
    }
}

/// The simultaneous equations evaluated directly from predecessor lists.
fn equations(sys: &DfaSystem, x: &[Elem]) -> Vec<Elem> {
    let lattice = sys.lattice();
    let cfg = sys.cfg();
    (0..x.len())
        .map(|i| {
            let mut input = lattice.top();
            for &p in cfg.preds(i) {
                input = lattice.meet(input, x[p]);
            }
            sys.function(i).table()[input]
        })
        .collect()
}

/// Every fixed point of the equations, found by enumerating all of `Lⁿ`.
pub fn fixed_points(sys: &DfaSystem, limits: &OracleLimits) -> Result<Vec<Vec<Elem>>, SolveError> {
    let n = sys.vertex_count();
    let m = sys.lattice().element_count();
    let size = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > limits.tuple_cap {
        return Err(SolveError::InstanceTooLarge {
            size,
            cap: limits.tuple_cap,
        });
    }
    let mut found = Vec::new();
    let mut x = vec![0; n];
    loop {
        if equations(sys, &x) == x {
            found.push(x.clone());
        }
        // Odometer increment.
        let mut k = 0;
        loop {
            if k == n {
                return Ok(found);
            }
            x[k] += 1;
            if x[k] < m {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// The maximum fixed point, by exhaustive search.
pub fn mfp_oracle(sys: &DfaSystem, limits: &OracleLimits) -> Result<Vec<Elem>, SolveError> {
    let points = fixed_points(sys, limits)?;
    if points.is_empty() {
        return Err(SolveError::NoFixedPoint);
    }
    let lattice = sys.lattice();
    let below = |a: &[Elem], b: &[Elem]| a.iter().zip(b).all(|(&p, &q)| lattice.leq(p, q));
    points
        .iter()
        .find(|cand| points.iter().all(|other| below(other, cand)))
        .cloned()
        .ok_or(SolveError::NoMaximum)
}

/// Meet over all paths at every vertex, by explicit path enumeration.
///
/// Paths from the entry are extended depth first up to `n·m` vertices. A
/// path that revisits a (vertex, value) pair has a cycle that can be cut out
/// without changing its value, so the bound loses nothing. Outside strict
/// mode such a revisiting path is recorded but not extended further.
pub fn mop_oracle_all(sys: &DfaSystem, limits: &OracleLimits) -> Result<Vec<Elem>, SolveError> {
    let n = sys.vertex_count();
    let m = sys.lattice().element_count();
    let max_len = n * m;
    if max_len > limits.path_length_cap {
        return Err(SolveError::InstanceTooLarge {
            size: max_len as u128,
            cap: limits.path_length_cap as u128,
        });
    }
    let lattice = sys.lattice();
    let cfg = sys.cfg();
    let apply = |v: Vertex, x: Elem| sys.function(v).table()[x];

    let mut acc = vec![lattice.top(); n];
    let mut on_path = vec![false; n * m];
    let mut visited: u64 = 0;

    let entry = cfg.entry();
    let start = apply(entry, lattice.top());
    acc[entry] = lattice.meet(acc[entry], start);
    on_path[entry * m + start] = true;
    // Frame: (vertex, value at vertex, next successor slot).
    let mut stack: Vec<(Vertex, Elem, usize)> = vec![(entry, start, 0)];

    loop {
        let depth = stack.len();
        let Some(frame) = stack.last_mut() else {
            break;
        };
        let (v, value) = (frame.0, frame.1);
        let succs = cfg.succs(v);
        if frame.2 >= succs.len() || depth >= max_len {
            stack.pop();
            on_path[v * m + value] = false;
            continue;
        }
        let w = succs[frame.2];
        frame.2 += 1;
        visited += 1;
        if visited > limits.path_budget {
            return Err(SolveError::InstanceTooLarge {
                size: visited as u128,
                cap: limits.path_budget as u128,
            });
        }
        let out = apply(w, value);
        acc[w] = lattice.meet(acc[w], out);
        if limits.strict {
            stack.push((w, out, 0));
        } else if !on_path[w * m + out] {
            on_path[w * m + out] = true;
            stack.push((w, out, 0));
        }
    }
    Ok(acc)
}

/// Meet over all paths at one vertex.
pub fn mop_oracle(
    sys: &DfaSystem,
    vertex: Vertex,
    limits: &OracleLimits,
) -> Result<Elem, SolveError> {
    let n = sys.vertex_count();
    if vertex >= n {
        return Err(SolveError::VertexOutOfRange { vertex, n });
    }
    Ok(mop_oracle_all(sys, limits)?[vertex])
}
