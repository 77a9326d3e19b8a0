//! Ready-made and seeded random DFA systems.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ControlFlowGraph, DfaError, DfaSystem, Query, TransferFunction};
use crate::lattice::{poset_to_algebra, Elem, Lattice, Poset};

const MAX_ATTEMPTS: usize = 64;

/// Descriptor for a catalog system, buildable from its parameters alone.
#[derive(Debug, Clone, PartialEq)]
pub enum SystemSpec {
    /// Four-vertex diamond CFG over the diamond lattice where MFP is strictly below MOP.
    Diamond,
    /// Random lattice and CFG with monotone transfer functions.
    RandomMonotone {
        seed: u64,
        n: usize,
        m: usize,
        density: f64,
    },
    /// Random lattice and CFG with arbitrary (possibly non-monotone) transfer functions.
    Random {
        seed: u64,
        n: usize,
        m: usize,
        density: f64,
    },
    /// Gen/kill system over the powerset of a `bits`-element universe.
    RandomBitVector {
        seed: u64,
        n: usize,
        bits: u32,
        density: f64,
    },
}

impl SystemSpec {
    pub fn build(&self) -> Result<DfaSystem, DfaError> {
        match *self {
            SystemSpec::Diamond => Ok(diamond_example()),
            SystemSpec::RandomMonotone {
                seed,
                n,
                m,
                density,
            } => random_monotone_system(seed, n, m, density),
            SystemSpec::Random {
                seed,
                n,
                m,
                density,
            } => random_system(seed, n, m, density),
            SystemSpec::RandomBitVector {
                seed,
                n,
                bits,
                density,
            } => random_bitvector_system(seed, n, bits, density),
        }
    }
}

/// The diamond CFG `s→u, s→w, u→t, w→t` over the diamond lattice with
/// `f_s = id`, `f_u = a`, `f_w = b` and `f_t` sending everything but bottom to top.
/// The query asks whether the value at `t` is top.
pub fn diamond_example() -> DfaSystem {
    let lattice = Lattice::diamond();
    let cfg = ControlFlowGraph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3)
        .expect("diamond CFG is valid");
    let functions = vec![
        TransferFunction::identity(4),
        TransferFunction::constant(4, 1),
        TransferFunction::constant(4, 2),
        TransferFunction::new(vec![0, 3, 3, 3]),
    ];
    DfaSystem::new(
        cfg,
        lattice,
        functions,
        Query {
            vertex: 3,
            value: 3,
        },
    )
    .expect("diamond system is valid")
    .with_vertex_names(Some(
        ["s", "u", "w", "t"].iter().map(|s| s.to_string()).collect(),
    ))
}

/// The six function tables `f1..f6` of the worked product-graph example,
/// with `l1..l5` mapped to indices `0..4`.
pub fn worked_example_tables() -> [TransferFunction; 6] {
    [
        TransferFunction::new(vec![0, 3, 3, 2, 4]),
        TransferFunction::new(vec![0, 2, 2, 4, 4]),
        TransferFunction::new(vec![1, 2, 2, 1, 2]),
        TransferFunction::new(vec![0, 2, 4, 3, 4]),
        TransferFunction::new(vec![1, 1, 4, 2, 4]),
        TransferFunction::new(vec![0, 3, 4, 3, 4]),
    ]
}

/// Reaching-definitions style system: lattice is the powerset of a
/// `bits`-element universe ordered by `⊇` (meet is union), and vertex `i`
/// computes `gen[i] ∪ (x ∖ kill[i])`.
pub fn bitvector_system(
    bits: u32,
    gen: &[u32],
    kill: &[u32],
    cfg: ControlFlowGraph,
    query: Query,
) -> Result<DfaSystem, DfaError> {
    let n = cfg.vertex_count();
    if gen.len() != n || kill.len() != n {
        return Err(DfaError::ParameterMismatch(format!(
            "{n} vertices but {} gen and {} kill sets",
            gen.len(),
            kill.len()
        )));
    }
    if bits >= 16 {
        return Err(DfaError::ParameterMismatch(format!(
            "universe of {bits} bits is too large to tabulate"
        )));
    }
    let universe = (1u32 << bits) - 1;
    if let Some(bad) = gen.iter().chain(kill).find(|&&s| s & !universe != 0) {
        return Err(DfaError::ParameterMismatch(format!(
            "set {bad:#b} exceeds a universe of {bits} bits"
        )));
    }
    let lattice = Lattice::powerset_reversed(bits);
    let m = lattice.element_count();
    let functions = gen
        .iter()
        .zip(kill)
        .map(|(&g, &k)| {
            TransferFunction::new((0..m).map(|x| (g | (x as u32 & !k)) as Elem).collect())
        })
        .collect();
    DfaSystem::new(cfg, lattice, functions, query)
}

/// A random bounded lattice with `m` elements: random order on the middle
/// elements, index 0 below everything and `m - 1` above. Posets that fail to
/// be lattices are redrawn.
pub fn random_lattice<R: Rng>(rng: &mut R, m: usize) -> Result<Lattice, DfaError> {
    if m == 0 {
        return Err(DfaError::ParameterMismatch(
            "lattice size must be positive".into(),
        ));
    }
    for _ in 0..MAX_ATTEMPTS {
        let mut pairs = Vec::new();
        for i in 1..m.saturating_sub(1) {
            pairs.push((0, i));
            pairs.push((i, m - 1));
            for j in (i + 1)..(m - 1) {
                if rng.gen_bool(0.4) {
                    pairs.push((i, j));
                }
            }
        }
        if m > 1 {
            pairs.push((0, m - 1));
        }
        let poset = Poset::from_pairs(m, &pairs)?;
        if let Ok(lattice) = poset_to_algebra(&poset) {
            return Ok(lattice);
        }
    }
    Err(DfaError::GenerationFailed(MAX_ATTEMPTS))
}

/// Uniformly random table, monotone or not.
pub fn random_function<R: Rng>(rng: &mut R, m: usize) -> TransferFunction {
    TransferFunction::new((0..m).map(|_| rng.gen_range(0..m)).collect())
}

/// Random monotone function built along a linear extension: each element's
/// image is drawn uniformly from the up-set of the join of the images of
/// the elements below it.
pub fn random_monotone_function<R: Rng>(rng: &mut R, lattice: &Lattice) -> TransferFunction {
    let m = lattice.element_count();
    let mut order: Vec<Elem> = (0..m).collect();
    order.sort_by_key(|&x| (0..m).filter(|&y| lattice.leq(y, x)).count());
    let mut table: Vec<Option<Elem>> = vec![None; m];
    for &x in &order {
        let floor = (0..m)
            .filter(|&y| y != x && lattice.leq(y, x))
            .map(|y| table[y].expect("lower elements assigned first"))
            .fold(lattice.bottom(), |acc, v| lattice.join(acc, v));
        let candidates: Vec<Elem> = (0..m).filter(|&z| lattice.leq(floor, z)).collect();
        table[x] = Some(candidates[rng.gen_range(0..candidates.len())]);
    }
    TransferFunction::new(table.into_iter().map(Option::unwrap).collect())
}

/// Random CFG on `n` vertices with entry 0 and exit `n - 1`.
///
/// A random spanning tree from the entry makes everything reachable; every
/// non-exit vertex is then given at least one successor, and further edges
/// (self-loops included) are added with probability `density`.
#[allow(clippy::needless_range_loop)]
pub fn random_cfg<R: Rng>(
    rng: &mut R,
    n: usize,
    density: f64,
) -> Result<ControlFlowGraph, DfaError> {
    if n == 0 {
        return Err(DfaError::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(DfaError::ParameterMismatch(format!(
            "edge density {density} not in [0, 1]"
        )));
    }
    if n == 1 {
        return ControlFlowGraph::new(1, &[], 0, 0);
    }
    let exit = n - 1;
    let mut adj = vec![vec![false; n]; n];
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        adj[parent][v] = true;
    }
    for u in 0..exit {
        if !adj[u].iter().any(|&b| b) {
            let v = rng.gen_range(1..n);
            adj[u][v] = true;
        }
        for v in 1..n {
            if !adj[u][v] && rng.gen_bool(density) {
                adj[u][v] = true;
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v])
        .collect();
    ControlFlowGraph::new(n, &edges, 0, exit)
}

fn random_query<R: Rng>(rng: &mut R, cfg: &ControlFlowGraph, m: usize) -> Query {
    Query {
        vertex: rng.gen_range(0..cfg.vertex_count()),
        value: rng.gen_range(0..m),
    }
}

/// Deterministic in `seed`: random lattice of size `m`, random CFG on `n`
/// vertices, monotone transfer functions.
pub fn random_monotone_system(
    seed: u64,
    n: usize,
    m: usize,
    density: f64,
) -> Result<DfaSystem, DfaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lattice = random_lattice(&mut rng, m)?;
    let cfg = random_cfg(&mut rng, n, density)?;
    let functions = (0..n)
        .map(|_| random_monotone_function(&mut rng, &lattice))
        .collect();
    let query = random_query(&mut rng, &cfg, m);
    DfaSystem::new(cfg, lattice, functions, query)
}

/// Like [`random_monotone_system`] but with uniformly random tables.
pub fn random_system(seed: u64, n: usize, m: usize, density: f64) -> Result<DfaSystem, DfaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lattice = random_lattice(&mut rng, m)?;
    let cfg = random_cfg(&mut rng, n, density)?;
    let functions = (0..n).map(|_| random_function(&mut rng, m)).collect();
    let query = random_query(&mut rng, &cfg, m);
    DfaSystem::new(cfg, lattice, functions, query)
}

/// Random gen/kill system over a `bits`-element universe.
pub fn random_bitvector_system(
    seed: u64,
    n: usize,
    bits: u32,
    density: f64,
) -> Result<DfaSystem, DfaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = random_cfg(&mut rng, n, density)?;
    let universe = (1u32 << bits) - 1;
    let gen: Vec<u32> = (0..n).map(|_| rng.gen::<u32>() & universe).collect();
    let kill: Vec<u32> = (0..n).map(|_| rng.gen::<u32>() & universe).collect();
    let query = random_query(&mut rng, &cfg, 1 << bits);
    bitvector_system(bits, &gen, &kill, cfg, query)
}
