//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::VecDeque;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use latflow::dfa::{
    diamond_example, random_bitvector_system, random_monotone_system, random_system,
    worked_example_tables, ControlFlowGraph, DfaSystem, Query,
};
use latflow::lattice::{
    cover_to_poset, poset_to_algebra, CoverRelation, Lattice, LatticeError, Poset,
};
use latflow::reductions::{
    eval_circuit, gadget_tables, pair, random_circuit, random_digraph, reduce_gr_to_mop,
    reduce_mcv_to_mfp, validate_circuit, Digraph,
};
use latflow::solvers::oracle::{fixed_points, mfp_oracle, mop_oracle_all, OracleLimits};
use latflow::solvers::{
    build_product_graph, gmr_decide, solve_mfp, solve_mop, Polarity, ProductGraph, ProductVertex,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_shape(rng: &mut ChaCha8Rng) -> (usize, usize, f64) {
    (
        rng.gen_range(1..=5),
        rng.gen_range(1..=4),
        rng.gen_range(0.0..0.6),
    )
}

fn monotone_corpus() -> Vec<DfaSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x006d_6670);
    (0..200)
        .map(|k| {
            let (n, m, d) = small_shape(&mut rng);
            random_monotone_system(1000 + k, n, m, d).expect("generator succeeds")
        })
        .collect()
}

fn criterion_1(corpus: &[DfaSystem]) -> Outcome {
    let limits = OracleLimits::default();
    for (k, sys) in corpus.iter().enumerate() {
        let got = solve_mfp(sys).map_err(|e| format!("system {k}: {e}"))?;
        let want = mfp_oracle(sys, &limits).map_err(|e| format!("system {k}: oracle {e}"))?;
        ensure(got.solution == want, || {
            format!("system {k}: solver {:?} oracle {:?}", got.solution, want)
        })?;
        let step = sys
            .transfer_step(&got.solution)
            .map_err(|e| e.to_string())?;
        ensure(step == got.solution, || {
            format!("system {k}: not a fixed point")
        })?;
    }
    Ok(format!(
        "{} monotone systems agree with exhaustive search",
        corpus.len()
    ))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f70);
    let mut strict_runs = 0;
    let mut non_monotone = 0;
    let strict = OracleLimits {
        path_budget: 2_000_000,
        ..OracleLimits::strict()
    };
    for k in 0..200u64 {
        let (n, m, d) = small_shape(&mut rng);
        let sys = random_system(5000 + k, n, m, d).map_err(|e| e.to_string())?;
        if !sys.is_monotone() {
            non_monotone += 1;
        }
        let got = solve_mop(&sys).solution;
        let want = match mop_oracle_all(&sys, &strict) {
            Ok(w) => {
                strict_runs += 1;
                w
            }
            Err(_) => mop_oracle_all(&sys, &OracleLimits::default())
                .map_err(|e| format!("system {k}: oracle {e}"))?,
        };
        ensure(got == want, || {
            format!("system {k}: product graph {got:?} oracle {want:?}")
        })?;
    }
    ensure(non_monotone > 0, || {
        "corpus has no non-monotone system".into()
    })?;
    Ok(format!(
        "200 systems ({non_monotone} non-monotone) agree at every vertex; {strict_runs} checked by unpruned enumeration"
    ))
}

fn criterion_3(corpus: &[DfaSystem]) -> Outcome {
    for (k, sys) in corpus.iter().enumerate() {
        let mfp = solve_mfp(sys).map_err(|e| e.to_string())?.solution;
        let mop = solve_mop(sys).solution;
        ensure(sys.lattice().slice_leq(&mfp, &mop), || {
            format!("system {k}: MFP {mfp:?} not below MOP {mop:?}")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6276);
    for k in 0..100u64 {
        let n = rng.gen_range(1..=6);
        let bits = rng.gen_range(1..=3);
        let d = rng.gen_range(0.0..0.6);
        let sys = random_bitvector_system(9000 + k, n, bits, d).map_err(|e| e.to_string())?;
        ensure(sys.is_distributive(), || {
            format!("bit-vector {k} not distributive")
        })?;
        let mfp = solve_mfp(&sys).map_err(|e| e.to_string())?.solution;
        let mop = solve_mop(&sys).solution;
        ensure(mfp == mop, || {
            format!("bit-vector {k}: MFP {mfp:?} MOP {mop:?}")
        })?;
    }
    let d = diamond_example();
    let exit = d.cfg().exit();
    let mfp = solve_mfp(&d).map_err(|e| e.to_string())?.solution[exit];
    let mop = solve_mop(&d).solution[exit];
    let lattice = d.lattice();
    ensure(lattice.leq(mfp, mop) && mfp != mop, || {
        format!("diamond: MFP {mfp} MOP {mop} at exit")
    })?;
    Ok(format!(
        "MFP below MOP on {} systems; 100 bit-vector systems coincide; diamond exit MFP {} < MOP {}",
        corpus.len(),
        lattice.name(mfp),
        lattice.name(mop)
    ))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6376);
    let limits = OracleLimits::default();
    let mut oracle_sized = 0;
    let mut true_outputs = 0;
    for k in 0..500 {
        let raw = loop {
            let (inputs, gates) = if k % 4 == 0 {
                (rng.gen_range(1..=3), rng.gen_range(0..=3))
            } else {
                (rng.gen_range(1..=8), rng.gen_range(0..=26))
            };
            let raw = random_circuit(&mut rng, inputs, gates);
            if raw.gates.len() <= 30 {
                break raw;
            }
        };
        let c = validate_circuit(&raw).map_err(|e| format!("circuit {k}: {e}"))?;
        let nu = eval_circuit(&c);
        let red = reduce_mcv_to_mfp(&c).map_err(|e| format!("circuit {k}: {e}"))?;
        let sys = &red.system;
        ensure(sys.is_monotone(), || {
            format!("circuit {k}: non-monotone reduction")
        })?;
        let r = solve_mfp(sys).map_err(|e| format!("circuit {k}: {e}"))?;
        let out = nu[c.output()];
        true_outputs += out as usize;
        ensure(r.decision == out, || {
            format!(
                "circuit {k}: circuit says {out}, MFP decision {}",
                r.decision
            )
        })?;
        for (i, &v) in nu.iter().enumerate() {
            ensure(r.solution[red.upper[i]] == pair(true, v), || {
                format!("circuit {k}: upper copy of vertex {i}")
            })?;
        }
        if let Ok(points) = fixed_points(sys, &limits) {
            oracle_sized += 1;
            ensure(points.len() == 1 && points[0] == r.solution, || {
                format!("circuit {k}: {} fixed points", points.len())
            })?;
        }
    }
    ensure(oracle_sized > 0, || "no oracle-sized reduction".into())?;
    Ok(format!(
        "500 circuits ({true_outputs} evaluate to 1) decide identically with per-vertex values; unique fixed point on {oracle_sized} oracle-sized reductions"
    ))
}

fn bfs(g: &Digraph) -> bool {
    let mut seen = vec![false; g.vertices];
    seen[g.source] = true;
    let mut queue = VecDeque::from([g.source]);
    while let Some(u) = queue.pop_front() {
        for &(a, b) in &g.edges {
            if a == u && !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    seen[g.target]
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6772);
    let mut reachable = 0;
    for k in 0..500 {
        let n = rng.gen_range(1..=12);
        let d = rng.gen_range(0.0..0.35);
        let g = random_digraph(&mut rng, n, d);
        let want = bfs(&g);
        reachable += want as usize;
        let red = reduce_gr_to_mop(&g).map_err(|e| format!("graph {k}: {e}"))?;
        let got = solve_mop(&red.system).decision;
        ensure(got == want, || {
            format!("graph {k}: BFS {want}, MOP decision {got}")
        })?;
    }
    Ok(format!("500 digraphs agree ({reachable} reachable)"))
}

/// The worked-example tables, 1-based: `TABLES[i][j-1] = k` means `f_{i+1}(l_j) = l_k`.
const TABLES: [[usize; 5]; 6] = [
    [1, 4, 4, 3, 5],
    [1, 3, 3, 5, 5],
    [2, 3, 3, 2, 3],
    [1, 3, 5, 4, 5],
    [2, 2, 5, 3, 5],
    [1, 4, 5, 4, 5],
];

fn criterion_6() -> Outcome {
    let cfg = ControlFlowGraph::new(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)], 0, 5)
        .map_err(|e| e.to_string())?;
    let sys = DfaSystem::new(
        cfg,
        Lattice::chain(5),
        worked_example_tables().to_vec(),
        Query {
            vertex: 5,
            value: 4,
        },
    )
    .map_err(|e| e.to_string())?;
    let pg = build_product_graph(&sys);
    let function_edges: Vec<_> = pg
        .edges()
        .filter(|(a, b)| a.polarity == Polarity::In && b.polarity == Polarity::Out)
        .collect();
    ensure(function_edges.len() == 30, || {
        format!("{} function edges", function_edges.len())
    })?;
    for (i, row) in TABLES.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            let from = ProductVertex::new(Polarity::In, i, j);
            let to = ProductVertex::new(Polarity::Out, i, k - 1);
            ensure(pg.has_edge(from, to), || {
                format!("missing edge for f{}(l{}) = l{k}", i + 1, j + 1)
            })?;
            ensure(
                function_edges.iter().filter(|(a, _)| *a == from).count() == 1,
                || format!("f{} has several images of l{}", i + 1, j + 1),
            )?;
        }
    }
    Ok("30 function edges, one per table entry, all present".into())
}

fn criterion_7() -> Outcome {
    // Rows indexed by (a1, a2) in order (0,0), (0,1), (1,0), (1,1).
    let expected: [(&str, [(u8, u8); 4]); 6] = [
        ("g_I", [(0, 0), (0, 1), (1, 0), (1, 1)]),
        ("g_0", [(1, 0), (1, 0), (1, 0), (1, 0)]),
        ("g_1", [(1, 1), (1, 1), (1, 1), (1, 1)]),
        ("g_sw", [(0, 0), (1, 0), (0, 1), (1, 1)]),
        ("g_and", [(1, 0), (1, 0), (1, 0), (1, 1)]),
        ("g_or", [(1, 0), (1, 1), (1, 1), (1, 1)]),
    ];
    let lattice = Lattice::powerset(2);
    let gadgets = gadget_tables();
    let inputs = [(0u8, 0u8), (0, 1), (1, 0), (1, 1)];
    for ((name, f), (ename, rows)) in gadgets.named().into_iter().zip(expected) {
        ensure(name == ename, || format!("gadget order {name} vs {ename}"))?;
        for (&(a1, a2), &(b1, b2)) in inputs.iter().zip(&rows) {
            let got = f.apply(pair(a1 == 1, a2 == 1));
            ensure(got == pair(b1 == 1, b2 == 1), || {
                format!("{name}(({a1},{a2})) = {got}, expected ({b1},{b2})")
            })?;
        }
        ensure(f.is_monotone(&lattice), || format!("{name} not monotone"))?;
    }
    Ok("24 gadget outputs match; all six monotone".into())
}

#[derive(Deserialize)]
struct CorpusEntry {
    m: usize,
    covers: Vec<(usize, usize)>,
    leq: Vec<(usize, usize)>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    height: usize,
}

fn criterion_8() -> Outcome {
    let text = include_str!("data/lattice_corpus.json");
    let corpus: Vec<CorpusEntry> = serde_json::from_str(text).map_err(|e| e.to_string())?;
    for (k, e) in corpus.iter().enumerate() {
        let direct = Lattice::from_tables(e.m, e.meet.concat(), e.join.concat())
            .map_err(|err| format!("lattice {k}: {err}"))?;
        let cover =
            CoverRelation::new(e.m, &e.covers).map_err(|err| format!("lattice {k}: {err}"))?;
        let via_cover = poset_to_algebra(&cover_to_poset(&cover))
            .map_err(|err| format!("lattice {k}: {err}"))?;
        let poset = Poset::from_pairs(e.m, &e.leq).map_err(|err| format!("lattice {k}: {err}"))?;
        let via_poset = poset_to_algebra(&poset).map_err(|err| format!("lattice {k}: {err}"))?;
        ensure(via_cover == direct && via_poset == direct, || {
            format!("lattice {k}: conversions disagree")
        })?;
        ensure(direct.height() == e.height, || {
            format!("lattice {k}: height")
        })?;
        let round = direct.to_cover();
        let mut got: Vec<_> = round.covers().collect();
        got.sort_unstable();
        let mut want = e.covers.clone();
        want.sort_unstable();
        ensure(got == want, || format!("lattice {k}: cover round trip"))?;
    }

    // a, b below c, d: {c, d} has two maximal lower bounds.
    let n_poset =
        Poset::from_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).map_err(|e| e.to_string())?;
    let rejected = matches!(
        poset_to_algebra(&n_poset),
        Err(LatticeError::NotALattice(..))
    );
    ensure(rejected, || "N-poset not rejected with NotALattice".into())?;

    let d = Lattice::diamond();
    let empty = ProductGraph::from_edges(1, 4, ProductVertex::new(Polarity::In, 0, 3), &[])
        .map_err(|e| e.to_string())?;
    for expected in 0..4 {
        ensure(
            gmr_decide(&empty, 0, expected, &d) == (expected == d.top()),
            || format!("empty reachable set, expected {expected}"),
        )?;
    }
    Ok(format!(
        "{} stored lattices convert identically; N-poset rejected; empty reachable set meets to top",
        corpus.len()
    ))
}

fn main() {
    let corpus = monotone_corpus();
    let criteria: Vec<Criterion<'_>> = vec![
        ("MFP oracle equivalence", Box::new(|| criterion_1(&corpus))),
        ("MOP oracle equivalence", Box::new(criterion_2)),
        ("safety and coincidence", Box::new(|| criterion_3(&corpus))),
        ("MCV reduction equivalence", Box::new(criterion_4)),
        ("GR reduction equivalence", Box::new(criterion_5)),
        ("product graph golden edges", Box::new(criterion_6)),
        ("gadget golden tables", Box::new(criterion_7)),
        ("lattice conversions", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
