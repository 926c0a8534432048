//! Acceptance suite: one pass/fail line per criterion, tolerances pinned below.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphere_recolor::coloring::{
    apply_single_change, find_3_coloring, is_balanced, recolorable_colors, signatures, Color, Coloring,
};
use sphere_recolor::complex::{double_wheel, octahedron, stacked_octahedra, OrientedTriangulation2};
use sphere_recolor::connectivity::{
    contraction_sequence, decide_connected, four_connected_pieces, is_four_connected, is_octahedron,
    unbalanced_witness, DOUBLE_WHEEL_8_UNBALANCED,
};
use sphere_recolor::corpus::{corpus, CorpusEntry};
use sphere_recolor::graph::Graph;
use sphere_recolor::hardness::{
    admissible_parameters, forbidding_path, is_frozen, prepare_planar, reduce_instance, search_frozen_gadget,
    suspend_instance, FrozenGadget, GadgetX, DEFAULT_GADGET_CAP,
};
use sphere_recolor::highdim::{balance_check_d, gen_join_cycles, winding_degree, OrientedComplexD};
use sphere_recolor::oracle::{same_component, Instance, ReconfigGraph, DEFAULT_BUDGET};
use sphere_recolor::reconfigure::{descend_with, solve, verify_sequence, DescentOptions, SolveOutcome};

const SEED: u64 = 7;
const CORPUS_MIN_ENTRIES: usize = 20;
const CORPUS_MAX_VERTICES: usize = 11;
const CRITERION_1_BUDGET: Duration = Duration::from_secs(300);
/// Sequence length bound: `LENGTH_FACTOR * |V|^2`.
const LENGTH_FACTOR: usize = 4;
/// Graphs with at most this many balanced colorings get `solve` on every ordered pair.
const SOLVE_ALL_PAIRS_UP_TO: usize = 400;
/// Seeded sample of ordered pairs on the larger graphs.
const SOLVE_SAMPLED_PAIRS: usize = 2000;
const SIGNATURE_SAMPLES: usize = 10_000;
const SINGLE_CHANGE_SAMPLES: usize = 10_000;
const LARGE_INSTANCE_VERTICES: usize = 100_000;
const LARGE_INSTANCE_BUDGET: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;

struct Graphs {
    entries: Vec<CorpusEntry>,
    /// Per entry: the oracle's reconfiguration graph and which components hold a 3-coloring.
    oracle: Vec<(ReconfigGraph, Vec<bool>)>,
}

impl Graphs {
    fn build() -> Result<Self, String> {
        let entries = corpus(CORPUS_MAX_VERTICES, CORPUS_MIN_ENTRIES, SEED);
        let mut oracle = Vec::with_capacity(entries.len());
        for e in &entries {
            let graph = Graph::from_triangulation(&e.tri);
            let inst = Instance::new(&graph, 4, None, DEFAULT_BUDGET).map_err(|err| err.to_string())?;
            let rg = ReconfigGraph::build(&inst).map_err(|err| format!("{}: {err}", e.name))?;
            let marked = rg.components_with_few_colors(3);
            oracle.push((rg, marked));
        }
        Ok(Self { entries, oracle })
    }

    fn colorings(&self, i: usize) -> impl Iterator<Item = Vec<Color>> + '_ {
        let rg = &self.oracle[i].0;
        rg.states().iter().map(move |&c| rg.decode(c))
    }

    fn balanced(&self, i: usize) -> Vec<Coloring> {
        let (rg, marked) = &self.oracle[i];
        (0..rg.state_count())
            .filter(|&s| marked[rg.component_of_index(s) as usize])
            .map(|s| Coloring::new(4, rg.decode(rg.states()[s])).expect("palette 4"))
            .collect()
    }
}

fn coloring(colors: Vec<Color>) -> Coloring {
    Coloring::new(4, colors).expect("palette 4")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1(graphs: &Graphs, started: Instant) -> Outcome {
    let sizes: BTreeSet<usize> = graphs.entries.iter().map(|e| e.tri.vertex_count()).collect();
    ensure(graphs.entries.len() >= CORPUS_MIN_ENTRIES, || format!("corpus has {} entries", graphs.entries.len()))?;
    let (mut total, mut mismatches) = (0usize, 0usize);
    for (i, e) in graphs.entries.iter().enumerate() {
        let (rg, marked) = &graphs.oracle[i];
        for (s, colors) in graphs.colorings(i).enumerate() {
            let balanced = is_balanced(&e.tri, &coloring(colors)).map_err(|err| err.to_string())?;
            total += 1;
            if balanced != marked[rg.component_of_index(s) as usize] {
                mismatches += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    ensure(mismatches == 0, || format!("{mismatches} mismatches out of {total}"))?;
    ensure(elapsed < CRITERION_1_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} graphs (vertex counts {sizes:?}), {total} colorings, 0 mismatches, {:.1}s",
        graphs.entries.len(),
        elapsed.as_secs_f64()
    ))
}

fn criterion_2(graphs: &Graphs) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut descents, mut solved, mut exhaustive, mut sampled, mut max_ratio) = (0usize, 0usize, 0usize, 0usize, 0f64);
    for (i, e) in graphs.entries.iter().enumerate() {
        let g = &e.tri;
        let (v, f) = (g.vertex_count(), g.face_count());
        let bound = LENGTH_FACTOR * v * v;
        let balanced = graphs.balanced(i);
        for alpha in &balanced {
            let d = descend_with(g, alpha, DescentOptions::default()).map_err(|err| format!("{}: {err}", e.name))?;
            verify_sequence(g, alpha, &d.sequence, &d.coloring).map_err(|err| format!("{}: {err}", e.name))?;
            ensure(d.coloring.is_3_coloring(), || format!("{}: descent ended in 4 colors", e.name))?;
            ensure(d.sequence.len() <= d.initial_volume && d.initial_volume <= f * f, || {
                format!("{}: length {} volume {} faces {f}", e.name, d.sequence.len(), d.initial_volume)
            })?;
            ensure(d.sequence.len() <= bound, || format!("{}: descent length {} > {bound}", e.name, d.sequence.len()))?;
            max_ratio = max_ratio.max(d.sequence.len() as f64 / (v * v) as f64);
            descents += 1;
        }
        let pairs: Vec<(&Coloring, &Coloring)> = if balanced.len() <= SOLVE_ALL_PAIRS_UP_TO {
            exhaustive += 1;
            balanced.iter().flat_map(|a| balanced.iter().map(move |b| (a, b))).collect()
        } else {
            sampled += 1;
            (0..SOLVE_SAMPLED_PAIRS)
                .map(|_| (balanced.choose(&mut rng).unwrap(), balanced.choose(&mut rng).unwrap()))
                .collect()
        };
        for (a, b) in pairs {
            let SolveOutcome::Sequence(seq) = solve(g, a, b).map_err(|err| err.to_string())? else {
                return Err(format!("{}: balanced pair not solved", e.name));
            };
            verify_sequence(g, a, &seq, b).map_err(|err| format!("{}: {err}", e.name))?;
            ensure(seq.len() <= bound, || format!("{}: solve length {} > {bound}", e.name, seq.len()))?;
            max_ratio = max_ratio.max(seq.len() as f64 / (v * v) as f64);
            solved += 1;
        }
    }
    Ok(format!(
        "{descents} descents; {solved} solve pairs (all pairs on {exhaustive} graphs, {SOLVE_SAMPLED_PAIRS} sampled on {sampled}); max length/|V|^2 = {max_ratio:.3} <= {LENGTH_FACTOR}"
    ))
}

fn criterion_3(graphs: &Graphs) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let all: Vec<Vec<Vec<Color>>> = (0..graphs.entries.len()).map(|i| graphs.colorings(i).collect()).collect();
    let (mut vertex_checks, mut fisk, mut even_ns) = (0usize, 0usize, 0usize);
    for _ in 0..SIGNATURE_SAMPLES {
        let i = rng.gen_range(0..all.len());
        let g = &graphs.entries[i].tri;
        let alpha = coloring(all[i].choose(&mut rng).unwrap().clone());
        let s = signatures(g, &alpha).map_err(|err| err.to_string())?;
        for v in 0..g.vertex_count() {
            let (plus, minus) = s.star_counts(g, v);
            vertex_checks += 1;
            fisk += usize::from(plus % 3 == minus % 3);
            even_ns += usize::from(s.ns(g, v).len() % 2 == 0);
        }
    }
    let mut exact = 0usize;
    let mut changes = 0usize;
    while changes < SINGLE_CHANGE_SAMPLES {
        let i = rng.gen_range(0..all.len());
        let g = &graphs.entries[i].tri;
        let alpha = coloring(all[i].choose(&mut rng).unwrap().clone());
        let v = rng.gen_range(0..g.vertex_count());
        let Some(&c) = recolorable_colors(g, &alpha, v).choose(&mut rng) else { continue };
        let beta = apply_single_change(g, &alpha, v, c).map_err(|err| err.to_string())?;
        let before: BTreeSet<usize> = signatures(g, &alpha).unwrap().nonsingular_edges().into_iter().collect();
        let after: BTreeSet<usize> = signatures(g, &beta).unwrap().nonsingular_edges().into_iter().collect();
        let link: BTreeSet<usize> = g.link_edges(v).into_iter().collect();
        let expected: BTreeSet<usize> = before.symmetric_difference(&link).copied().collect();
        exact += usize::from(after == expected);
        changes += 1;
    }
    ensure(fisk == vertex_checks, || format!("Fisk congruence {fisk}/{vertex_checks}"))?;
    ensure(even_ns == vertex_checks, || format!("|NS(v)| even {even_ns}/{vertex_checks}"))?;
    ensure(exact == changes, || format!("NS toggle {exact}/{changes}"))?;
    Ok(format!(
        "{SIGNATURE_SAMPLES} colorings, {vertex_checks} vertex checks: Fisk 100%, |NS| even 100%; {changes} single-changes: NS toggle 100%"
    ))
}

fn criterion_4(graphs: &Graphs) -> Outcome {
    for (i, e) in graphs.entries.iter().enumerate() {
        let oracle = graphs.oracle[i].0.is_connected();
        ensure(decide_connected(&e.tri) == oracle, || format!("{}: oracle says connected = {oracle}", e.name))?;
    }
    ensure(decide_connected(&octahedron()), || "octahedron reported disconnected".into())?;
    let dw = double_wheel(8).unwrap();
    ensure(!decide_connected(&dw), || "double_wheel(8) reported connected".into())?;
    let w = unbalanced_witness(&dw).map_err(|err| err.to_string())?;
    ensure(w.is_proper(&dw), || "witness is improper".into())?;
    ensure(!is_balanced(&dw, &w).unwrap(), || "witness is balanced".into())?;
    let graph = Graph::from_triangulation(&dw);
    let rg = ReconfigGraph::build(&Instance::new(&graph, 4, None, DEFAULT_BUDGET).unwrap()).unwrap();
    let comp = rg.component_of(w.colors()).ok_or("witness not among oracle states")?;
    ensure(!rg.components_with_few_colors(3)[comp as usize], || "witness reaches a 3-coloring".into())?;

    let steps = (LARGE_INSTANCE_VERTICES - 6).div_ceil(3);
    let big = stacked_octahedra(steps, SEED);
    let started = Instant::now();
    let connected = decide_connected(&big);
    let elapsed = started.elapsed();
    ensure(connected, || "stacked octahedra reported disconnected".into())?;
    ensure(elapsed < LARGE_INSTANCE_BUDGET, || format!("{} vertices took {elapsed:?}", big.vertex_count()))?;
    Ok(format!(
        "{} graphs agree with the oracle; double_wheel(8) witness unreachable from 3-colorings; {} vertices decided in {:.2}s",
        graphs.entries.len(),
        big.vertex_count(),
        elapsed.as_secs_f64()
    ))
}

fn criterion_5(graphs: &Graphs) -> Outcome {
    let dw8 = double_wheel(8).unwrap();
    let (mut runs, mut witnesses) = (0usize, 0usize);
    for e in &graphs.entries {
        let pieces = four_connected_pieces(&e.tri).pieces;
        for p in pieces.iter().filter(|p| !is_octahedron(&p.tri)) {
            let seq = contraction_sequence(&p.tri).map_err(|err| format!("{}: {err}", e.name))?;
            let last = &seq.last().ok_or("empty contraction sequence")?.0;
            ensure(is_octahedron(last), || format!("{}: sequence ends elsewhere", e.name))?;
            ensure(seq.iter().all(|(h, _)| h.is_even() && is_four_connected(h)), || {
                format!("{}: intermediate graph odd or not 4-connected", e.name)
            })?;
            let penultimate = if seq.len() >= 2 { &seq[seq.len() - 2].0 } else { &p.tri };
            ensure(penultimate.is_isomorphic(&dw8), || {
                format!("{}: penultimate graph is not double_wheel(8)", e.name)
            })?;
            runs += 1;
        }
        if pieces.iter().any(|p| !is_octahedron(&p.tri)) {
            let w = unbalanced_witness(&e.tri).map_err(|err| format!("{}: {err}", e.name))?;
            ensure(!is_balanced(&e.tri, &w).unwrap(), || format!("{}: lifted witness is balanced", e.name))?;
            witnesses += 1;
        }
    }
    ensure(runs > 0, || "no non-octahedral pieces in the corpus".into())?;
    Ok(format!(
        "{runs} contraction runs reach the octahedron via double_wheel(8); {witnesses} lifted witnesses unbalanced"
    ))
}

fn proper_cycle_colorings(m: usize) -> Vec<Vec<Color>> {
    (0..3usize.pow(m as u32))
        .map(|code| (0..m).map(|i| ((code / 3usize.pow(i as u32)) % 3) as Color).collect::<Vec<_>>())
        .filter(|c| (0..m).all(|i| c[i] != c[(i + 1) % m]))
        .collect()
}

fn criterion_6() -> Outcome {
    let mut report = Vec::new();
    for (m, n) in [(4, 4), (6, 4)] {
        let k = gen_join_cycles(m, n).map_err(|err| err.to_string())?;
        let graph = k.one_skeleton();
        let rg = ReconfigGraph::build(&Instance::new(&graph, 5, None, DEFAULT_BUDGET).unwrap())
            .map_err(|err| err.to_string())?;
        let marked = rg.components_with_few_colors(4);
        let mut mismatches = 0;
        for (s, &code) in rg.states().iter().enumerate() {
            let balanced =
                balance_check_d(&k, &Coloring::new(5, rg.decode(code)).unwrap()).map_err(|err| err.to_string())?;
            mismatches += usize::from(balanced != marked[rg.component_of_index(s) as usize]);
        }
        let second: Vec<Color> = (0..n).map(|j| 3 + (j % 2) as Color).collect();
        let family = proper_cycle_colorings(m);
        let mut degree_mismatches = 0;
        for first in &family {
            let alpha = Coloring::new(5, [first.clone(), second.clone()].concat()).unwrap();
            let balanced = balance_check_d(&k, &alpha).unwrap();
            degree_mismatches += usize::from(balanced != (winding_degree(first).unwrap() == 0));
        }
        ensure(mismatches == 0 && degree_mismatches == 0, || {
            format!("C_{m}*C_{n}: {mismatches} oracle and {degree_mismatches} degree mismatches")
        })?;
        report.push(format!(
            "C_{m}*C_{n}: {} colorings and {} degree-family colorings agree",
            rg.state_count(),
            family.len()
        ));
    }
    Ok(report.join("; "))
}

fn criterion_7() -> Outcome {
    let params = admissible_parameters();
    for (l_u, l_v, a, b, c) in &params {
        let fp = forbidding_path(l_u, l_v, *a, *b, *c).map_err(|err| err.to_string())?;
        fp.verify().map_err(|err| format!("{l_u:?} {l_v:?} a={a} b={b} c={c}: {err}"))?;
    }
    Ok(format!("{} admissible parameter tuples pass (I)-(III)", params.len()))
}

fn suspension_agrees(g: &OrientedTriangulation2, k: usize, a: Vec<Color>, b: Vec<Color>) -> Result<bool, String> {
    let before =
        same_component(&Graph::from_triangulation(g), k, &a, &b, None, DEFAULT_BUDGET).map_err(|e| e.to_string())?.0;
    let (s, sa, sb) = suspend_instance(
        &OrientedComplexD::from_triangulation(g),
        &Coloring::new(k, a).unwrap(),
        &Coloring::new(k, b).unwrap(),
    );
    let after = same_component(&s.one_skeleton(), k + 1, sa.colors(), sb.colors(), None, DEFAULT_BUDGET)
        .map_err(|e| e.to_string())?
        .0;
    Ok(before == after)
}

fn criterion_8() -> Outcome {
    let x = GadgetX::smallest();
    let h = x.build_h().map_err(|e| e.to_string())?;
    let prepared = prepare_planar(&h).map_err(|e| e.to_string())?;
    let (alpha_h, beta_h) = (
        prepared.extend_coloring(&h.extend_coloring(&[2, 0]).map_err(|e| e.to_string())?),
        prepared.extend_coloring(&h.extend_coloring(&[0, 1]).map_err(|e| e.to_string())?),
    );
    let gadget = FrozenGadget::cached().map_err(|e| e.to_string())?;
    let r = reduce_instance(&prepared, &gadget, &alpha_h, &beta_h, 4).map_err(|e| e.to_string())?;
    let tri = &r.triangulation;
    OrientedTriangulation2::from_faces(tri.vertex_count(), tri.faces().to_vec()).map_err(|e| e.to_string())?;
    ensure(tri.is_even(), || "output is not even".into())?;
    find_3_coloring(tri).map_err(|e| e.to_string())?;
    for (h_colors, c) in [(&alpha_h, &r.alpha), (&beta_h, &r.beta)] {
        ensure(c.is_proper(tri), || "restricted coloring is improper".into())?;
        r.check_restricted(h_colors, c)?;
        if let Some(v) = r.unfrozen_outside(c) {
            return Err(format!("vertex {v} outside H is not frozen"));
        }
    }
    let oct = octahedron();
    let three = find_3_coloring(&oct).unwrap().into_colors();
    let swapped: Vec<Color> = three.iter().map(|&c| [1, 0, 2][c as usize]).collect();
    let dw = double_wheel(8).unwrap();
    let dw_three = find_3_coloring(&dw).unwrap().into_colors();
    let renamed = gadget.coloring_for([1, 0, 2]).ok_or("no renamed gadget coloring")?;
    ensure(suspension_agrees(&oct, 4, three, swapped)?, || "octahedron: reachability changed".into())?;
    ensure(suspension_agrees(&dw, 4, DOUBLE_WHEEL_8_UNBALANCED.to_vec(), dw_three)?, || {
        "double_wheel(8): reachability changed".into()
    })?;
    ensure(suspension_agrees(&gadget.tri, 5, gadget.reference.clone(), renamed)?, || {
        "gadget: reachability changed".into()
    })?;
    Ok(format!(
        "{} vertices, even, 3-colorable, (a)-(d) hold, all {} outside vertices frozen; suspension keeps reachability on 3 sub-instances",
        tri.vertex_count(),
        tri.vertex_count() - r.h_count
    ))
}

fn criterion_9() -> Outcome {
    let gadget = FrozenGadget::cached().map_err(|e| e.to_string())?;
    let searched = search_frozen_gadget(DEFAULT_GADGET_CAP).map_err(|e| e.to_string())?;
    ensure(searched.tri == gadget.tri && searched.reference == gadget.reference, || {
        "search no longer reproduces the cached gadget".into()
    })?;
    let mut triples = 0;
    for a in 0..5 {
        for b in (0..5).filter(|&b| b != a) {
            for c in (0..5).filter(|&c| c != a && c != b) {
                let colors =
                    gadget.coloring_for([a, b, c]).ok_or_else(|| format!("no coloring for ({a}, {b}, {c})"))?;
                let [x, y, z] = gadget.boundary;
                ensure([colors[x], colors[y], colors[z]] == [a, b, c], || {
                    format!("boundary mismatch for ({a}, {b}, {c})")
                })?;
                ensure(Coloring::proper(&gadget.tri, 5, colors.clone()).is_ok(), || {
                    format!("improper for ({a}, {b}, {c})")
                })?;
                ensure(is_frozen(&gadget.tri, &colors), || format!("not frozen for ({a}, {b}, {c})"))?;
                triples += 1;
            }
        }
    }
    Ok(format!(
        "{}-vertex gadget, {triples} boundary triples frozen, search reproduces the fixture",
        gadget.tri.vertex_count()
    ))
}

fn main() {
    let started = Instant::now();
    let graphs = Graphs::build();
    let corpus_outcome = |f: &dyn Fn(&Graphs) -> Outcome| match &graphs {
        Ok(g) => f(g),
        Err(e) => Err(format!("corpus oracle failed: {e}")),
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("characterization", corpus_outcome(&|g| criterion_1(g, started))),
        ("sequence synthesis", corpus_outcome(&criterion_2)),
        ("signature invariants", corpus_outcome(&criterion_3)),
        ("connectedness", corpus_outcome(&criterion_4)),
        ("generation and lifting", corpus_outcome(&criterion_5)),
        ("high dimension", criterion_6()),
        ("forbidding paths", criterion_7()),
        ("reduction well-formedness", criterion_8()),
        ("frozen gadget", criterion_9()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed, {:.1}s", results.len() - failed, started.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
