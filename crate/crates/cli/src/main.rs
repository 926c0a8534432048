use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sphere_recolor::coloring::{find_3_coloring, parse_coloring, signatures, write_coloring, Color, Coloring};
use sphere_recolor::complex::{
    barycentric_subdivision, generate, parse_tri2, parse_tri2_json, stacked_octahedra, write_tri2, write_tri2_json,
    Generator, OrientedTriangulation2,
};
use sphere_recolor::connectivity::{decide_connected, four_connected_pieces, unbalanced_witness};
use sphere_recolor::graph::Graph;
use sphere_recolor::hardness::{
    frozen_gadget, parse_gadget_x, parse_list_instance, prepare_planar, reduce_instance, suspend_instance,
    write_gadget_x, FrozenGadget, GadgetX, HardnessError,
};
use sphere_recolor::highdim::{
    balance_check_d, gen_join_cycles, parse_trid, simplex_boundary, suspend, write_trid, OrientedComplexD,
};
use sphere_recolor::oracle::{enumerate_colorings, reconfig_connected, same_component, OracleError, DEFAULT_BUDGET};
use sphere_recolor::reconfigure::{
    parse_sequence, solve_with, verify_sequence, write_sequence, ReconfigureError, SolveOptions, SolveOutcome,
};

const EXIT_USAGE: u8 = 1;
const EXIT_DIFFERENT: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;
const EXIT_INVALID: u8 = 4;
const EXIT_BUDGET: u8 = 5;

#[derive(Parser)]
#[command(name = "recolor", version, about = "Single-vertex recoloring on even sphere triangulations")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// State budget for brute-force searches.
    #[arg(long, global = true, env = "RECOLOR_ORACLE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a file of any supported kind.
    Validate { input: PathBuf },
    /// Write a generated triangulation, complex, coloring or gadget.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Whether a coloring lies in the component of the colorings with one color fewer.
    Check { complex: PathBuf, coloring: PathBuf },
    /// Find a recoloring sequence between two 4-colorings.
    Solve {
        tri: PathBuf,
        alpha: PathBuf,
        beta: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Ask the brute-force oracle when both colorings are unbalanced and the
        /// triangulation has at most this many vertices.
        #[arg(long)]
        oracle_max_vertices: Option<usize>,
    },
    /// Replay a sequence file and check that it leads from alpha to beta.
    Verify { tri: PathBuf, alpha: PathBuf, sequence: PathBuf, beta: PathBuf },
    /// Whether the 4-recoloring graph of an even triangulation is connected.
    Connected {
        tri: PathBuf,
        /// Where to write an unbalanced coloring when disconnected.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// An unbalanced 4-coloring of an even triangulation.
    Witness {
        tri: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a hard instance from a gadget graph and two colorings of its contracted vertices.
    Reduce(ReduceArgs),
    /// Brute-force queries on the recoloring graph.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Suspend a triangulation or complex, optionally with two colorings.
    Suspend {
        complex: PathBuf,
        #[arg(long, requires = "beta")]
        alpha: Option<PathBuf>,
        #[arg(long, requires = "alpha")]
        beta: Option<PathBuf>,
        /// Output prefix; writes `<prefix>.trid` and, with colorings, `<prefix>.alpha.col` and `<prefix>.beta.col`.
        #[arg(long)]
        prefix: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Tetrahedron,
    Octahedron,
    /// Cycle of `n - 2` vertices plus two apexes.
    DoubleWheel {
        n: usize,
        /// Reject odd `n`.
        #[arg(long)]
        even: bool,
    },
    /// Octahedra glued into random faces, starting from one octahedron.
    Stacked {
        steps: usize,
    },
    /// Barycentric subdivision of a triangulation.
    Barycentric {
        tri: PathBuf,
    },
    /// Join of two even cycles, a 3-sphere.
    Join {
        m: usize,
        n: usize,
    },
    /// Boundary of the (d+1)-simplex.
    Simplex {
        d: usize,
    },
    /// The 3-coloring of an even triangulation.
    ThreeColoring {
        tri: PathBuf,
    },
    /// The smallest gadget graph with a contracted edge.
    SmallestGadget,
}

#[derive(Args)]
struct ReduceArgs {
    gadget: PathBuf,
    /// Colors of the contracted vertices (a `col` file).
    alpha: PathBuf,
    beta: PathBuf,
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Writes `<prefix>.tri2` (k = 4) or `<prefix>.trid`, plus `<prefix>.alpha.col` and `<prefix>.beta.col`.
    #[arg(long)]
    prefix: PathBuf,
    /// Search for the frozen gadget with at most this many vertices instead of using the cached one.
    #[arg(long, env = "RECOLOR_GADGET_CAP")]
    gadget_cap: Option<usize>,
}

#[derive(Subcommand)]
enum OracleQuery {
    /// Count (or list) all proper colorings.
    Enumerate {
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long)]
        list: bool,
    },
    /// Whether beta is reachable from alpha, with a shortest sequence.
    Reach {
        graph: PathBuf,
        alpha: Option<PathBuf>,
        beta: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Whether the recoloring graph is connected.
    Connected {
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
}

/// Verdict line, its JSON form, and the exit code.
struct Report {
    text: String,
    json: Value,
    code: u8,
}

impl Report {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json, code: 0 }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn first_token(text: &str) -> &str {
    text.split_whitespace().next().unwrap_or("")
}

fn load_tri(path: &Path) -> Result<OrientedTriangulation2> {
    let text = read(path)?;
    let tri = if text.trim_start().starts_with('{') { parse_tri2_json(&text)? } else { parse_tri2(&text)? };
    Ok(tri)
}

fn load_coloring(path: &Path) -> Result<Coloring> {
    parse_coloring(&read(path)?).with_context(|| format!("in {}", path.display()))
}

enum Complex {
    Surface(OrientedTriangulation2),
    Higher(OrientedComplexD),
}

fn load_complex(path: &Path) -> Result<Complex> {
    let text = read(path)?;
    if first_token(&text) == "trid" {
        Ok(Complex::Higher(parse_trid(&text)?))
    } else {
        Ok(Complex::Surface(load_tri(path)?))
    }
}

/// Graph, optional lists and optional stored colorings from a tri2, trid or listinst file.
fn load_graph(path: &Path) -> Result<(Graph, Option<Vec<Vec<Color>>>, Option<(Vec<Color>, Vec<Color>)>)> {
    let text = read(path)?;
    match first_token(&text) {
        "listinst" => {
            let inst = parse_list_instance(&text)?;
            Ok((inst.graph, Some(inst.lists), Some((inst.alpha, inst.beta))))
        }
        "trid" => Ok((parse_trid(&text)?.one_skeleton(), None, None)),
        _ => Ok((Graph::from_triangulation(&load_tri(path)?), None, None)),
    }
}

fn validate(path: &Path) -> Result<Report> {
    let text = read(path)?;
    let report = match first_token(&text) {
        "trid" => {
            let k = parse_trid(&text)?;
            Report::ok(
                format!(
                    "VALID trid d={} vertices={} facets={} even={}",
                    k.dim(),
                    k.vertex_count(),
                    k.facet_count(),
                    k.is_even()
                ),
                json!({"kind": "trid", "dim": k.dim(), "vertices": k.vertex_count(), "facets": k.facet_count(), "even": k.is_even()}),
            )
        }
        "col" => {
            let c = parse_coloring(&text)?;
            Report::ok(
                format!("VALID col k={} vertices={}", c.k(), c.len()),
                json!({"kind": "col", "k": c.k(), "vertices": c.len()}),
            )
        }
        "seq" => {
            let s = parse_sequence(&text)?;
            Report::ok(format!("VALID seq steps={}", s.len()), json!({"kind": "seq", "steps": s.len()}))
        }
        "gadgetx" => {
            let x = parse_gadget_x(&text)?;
            let h = x.build_h()?;
            Report::ok(
                format!("VALID gadgetx vertices={} H-vertices={}", x.vertex_count(), h.plane.vertex_count()),
                json!({"kind": "gadgetx", "vertices": x.vertex_count(), "h_vertices": h.plane.vertex_count()}),
            )
        }
        "listinst" => {
            let inst = parse_list_instance(&text)?;
            Report::ok(
                format!("VALID listinst vertices={}", inst.graph.vertex_count()),
                json!({"kind": "listinst", "vertices": inst.graph.vertex_count()}),
            )
        }
        _ => {
            let g = load_tri(path)?;
            Report::ok(
                format!("VALID tri2 vertices={} faces={} even={}", g.vertex_count(), g.face_count(), g.is_even()),
                json!({"kind": "tri2", "vertices": g.vertex_count(), "faces": g.face_count(), "even": g.is_even()}),
            )
        }
    };
    Ok(report)
}

fn gen(kind: &GenKind, seed: u64, format: Format) -> Result<String> {
    let tri = |g: OrientedTriangulation2| if format == Format::Json { write_tri2_json(&g) } else { write_tri2(&g) };
    Ok(match kind {
        GenKind::Tetrahedron => tri(generate(Generator::Tetrahedron, false)?),
        GenKind::Octahedron => tri(generate(Generator::Octahedron, false)?),
        GenKind::DoubleWheel { n, even } => tri(generate(Generator::DoubleWheel(*n), *even)?),
        GenKind::Stacked { steps } => tri(stacked_octahedra(*steps, seed)),
        GenKind::Barycentric { tri: path } => tri(barycentric_subdivision(&load_tri(path)?)),
        GenKind::Join { m, n } => write_trid(&gen_join_cycles(*m, *n)?),
        GenKind::Simplex { d } => write_trid(&simplex_boundary(*d)?),
        GenKind::ThreeColoring { tri: path } => write_coloring(&find_3_coloring(&load_tri(path)?)?),
        GenKind::SmallestGadget => write_gadget_x(&GadgetX::smallest()),
    })
}

fn check(complex: &Path, coloring: &Path) -> Result<Report> {
    let alpha = load_coloring(coloring)?;
    let (balanced, unbalanced) = match load_complex(complex)? {
        Complex::Surface(g) => {
            alpha.check_proper(&g)?;
            let s = signatures(&g, &alpha)?;
            (s.is_balanced(&g), s.unbalanced_vertices(&g))
        }
        Complex::Higher(k) => (balance_check_d(&k, &alpha)?, Vec::new()),
    };
    let verdict = if balanced { "BALANCED" } else { "UNBALANCED" };
    Ok(Report::ok(verdict, json!({"balanced": balanced, "unbalanced_vertices": unbalanced})))
}

fn solve(tri: &Path, a: &Path, b: &Path, out: Option<&Path>, oracle_max: Option<usize>, budget: u64) -> Result<Report> {
    let g = load_tri(tri)?;
    let (alpha, beta) = (load_coloring(a)?, load_coloring(b)?);
    let options = SolveOptions { oracle_max_vertices: oracle_max, oracle_budget: budget };
    let solved = solve_with(&g, &alpha, &beta, options)?;
    Ok(match solved.outcome {
        SolveOutcome::Sequence(seq) => {
            if let Some(path) = out {
                emit(Some(path), &write_sequence(&seq))?;
            }
            let text = if out.is_some() { format!("SEQUENCE {}", seq.len()) } else { write_sequence(&seq) };
            let steps: Vec<[usize; 2]> = seq.steps().iter().map(|&(v, c)| [v, c as usize]).collect();
            Report::ok(
                text.trim_end(),
                json!({"outcome": "sequence", "length": seq.len(), "steps": steps, "by_oracle": solved.by_oracle}),
            )
        }
        SolveOutcome::DifferentComponents => Report {
            text: "DIFFERENT_COMPONENTS".into(),
            json: json!({"outcome": "different_components", "by_oracle": solved.by_oracle}),
            code: EXIT_DIFFERENT,
        },
        SolveOutcome::Undecided => {
            Report { text: "UNDECIDED".into(), json: json!({"outcome": "undecided"}), code: EXIT_UNDECIDED }
        }
    })
}

fn verify(tri: &Path, a: &Path, seq: &Path, b: &Path) -> Result<Report> {
    let g = load_tri(tri)?;
    let (alpha, beta) = (load_coloring(a)?, load_coloring(b)?);
    let seq = parse_sequence(&read(seq)?)?;
    verify_sequence(&g, &alpha, &seq, &beta)?;
    Ok(Report::ok(format!("VALID {} steps", seq.len()), json!({"valid": true, "length": seq.len()})))
}

fn connected(tri: &Path, witness: Option<&Path>) -> Result<Report> {
    let g = load_tri(tri)?;
    if let Some(v) = g.first_odd_vertex() {
        bail!("vertex {v} has odd degree; the triangulation is not even");
    }
    let is_connected = decide_connected(&g);
    let pieces = four_connected_pieces(&g).pieces.len();
    if !is_connected {
        if let Some(path) = witness {
            emit(Some(path), &write_coloring(&unbalanced_witness(&g)?))?;
        }
    }
    let verdict = if is_connected { "CONNECTED" } else { "DISCONNECTED" };
    Ok(Report::ok(verdict, json!({"connected": is_connected, "pieces": pieces})))
}

fn witness(tri: &Path, out: Option<&Path>) -> Result<Report> {
    let w = unbalanced_witness(&load_tri(tri)?)?;
    if out.is_some() {
        emit(out, &write_coloring(&w))?;
    }
    let text = if out.is_some() { "WITNESS".to_string() } else { write_coloring(&w).trim_end().to_string() };
    Ok(Report::ok(text, json!({"witness": w.colors()})))
}

fn reduce(args: &ReduceArgs) -> Result<Report> {
    let x = parse_gadget_x(&read(&args.gadget)?)?;
    let (ta, tb) = (load_coloring(&args.alpha)?, load_coloring(&args.beta)?);
    let h = x.build_h()?;
    let prepared = prepare_planar(&h)?;
    let alpha = prepared.extend_coloring(&h.extend_coloring(ta.colors())?);
    let beta = prepared.extend_coloring(&h.extend_coloring(tb.colors())?);
    let gadget = match args.gadget_cap {
        None => FrozenGadget::cached()?,
        Some(cap) => {
            let required: Vec<[Color; 3]> =
                (0..4).flat_map(|a| (0..4).filter(move |&b| b != a).map(move |b| [a, b, 4])).collect();
            frozen_gadget(&required, Some(cap))?
        }
    };
    let r = reduce_instance(&prepared, &gadget, &alpha, &beta, args.k)?;
    let (main, ext) =
        if args.k == 4 { (write_tri2(&r.triangulation), ".tri2") } else { (write_trid(&r.complex), ".trid") };
    emit(Some(&with_suffix(&args.prefix, ext)), &main)?;
    emit(Some(&with_suffix(&args.prefix, ".alpha.col")), &write_coloring(&r.alpha))?;
    emit(Some(&with_suffix(&args.prefix, ".beta.col")), &write_coloring(&r.beta))?;
    let n = r.complex.vertex_count();
    Ok(Report::ok(
        format!("REDUCED k={} vertices={} dim={}", r.k, n, r.complex.dim()),
        json!({"k": r.k, "vertices": n, "dim": r.complex.dim(), "h_vertices": r.h_count, "gadget_vertices": gadget.tri.vertex_count()}),
    ))
}

fn oracle(query: &OracleQuery, budget: u64) -> Result<Report> {
    match query {
        OracleQuery::Enumerate { graph, k, list } => {
            let (g, lists, _) = load_graph(graph)?;
            let all = enumerate_colorings(&g, *k, lists.as_deref(), budget)?;
            let mut text = format!("COUNT {}", all.len());
            if *list {
                for c in &all {
                    text.push('\n');
                    text.push_str(&c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
                }
            }
            let listed: Value = if *list { json!(all) } else { Value::Null };
            Ok(Report::ok(text, json!({"count": all.len(), "colorings": listed})))
        }
        OracleQuery::Reach { graph, alpha, beta, k, output } => {
            let (g, lists, stored) = load_graph(graph)?;
            let (a, b, k) = match (alpha, beta, stored) {
                (Some(a), Some(b), _) => {
                    let (a, b) = (load_coloring(a)?, load_coloring(b)?);
                    (a.colors().to_vec(), b.colors().to_vec(), a.k().max(b.k()))
                }
                (None, None, Some((a, b))) => (a, b, *k),
                _ => bail!("reach needs two coloring files unless the input is a listinst"),
            };
            let (reach, path) = same_component(&g, k, &a, &b, lists.as_deref(), budget)?;
            if let (Some(path), Some(out)) = (&path, output) {
                emit(Some(out), &write_sequence(&sphere_recolor::reconfigure::RecolorSequence::new(path.clone())))?;
            }
            let len = path.as_ref().map(Vec::len);
            let text = match len {
                Some(n) => format!("REACHABLE {n}"),
                None => "UNREACHABLE".into(),
            };
            Ok(Report::ok(text, json!({"reachable": reach, "length": len})))
        }
        OracleQuery::Connected { graph, k } => {
            let (g, lists, _) = load_graph(graph)?;
            let c = reconfig_connected(&g, *k, lists.as_deref(), budget)?;
            Ok(Report::ok(if c { "CONNECTED" } else { "DISCONNECTED" }, json!({"connected": c})))
        }
    }
}

fn suspend_cmd(complex: &Path, alpha: Option<&Path>, beta: Option<&Path>, prefix: Option<&Path>) -> Result<Report> {
    let k = match load_complex(complex)? {
        Complex::Surface(g) => OrientedComplexD::from_triangulation(&g),
        Complex::Higher(k) => k,
    };
    let target = |suffix: &str| prefix.map(|p| with_suffix(p, suffix));
    let s = match (alpha, beta) {
        (Some(a), Some(b)) => {
            let (s, sa, sb) = suspend_instance(&k, &load_coloring(a)?, &load_coloring(b)?);
            let (pa, pb) = (target(".alpha.col"), target(".beta.col"));
            if pa.is_none() {
                bail!("--prefix is required when suspending colorings");
            }
            emit(pa.as_deref(), &write_coloring(&sa))?;
            emit(pb.as_deref(), &write_coloring(&sb))?;
            s
        }
        _ => suspend(&k),
    };
    let path = target(".trid");
    emit(path.as_deref(), &write_trid(&s))?;
    let text =
        if path.is_some() { format!("SUSPENDED d={} vertices={}", s.dim(), s.vertex_count()) } else { String::new() };
    Ok(Report::ok(
        text,
        json!({"dim": s.dim(), "vertices": s.vertex_count(), "facets": s.facet_count(), "even": s.is_even()}),
    ))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Validate { input } => validate(input),
        Command::Gen { kind, output } => {
            let content = gen(kind, cli.seed, cli.format)?;
            emit(output.as_deref(), &content)?;
            Ok(Report::ok("", Value::Null))
        }
        Command::Check { complex, coloring } => check(complex, coloring),
        Command::Solve { tri, alpha, beta, output, oracle_max_vertices } => {
            solve(tri, alpha, beta, output.as_deref(), *oracle_max_vertices, cli.budget)
        }
        Command::Verify { tri, alpha, sequence, beta } => verify(tri, alpha, sequence, beta),
        Command::Connected { tri, witness: w } => connected(tri, w.as_deref()),
        Command::Witness { tri, output } => witness(tri, output.as_deref()),
        Command::Reduce(args) => reduce(args),
        Command::Oracle { query } => oracle(query, cli.budget),
        Command::Suspend { complex, alpha, beta, prefix } => {
            suspend_cmd(complex, alpha.as_deref(), beta.as_deref(), prefix.as_deref())
        }
    }
}

/// Exit code for a failed run: budget exhaustion anywhere in the chain, otherwise validation.
fn failure_code(err: &anyhow::Error) -> u8 {
    let budget = err.chain().any(|e| {
        matches!(e.downcast_ref::<OracleError>(), Some(OracleError::BudgetExceeded(_)))
            || matches!(
                e.downcast_ref::<ReconfigureError>(),
                Some(ReconfigureError::Oracle(OracleError::BudgetExceeded(_)))
            )
            || matches!(e.downcast_ref::<HardnessError>(), Some(HardnessError::Oracle(OracleError::BudgetExceeded(_))))
    });
    if budget {
        EXIT_BUDGET
    } else {
        EXIT_INVALID
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json if !report.json.is_null() => println!("{}", report.json),
                _ if !report.text.is_empty() => println!("{}", report.text),
                _ => {}
            }
            ExitCode::from(report.code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(failure_code(&err))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_errors_map_to_their_exit_code() {
        let e = anyhow::Error::new(ReconfigureError::Oracle(OracleError::BudgetExceeded(3)));
        assert_eq!(failure_code(&e), EXIT_BUDGET);
        let e = anyhow::Error::new(OracleError::InvalidInput("x".into())).context("reading");
        assert_eq!(failure_code(&e), EXIT_INVALID);
    }
}
