//! Deciding reachability between two 4-colorings when one side is balanced.

use super::{bridge_3colorings, descend_to_3coloring, RecolorSequence, ReconfigureError};
use crate::coloring::{signatures, Coloring, ColoringError};
use crate::complex::OrientedTriangulation2;
use crate::graph::Graph;
use crate::oracle::{same_component, DEFAULT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Sequence(RecolorSequence),
    DifferentComponents,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved {
    pub outcome: SolveOutcome,
    /// Whether the answer came from the brute-force oracle.
    pub by_oracle: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// When both colorings are unbalanced, ask the oracle if the triangulation has at
    /// most this many vertices.
    pub oracle_max_vertices: Option<usize>,
    pub oracle_budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { oracle_max_vertices: None, oracle_budget: DEFAULT_BUDGET }
    }
}

pub fn solve(g: &OrientedTriangulation2, alpha: &Coloring, beta: &Coloring) -> Result<SolveOutcome, ReconfigureError> {
    Ok(solve_with(g, alpha, beta, SolveOptions::default())?.outcome)
}

pub fn solve_with(
    g: &OrientedTriangulation2,
    alpha: &Coloring,
    beta: &Coloring,
    options: SolveOptions,
) -> Result<Solved, ReconfigureError> {
    if let Some(v) = g.first_odd_vertex() {
        return Err(ColoringError::NotEven(v).into());
    }
    for c in [alpha, beta] {
        if c.len() != g.vertex_count() {
            return Err(ReconfigureError::Mismatch(format!(
                "coloring has {} entries for {} vertices",
                c.len(),
                g.vertex_count()
            )));
        }
        if c.k() != 4 {
            return Err(ReconfigureError::Mismatch(format!("palette size {} (expected 4)", c.k())));
        }
    }
    let balanced_a = signatures(g, alpha)?.is_balanced(g);
    let balanced_b = signatures(g, beta)?.is_balanced(g);
    let outcome = match (balanced_a, balanced_b) {
        (true, true) => {
            let (mut seq, a3) = descend_to_3coloring(g, alpha)?;
            let (seq_b, b3) = descend_to_3coloring(g, beta)?;
            seq.extend(&bridge_3colorings(g, &a3, &b3)?);
            seq.extend(&seq_b.reversed_from(beta));
            SolveOutcome::Sequence(seq)
        }
        (true, false) | (false, true) => SolveOutcome::DifferentComponents,
        (false, false) => {
            if options.oracle_max_vertices.is_some_and(|m| g.vertex_count() <= m) {
                let graph = Graph::from_triangulation(g);
                let (same, path) =
                    same_component(&graph, 4, alpha.colors(), beta.colors(), None, options.oracle_budget)?;
                let outcome = if same {
                    SolveOutcome::Sequence(RecolorSequence::new(path.expect("path for reachable target")))
                } else {
                    SolveOutcome::DifferentComponents
                };
                return Ok(Solved { outcome, by_oracle: true });
            }
            SolveOutcome::Undecided
        }
    };
    Ok(Solved { outcome, by_oracle: false })
}
