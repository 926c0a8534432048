//! Recoloring sequences inside the 3-coloring component.

mod bridge;
mod descend;
mod pairing;
mod solve;
mod trails;

use thiserror::Error;

use crate::coloring::{Color, Coloring, ColoringError};
use crate::complex::{OrientedTriangulation2, VertexId};
use crate::oracle::OracleError;
use crate::text::{header, parse_all, Lines, ParseError};

pub use bridge::bridge_3colorings;
pub use descend::{descend_to_3coloring, descend_with, Descent, DescentOptions, DescentState, RegionMode};
pub use pairing::{build_admissible_pairing, check_admissible, check_admissible_at, NsPairing};
pub use solve::{solve, solve_with, SolveOptions, SolveOutcome, Solved};
pub use trails::{is_laminar, trails_and_regions, Trail, TrailDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconfigureError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("coloring is unbalanced at vertex {0}")]
    Unbalanced(VertexId),
    #[error("coloring uses all four colors")]
    NotThreeColoring,
    #[error("inputs do not match: {0}")]
    Mismatch(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Ordered single-vertex changes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecolorSequence {
    steps: Vec<(VertexId, Color)>,
}

impl RecolorSequence {
    pub fn new(steps: Vec<(VertexId, Color)>) -> Self {
        RecolorSequence { steps }
    }

    pub fn steps(&self) -> &[(VertexId, Color)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn extend(&mut self, other: &RecolorSequence) {
        self.steps.extend_from_slice(&other.steps);
    }

    /// The sequence that undoes this one, given the coloring it starts from.
    pub fn reversed_from(&self, start: &Coloring) -> RecolorSequence {
        let mut colors = start.colors().to_vec();
        let mut undo = Vec::with_capacity(self.steps.len());
        for &(v, c) in &self.steps {
            undo.push((v, colors[v]));
            colors[v] = c;
        }
        undo.reverse();
        RecolorSequence { steps: undo }
    }

    /// Applies every step without checks.
    pub fn replay(&self, start: &Coloring) -> Coloring {
        let mut out = start.clone();
        for &(v, c) in &self.steps {
            out.set(v, c);
        }
        out
    }
}

/// Why a sequence failed verification. `step` is the 0-based index of the failing
/// step, or the sequence length when only the final coloring is wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("sequence fails at step {step}: {reason}")]
pub struct SequenceError {
    pub step: usize,
    pub reason: String,
}

/// Replays `seq` from `alpha`, checking that every step changes exactly one vertex,
/// stays proper, and that the result is `beta`.
pub fn verify_sequence(
    g: &OrientedTriangulation2,
    alpha: &Coloring,
    seq: &RecolorSequence,
    beta: &Coloring,
) -> Result<(), SequenceError> {
    let fail = |step: usize, reason: String| Err(SequenceError { step, reason });
    if alpha.len() != g.vertex_count() || beta.len() != g.vertex_count() {
        return fail(0, "coloring length does not match the triangulation".into());
    }
    if let Err(e) = alpha.check_proper(g) {
        return fail(0, format!("start coloring: {e}"));
    }
    let mut colors = alpha.colors().to_vec();
    for (i, &(v, c)) in seq.steps.iter().enumerate() {
        if v >= colors.len() {
            return fail(i, format!("vertex {v} out of range"));
        }
        if c as usize >= alpha.k() {
            return fail(i, format!("color {c} outside the palette"));
        }
        if colors[v] == c {
            return fail(i, format!("vertex {v} already has color {c}"));
        }
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| colors[w] == c) {
            return fail(i, format!("vertex {v} and its neighbor {w} would both have color {c}"));
        }
        colors[v] = c;
    }
    if colors != beta.colors() {
        return fail(seq.len(), "final coloring differs from the target".into());
    }
    Ok(())
}

pub fn is_valid_sequence(g: &OrientedTriangulation2, alpha: &Coloring, seq: &RecolorSequence, beta: &Coloring) -> bool {
    verify_sequence(g, alpha, seq, beta).is_ok()
}

/// Parses a `seq <n>` document.
pub fn parse_sequence(text: &str) -> Result<RecolorSequence, ParseError> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "seq", 1)?;
    let mut steps = Vec::with_capacity(h[0]);
    for _ in 0..h[0] {
        let (line, tokens) = lines.expect_tokens("a step")?;
        if tokens.len() != 2 {
            return Err(ParseError::new(line, "a step is `vertex color`"));
        }
        let v: Vec<usize> = parse_all(&tokens, line)?;
        let c = Color::try_from(v[1]).map_err(|_| ParseError::new(line, "color out of range"))?;
        steps.push((v[0], c));
    }
    lines.expect_end()?;
    Ok(RecolorSequence { steps })
}

pub fn write_sequence(seq: &RecolorSequence) -> String {
    let mut out = format!("seq {}\n", seq.len());
    for (v, c) in &seq.steps {
        out.push_str(&format!("{v} {c}\n"));
    }
    out
}
