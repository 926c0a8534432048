//! Vertex colorings, single-changes and the coloring file format.

mod signature;

use std::collections::VecDeque;

use thiserror::Error;

use crate::complex::{OrientedTriangulation2, VertexId};
use crate::text::{header, join, parse_all, Lines, ParseError};

pub use signature::{is_balanced, permutation_sign, sign_of_colors, signatures, EdgeClass, SignatureState};

pub type Color = u8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("palette size {0} is too small (need at least 3)")]
    PaletteTooSmall(usize),
    #[error("vertex {vertex} has color {color}, outside the palette of size {k}")]
    ColorOutOfRange { vertex: VertexId, color: Color, k: usize },
    #[error("coloring has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge ({0}, {1}) is monochromatic")]
    Improper(VertexId, VertexId),
    #[error("triangulation is not even (vertex {0} has odd degree)")]
    NotEven(VertexId),
    #[error("operation requires palette size {expected}, got {found}")]
    WrongPalette { expected: usize, found: usize },
    #[error("vertex {vertex} cannot be recolored to {color}")]
    NotRecolorable { vertex: VertexId, color: Color },
}

/// A total assignment of colors `0..k` to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: usize,
    colors: Vec<Color>,
}

impl Coloring {
    /// Checks the palette and color range; properness is checked separately.
    pub fn new(k: usize, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if k < 3 {
            return Err(ColoringError::PaletteTooSmall(k));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|&(_, &c)| c as usize >= k) {
            return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k });
        }
        Ok(Coloring { k, colors })
    }

    /// Like [`Coloring::new`] but also requires a proper coloring of `g`.
    pub fn proper(g: &OrientedTriangulation2, k: usize, colors: Vec<Color>) -> Result<Self, ColoringError> {
        let c = Self::new(k, colors)?;
        c.check_proper(g)?;
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn get(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    /// Same colors, different declared palette.
    pub fn with_palette(&self, k: usize) -> Result<Self, ColoringError> {
        Self::new(k, self.colors.clone())
    }

    pub fn check_proper(&self, g: &OrientedTriangulation2) -> Result<(), ColoringError> {
        if self.colors.len() != g.vertex_count() {
            return Err(ColoringError::LengthMismatch { expected: g.vertex_count(), found: self.colors.len() });
        }
        for &[u, v] in g.edges() {
            if self.colors[u] == self.colors[v] {
                return Err(ColoringError::Improper(u, v));
            }
        }
        Ok(())
    }

    pub fn is_proper(&self, g: &OrientedTriangulation2) -> bool {
        self.check_proper(g).is_ok()
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        let mut seen = [false; 256];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// Whether at most three colors are used.
    pub fn is_3_coloring(&self) -> bool {
        self.colors_used() <= 3
    }

    pub(crate) fn set(&mut self, v: VertexId, c: Color) {
        self.colors[v] = c;
    }
}

/// Parses a `col <k> <nV>` document.
pub fn parse_coloring(text: &str) -> Result<Coloring, ColoringError> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "col", 2)?;
    let (k, n) = (h[0], h[1]);
    let mut colors: Vec<Color> = Vec::with_capacity(n);
    while colors.len() < n {
        let (line, tokens) = lines.expect_tokens("colors")?;
        colors.extend(parse_all::<Color>(&tokens, line)?);
    }
    if colors.len() != n {
        return Err(ColoringError::LengthMismatch { expected: n, found: colors.len() });
    }
    lines.expect_end()?;
    Coloring::new(k, colors)
}

pub fn write_coloring(c: &Coloring) -> String {
    format!("col {} {}\n{}\n", c.k, c.colors.len(), join(c.colors.iter()))
}

/// The 3-coloring of an even triangulation with face 0 colored `(0, 1, 2)` in stored order,
/// returned with palette 4.
pub fn find_3_coloring(g: &OrientedTriangulation2) -> Result<Coloring, ColoringError> {
    if let Some(v) = g.first_odd_vertex() {
        return Err(ColoringError::NotEven(v));
    }
    const UNSET: Color = Color::MAX;
    let mut colors = vec![UNSET; g.vertex_count()];
    let [a, b, c] = g.face(0);
    colors[a] = 0;
    colors[b] = 1;
    colors[c] = 2;
    let mut seen = vec![false; g.face_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for h in g.face_neighbors(f) {
            if seen[h] {
                continue;
            }
            seen[h] = true;
            let face = g.face(h);
            let set: Vec<VertexId> = face.iter().copied().filter(|&x| colors[x] != UNSET).collect();
            if set.len() == 2 {
                let x = *face.iter().find(|&&x| colors[x] == UNSET).expect("one uncolored vertex");
                colors[x] = 3 - colors[set[0]] - colors[set[1]];
            }
            queue.push_back(h);
        }
    }
    let coloring = Coloring::new(4, colors)?;
    coloring.check_proper(g)?;
    Ok(coloring)
}

/// Colors that `v` can be recolored to: the palette minus its own color and its neighbors' colors.
pub fn recolorable_colors(g: &OrientedTriangulation2, alpha: &Coloring, v: VertexId) -> Vec<Color> {
    let mut blocked = vec![false; alpha.k];
    blocked[alpha.get(v) as usize] = true;
    for &w in g.neighbors(v) {
        blocked[alpha.get(w) as usize] = true;
    }
    (0..alpha.k as Color).filter(|&c| !blocked[c as usize]).collect()
}

/// Recolors `v` to `c`, which must be one of [`recolorable_colors`].
pub fn apply_single_change(
    g: &OrientedTriangulation2,
    alpha: &Coloring,
    v: VertexId,
    c: Color,
) -> Result<Coloring, ColoringError> {
    if c as usize >= alpha.k || c == alpha.get(v) || g.neighbors(v).iter().any(|&w| alpha.get(w) == c) {
        return Err(ColoringError::NotRecolorable { vertex: v, color: c });
    }
    let mut out = alpha.clone();
    out.set(v, c);
    Ok(out)
}
