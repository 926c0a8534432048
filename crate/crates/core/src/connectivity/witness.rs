//! Unbalanced 4-colorings of triangulations whose recoloring graph is disconnected.

use super::contract::{contraction_sequence, ContractionKind, ContractionStep};
use super::pieces::{four_connected_pieces, is_octahedron};
use super::ConnectivityError;
use crate::coloring::{find_3_coloring, is_balanced, Color, Coloring};
use crate::complex::{double_wheel, OrientedTriangulation2};
use crate::graph::Graph;

/// The lexicographically first unbalanced proper 4-coloring of `double_wheel(8)`
/// (cycle 0..6, apexes 6 and 7). Re-derived by exhaustive search in the tests below.
pub const DOUBLE_WHEEL_8_UNBALANCED: [Color; 8] = [0, 1, 2, 0, 1, 2, 3, 3];

pub fn double_wheel_8_witness() -> Coloring {
    Coloring::new(4, DOUBLE_WHEEL_8_UNBALANCED.to_vec()).expect("fixture within palette")
}

fn smallest_missing(used: &[Color]) -> Color {
    (0..4).find(|c| !used.contains(c)).expect("at most three colors excluded")
}

/// Extends a coloring of the contracted graph to the graph before `step`.
pub fn lift_coloring(step: &ContractionStep, after: &Coloring) -> Coloring {
    let colors_after = after.colors();
    let mut colors: Vec<Color> = step.map.iter().map(|m| m.map_or(Color::MAX, |i| colors_after[i])).collect();
    let at = |v: usize| colors_after[step.map[v].expect("kept vertex")];
    let (s, w2, w4) = (colors_after[step.survivor], at(step.w2), at(step.w4));
    match step.kind {
        ContractionKind::Four => {
            colors[step.removed[0]] = smallest_missing(&[s, w2, w4]);
        }
        ContractionKind::Twin => {
            let cu = smallest_missing(&[s, w2]);
            colors[step.removed[0]] = cu;
            colors[step.removed[1]] = smallest_missing(&[s, w4, cu]);
        }
    }
    Coloring::new(4, colors).expect("colors within palette")
}

/// An unbalanced 4-coloring of an even triangulation with a non-octahedral piece.
///
/// The non-octahedral piece is contracted to the octahedron; the graph just before the
/// last step is the order-8 double wheel, whose unbalanced coloring is lifted back up the
/// sequence. The rest of the triangulation gets a 3-coloring, permuted per separating
/// triangle to agree with the piece on that triangle.
pub fn unbalanced_witness(g: &OrientedTriangulation2) -> Result<Coloring, ConnectivityError> {
    if let Some(v) = g.first_odd_vertex() {
        return Err(ConnectivityError::NotEven(v));
    }
    let decomposition = four_connected_pieces(g);
    let piece = decomposition.pieces.iter().find(|p| !is_octahedron(&p.tri)).ok_or(ConnectivityError::AllOctahedral)?;
    let h = &piece.tri;
    let seq = contraction_sequence(h)?;
    let penultimate = if seq.len() >= 2 { &seq[seq.len() - 2].0 } else { h };
    let dw8 = double_wheel(8)?;
    let phi = penultimate.isomorphism_to(&dw8).ok_or_else(|| {
        ConnectivityError::Internal("graph before the last contraction is not the order-8 double wheel".into())
    })?;
    let mut alpha =
        Coloring::new(4, phi.iter().map(|&p| DOUBLE_WHEEL_8_UNBALANCED[p]).collect()).expect("fixture within palette");
    for (_, step) in seq.iter().rev().skip(1) {
        alpha = lift_coloring(step, &alpha);
    }
    alpha.check_proper(h)?;
    if is_balanced(h, &alpha)? {
        return Err(ConnectivityError::Internal("lifted coloring is balanced".into()));
    }

    let n = g.vertex_count();
    let mut colors = vec![Color::MAX; n];
    let mut in_piece = vec![false; n];
    for (i, &v) in piece.vertex_map.iter().enumerate() {
        colors[v] = alpha.get(i);
        in_piece[v] = true;
    }
    let beta = find_3_coloring(g)?;
    let graph = Graph::from_triangulation(g);
    let component = graph.components_avoiding(&in_piece);
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in (0..n).filter(|&v| !in_piece[v]) {
        groups.entry(component[v]).or_default().push(v);
    }
    for members in groups.values() {
        let mut attach: Vec<usize> =
            members.iter().flat_map(|&v| g.neighbors(v).iter().copied()).filter(|&w| in_piece[w]).collect();
        attach.sort_unstable();
        attach.dedup();
        if attach.len() != 3 {
            return Err(ConnectivityError::Internal(format!("component attaches to {} piece vertices", attach.len())));
        }
        let mut perm = [Color::MAX; 4];
        for &t in &attach {
            perm[beta.get(t) as usize] = colors[t];
        }
        let unused_from = perm.iter().position(|&c| c == Color::MAX).expect("3-coloring leaves one color");
        perm[unused_from] = smallest_missing(&attach.iter().map(|&t| colors[t]).collect::<Vec<_>>());
        for &v in members {
            colors[v] = perm[beta.get(v) as usize];
        }
    }
    let witness = Coloring::proper(g, 4, colors)?;
    if is_balanced(g, &witness)? {
        return Err(ConnectivityError::Internal("merged coloring is balanced".into()));
    }
    Ok(witness)
}
