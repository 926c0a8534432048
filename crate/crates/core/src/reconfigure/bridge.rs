//! Moving between two 3-colorings by whole color-class moves.

use super::{RecolorSequence, ReconfigureError};
use crate::coloring::{Color, Coloring};
use crate::complex::{OrientedTriangulation2, VertexId};

/// A sequence from `alpha` to `beta`, both using at most three of the four colors.
///
/// On an even triangulation the two colorings differ by a permutation of colors. Each
/// color class is moved as a whole into a currently empty color, one vertex at a time
/// in ascending order; a class is independent, so every intermediate coloring is proper.
pub fn bridge_3colorings(
    g: &OrientedTriangulation2,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<RecolorSequence, ReconfigureError> {
    for c in [alpha, beta] {
        if c.k() != 4 {
            return Err(crate::coloring::ColoringError::WrongPalette { expected: 4, found: c.k() }.into());
        }
        c.check_proper(g)?;
        if !c.is_3_coloring() {
            return Err(ReconfigureError::NotThreeColoring);
        }
    }
    // Class members and target color, keyed by the class's color under alpha.
    let mut members: [Vec<VertexId>; 4] = Default::default();
    let mut target: [Option<Color>; 4] = [None; 4];
    for v in 0..g.vertex_count() {
        let (a, b) = (alpha.get(v) as usize, beta.get(v));
        members[a].push(v);
        match target[a] {
            None => target[a] = Some(b),
            Some(t) if t != b => {
                return Err(ReconfigureError::Internal(format!(
                    "colorings are not related by a permutation (vertex {v})"
                )));
            }
            _ => {}
        }
    }
    let mut targets_seen = [false; 4];
    for t in target.iter().flatten() {
        if std::mem::replace(&mut targets_seen[*t as usize], true) {
            return Err(ReconfigureError::Internal("colorings are not related by a permutation".into()));
        }
    }

    // current[class] = color the class has right now.
    let mut current: [Option<Color>; 4] = [None; 4];
    for (class, m) in members.iter().enumerate() {
        if !m.is_empty() {
            current[class] = Some(class as Color);
        }
    }
    let mut steps = Vec::new();
    let occupied = |current: &[Option<Color>; 4], c: Color| current.contains(&Some(c));
    loop {
        let misplaced: Vec<usize> = (0..4).filter(|&i| current[i].is_some() && current[i] != target[i]).collect();
        let Some(&first) = misplaced.first() else { break };
        let (class, to) = match misplaced.iter().find(|&&i| !occupied(&current, target[i].expect("class has target"))) {
            Some(&i) => (i, target[i].expect("class has target")),
            None => {
                // Every target is occupied: park the smallest misplaced class in an empty color.
                let empty = (0..4).find(|&c| !occupied(&current, c)).expect("at most three classes");
                (first, empty)
            }
        };
        for &v in &members[class] {
            steps.push((v, to));
        }
        current[class] = Some(to);
    }
    Ok(RecolorSequence::new(steps))
}
