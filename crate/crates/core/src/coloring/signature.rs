//! The signature map on faces and the nonsingular-edge classification.

use super::{Color, Coloring, ColoringError};
use crate::complex::{EdgeId, FaceId, OrientedTriangulation2, VertexId};

/// Sign of the permutation sorting `colors` ascending (entries must be distinct).
pub fn permutation_sign<T: Ord>(colors: &[T]) -> i8 {
    let mut sign = 1;
    for i in 0..colors.len() {
        for j in i + 1..colors.len() {
            if colors[i] > colors[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Signature of a simplex whose vertices, in orientation order, carry the distinct
/// `colors` out of a palette of `colors.len() + 1`: the sign of the sorting permutation
/// times `(-1)^m`, where `m` is the missing color.
pub fn sign_of_colors(colors: &[Color]) -> i8 {
    let palette = colors.len() as u32 + 1;
    let present: u32 = colors.iter().map(|&c| 1u32 << c).sum();
    let missing = (0..palette).find(|&c| present & (1 << c) == 0).expect("one color is missing");
    let parity = if missing % 2 == 0 { 1 } else { -1 };
    permutation_sign(colors) * parity
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Singular,
    PlusNonsingular,
    MinusNonsingular,
}

impl EdgeClass {
    pub fn is_nonsingular(self) -> bool {
        self != EdgeClass::Singular
    }

    /// `+1` or `-1` for nonsingular edges, `0` for singular ones.
    pub fn sign(self) -> i8 {
        match self {
            EdgeClass::Singular => 0,
            EdgeClass::PlusNonsingular => 1,
            EdgeClass::MinusNonsingular => -1,
        }
    }
}

/// Face signs and edge classes of a 4-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureState {
    face_sign: Vec<i8>,
    edge_class: Vec<EdgeClass>,
}

fn face_sign(alpha: &Coloring, face: [VertexId; 3]) -> i8 {
    sign_of_colors(&face.map(|v| alpha.get(v)))
}

fn classify(g: &OrientedTriangulation2, face_sign: &[i8], e: EdgeId) -> EdgeClass {
    let [f, h] = g.edge_faces(e);
    match (face_sign[f], face_sign[h]) {
        (1, 1) => EdgeClass::PlusNonsingular,
        (-1, -1) => EdgeClass::MinusNonsingular,
        _ => EdgeClass::Singular,
    }
}

/// Computes the signature state of a proper 4-coloring.
pub fn signatures(g: &OrientedTriangulation2, alpha: &Coloring) -> Result<SignatureState, ColoringError> {
    if alpha.k() != 4 {
        return Err(ColoringError::WrongPalette { expected: 4, found: alpha.k() });
    }
    alpha.check_proper(g)?;
    let face_sign: Vec<i8> = g.faces().iter().map(|&f| face_sign(alpha, f)).collect();
    let edge_class = (0..g.edge_count()).map(|e| classify(g, &face_sign, e)).collect();
    Ok(SignatureState { face_sign, edge_class })
}

/// Whether every vertex has as many `+1` faces as `-1` faces around it.
pub fn is_balanced(g: &OrientedTriangulation2, alpha: &Coloring) -> Result<bool, ColoringError> {
    Ok(signatures(g, alpha)?.is_balanced(g))
}

impl SignatureState {
    pub fn face_sign(&self, f: FaceId) -> i8 {
        self.face_sign[f]
    }

    pub fn face_signs(&self) -> &[i8] {
        &self.face_sign
    }

    pub fn edge_class(&self, e: EdgeId) -> EdgeClass {
        self.edge_class[e]
    }

    pub fn edge_classes(&self) -> &[EdgeClass] {
        &self.edge_class
    }

    pub fn is_nonsingular(&self, e: EdgeId) -> bool {
        self.edge_class[e].is_nonsingular()
    }

    /// All nonsingular edges, ascending.
    pub fn nonsingular_edges(&self) -> Vec<EdgeId> {
        (0..self.edge_class.len()).filter(|&e| self.is_nonsingular(e)).collect()
    }

    /// Nonsingular edges at `v`, in rotation order.
    pub fn ns(&self, g: &OrientedTriangulation2, v: VertexId) -> Vec<EdgeId> {
        g.incident_edges(v).iter().copied().filter(|&e| self.is_nonsingular(e)).collect()
    }

    pub fn ns_plus(&self, g: &OrientedTriangulation2, v: VertexId) -> Vec<EdgeId> {
        g.incident_edges(v).iter().copied().filter(|&e| self.edge_class[e] == EdgeClass::PlusNonsingular).collect()
    }

    pub fn ns_minus(&self, g: &OrientedTriangulation2, v: VertexId) -> Vec<EdgeId> {
        g.incident_edges(v).iter().copied().filter(|&e| self.edge_class[e] == EdgeClass::MinusNonsingular).collect()
    }

    /// `(#plus faces, #minus faces)` around `v`.
    pub fn star_counts(&self, g: &OrientedTriangulation2, v: VertexId) -> (usize, usize) {
        let plus = g.star_faces(v).iter().filter(|&&f| self.face_sign[f] > 0).count();
        (plus, g.degree(v) - plus)
    }

    pub fn is_balanced_at(&self, g: &OrientedTriangulation2, v: VertexId) -> bool {
        let (p, m) = self.star_counts(g, v);
        p == m
    }

    /// One pass over the faces.
    pub fn is_balanced(&self, g: &OrientedTriangulation2) -> bool {
        let mut excess = vec![0i64; g.vertex_count()];
        for (f, face) in g.faces().iter().enumerate() {
            for &v in face {
                excess[v] += self.face_sign[f] as i64;
            }
        }
        excess.iter().all(|&x| x == 0)
    }

    pub fn unbalanced_vertices(&self, g: &OrientedTriangulation2) -> Vec<VertexId> {
        (0..g.vertex_count()).filter(|&v| !self.is_balanced_at(g, v)).collect()
    }

    /// Updates the state after `v` was recolored, where `alpha` is the new coloring.
    /// Only the faces around `v` and the edges of its star and link are touched.
    pub fn update_after_change(&mut self, g: &OrientedTriangulation2, alpha: &Coloring, v: VertexId) {
        for &f in g.star_faces(v) {
            self.face_sign[f] = face_sign(alpha, g.face(f));
        }
        for &e in g.incident_edges(v) {
            self.edge_class[e] = classify(g, &self.face_sign, e);
        }
        for e in g.link_edges(v) {
            self.edge_class[e] = classify(g, &self.face_sign, e);
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::VecDeque;

    use super::*;
    use crate::coloring::{apply_single_change, find_3_coloring, recolorable_colors};
    use crate::complex::{double_wheel, octahedron, stacked_octahedra};

    #[test]
    fn sign_table() {
        assert_eq!(sign_of_colors(&[1, 2, 3]), 1);
        assert_eq!(sign_of_colors(&[0, 2, 3]), -1);
        assert_eq!(sign_of_colors(&[0, 1, 3]), 1);
        assert_eq!(sign_of_colors(&[0, 1, 2]), -1);
        // Cyclic rotations keep the sign, transpositions flip it.
        assert_eq!(sign_of_colors(&[2, 3, 1]), 1);
        assert_eq!(sign_of_colors(&[2, 1, 3]), -1);
        assert_eq!(sign_of_colors(&[2, 0, 3]), 1);
    }

    #[test]
    fn three_colorings_are_balanced_with_no_nonsingular_edges() {
        let g = stacked_octahedra(6, 4);
        let a = find_3_coloring(&g).unwrap();
        let s = signatures(&g, &a).unwrap();
        assert!(s.nonsingular_edges().is_empty());
        assert!(s.is_balanced(&g));
    }

    #[test]
    fn wrong_palette_rejected() {
        let g = octahedron();
        let a = find_3_coloring(&g).unwrap().with_palette(5).unwrap();
        assert!(matches!(signatures(&g, &a), Err(ColoringError::WrongPalette { .. })));
    }

    #[test]
    fn change_from_three_coloring_makes_link_nonsingular() {
        let g = double_wheel(10).unwrap();
        let a = find_3_coloring(&g).unwrap();
        for v in 0..g.vertex_count() {
            let b = apply_single_change(&g, &a, v, 3).unwrap();
            let s = signatures(&g, &b).unwrap();
            let mut link = g.link_edges(v);
            link.sort_unstable();
            assert_eq!(s.nonsingular_edges(), link);
            // Signs change exactly on the star.
            let s0 = signatures(&g, &a).unwrap();
            for f in 0..g.face_count() {
                let in_star = g.star_faces(v).contains(&f);
                assert_eq!(s.face_sign(f) == s0.face_sign(f), !in_star);
            }
        }
    }

    /// Propagates signs from face 0 using only the rule that the sign is kept across
    /// an edge exactly when the two opposite vertices differ in color.
    fn propagated_signs(g: &OrientedTriangulation2, alpha: &Coloring) -> Option<Vec<i8>> {
        let mut sign = vec![0i8; g.face_count()];
        sign[0] = sign_of_colors(&g.face(0).map(|v| alpha.get(v)));
        let mut queue = VecDeque::from([0]);
        while let Some(f) = queue.pop_front() {
            let [a, b, c] = g.face(f);
            for (u, w) in [(a, b), (b, c), (c, a)] {
                let h = g.left_face(w, u).unwrap();
                let x = g.third_vertex(f, u, w);
                let y = g.third_vertex(h, u, w);
                let expected = if alpha.get(x) == alpha.get(y) { -sign[f] } else { sign[f] };
                if sign[h] == 0 {
                    sign[h] = expected;
                    queue.push_back(h);
                } else if sign[h] != expected {
                    return None;
                }
            }
        }
        Some(sign)
    }

    #[test]
    fn closed_form_matches_propagation() {
        use rand::{Rng, SeedableRng};
        let g = stacked_octahedra(3, 9);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let mut a = find_3_coloring(&g).unwrap();
        for _ in 0..500 {
            let v = rng.gen_range(0..g.vertex_count());
            let options = recolorable_colors(&g, &a, v);
            if !options.is_empty() {
                a = apply_single_change(&g, &a, v, options[rng.gen_range(0..options.len())]).unwrap();
            }
            let s = signatures(&g, &a).unwrap();
            assert_eq!(propagated_signs(&g, &a).as_deref(), Some(s.face_signs()));
        }
    }

    #[test]
    fn incremental_update_matches_recompute() {
        use rand::{Rng, SeedableRng};
        let g = double_wheel(12).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut a = find_3_coloring(&g).unwrap();
        let mut s = signatures(&g, &a).unwrap();
        for _ in 0..300 {
            let v = rng.gen_range(0..g.vertex_count());
            let options = recolorable_colors(&g, &a, v);
            if options.is_empty() {
                continue;
            }
            a = apply_single_change(&g, &a, v, options[0]).unwrap();
            s.update_after_change(&g, &a, v);
            assert_eq!(s, signatures(&g, &a).unwrap());
        }
    }
}
