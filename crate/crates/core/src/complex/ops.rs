//! Gluing along faces and barycentric subdivision.

use super::{ComplexError, FaceId, OrientedTriangulation2, VertexId};

/// Result of [`glue_along_face`]. Vertices of the first triangulation keep their ids.
#[derive(Debug, Clone)]
pub struct Glued {
    pub tri: OrientedTriangulation2,
    /// Id in `tri` of each vertex of the second triangulation.
    pub second_map: Vec<VertexId>,
}

/// Glues `g2` onto `g1` by removing face `f1` of `g1` and face `f2` of `g2` and
/// identifying `g2.face(f2)[i]` with `matching[i]`, a vertex of `f1`.
///
/// For a coherent result the matching has to reverse orientation, so `matching`
/// must be a cyclic rotation of `f1` read backwards. Vertices of `g2` outside `f2`
/// are appended after the vertices of `g1` in ascending order.
pub fn glue_along_face(
    g1: &OrientedTriangulation2,
    f1: FaceId,
    g2: &OrientedTriangulation2,
    f2: FaceId,
    matching: [VertexId; 3],
) -> Result<Glued, ComplexError> {
    if f1 >= g1.face_count() || f2 >= g2.face_count() {
        return Err(ComplexError::Glue("face id out of range".into()));
    }
    let face1 = g1.face(f1);
    let mut sorted_m = matching;
    sorted_m.sort_unstable();
    let mut sorted_f = face1;
    sorted_f.sort_unstable();
    if sorted_m != sorted_f {
        return Err(ComplexError::Glue(format!("matching {matching:?} is not a permutation of face {face1:?}")));
    }
    let reversed = [face1[0], face1[2], face1[1]];
    let is_reversal = (0..3).any(|r| (0..3).all(|i| matching[i] == reversed[(i + r) % 3]));
    if !is_reversal {
        // Same orientation on both sides: every edge of the seam would be doubled.
        let (u, v) = (matching[0], matching[1]);
        return Err(ComplexError::Glue(format!("matching preserves orientation; edge ({u}, {v}) would be doubled")));
    }

    let face2 = g2.face(f2);
    let mut second_map = vec![usize::MAX; g2.vertex_count()];
    for i in 0..3 {
        second_map[face2[i]] = matching[i];
    }
    let mut next = g1.vertex_count();
    for slot in second_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut faces: Vec<[VertexId; 3]> =
        g1.faces().iter().enumerate().filter(|&(f, _)| f != f1).map(|(_, &face)| face).collect();
    faces.extend(g2.faces().iter().enumerate().filter(|&(f, _)| f != f2).map(|(_, face)| face.map(|v| second_map[v])));
    let tri = OrientedTriangulation2::from_faces(next, faces)?;
    Ok(Glued { tri, second_map })
}

/// Barycentric subdivision. Original vertices keep their ids, then one vertex per
/// edge (in edge order), then one per face (in face order).
pub fn barycentric_subdivision(g: &OrientedTriangulation2) -> OrientedTriangulation2 {
    let nv = g.vertex_count();
    let ne = g.edge_count();
    let mid = |u: VertexId, v: VertexId| nv + g.edge_id(u, v).expect("face edge");
    let mut faces = Vec::with_capacity(6 * g.face_count());
    for (f, &[a, b, c]) in g.faces().iter().enumerate() {
        let z = nv + ne + f;
        let (ab, bc, ca) = (mid(a, b), mid(b, c), mid(c, a));
        faces.extend([[a, ab, z], [ab, b, z], [b, bc, z], [bc, c, z], [c, ca, z], [ca, a, z]]);
    }
    OrientedTriangulation2::from_faces(nv + ne + g.face_count(), faces).expect("subdivision of a valid triangulation")
}

/// The dimension coloring of a barycentric subdivision: 0 for original vertices,
/// 1 for edge midpoints, 2 for face centers.
pub fn barycentric_dimension_colors(g: &OrientedTriangulation2) -> Vec<u8> {
    let mut colors = vec![0u8; g.vertex_count()];
    colors.extend(std::iter::repeat_n(1u8, g.edge_count()));
    colors.extend(std::iter::repeat_n(2u8, g.face_count()));
    colors
}
