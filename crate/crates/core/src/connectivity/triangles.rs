//! Triangle listing and separating triangles.

use crate::complex::{OrientedTriangulation2, VertexId};

/// All 3-cycles of the 1-skeleton as ascending triples, sorted.
///
/// Vertices are ranked by (degree, id) and every edge is directed towards the higher
/// rank; each triangle is found once from its lowest-ranked vertex. Out-degrees stay
/// small on planar graphs, so the scan is near-linear.
pub fn triangles(g: &OrientedTriangulation2) -> Vec<[VertexId; 3]> {
    let n = g.vertex_count();
    let rank_key = |v: VertexId| (g.degree(v), v);
    let forward: Vec<Vec<VertexId>> =
        (0..n).map(|u| g.neighbors(u).iter().copied().filter(|&w| rank_key(w) > rank_key(u)).collect()).collect();
    let mut mark = vec![usize::MAX; n];
    let mut out = Vec::new();
    for u in 0..n {
        for &w in &forward[u] {
            mark[w] = u;
        }
        for &v in &forward[u] {
            for &w in &forward[v] {
                if mark[w] == u {
                    let mut t = [u, v, w];
                    t.sort_unstable();
                    out.push(t);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Triangles that do not bound a face.
pub fn separating_triangles(g: &OrientedTriangulation2) -> Vec<[VertexId; 3]> {
    triangles(g).into_iter().filter(|&[a, b, c]| !g.is_face(a, b, c)).collect()
}

/// For triangulations with at least five vertices: no separating triangle (which forces
/// minimum degree at least four).
pub fn is_four_connected(g: &OrientedTriangulation2) -> bool {
    g.vertex_count() >= 5 && (0..g.vertex_count()).all(|v| g.degree(v) >= 4) && separating_triangles(g).is_empty()
}
