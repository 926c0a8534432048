//! 4-contractions, twin-contractions and their inverses.

use super::pieces::is_octahedron;
use super::triangles::is_four_connected;
use super::ConnectivityError;
use crate::complex::{OrientedTriangulation2, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ContractionKind {
    /// Remove a degree-4 vertex and identify two opposite link vertices.
    Four,
    /// Remove two adjacent degree-4 vertices and identify their two common neighbors.
    Twin,
}

/// One contraction `before -> after`. Vertex ids without a prime refer to `before`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStep {
    pub kind: ContractionKind,
    /// `[v]` for a 4-contraction, `[u, v]` for a twin-contraction (`u` is adjacent to `w2`).
    pub removed: Vec<VertexId>,
    /// Identified pair `(w1, w3)`, `w1 < w3`.
    pub pair: (VertexId, VertexId),
    /// The other two vertices around the hole; `w2` is adjacent to the `u` of a twin.
    pub w2: VertexId,
    pub w4: VertexId,
    /// Old id to new id; `None` for removed vertices; `w3` maps to the survivor.
    pub map: Vec<Option<VertexId>>,
    /// Expansion data in `after` ids: split `survivor` so that the neighbors strictly
    /// between `a` and `b` (counter-clockwise) stay with it.
    pub survivor: VertexId,
    pub a: VertexId,
    pub b: VertexId,
}

impl ContractionStep {
    fn key(&self) -> (VertexId, (VertexId, VertexId), ContractionKind) {
        (*self.removed.iter().min().expect("removes a vertex"), self.pair, self.kind)
    }
}

/// Candidate steps in tie-break order: smallest removed vertex, then identified pair, then 4 before twin.
fn candidates(
    g: &OrientedTriangulation2,
) -> Vec<(ContractionKind, Vec<VertexId>, VertexId, VertexId, VertexId, VertexId)> {
    let mut out = Vec::new();
    for x in 0..g.vertex_count() {
        if g.degree(x) != 4 {
            continue;
        }
        let ring = g.link_cycle(x);
        for s in 0..2 {
            let (w1, w2, w3, w4) = (ring[s], ring[s + 1], ring[(s + 2) % 4], ring[(s + 3) % 4]);
            out.push((ContractionKind::Four, vec![x], w1.min(w3), w1.max(w3), w2, w4));
        }
        for &y in g.neighbors(x) {
            if y <= x || g.degree(y) != 4 {
                continue;
            }
            // Common neighbors are the third vertices of the two faces on edge xy.
            let c1 = g.third_vertex(g.left_face(x, y).expect("edge"), x, y);
            let c2 = g.third_vertex(g.left_face(y, x).expect("edge"), x, y);
            let other = |z: VertexId| {
                g.neighbors(z).iter().copied().find(|&w| w != c1 && w != c2 && w != x && w != y).expect("degree four")
            };
            out.push((ContractionKind::Twin, vec![x, y], c1.min(c2), c1.max(c2), other(x), other(y)));
        }
    }
    out.sort_by_key(|c| (c.1.iter().copied().min().unwrap_or(0), (c.2, c.3), c.0));
    out
}

/// Applies a contraction without checking 4-connectivity of the result.
/// Returns `None` when the identification would create a multiple edge or the result is not a sphere.
pub fn contract(
    g: &OrientedTriangulation2,
    kind: ContractionKind,
    removed: &[VertexId],
    w1: VertexId,
    w3: VertexId,
    w2: VertexId,
    w4: VertexId,
) -> Option<(OrientedTriangulation2, ContractionStep)> {
    let expected = match kind {
        ContractionKind::Four => 1,
        ContractionKind::Twin => 2,
    };
    if removed.len() != expected || removed.iter().any(|&r| g.degree(r) != 4) || w2 == w4 || g.has_edge(w1, w3) {
        return None;
    }
    let mut allowed: Vec<VertexId> = removed.to_vec();
    allowed.extend([w2, w4]);
    allowed.sort_unstable();
    let mut common: Vec<VertexId> = g.neighbors(w1).iter().copied().filter(|&z| g.has_edge(w3, z)).collect();
    common.sort_unstable();
    if common != allowed {
        return None;
    }
    let n = g.vertex_count();
    let mut map = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if v != w3 && !removed.contains(&v) {
            map[v] = Some(next);
            next += 1;
        }
    }
    map[w3] = map[w1];
    let faces: Vec<[VertexId; 3]> = g
        .faces()
        .iter()
        .filter(|f| !f.iter().any(|v| removed.contains(v)))
        .map(|f| f.map(|v| map[v].expect("surviving vertex")))
        .collect();
    let after = OrientedTriangulation2::from_faces(next, faces).ok()?;
    let survivor = map[w1].expect("survivor");
    let (w2n, w4n) = (map[w2].expect("kept"), map[w4].expect("kept"));
    // Orient the split so that the old neighbors of w1 stay with the survivor.
    let from_w1: Vec<VertexId> = g.neighbors(w1).iter().filter_map(|&z| map[z]).collect();
    let (a, b) = [(w2n, w4n), (w4n, w2n)]
        .into_iter()
        .find(|&(a, b)| {
            let (stay, moved) = split_sides(&after, survivor, a, b);
            stay.iter().all(|z| from_w1.contains(z)) && moved.iter().all(|z| !from_w1.contains(z))
        })
        .expect("one orientation matches");
    let step = ContractionStep {
        kind,
        removed: removed.to_vec(),
        pair: (w1.min(w3), w1.max(w3)),
        w2,
        w4,
        map,
        survivor,
        a,
        b,
    };
    Some((after, step))
}

/// Neighbors of `x` strictly between `a` and `b` counter-clockwise, and strictly between `b` and `a`.
fn split_sides(g: &OrientedTriangulation2, x: VertexId, a: VertexId, b: VertexId) -> (Vec<VertexId>, Vec<VertexId>) {
    let ring = g.neighbors(x);
    let d = ring.len();
    let ia = g.rotation_index(x, a).expect("a is a neighbor");
    let ib = g.rotation_index(x, b).expect("b is a neighbor");
    let stay = (1..(ib + d - ia) % d).map(|k| ring[(ia + k) % d]).collect();
    let moved = (1..(ia + d - ib) % d).map(|k| ring[(ib + k) % d]).collect();
    (stay, moved)
}

/// Inverse of a contraction: splits `x` into `x` (keeping the neighbors strictly between
/// `a` and `b`) and a new vertex, then fills the 4-gon with one new vertex (`Four`) or
/// two adjacent ones (`Twin`). New vertices get the next ids: the split-off vertex, then
/// `v`, then `u` for a twin.
pub fn expand(
    g: &OrientedTriangulation2,
    kind: ContractionKind,
    x: VertexId,
    a: VertexId,
    b: VertexId,
) -> Result<OrientedTriangulation2, ConnectivityError> {
    if a == b || !g.has_edge(x, a) || !g.has_edge(x, b) {
        return Err(ConnectivityError::Expansion(format!("{a} and {b} must be distinct neighbors of {x}")));
    }
    let n = g.vertex_count();
    let y = n;
    let (_, moved) = split_sides(g, x, a, b);
    let ring = g.neighbors(x);
    let ib = g.rotation_index(x, b).expect("neighbor");
    // Faces of x from b round to a go to y.
    let to_y: Vec<(VertexId, VertexId)> =
        (0..=moved.len()).map(|k| (ring[(ib + k) % ring.len()], ring[(ib + k + 1) % ring.len()])).collect();
    let mut faces: Vec<[VertexId; 3]> = g
        .faces()
        .iter()
        .map(|&f| {
            if let Some(i) = f.iter().position(|&v| v == x) {
                let (p, q) = (f[(i + 1) % 3], f[(i + 2) % 3]);
                if to_y.contains(&(p, q)) {
                    return [y, p, q];
                }
            }
            f
        })
        .collect();
    let v = n + 1;
    let total = match kind {
        ContractionKind::Four => {
            faces.extend([[x, b, v], [b, y, v], [y, a, v], [a, x, v]]);
            n + 2
        }
        ContractionKind::Twin => {
            let u = n + 2;
            faces.extend([[x, b, v], [x, v, u], [x, u, a], [y, a, u], [y, u, v], [y, v, b]]);
            n + 3
        }
    };
    Ok(OrientedTriangulation2::from_faces(total, faces)?)
}

/// The first applicable step in tie-break order whose result is 4-connected and even.
pub fn next_contraction(g: &OrientedTriangulation2) -> Option<(OrientedTriangulation2, ContractionStep)> {
    candidates(g).into_iter().find_map(|(kind, removed, w1, w3, w2, w4)| {
        let (after, step) = contract(g, kind, &removed, w1, w3, w2, w4)?;
        debug_assert_eq!(step.key(), (removed.iter().copied().min().unwrap_or(0), (w1, w3), kind));
        (after.is_even() && is_four_connected(&after)).then_some((after, step))
    })
}

/// Contracts a 4-connected even triangulation down to the octahedron. Entry `i` holds
/// the graph after step `i` and the step itself.
pub fn contraction_sequence(
    h: &OrientedTriangulation2,
) -> Result<Vec<(OrientedTriangulation2, ContractionStep)>, ConnectivityError> {
    if let Some(v) = h.first_odd_vertex() {
        return Err(ConnectivityError::NotEven(v));
    }
    if !is_four_connected(h) {
        return Err(ConnectivityError::NotFourConnected);
    }
    let mut out: Vec<(OrientedTriangulation2, ContractionStep)> = Vec::new();
    let mut cur = h.clone();
    while !is_octahedron(&cur) {
        let Some((after, step)) = next_contraction(&cur) else {
            return Err(ConnectivityError::Internal(format!(
                "no contraction applies to a 4-connected even triangulation with {} vertices",
                cur.vertex_count()
            )));
        };
        cur = after.clone();
        out.push((after, step));
    }
    Ok(out)
}
