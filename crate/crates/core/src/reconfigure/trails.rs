//! Closed trails traced by a pairing and the face sets they enclose.

use std::collections::VecDeque;

use super::pairing::NsPairing;
use super::ReconfigureError;
use crate::coloring::SignatureState;
use crate::complex::{EdgeId, FaceId, OrientedTriangulation2, VertexId};

/// A closed trail together with its inside: the faces separated from the outer face by it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    /// Directed steps; `darts[i].1 == darts[i + 1].0`, and the last step returns to the start.
    pub darts: Vec<(VertexId, VertexId)>,
    pub edges: Vec<EdgeId>,
    /// Inside faces, ascending.
    pub inside: Vec<FaceId>,
}

impl Trail {
    pub fn contains_face(&self, f: FaceId) -> bool {
        self.inside.binary_search(&f).is_ok()
    }

    /// Sort key of the innermost-trail rule: size of the inside, then its smallest face.
    pub fn key(&self) -> (usize, FaceId) {
        (self.inside.len(), self.inside.first().copied().unwrap_or(usize::MAX))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailDecomposition {
    pub trails: Vec<Trail>,
    pub f_out: FaceId,
}

impl TrailDecomposition {
    pub fn volume(&self) -> usize {
        self.trails.iter().map(|t| t.inside.len()).sum()
    }

    /// Whether the inside sets form a laminar family.
    pub fn is_laminar(&self, face_count: usize) -> bool {
        is_laminar(self.trails.iter().map(|t| t.inside.as_slice()), face_count)
    }
}

/// Traces the closed trail through `start` (walked from its smaller endpoint).
pub(crate) fn trace_from(
    g: &OrientedTriangulation2,
    pairing: &NsPairing,
    start: EdgeId,
) -> (Vec<(VertexId, VertexId)>, Vec<EdgeId>) {
    let [u, w] = g.edge(start);
    let mut darts = vec![(u, w)];
    let mut edges = vec![start];
    let (mut cur, mut incoming) = (w, start);
    loop {
        let next = pairing.partner(g, cur, incoming).expect("nonsingular edge is paired at both ends");
        if next == start && cur == u {
            break;
        }
        let [a, b] = g.edge(next);
        let other = if a == cur { b } else { a };
        darts.push((cur, other));
        edges.push(next);
        assert!(edges.len() <= g.edge_count(), "trail does not close");
        cur = other;
        incoming = next;
    }
    (darts, edges)
}

/// Traces every trail through the given edges; each trail starts at its smallest edge,
/// provided all its edges are among `edges` and `edges` is ascending.
pub(crate) fn trace_all(
    g: &OrientedTriangulation2,
    pairing: &NsPairing,
    edges: &[EdgeId],
    visited: &mut [bool],
) -> Vec<(Vec<(VertexId, VertexId)>, Vec<EdgeId>)> {
    let mut out = Vec::new();
    for &e in edges {
        if visited[e] {
            continue;
        }
        let (darts, trail_edges) = trace_from(g, pairing, e);
        for &x in &trail_edges {
            assert!(!visited[x], "edge {x} lies on two trails");
            visited[x] = true;
        }
        out.push((darts, trail_edges));
    }
    out
}

/// Inside of a trail by checkerboard 2-coloring of the whole dual graph from `f_out`.
pub(crate) fn inside_from_scratch(g: &OrientedTriangulation2, on_trail: &[bool], f_out: FaceId) -> Vec<FaceId> {
    let mut side = vec![u8::MAX; g.face_count()];
    side[f_out] = 0;
    let mut queue = VecDeque::from([f_out]);
    while let Some(f) = queue.pop_front() {
        let [a, b, c] = g.face(f);
        for (x, y) in [(a, b), (b, c), (c, a)] {
            let e = g.edge_id(x, y).expect("face edge");
            let h = g.left_face(y, x).expect("closed surface");
            let s = side[f] ^ u8::from(on_trail[e]);
            if side[h] == u8::MAX {
                side[h] = s;
                queue.push_back(h);
            } else {
                assert_eq!(side[h], s, "trail does not bound a region");
            }
        }
    }
    (0..g.face_count()).filter(|&f| side[f] == 1).collect()
}

/// Traces all trails of `pairing` and computes their insides from scratch.
pub fn trails_and_regions(
    g: &OrientedTriangulation2,
    state: &SignatureState,
    pairing: &NsPairing,
    f_out: FaceId,
) -> Result<TrailDecomposition, ReconfigureError> {
    super::pairing::check_admissible(g, state, pairing).map_err(ReconfigureError::Internal)?;
    let ns = state.nonsingular_edges();
    let mut visited = vec![false; g.edge_count()];
    let mut on_trail = vec![false; g.edge_count()];
    let mut trails = Vec::new();
    for (darts, edges) in trace_all(g, pairing, &ns, &mut visited) {
        for &e in &edges {
            on_trail[e] = true;
        }
        let inside = inside_from_scratch(g, &on_trail, f_out);
        for &e in &edges {
            on_trail[e] = false;
        }
        trails.push(Trail { darts, edges, inside });
    }
    let dec = TrailDecomposition { trails, f_out };
    if !dec.is_laminar(g.face_count()) {
        return Err(ReconfigureError::Internal("inside sets are not laminar".into()));
    }
    Ok(dec)
}

/// Laminarity of a family of sorted face sets: processing sets by increasing size,
/// every previously built top-level set that meets the current one must lie inside it.
pub fn is_laminar<'a>(sets: impl Iterator<Item = &'a [FaceId]>, face_count: usize) -> bool {
    let mut sets: Vec<&[FaceId]> = sets.collect();
    sets.sort_by_key(|s| s.len());
    let mut top = vec![usize::MAX; face_count];
    let mut top_size: Vec<usize> = Vec::with_capacity(sets.len());
    let mut hits: Vec<usize> = vec![0; sets.len()];
    for (i, set) in sets.iter().enumerate() {
        let mut touched = Vec::new();
        for &f in *set {
            let t = top[f];
            if t != usize::MAX {
                if hits[t] == 0 {
                    touched.push(t);
                }
                hits[t] += 1;
            }
        }
        let nested = touched.iter().all(|&t| hits[t] == top_size[t]);
        for &t in &touched {
            hits[t] = 0;
        }
        if !nested {
            return false;
        }
        for &f in *set {
            top[f] = i;
        }
        top_size.push(set.len());
    }
    true
}
