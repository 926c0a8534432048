//! Splitting a triangulation along its separating triangles.

use std::collections::{BTreeMap, VecDeque};

use petgraph::unionfind::UnionFind;

use super::triangles::separating_triangles;
use crate::complex::{OrientedTriangulation2, VertexId};

/// A 4-connected piece with `vertex_map[i]` = the vertex of the whole triangulation that piece vertex `i` stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub tri: OrientedTriangulation2,
    pub vertex_map: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceDecomposition {
    /// Ascending triples.
    pub separating_triangles: Vec<[VertexId; 3]>,
    pub pieces: Vec<Piece>,
}

/// Oriented copy of triangle `t` that contains the directed edge `x -> y`.
fn oriented_containing(t: [VertexId; 3], x: VertexId, y: VertexId) -> [VertexId; 3] {
    let z = t.into_iter().find(|&v| v != x && v != y).expect("triangle has a third vertex");
    [x, y, z]
}

/// Splits `g` along every separating triangle at once.
///
/// Each separating triangle gets two caps, one facing each side. Faces and caps are
/// merged across edges with a union-find: around an edge `pq` the separating triangles
/// through it are nested, ordered by where their third vertex sits in the rotation at
/// `p`, and each consecutive pair of layers is joined. The classes are the pieces.
pub fn four_connected_pieces(g: &OrientedTriangulation2) -> PieceDecomposition {
    let seps = separating_triangles(g);
    let nf = g.face_count();
    // Node ids: faces, then caps `nf + 2i` (oriented as [a, b, c]) and `nf + 2i + 1` ([a, c, b]).
    let cap_face = |node: usize| -> [VertexId; 3] {
        let [a, b, c] = seps[(node - nf) / 2];
        if (node - nf).is_multiple_of(2) {
            [a, b, c]
        } else {
            [a, c, b]
        }
    };
    let cap_with = |i: usize, x: VertexId, y: VertexId| -> usize {
        let [a, b, c] = seps[i];
        let pos = [a, b, c];
        let ix = pos.iter().position(|&v| v == x).expect("vertex of triangle");
        // [a, b, c] contains x -> y iff y follows x cyclically.
        if pos[(ix + 1) % 3] == y {
            nf + 2 * i
        } else {
            nf + 2 * i + 1
        }
    };

    let mut through_edge: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    for (i, &[a, b, c]) in seps.iter().enumerate() {
        for (x, y) in [(a, b), (b, c), (a, c)] {
            through_edge[g.edge_id(x, y).expect("triangle edge")].push(i);
        }
    }

    let mut uf = UnionFind::<usize>::new(nf + 2 * seps.len());
    for (e, list) in through_edge.iter_mut().enumerate() {
        let [p, q] = g.edge(e);
        let f_left = g.left_face(p, q).expect("edge");
        let f_right = g.left_face(q, p).expect("edge");
        if list.is_empty() {
            uf.union(f_left, f_right);
            continue;
        }
        let d = g.degree(p);
        let at_q = g.rotation_index(p, q).expect("neighbor");
        let offset = |i: usize| {
            let c = seps[i].into_iter().find(|&v| v != p && v != q).expect("third vertex");
            (g.rotation_index(p, c).expect("neighbor") + d - at_q) % d
        };
        list.sort_by_key(|&i| offset(i));
        // Innermost on the left-face side first.
        let mut prev = f_left;
        for &i in list.iter() {
            uf.union(prev, cap_with(i, q, p));
            prev = cap_with(i, p, q);
        }
        uf.union(prev, f_right);
    }

    let mut classes: BTreeMap<usize, Vec<[VertexId; 3]>> = BTreeMap::new();
    for node in 0..nf + 2 * seps.len() {
        let face = if node < nf { g.face(node) } else { cap_face(node) };
        classes.entry(uf.find_mut(node)).or_default().push(face);
    }
    let pieces = classes.into_values().map(|faces| build_piece(g.vertex_count(), faces)).collect();
    PieceDecomposition { separating_triangles: seps, pieces }
}

fn build_piece(n: usize, faces: Vec<[VertexId; 3]>) -> Piece {
    let mut local = vec![usize::MAX; n];
    let mut vertex_map: Vec<VertexId> = faces.iter().flatten().copied().collect();
    vertex_map.sort_unstable();
    vertex_map.dedup();
    for (i, &v) in vertex_map.iter().enumerate() {
        local[v] = i;
    }
    let faces = faces.into_iter().map(|f| f.map(|v| local[v])).collect();
    let tri = OrientedTriangulation2::from_faces(vertex_map.len(), faces).expect("piece is a sphere triangulation");
    Piece { tri, vertex_map }
}

/// Splits `g` along one separating triangle by flooding faces, without regard to other triangles.
/// Returns the two sides, each closed with a cap.
pub fn split_along_triangle(g: &OrientedTriangulation2, t: [VertexId; 3]) -> Option<(Piece, Piece)> {
    let [a, b, c] = t;
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) || g.is_face(a, b, c) {
        return None;
    }
    let blocked = [g.edge_id(a, b), g.edge_id(b, c), g.edge_id(a, c)].map(|e| e.expect("triangle edge"));
    let mut side = vec![u8::MAX; g.face_count()];
    side[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        let [x, y, z] = g.face(f);
        for (u, v) in [(x, y), (y, z), (z, x)] {
            if blocked.contains(&g.edge_id(u, v).expect("face edge")) {
                continue;
            }
            let h = g.left_face(v, u).expect("closed surface");
            if side[h] == u8::MAX {
                side[h] = 0;
                queue.push_back(h);
            }
        }
    }
    let mut halves: [Vec<[VertexId; 3]>; 2] = Default::default();
    for f in 0..g.face_count() {
        halves[usize::from(side[f] == u8::MAX)].push(g.face(f));
    }
    // The cap on each side reuses the orientation of the triangle edge's face on the other side.
    let f_ab = g.left_face(a, b).expect("edge");
    let first_has_ab = side[f_ab] == 0;
    let (cap0, cap1) = if first_has_ab {
        (oriented_containing(t, b, a), oriented_containing(t, a, b))
    } else {
        (oriented_containing(t, a, b), oriented_containing(t, b, a))
    };
    let [mut h0, mut h1] = halves;
    h0.push(cap0);
    h1.push(cap1);
    Some((build_piece(g.vertex_count(), h0), build_piece(g.vertex_count(), h1)))
}

/// Six vertices, 4-regular, and non-adjacency is a perfect matching.
pub fn is_octahedron(h: &OrientedTriangulation2) -> bool {
    let n = h.vertex_count();
    if n != 6 || (0..n).any(|v| h.degree(v) != 4) {
        return false;
    }
    (0..n).all(|v| (0..n).filter(|&w| w != v && !h.has_edge(v, w)).count() == 1)
}

/// Whether every 4-connected piece is the octahedron.
pub fn decide_connected(g: &OrientedTriangulation2) -> bool {
    four_connected_pieces(g).pieces.iter().all(|p| is_octahedron(&p.tri))
}
