//! Oriented triangulations of the 2-sphere.
//!
//! Faces are the source of truth. Every face is an ordered vertex triple,
//! counterclockwise as seen from outside the sphere; the rotation system,
//! the edge table and the face adjacency are derived on construction.

mod canon;
mod format;
mod generate;
mod ops;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::text::ParseError;

pub use canon::CanonicalCode;
pub use format::{parse_tri2, parse_tri2_json, write_tri2, write_tri2_json};
pub use generate::{double_wheel, generate, octahedron, stacked_gluing, stacked_octahedra, tetrahedron, Generator};
pub use ops::{barycentric_dimension_colors, barycentric_subdivision, glue_along_face, Glued};

pub type VertexId = usize;
pub type FaceId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("a sphere triangulation needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("face {face} references vertex {vertex}, but there are only {count} vertices")]
    VertexOutOfRange { face: FaceId, vertex: VertexId, count: usize },
    #[error("face {0} repeats a vertex")]
    DegenerateFace(FaceId),
    #[error("orientation inconsistency: directed edge ({0}, {1}) occurs in two faces")]
    Orientation(VertexId, VertexId),
    #[error("edge ({0}, {1}) is used in only one direction")]
    OpenEdge(VertexId, VertexId),
    #[error("link of vertex {0} is not a single cycle")]
    NonManifold(VertexId),
    #[error("triangulation is disconnected")]
    Disconnected,
    #[error("Euler characteristic is {0}, expected 2")]
    EulerCharacteristic(i64),
    #[error("triangulation is not even (vertex {0} has odd degree)")]
    NotEven(VertexId),
    #[error("invalid generator parameter: {0}")]
    Generator(String),
    #[error("cannot glue: {0}")]
    Glue(String),
}

/// A triangulation of the 2-sphere with a coherent outward orientation.
#[derive(Debug, Clone)]
pub struct OrientedTriangulation2 {
    vertex_count: usize,
    faces: Vec<[VertexId; 3]>,
    /// Canonical `[u, v]` with `u < v`, sorted.
    edges: Vec<[VertexId; 2]>,
    /// `[face containing u->v, face containing v->u]` for edge `[u, v]`.
    edge_faces: Vec<[FaceId; 2]>,
    /// Counterclockwise neighbor order around each vertex.
    rotation: Vec<Vec<VertexId>>,
    /// `star[v][i]` is the face `(v, rotation[v][i], rotation[v][i + 1])`.
    star: Vec<Vec<FaceId>>,
    /// `incident[v][i]` is the edge `{v, rotation[v][i]}`.
    incident: Vec<Vec<EdgeId>>,
}

impl PartialEq for OrientedTriangulation2 {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.faces == other.faces
    }
}

impl Eq for OrientedTriangulation2 {}

impl OrientedTriangulation2 {
    /// Validates `faces` and builds the derived indices.
    pub fn from_faces(vertex_count: usize, faces: Vec<[VertexId; 3]>) -> Result<Self, ComplexError> {
        if vertex_count < 4 {
            return Err(ComplexError::TooFewVertices(vertex_count));
        }
        for (f, face) in faces.iter().enumerate() {
            for &v in face {
                if v >= vertex_count {
                    return Err(ComplexError::VertexOutOfRange { face: f, vertex: v, count: vertex_count });
                }
            }
            if face[0] == face[1] || face[1] == face[2] || face[0] == face[2] {
                return Err(ComplexError::DegenerateFace(f));
            }
        }

        let mut directed: HashMap<(VertexId, VertexId), FaceId> = HashMap::with_capacity(faces.len() * 3);
        for (f, &[a, b, c]) in faces.iter().enumerate() {
            for (u, v) in [(a, b), (b, c), (c, a)] {
                if directed.insert((u, v), f).is_some() {
                    return Err(ComplexError::Orientation(u, v));
                }
            }
        }
        let mut edges = Vec::with_capacity(directed.len() / 2);
        for &(u, v) in directed.keys() {
            if !directed.contains_key(&(v, u)) {
                return Err(ComplexError::OpenEdge(u, v));
            }
            if u < v {
                edges.push([u, v]);
            }
        }
        edges.sort_unstable();
        let edge_faces: Vec<[FaceId; 2]> = edges.iter().map(|&[u, v]| [directed[&(u, v)], directed[&(v, u)]]).collect();

        // Corner (v; x -> y, face): in face (v, x, y), y follows x counterclockwise around v.
        let mut corners: Vec<Vec<(VertexId, VertexId, FaceId)>> = vec![Vec::new(); vertex_count];
        for (f, &[a, b, c]) in faces.iter().enumerate() {
            corners[a].push((b, c, f));
            corners[b].push((c, a, f));
            corners[c].push((a, b, f));
        }
        let mut rotation = Vec::with_capacity(vertex_count);
        let mut star = Vec::with_capacity(vertex_count);
        for (v, list) in corners.iter_mut().enumerate() {
            if list.is_empty() {
                return Err(ComplexError::Disconnected);
            }
            list.sort_unstable();
            let next = |x: VertexId| -> Option<(VertexId, FaceId)> {
                list.binary_search_by_key(&x, |c| c.0).ok().map(|i| (list[i].1, list[i].2))
            };
            let start = list[0].0;
            let mut ring = Vec::with_capacity(list.len());
            let mut faces_around = Vec::with_capacity(list.len());
            let mut cur = start;
            loop {
                let (nxt, f) = next(cur).ok_or(ComplexError::NonManifold(v))?;
                ring.push(cur);
                faces_around.push(f);
                cur = nxt;
                if cur == start || ring.len() > list.len() {
                    break;
                }
            }
            if cur != start || ring.len() != list.len() {
                return Err(ComplexError::NonManifold(v));
            }
            rotation.push(ring);
            star.push(faces_around);
        }

        let mut tri =
            OrientedTriangulation2 { vertex_count, faces, edges, edge_faces, rotation, star, incident: Vec::new() };
        tri.incident = (0..vertex_count)
            .map(|v| tri.rotation[v].iter().map(|&w| tri.edge_id(v, w).expect("edge from rotation")).collect())
            .collect();

        if !tri.is_connected() {
            return Err(ComplexError::Disconnected);
        }
        let chi = tri.vertex_count as i64 - tri.edges.len() as i64 + tri.faces.len() as i64;
        if chi != 2 {
            return Err(ComplexError::EulerCharacteristic(chi));
        }
        Ok(tri)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.rotation[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn faces(&self) -> &[[VertexId; 3]] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> [VertexId; 3] {
        self.faces[f]
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = if u < v { [u, v] } else { [v, u] };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// The two faces sharing edge `e`.
    pub fn edge_faces(&self, e: EdgeId) -> [FaceId; 2] {
        self.edge_faces[e]
    }

    /// The face containing the directed edge `u -> v`, i.e. the face to its left.
    pub fn left_face(&self, u: VertexId, v: VertexId) -> Option<FaceId> {
        let e = self.edge_id(u, v)?;
        Some(if u < v { self.edge_faces[e][0] } else { self.edge_faces[e][1] })
    }

    /// Vertex of face `f` other than `u` and `v`.
    pub fn third_vertex(&self, f: FaceId, u: VertexId, v: VertexId) -> VertexId {
        let face = self.faces[f];
        *face.iter().find(|&&x| x != u && x != v).expect("face has a third vertex")
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    /// The link of `v` as a counterclockwise cycle of vertices.
    pub fn link_cycle(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    /// Edges of the link of `v`, in the same cyclic order as [`Self::link_cycle`].
    pub fn link_edges(&self, v: VertexId) -> Vec<EdgeId> {
        let ring = &self.rotation[v];
        (0..ring.len()).map(|i| self.edge_id(ring[i], ring[(i + 1) % ring.len()]).expect("link edge")).collect()
    }

    /// Faces around `v`; entry `i` lies between `link_cycle(v)[i]` and `link_cycle(v)[i + 1]`.
    pub fn star_faces(&self, v: VertexId) -> &[FaceId] {
        &self.star[v]
    }

    /// Edges at `v`; entry `i` joins `v` and `link_cycle(v)[i]`.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    /// Position of `w` in the rotation around `v`.
    pub fn rotation_index(&self, v: VertexId, w: VertexId) -> Option<usize> {
        self.rotation[v].iter().position(|&x| x == w)
    }

    /// Faces sharing an edge with `f`.
    pub fn face_neighbors(&self, f: FaceId) -> [FaceId; 3] {
        let [a, b, c] = self.faces[f];
        [(b, a), (c, b), (a, c)].map(|(u, v)| self.left_face(u, v).expect("closed surface"))
    }

    pub fn is_even(&self) -> bool {
        self.first_odd_vertex().is_none()
    }

    pub fn first_odd_vertex(&self) -> Option<VertexId> {
        (0..self.vertex_count).find(|&v| self.degree(v) % 2 == 1)
    }

    /// Whether `{a, b, c}` bounds a face.
    pub fn is_face(&self, a: VertexId, b: VertexId, c: VertexId) -> bool {
        self.left_face(a, b).is_some_and(|f| self.third_vertex(f, a, b) == c)
            || self.left_face(b, a).is_some_and(|f| self.third_vertex(f, b, a) == c)
    }

    /// Adjacency lists of the 1-skeleton, rotation order.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        self.rotation.clone()
    }

    /// Same triangulation with every face reversed.
    pub fn mirrored(&self) -> Self {
        let faces = self.faces.iter().map(|&[a, b, c]| [a, c, b]).collect();
        Self::from_faces(self.vertex_count, faces).expect("mirror of a valid triangulation")
    }

    /// Relabels vertices by `perm` (old id -> new id) and reorders faces by `face_order`.
    pub fn relabeled(&self, perm: &[VertexId], face_order: &[FaceId]) -> Result<Self, ComplexError> {
        let faces = face_order.iter().map(|&f| self.faces[f].map(|v| perm[v])).collect();
        Self::from_faces(self.vertex_count, faces)
    }
}
