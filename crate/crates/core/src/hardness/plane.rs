//! Plane graphs given by a rotation system.

use super::HardnessError;
use crate::complex::VertexId;
use crate::graph::Graph;

/// A connected simple plane graph: `rotation[v]` lists the neighbors of `v` counterclockwise.
/// Faces are traced by following `u -> v` with `v -> w`, where `w` precedes `u` around `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<VertexId>>,
}

impl PlaneGraph {
    /// Checks symmetry, simplicity, connectivity and that the rotation system has genus zero.
    pub fn from_rotation(rotation: Vec<Vec<VertexId>>) -> Result<Self, HardnessError> {
        let n = rotation.len();
        for (v, ring) in rotation.iter().enumerate() {
            let mut sorted = ring.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != ring.len() || ring.iter().any(|&w| w >= n || w == v) {
                return Err(HardnessError::Embedding(format!("rotation at {v} is not a set of other vertices")));
            }
            if let Some(&w) = ring.iter().find(|&&w| !rotation[w].contains(&v)) {
                return Err(HardnessError::Embedding(format!("edge {v}-{w} missing at {w}")));
            }
        }
        let g = PlaneGraph { rotation };
        if n == 0 || !g.graph().is_connected() {
            return Err(HardnessError::Embedding("graph is empty or disconnected".into()));
        }
        let (e, f) = (g.edge_count() as i64, g.faces().len() as i64);
        if n as i64 - e + f != 2 {
            return Err(HardnessError::Embedding(format!(
                "rotation system has Euler characteristic {}",
                n as i64 - e + f
            )));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    fn position(&self, v: VertexId, w: VertexId) -> usize {
        self.rotation[v].iter().position(|&x| x == w).expect("adjacent vertices")
    }

    /// The neighbor of `v` just before `w` in counterclockwise order.
    pub fn pred(&self, v: VertexId, w: VertexId) -> VertexId {
        let d = self.degree(v);
        self.rotation[v][(self.position(v, w) + d - 1) % d]
    }

    /// Face boundary walks, each rotated to start at its smallest vertex.
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..self.vertex_count() {
            for i in 0..self.degree(u) {
                if used[u][i] {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut x, mut j) = (u, i);
                while !used[x][j] {
                    used[x][j] = true;
                    walk.push(x);
                    let y = self.rotation[x][j];
                    let z = self.pred(y, x);
                    (x, j) = (y, self.position(y, z));
                }
                let start = (0..walk.len()).min_by_key(|&k| walk[k]).expect("nonempty walk");
                walk.rotate_left(start);
                faces.push(walk);
            }
        }
        faces
    }

    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (v, ring) in self.rotation.iter().enumerate() {
            edges.extend(ring.iter().filter(|&&w| v < w).map(|&w| (v, w)));
        }
        Graph::from_edges(self.vertex_count(), &edges)
    }

    /// Smallest vertex whose removal disconnects the graph, restricted to `allowed`.
    pub fn cut_vertex(&self, allowed: impl Fn(VertexId) -> bool) -> Option<VertexId> {
        let g = self.graph();
        let n = self.vertex_count();
        (0..n).filter(|&v| allowed(v)).find(|&v| {
            let mut removed = vec![false; n];
            removed[v] = true;
            let comp = g.components_avoiding(&removed);
            (0..n).filter(|&w| w != v).any(|w| comp[w] != comp[(0..n).find(|&x| x != v).expect("n > 1")])
        })
    }

    pub(crate) fn add_vertex(&mut self, ring: Vec<VertexId>) -> VertexId {
        self.rotation.push(ring);
        self.rotation.len() - 1
    }

    /// Inserts `new` into the rotation at `v` directly after `anchor`.
    pub(crate) fn insert_after(&mut self, v: VertexId, anchor: VertexId, new: VertexId) {
        let i = self.position(v, anchor);
        self.rotation[v].insert(i + 1, new);
    }

    /// Inserts `new` into the rotation at `v` directly before `anchor`.
    pub(crate) fn insert_before(&mut self, v: VertexId, anchor: VertexId, new: VertexId) {
        let i = self.position(v, anchor);
        self.rotation[v].insert(i, new);
    }
}
