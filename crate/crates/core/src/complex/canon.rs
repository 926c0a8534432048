//! Canonical codes for isomorphism testing.
//!
//! A triangulation of the sphere has a unique embedding up to reflection, so
//! two triangulations have isomorphic graphs iff their codes below agree. The
//! code is the lexicographically smallest breadth-first rotation code over all
//! starting darts and both orientations; quadratic in the size, meant for small
//! graphs.

use super::{OrientedTriangulation2, VertexId};

pub type CanonicalCode = Vec<u32>;

impl OrientedTriangulation2 {
    pub fn canonical_code(&self) -> CanonicalCode {
        self.canonical_form().0
    }

    /// The canonical code and the vertex order that produced it: `order[i]` gets label `i`.
    pub fn canonical_form(&self) -> (CanonicalCode, Vec<VertexId>) {
        let mut best_order = Vec::new();
        let min_deg = (0..self.vertex_count).map(|v| self.degree(v)).min().unwrap_or(0);
        let mut best: Option<Vec<u32>> = None;
        let mut labels = vec![u32::MAX; self.vertex_count];
        let mut order = Vec::with_capacity(self.vertex_count);
        let mut code = Vec::with_capacity(2 * self.edge_count() + self.vertex_count);
        for root in (0..self.vertex_count).filter(|&v| self.degree(v) == min_deg) {
            for first in 0..self.degree(root) {
                for reverse in [false, true] {
                    self.bfs_code(root, first, reverse, best.as_deref(), &mut labels, &mut order, &mut code);
                    if best.as_ref().is_none_or(|b| code < *b) {
                        best = Some(code.clone());
                        best_order.clone_from(&order);
                    }
                }
            }
        }
        (best.unwrap_or_default(), best_order)
    }

    /// A vertex map `phi` with `phi[v]` in `other`, preserving adjacency, if the graphs are isomorphic.
    pub fn isomorphism_to(&self, other: &Self) -> Option<Vec<VertexId>> {
        if self.vertex_count != other.vertex_count || self.faces.len() != other.faces.len() {
            return None;
        }
        let (code_a, order_a) = self.canonical_form();
        let (code_b, order_b) = other.canonical_form();
        if code_a != code_b {
            return None;
        }
        let mut phi = vec![0; self.vertex_count];
        for (&a, &b) in order_a.iter().zip(&order_b) {
            phi[a] = b;
        }
        Some(phi)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.faces.len() == other.faces.len()
            && self.canonical_code() == other.canonical_code()
    }

    /// Writes the code for one start into `code`; stops early once it exceeds `bound`.
    #[allow(clippy::too_many_arguments)]
    fn bfs_code(
        &self,
        root: VertexId,
        first: usize,
        reverse: bool,
        bound: Option<&[u32]>,
        labels: &mut [u32],
        order: &mut Vec<VertexId>,
        code: &mut Vec<u32>,
    ) {
        labels.fill(u32::MAX);
        order.clear();
        code.clear();
        labels[root] = 0;
        order.push(root);
        // Reference neighbor from which each vertex's rotation is read.
        let mut reference = vec![0usize; self.vertex_count];
        reference[root] = first;
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            let ring = &self.rotation[x];
            let d = ring.len();
            code.push(d as u32);
            for k in 0..d {
                let i = if reverse { (reference[x] + d - k) % d } else { (reference[x] + k) % d };
                let y = ring[i];
                if labels[y] == u32::MAX {
                    labels[y] = order.len() as u32;
                    order.push(y);
                    reference[y] = self.rotation[y].iter().position(|&z| z == x).expect("symmetric rotation");
                }
                code.push(labels[y]);
            }
            if let Some(b) = bound {
                let n = code.len().min(b.len());
                if code[..n] > b[..n] {
                    return;
                }
            }
        }
    }
}
