//! A triangulation carrying a frozen 5-coloring, found by bounded search.

use super::HardnessError;
use crate::coloring::Color;
use crate::complex::{OrientedTriangulation2, VertexId};
use crate::corpus::four_connected_even;

const PALETTE: usize = 5;

/// Faces of the cached gadget, the first 4-connected even triangulation (in the order of
/// [`four_connected_even`]) with a frozen 5-coloring. Face 0 is the boundary.
const CACHED_FACES: [[VertexId; 3]; 16] = [
    [8, 1, 4],
    [1, 2, 4],
    [2, 3, 4],
    [3, 0, 4],
    [6, 5, 1],
    [2, 1, 5],
    [3, 2, 5],
    [6, 3, 5],
    [0, 3, 7],
    [3, 6, 7],
    [6, 1, 7],
    [8, 7, 1],
    [0, 7, 9],
    [7, 8, 9],
    [8, 4, 9],
    [4, 0, 9],
];

/// The first frozen coloring found on it, boundary colored `(0, 1, 2)`.
const CACHED_COLORING: [Color; 10] = [1, 1, 4, 0, 2, 3, 2, 4, 0, 3];

/// Default vertex cap for the gadget search.
pub const DEFAULT_GADGET_CAP: usize = 12;
const NODE_CAP: u64 = 10_000_000;

/// An even triangulation with boundary face `(w1, w2, w3)` and a frozen 5-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrozenGadget {
    pub tri: OrientedTriangulation2,
    /// Face 0 of `tri`, in its stored order.
    pub boundary: [VertexId; 3],
    /// Frozen, with the boundary colored `(0, 1, 2)`.
    pub reference: Vec<Color>,
}

impl FrozenGadget {
    fn from_search(tri: OrientedTriangulation2, reference: Vec<Color>) -> Result<Self, HardnessError> {
        let boundary = tri.face(0);
        if !tri.is_even() || !is_frozen(&tri, &reference) || boundary.map(|v| reference[v]) != [0, 1, 2] {
            return Err(HardnessError::Gadget("gadget coloring is not frozen with boundary (0, 1, 2)".into()));
        }
        Ok(FrozenGadget { tri, boundary, reference })
    }

    /// The stored fixture, re-verified.
    pub fn cached() -> Result<Self, HardnessError> {
        let tri = OrientedTriangulation2::from_faces(CACHED_COLORING.len(), CACHED_FACES.to_vec())?;
        Self::from_search(tri, CACHED_COLORING.to_vec())
    }

    /// The reference coloring with colors renamed so the boundary reads `triple`; the
    /// remaining colors keep their relative order.
    pub fn coloring_for(&self, triple: [Color; 3]) -> Option<Vec<Color>> {
        if triple.iter().any(|&c| c as usize >= PALETTE)
            || triple[0] == triple[1]
            || triple[1] == triple[2]
            || triple[0] == triple[2]
        {
            return None;
        }
        let mut perm = [0 as Color; PALETTE];
        perm[..3].copy_from_slice(&triple);
        let mut rest = (0..PALETTE as Color).filter(|c| !triple.contains(c));
        for slot in &mut perm[3..] {
            *slot = rest.next().expect("two colors left");
        }
        Some(self.reference.iter().map(|&c| perm[c as usize]).collect())
    }
}

/// Searches 4-connected even triangulations of at most `max_vertices` vertices, in
/// increasing size and canonical order, for the first one with a frozen 5-coloring.
pub fn search_frozen_gadget(max_vertices: usize) -> Result<FrozenGadget, HardnessError> {
    for g in four_connected_even(max_vertices) {
        if let Some(c) = find_frozen_coloring(&g, NODE_CAP) {
            return FrozenGadget::from_search(g, c);
        }
    }
    Err(HardnessError::GadgetSearch(max_vertices))
}

/// A gadget with a frozen coloring for each required boundary triple: the cached fixture,
/// or a fresh search when `cap` is given.
pub fn frozen_gadget(required: &[[Color; 3]], cap: Option<usize>) -> Result<FrozenGadget, HardnessError> {
    let gadget = match cap {
        None => FrozenGadget::cached()?,
        Some(cap) => search_frozen_gadget(cap)?,
    };
    for &t in required {
        let c = gadget
            .coloring_for(t)
            .ok_or_else(|| HardnessError::Gadget(format!("boundary triple {t:?} is not proper")))?;
        if !is_frozen(&gadget.tri, &c) || gadget.boundary.map(|v| c[v]) != t {
            return Err(HardnessError::Gadget(format!("no frozen coloring for boundary {t:?}")));
        }
    }
    Ok(gadget)
}

/// Whether no vertex of `g` can change color: every vertex sees all four other colors.
pub fn is_frozen(g: &OrientedTriangulation2, colors: &[Color]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let mut seen = [false; PALETTE];
        for &w in g.neighbors(v) {
            if colors[w] == colors[v] {
                return false;
            }
            seen[colors[w] as usize] = true;
        }
        seen.iter().filter(|&&s| s).count() == PALETTE - 1
    })
}

/// First frozen 5-coloring in search order with face 0 colored 0, 1, 2.
pub fn find_frozen_coloring(g: &OrientedTriangulation2, node_cap: u64) -> Option<Vec<Color>> {
    let n = g.vertex_count();
    // Breadth-first order from face 0 keeps neighborhoods filled early.
    let mut order: Vec<VertexId> = g.face(0).to_vec();
    let mut placed = vec![false; n];
    order.iter().for_each(|&v| placed[v] = true);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if !placed[w] {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    let mut s = Search {
        g,
        colors: vec![Color::MAX; n],
        seen: vec![[0u8; PALETTE]; n],
        uncolored: (0..n).map(|v| g.degree(v)).collect(),
        nodes: 0,
        node_cap,
    };
    let first = g.face(0);
    for (i, &v) in first.iter().enumerate() {
        s.assign(v, i as Color);
    }
    if !first.iter().all(|&v| s.feasible_around(v)) {
        return None;
    }
    s.run(&order, 3).then_some(s.colors)
}

struct Search<'g> {
    g: &'g OrientedTriangulation2,
    colors: Vec<Color>,
    /// seen[v][c]: colored neighbors of v with color c.
    seen: Vec<[u8; PALETTE]>,
    uncolored: Vec<usize>,
    nodes: u64,
    node_cap: u64,
}

impl Search<'_> {
    fn assign(&mut self, v: VertexId, c: Color) {
        self.colors[v] = c;
        for &w in self.g.neighbors(v) {
            self.seen[w][c as usize] += 1;
            self.uncolored[w] -= 1;
        }
    }

    fn unassign(&mut self, v: VertexId) {
        let c = self.colors[v];
        self.colors[v] = Color::MAX;
        for &w in self.g.neighbors(v) {
            self.seen[w][c as usize] -= 1;
            self.uncolored[w] += 1;
        }
    }

    /// Can `w` and its neighbors still end up seeing four other colors?
    fn feasible_around(&self, v: VertexId) -> bool {
        std::iter::once(v).chain(self.g.neighbors(v).iter().copied()).all(|w| self.feasible(w))
    }

    fn feasible(&self, w: VertexId) -> bool {
        let distinct = self.seen[w].iter().enumerate().filter(|&(c, &k)| k > 0 && c != self.colors[w] as usize).count();
        let own_seen = self.colors[w] != Color::MAX && self.seen[w][self.colors[w] as usize] > 0;
        !own_seen && distinct + self.uncolored[w] >= PALETTE - 1
    }

    fn run(&mut self, order: &[VertexId], at: usize) -> bool {
        if at == order.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return false;
        }
        let v = order[at];
        for c in 0..PALETTE as Color {
            if self.seen[v][c as usize] > 0 {
                continue;
            }
            self.assign(v, c);
            if self.feasible_around(v) && self.run(order, at + 1) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::octahedron;
    use crate::graph::Graph;
    use crate::oracle::{enumerate_colorings, DEFAULT_BUDGET};

    #[test]
    fn octahedron_has_no_frozen_coloring() {
        let oct = octahedron();
        let all = enumerate_colorings(&Graph::from_triangulation(&oct), 5, None, DEFAULT_BUDGET).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|c| !is_frozen(&oct, c)));
        assert_eq!(find_frozen_coloring(&oct, NODE_CAP), None);
    }

    #[test]
    fn search_reproduces_fixture() {
        let found = search_frozen_gadget(DEFAULT_GADGET_CAP).unwrap();
        assert_eq!(found, FrozenGadget::cached().unwrap());
        assert!(matches!(search_frozen_gadget(8), Err(HardnessError::GadgetSearch(8))));
    }

    #[test]
    fn all_boundary_triples() {
        let g = FrozenGadget::cached().unwrap();
        let mut triples = Vec::new();
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    if a != b && b != c && a != c {
                        triples.push([a, b, c]);
                    }
                }
            }
        }
        assert_eq!(frozen_gadget(&triples, None).unwrap(), g);
        assert!(g.coloring_for([0, 0, 1]).is_none());
        assert!(frozen_gadget(&[[1, 1, 4]], None).is_err());
    }
}
