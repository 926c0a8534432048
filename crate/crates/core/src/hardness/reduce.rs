//! From a listed plane graph to an even triangulation with restricted 5-colorings, and on
//! to higher dimensions by suspension.

use super::frozen::{is_frozen, FrozenGadget};
use super::gadget_x::ListedPlaneGraph;
use super::HardnessError;
use crate::coloring::{Color, Coloring};
use crate::complex::{OrientedTriangulation2, VertexId};
use crate::highdim::{suspend, OrientedComplexD};

/// Color of every hub, every `w3` and the highest color of the 5-coloring.
const TOP: Color = 4;

/// Color given to the vertices added to make `H` 2-connected.
pub const BRIDGE_COLOR: Color = 3;

/// A 2-connected listed plane graph `H'` together with the triangulation `G'` obtained by
/// adding hub `h.plane.vertex_count() + i` inside face `faces[i]` of `H'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prepared {
    pub h: ListedPlaneGraph,
    /// Vertices added to remove cut vertices, each of degree two.
    pub bridges: Vec<VertexId>,
    pub faces: Vec<Vec<VertexId>>,
    pub g_prime: OrientedTriangulation2,
}

/// Walks from `from` through `first` along degree-two non-terminal vertices; returns the
/// terminal reached and the vertex just before it.
fn walk_to_terminal(h: &ListedPlaneGraph, from: VertexId, first: VertexId) -> (VertexId, VertexId) {
    let (mut prev, mut cur) = (from, first);
    while cur >= h.terminals {
        let ring = h.plane.neighbors(cur);
        let next = if ring[0] == prev { ring[1] } else { ring[0] };
        (prev, cur) = (cur, next);
    }
    (cur, prev)
}

/// Makes `H` 2-connected by joining pseudo-neighbors across faces through new vertices with
/// list `{2, 3}`, then adds a hub in every face.
pub fn prepare_planar(h: &ListedPlaneGraph) -> Result<Prepared, HardnessError> {
    let mut h = h.clone();
    let mut bridges = Vec::new();
    while let Some(v) = h.plane.cut_vertex(|_| true) {
        if v >= h.terminals {
            return Err(HardnessError::Internal(format!("cut vertex {v} is inside a path")));
        }
        let graph = h.plane.graph();
        let mut removed = vec![false; graph.vertex_count()];
        removed[v] = true;
        let comp = graph.components_avoiding(&removed);
        let ring = h.plane.neighbors(v).to_vec();
        let d = ring.len();
        // Corner a -> v -> b of one face, with a and b on different sides of v.
        let i = (0..d)
            .find(|&i| comp[ring[i]] != comp[ring[(i + d - 1) % d]])
            .ok_or_else(|| HardnessError::Internal(format!("no separating corner at {v}")))?;
        let (a, b) = (ring[i], ring[(i + d - 1) % d]);
        let (x, p1) = walk_to_terminal(&h, v, a);
        let (y, q1) = walk_to_terminal(&h, v, b);
        let u = h.plane.add_vertex(vec![x, y]);
        h.plane.insert_after(x, p1, u);
        h.plane.insert_before(y, q1, u);
        h.lists.push(vec![2, BRIDGE_COLOR]);
        bridges.push(u);
    }
    let n = h.plane.vertex_count();
    let faces = h.plane.faces();
    let mut tri = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        for j in 0..f.len() {
            tri.push([n + i, f[j], f[(j + 1) % f.len()]]);
        }
    }
    let g_prime = OrientedTriangulation2::from_faces(n + faces.len(), tri)?;
    Ok(Prepared { h, bridges, faces, g_prime })
}

impl Prepared {
    /// Extends a coloring of `H` by coloring the added vertices 3.
    pub fn extend_coloring(&self, h_colors: &[Color]) -> Vec<Color> {
        let mut c = h_colors.to_vec();
        c.resize(self.h.plane.vertex_count(), BRIDGE_COLOR);
        c
    }

    pub fn hub(&self, face: usize) -> VertexId {
        self.h.plane.vertex_count() + face
    }
}

/// One copy of the gadget inside the face `(x, y, z)` of `G'`, `x` being the hub.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
    pub w: [VertexId; 3],
    /// All gadget vertices, indexed by gadget vertex id.
    pub vertices: Vec<VertexId>,
}

/// The 4-coloring instance for `k = 4` and its suspensions.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduction {
    pub k: usize,
    /// Vertices `0..h_count` of every level are the vertices of `H'`.
    pub h_count: usize,
    pub lists: Vec<Vec<Color>>,
    pub hubs: Vec<VertexId>,
    pub insertions: Vec<Insertion>,
    /// The even triangulation `G`.
    pub triangulation: OrientedTriangulation2,
    /// `G` suspended `k - 4` times.
    pub complex: OrientedComplexD,
    pub alpha: Coloring,
    pub beta: Coloring,
}

/// Colors `(w1, w2)` of the gadget in each face around one hub. Around the hub the faces are
/// `(x, y_i, y_{i+1})`; the two gadget vertices meeting `y_i` must show exactly the colors of
/// `{0, 1, 2, 3}` missing from its list, and the two in one face must differ.
fn hub_colors(lists: &[Vec<Color>], ring: &[VertexId]) -> Result<Vec<(Color, Color)>, HardnessError> {
    let m = ring.len();
    // Options (p_i, q_i) = (w2 of the face before y_i, w1 of the face after).
    let options: Vec<Vec<(Color, Color)>> = ring
        .iter()
        .map(|&y| {
            let missing: Vec<Color> = (0..TOP).filter(|c| !lists[y].contains(c)).collect();
            match missing.as_slice() {
                [c] => Ok(vec![(*c, *c)]),
                [c, d] => Ok(vec![(*c, *d), (*d, *c)]),
                _ => Err(HardnessError::Internal(format!("vertex {y} has list {:?}", lists[y]))),
            }
        })
        .collect::<Result<_, _>>()?;
    for first in 0..options[0].len() {
        // parent[i][j]: option of corner i-1 leading to option j of corner i.
        let mut parent: Vec<Vec<Option<usize>>> = vec![vec![None; 2]; m];
        parent[0][first] = Some(first);
        for i in 1..m {
            for j in 0..options[i].len() {
                parent[i][j] = (0..options[i - 1].len())
                    .find(|&o| parent[i - 1][o].is_some() && options[i - 1][o].1 != options[i][j].0);
            }
        }
        let p0 = options[0][first].0;
        let Some(mut j) = (0..options[m - 1].len()).find(|&o| parent[m - 1][o].is_some() && options[m - 1][o].1 != p0)
        else {
            continue;
        };
        let mut chosen = vec![0; m];
        for i in (0..m).rev() {
            chosen[i] = j;
            if i > 0 {
                j = parent[i][j].expect("reachable");
            }
        }
        let pick = |i: usize| options[i][chosen[i]];
        return Ok((0..m).map(|i| (pick(i).1, pick((i + 1) % m).0)).collect());
    }
    Err(HardnessError::Internal(format!("no gadget colors around face {ring:?}")))
}

/// Builds `G` from `G'` by inserting a gadget copy into every face and colors everything
/// outside `H'` so that it is frozen; `alpha` and `beta` are list-colorings of `H'`.
/// For `k > 4` the result is suspended `k - 4` times.
pub fn reduce_instance(
    prepared: &Prepared,
    gadget: &FrozenGadget,
    alpha: &[Color],
    beta: &[Color],
    k: usize,
) -> Result<Reduction, HardnessError> {
    if k < 4 {
        return Err(HardnessError::Precondition(format!("k = {k} is below 4")));
    }
    let h = &prepared.h;
    let h_count = h.plane.vertex_count();
    for coloring in [alpha, beta] {
        check_list_coloring(h, coloring)?;
    }
    let gp = &prepared.g_prime;
    let hubs: Vec<VertexId> = (0..prepared.faces.len()).map(|i| prepared.hub(i)).collect();
    let mut outside = vec![Color::MAX; gp.vertex_count()];
    hubs.iter().for_each(|&x| outside[x] = TOP);

    let j = gadget.tri.vertex_count();
    let [b1, b2, b3] = gadget.boundary;
    let mut next = gp.vertex_count();
    let mut faces: Vec<[VertexId; 3]> = Vec::new();
    let mut insertions = Vec::new();
    for (i, ring) in prepared.faces.iter().enumerate() {
        let x = hubs[i];
        let w_colors = hub_colors(&h.lists, ring)?;
        for (idx, &y) in ring.iter().enumerate() {
            let z = ring[(idx + 1) % ring.len()];
            let vertices: Vec<VertexId> = (next..next + j).collect();
            next += j;
            let w = [vertices[b1], vertices[b2], vertices[b3]];
            let (c1, c2) = w_colors[idx];
            let colors = gadget
                .coloring_for([c1, c2, TOP])
                .ok_or_else(|| HardnessError::Internal(format!("gadget colors ({c1}, {c2}) coincide")))?;
            outside.extend(colors);
            faces.extend(gadget.tri.faces()[1..].iter().map(|f| f.map(|v| vertices[v])));
            let [w1, w2, w3] = w;
            faces.extend([[x, y, w1], [y, z, w3], [z, x, w2], [x, w1, w2], [w1, y, w3], [w2, w3, z]]);
            insertions.push(Insertion { x, y, z, w, vertices });
        }
    }
    let tri = OrientedTriangulation2::from_faces(next, faces)?;
    let lift = |c: &[Color]| -> Result<Coloring, HardnessError> {
        let mut all = outside.clone();
        all[..h_count].copy_from_slice(c);
        Ok(Coloring::proper(&tri, 5, all)?)
    };
    let (mut a, mut b) = (lift(alpha)?, lift(beta)?);
    let mut complex = OrientedComplexD::from_triangulation(&tri);
    for _ in 4..k {
        (complex, a, b) = suspend_instance(&complex, &a, &b);
    }
    Ok(Reduction {
        k,
        h_count,
        lists: h.lists.clone(),
        hubs,
        insertions,
        triangulation: tri,
        complex,
        alpha: a,
        beta: b,
    })
}

fn check_list_coloring(h: &ListedPlaneGraph, colors: &[Color]) -> Result<(), HardnessError> {
    if colors.len() != h.plane.vertex_count() {
        return Err(HardnessError::List(format!("{} colors for {} vertices", colors.len(), h.plane.vertex_count())));
    }
    for v in 0..colors.len() {
        if !h.lists[v].contains(&colors[v]) {
            return Err(HardnessError::List(format!("vertex {v} colored {} outside its list", colors[v])));
        }
        if let Some(&w) = h.plane.neighbors(v).iter().find(|&&w| colors[w] == colors[v]) {
            return Err(HardnessError::List(format!("edge {v}-{w} is monochromatic")));
        }
    }
    Ok(())
}

/// Adds two apexes colored with a new color; the palette grows by one.
pub fn suspend_instance(
    complex: &OrientedComplexD,
    alpha: &Coloring,
    beta: &Coloring,
) -> (OrientedComplexD, Coloring, Coloring) {
    let up = |c: &Coloring| {
        let new = c.k() as Color;
        let mut colors = c.colors().to_vec();
        colors.extend([new, new]);
        Coloring::new(c.k() + 1, colors).expect("new color within the larger palette")
    };
    (suspend(complex), up(alpha), up(beta))
}

impl Reduction {
    /// Checks that `coloring` restricts to `h_colors` on `H'`, uses color 4 on hubs and every
    /// `w3`, keeps `w1` and `w2` off the lists of `y` and `z`, and that the colors around each
    /// vertex `v` of `H'` outside `H'` are exactly the complement of its list.
    pub fn check_restricted(&self, h_colors: &[Color], coloring: &Coloring) -> Result<(), String> {
        let c = coloring.colors();
        if c[..self.h_count] != *h_colors {
            return Err("coloring differs from the list-coloring on H".into());
        }
        if let Some(&x) = self.hubs.iter().find(|&&x| c[x] != TOP) {
            return Err(format!("hub {x} is not colored {TOP}"));
        }
        for ins in &self.insertions {
            let [w1, w2, w3] = ins.w;
            if c[w3] != TOP {
                return Err(format!("w3 = {w3} is not colored {TOP}"));
            }
            if c[w1] >= TOP || self.lists[ins.y].contains(&c[w1]) {
                return Err(format!("w1 = {w1} has color {} against the list of {}", c[w1], ins.y));
            }
            if c[w2] >= TOP || self.lists[ins.z].contains(&c[w2]) {
                return Err(format!("w2 = {w2} has color {} against the list of {}", c[w2], ins.z));
            }
        }
        for v in 0..self.h_count {
            let mut seen = [false; 5];
            for &w in self.triangulation.neighbors(v).iter().filter(|&&w| w >= self.h_count) {
                seen[c[w] as usize] = true;
            }
            let complement: Vec<Color> = (0..5).filter(|&x| !seen[x as usize]).collect();
            if complement != self.lists[v] {
                return Err(format!("vertex {v} sees {seen:?} outside H, list is {:?}", self.lists[v]));
            }
        }
        Ok(())
    }

    /// First vertex outside `H'` that could change color, if any.
    pub fn unfrozen_outside(&self, coloring: &Coloring) -> Option<VertexId> {
        let c = coloring.colors();
        (self.h_count..self.triangulation.vertex_count()).find(|&v| {
            let mut seen = [false; 5];
            self.triangulation.neighbors(v).iter().for_each(|&w| seen[c[w] as usize] = true);
            seen.iter().filter(|&&s| s).count() != 4 || seen[c[v] as usize]
        })
    }

    /// Whether every gadget copy carries a frozen coloring on its own.
    pub fn gadgets_frozen(&self, gadget: &FrozenGadget, coloring: &Coloring) -> bool {
        self.insertions.iter().all(|ins| {
            let local: Vec<Color> = ins.vertices.iter().map(|&v| coloring.get(v)).collect();
            is_frozen(&gadget.tri, &local)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardness::GadgetX;

    #[test]
    fn hub_colors_cover_complements() {
        let lists = vec![vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![0, 1]];
        let ring = [0, 1, 2, 3];
        let w = hub_colors(&lists, &ring).unwrap();
        for i in 0..4 {
            let (w1, w2) = w[i];
            assert_ne!(w1, w2);
            let before = w[(i + 3) % 4].1;
            let mut seen = vec![before, w1];
            seen.sort_unstable();
            seen.dedup();
            let complement: Vec<Color> = (0..4).filter(|c| !lists[ring[i]].contains(c)).collect();
            assert_eq!(seen, complement);
        }
    }

    #[test]
    fn two_connected_input_is_unchanged() {
        let h = GadgetX::smallest().build_h().unwrap();
        let p = prepare_planar(&h).unwrap();
        assert!(p.bridges.is_empty());
        assert_eq!(p.h, h);
        assert!(p.g_prime.is_even());
        for v in 0..h.plane.vertex_count() {
            assert_eq!(p.g_prime.degree(v), 2 * h.plane.degree(v));
        }
    }
}
