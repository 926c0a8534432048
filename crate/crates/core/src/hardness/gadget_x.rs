//! Planar list-recoloring inputs built from triangles and edges, and the listed graph `H`.

use std::collections::BTreeMap;

use super::forbidding::forbidding_path;
use super::plane::PlaneGraph;
use super::HardnessError;
use crate::coloring::Color;
use crate::complex::VertexId;
use crate::text::{header, join, parse_all, Lines, ParseError};

/// Spare color used by every forbidding path; the endpoint lists never contain it.
pub const SPARE: Color = 3;

/// A plane graph whose vertex set is partitioned into triangles `T_i` (each bounding a face)
/// and edges `S_j`, every vertex of degree two or three. `triangles[i][a]` is `t_i^a` and
/// `edges[j][b]` is `s_j^b`. Faces are counterclockwise boundary walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetX {
    vertex_count: usize,
    triangles: Vec<[VertexId; 3]>,
    edges: Vec<[VertexId; 2]>,
    faces: Vec<Vec<VertexId>>,
    rotation: Vec<Vec<VertexId>>,
}

/// An edge of the contracted graph: `u` keeps label `a`, `v` keeps label `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub a: Color,
    pub b: Color,
}

/// The listed plane graph obtained by contracting every `T_i` to `t_i = i` and every `S_j`
/// to `s_j = ℓ + j`, and replacing contracted edge `e` by a forbidding path with internal
/// vertices `paths[e]` (from the `u` end).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListedPlaneGraph {
    pub plane: PlaneGraph,
    pub lists: Vec<Vec<Color>>,
    /// Vertices `0..terminals` are the contracted triangles and edges.
    pub terminals: usize,
    pub triangle_count: usize,
    pub edges: Vec<ContractedEdge>,
    pub paths: Vec<[VertexId; 5]>,
}

fn not_in_class(msg: impl Into<String>) -> HardnessError {
    HardnessError::NotInClass(msg.into())
}

impl GadgetX {
    pub fn new(
        vertex_count: usize,
        triangles: Vec<[VertexId; 3]>,
        edges: Vec<[VertexId; 2]>,
        faces: Vec<Vec<VertexId>>,
    ) -> Result<Self, HardnessError> {
        let n = vertex_count;
        let mut owner = vec![false; n];
        for v in triangles.iter().flatten().chain(edges.iter().flatten()) {
            if *v >= n {
                return Err(not_in_class(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut owner[*v], true) {
                return Err(not_in_class(format!("vertex {v} used twice")));
            }
        }
        if let Some(v) = owner.iter().position(|&o| !o) {
            return Err(not_in_class(format!("vertex {v} is in no triangle or edge")));
        }
        // Corner `p -> v -> q` of a face means `q` is just before `p` around `v`.
        let mut before: Vec<BTreeMap<VertexId, VertexId>> = vec![BTreeMap::new(); n];
        let mut darts = std::collections::BTreeSet::new();
        for f in &faces {
            let len = f.len();
            if len < 3 || f.iter().any(|&v| v >= n) {
                return Err(HardnessError::Embedding(format!("bad face {f:?}")));
            }
            for i in 0..len {
                let (p, v, q) = (f[(i + len - 1) % len], f[i], f[(i + 1) % len]);
                if v == q || !darts.insert((v, q)) {
                    return Err(HardnessError::Embedding(format!("dart {v}->{q} repeated or a loop")));
                }
                if before[v].insert(p, q).is_some() {
                    return Err(HardnessError::Embedding(format!("two corners at {v} after {p}")));
                }
            }
        }
        if let Some(&(u, v)) = darts.iter().find(|&&(u, v)| !darts.contains(&(v, u))) {
            return Err(HardnessError::Embedding(format!("edge {u}-{v} lies on one face side only")));
        }
        let mut rotation = Vec::with_capacity(n);
        for (v, map) in before.iter().enumerate() {
            let Some((&start, _)) = map.iter().next() else {
                return Err(not_in_class(format!("vertex {v} is isolated")));
            };
            // `map[p] = q` means q precedes p; walk backwards and reverse.
            let mut ring = vec![start];
            let mut cur = map[&start];
            while cur != start {
                if ring.len() > map.len() {
                    return Err(HardnessError::Embedding(format!("corners at {v} do not close up")));
                }
                ring.push(cur);
                cur = *map.get(&cur).ok_or_else(|| HardnessError::Embedding(format!("open corner at {v}")))?;
            }
            if ring.len() != map.len() {
                return Err(HardnessError::Embedding(format!("faces around {v} form several cycles")));
            }
            ring.reverse();
            rotation.push(ring);
        }
        let plane = PlaneGraph::from_rotation(rotation.clone())?;
        if plane.faces().len() != faces.len() {
            return Err(HardnessError::Embedding("face list does not match the rotation system".into()));
        }
        for v in 0..n {
            if !(2..=3).contains(&plane.degree(v)) {
                return Err(not_in_class(format!("vertex {v} has degree {}", plane.degree(v))));
            }
        }
        for t in &triangles {
            let is_face = faces.iter().any(|f| f.len() == 3 && t.iter().all(|v| f.contains(v)));
            if !is_face {
                return Err(not_in_class(format!("triangle {t:?} does not bound a face")));
            }
        }
        for s in &edges {
            if !rotation[s[0]].contains(&s[1]) {
                return Err(not_in_class(format!("{s:?} is not an edge")));
            }
        }
        Ok(GadgetX { vertex_count, triangles, edges, faces, rotation })
    }

    /// The smallest member: one triangle whose vertices are joined to an edge `S_1`
    /// (`t^0` and `t^1` to `s^0`, `t^2` to `s^1`).
    pub fn smallest() -> Self {
        GadgetX::new(
            5,
            vec![[0, 1, 2]],
            vec![[3, 4]],
            vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 4, 2], vec![0, 2, 4, 3]],
        )
        .expect("valid fixture")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn triangles(&self) -> &[[VertexId; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    /// `(contracted vertex, label)` of every vertex.
    fn groups(&self) -> Vec<(usize, Color)> {
        let mut g = vec![(0, 0); self.vertex_count];
        let l = self.triangles.len();
        for (i, t) in self.triangles.iter().enumerate() {
            for (a, &v) in t.iter().enumerate() {
                g[v] = (i, a as Color);
            }
        }
        for (j, s) in self.edges.iter().enumerate() {
            for (b, &v) in s.iter().enumerate() {
                g[v] = (l + j, b as Color);
            }
        }
        g
    }

    /// Builds the listed plane graph `H`.
    pub fn build_h(&self) -> Result<ListedPlaneGraph, HardnessError> {
        let groups = self.groups();
        let l = self.triangles.len();
        let terminals = l + self.edges.len();
        let mut edges = Vec::new();
        let mut edge_of: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        for x in 0..self.vertex_count {
            for &y in &self.rotation[x] {
                let ((gx, lx), (gy, ly)) = (groups[x], groups[y]);
                if x < y && gx != gy {
                    // Triangle side first, otherwise the smaller contracted vertex.
                    let flip = (gy < l) && (gx >= l) || ((gx < l) == (gy < l) && gy < gx);
                    let e = if flip {
                        ContractedEdge { u: gy, v: gx, a: ly, b: lx }
                    } else {
                        ContractedEdge { u: gx, v: gy, a: lx, b: ly }
                    };
                    edge_of.insert((x, y), edges.len());
                    edge_of.insert((y, x), edges.len());
                    edges.push(e);
                }
            }
        }
        // Outgoing contracted edges in counterclockwise order around each contracted vertex.
        let external = |v: VertexId, after: Option<VertexId>| -> Vec<usize> {
            let ring = &self.rotation[v];
            let start = after.map_or(0, |a| ring.iter().position(|&w| w == a).expect("neighbor") + 1);
            (0..ring.len())
                .map(|i| ring[(start + i) % ring.len()])
                .filter(|&w| groups[w].0 != groups[v].0)
                .map(|w| edge_of[&(v, w)])
                .collect()
        };
        let mut around: Vec<Vec<usize>> = Vec::with_capacity(terminals);
        for t in &self.triangles {
            let face = self.faces.iter().find(|f| f.len() == 3 && t.iter().all(|v| f.contains(v))).expect("checked");
            around.push(face.iter().flat_map(|&v| external(v, None)).collect());
        }
        for &[s0, s1] in &self.edges {
            let mut ring = external(s0, Some(s1));
            ring.extend(external(s1, Some(s0)));
            around.push(ring);
        }

        let mut lists: Vec<Vec<Color>> =
            (0..terminals).map(|g| if g < l { vec![0, 1, 2] } else { vec![0, 1] }).collect();
        let mut rotation: Vec<Vec<VertexId>> = vec![Vec::new(); terminals];
        let mut paths = Vec::with_capacity(edges.len());
        for e in &edges {
            let fp = forbidding_path(&lists[e.u], &lists[e.v], e.a, e.b, SPARE)?;
            let base = rotation.len();
            let inner: [VertexId; 5] = std::array::from_fn(|i| base + i);
            for i in 0..5 {
                let prev = if i == 0 { e.u } else { inner[i - 1] };
                let next = if i == 4 { e.v } else { inner[i + 1] };
                rotation.push(vec![prev, next]);
                lists.push(fp.lists[i + 1].clone());
            }
            paths.push(inner);
        }
        for (g, ring) in around.iter().enumerate() {
            rotation[g] = ring.iter().map(|&e| if edges[e].u == g { paths[e][0] } else { paths[e][4] }).collect();
        }
        let plane = PlaneGraph::from_rotation(rotation)?;
        Ok(ListedPlaneGraph { plane, lists, terminals, triangle_count: l, edges, paths })
    }
}

impl ListedPlaneGraph {
    /// Extends a coloring of the contracted vertices along each path, taking the first
    /// completion in lexicographic order.
    pub fn extend_coloring(&self, terminal_colors: &[Color]) -> Result<Vec<Color>, HardnessError> {
        if terminal_colors.len() != self.terminals {
            return Err(HardnessError::List(format!(
                "{} colors for {} vertices",
                terminal_colors.len(),
                self.terminals
            )));
        }
        let mut colors = terminal_colors.to_vec();
        colors.resize(self.plane.vertex_count(), Color::MAX);
        for (v, &c) in terminal_colors.iter().enumerate() {
            if !self.lists[v].contains(&c) {
                return Err(HardnessError::List(format!("color {c} not in the list of vertex {v}")));
            }
        }
        for (e, path) in self.edges.iter().zip(&self.paths) {
            let (cu, cv) = (colors[e.u], colors[e.v]);
            let found = (0u32..32).find_map(|bits| {
                let inner: Vec<Color> = (0..5).map(|i| self.lists[path[i]][(bits >> (4 - i) & 1) as usize]).collect();
                let seq: Vec<Color> = std::iter::once(cu).chain(inner.iter().copied()).chain([cv]).collect();
                seq.windows(2).all(|w| w[0] != w[1]).then_some(inner)
            });
            let inner = found.ok_or_else(|| HardnessError::List(format!("forbidden pair ({cu}, {cv}) on {e:?}")))?;
            for (i, c) in inner.into_iter().enumerate() {
                colors[path[i]] = c;
            }
        }
        Ok(colors)
    }
}

/// Parses a `gadgetx <nV> <nT> <nS> <nF>` document: `T a b c` lines, `S a b` lines, then
/// `F v1 v2 ...` face walks.
pub fn parse_gadget_x(text: &str) -> Result<GadgetX, HardnessError> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "gadgetx", 4)?;
    let (n, nt, ns, nf) = (h[0], h[1], h[2], h[3]);
    let mut take = |tag: &str, len: Option<usize>| -> Result<Vec<VertexId>, ParseError> {
        let (line, tokens) = lines.expect_tokens(&format!("`{tag}` line"))?;
        if tokens[0] != tag || len.is_some_and(|k| tokens.len() != k + 1) {
            return Err(ParseError::new(line, format!("expected a `{tag}` line")));
        }
        parse_all(&tokens[1..], line)
    };
    let triangles = (0..nt).map(|_| take("T", Some(3)).map(|v| [v[0], v[1], v[2]])).collect::<Result<_, _>>()?;
    let edges = (0..ns).map(|_| take("S", Some(2)).map(|v| [v[0], v[1]])).collect::<Result<_, _>>()?;
    let faces = (0..nf).map(|_| take("F", None)).collect::<Result<_, _>>()?;
    lines.expect_end()?;
    GadgetX::new(n, triangles, edges, faces)
}

pub fn write_gadget_x(x: &GadgetX) -> String {
    let mut out = format!("gadgetx {} {} {} {}\n", x.vertex_count, x.triangles.len(), x.edges.len(), x.faces.len());
    for t in &x.triangles {
        out.push_str(&format!("T {}\n", join(t)));
    }
    for s in &x.edges {
        out.push_str(&format!("S {}\n", join(s)));
    }
    for f in &x.faces {
        out.push_str(&format!("F {}\n", join(f)));
    }
    out
}
