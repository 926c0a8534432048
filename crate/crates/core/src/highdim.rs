//! Oriented pseudo-manifolds of dimension d >= 2 and the balance test for (d+2)-colorings.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::coloring::{permutation_sign, sign_of_colors, Color, Coloring};
use crate::complex::{OrientedTriangulation2, VertexId};
use crate::graph::Graph;
use crate::text::{header, join, parse_all, parse_num, Lines, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HighDimError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("facet {facet} has {found} vertices (expected {expected})")]
    FacetSize { facet: usize, found: usize, expected: usize },
    #[error("facet {facet} uses vertex {vertex}, but there are only {count} vertices")]
    VertexOutOfRange { facet: usize, vertex: VertexId, count: usize },
    #[error("facet {0} repeats a vertex")]
    DegenerateFacet(usize),
    #[error("ridge {ridge:?} lies in {count} facets (expected 2)")]
    RidgeCount { ridge: Vec<VertexId>, count: usize },
    #[error("the two facets at ridge {0:?} induce the same orientation")]
    Orientation(Vec<VertexId>),
    #[error("link of {0:?} is not a single cycle")]
    LinkNotCycle(Vec<VertexId>),
    #[error("vertex {0} is in no facet")]
    IsolatedVertex(VertexId),
    #[error("facets are not connected through ridges")]
    Disconnected,
    #[error("cycle lengths must be even and at least 4, got {0} and {1}")]
    JoinCycles(usize, usize),
    #[error("palette has {found} colors (expected {expected})")]
    WrongPalette { expected: usize, found: usize },
    #[error("coloring has {found} entries for {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertices {0} and {1} of a facet share a color")]
    Improper(VertexId, VertexId),
    #[error("winding sequence: {0}")]
    Winding(String),
}

/// A closed oriented pseudo-manifold given by its top simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedComplexD {
    dim: usize,
    vertex_count: usize,
    facets: Vec<Vec<VertexId>>,
    /// Declared vanishing of H_{d-1} with Z/2 coefficients; taken on trust.
    homology_trivial: bool,
    /// Each (d-2)-simplex (ascending) with the facets containing it.
    stars: BTreeMap<Vec<VertexId>, Vec<usize>>,
}

/// `tuple` without position `i`.
fn omit(tuple: &[VertexId], i: usize) -> Vec<VertexId> {
    tuple.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect()
}

fn sorted(mut t: Vec<VertexId>) -> Vec<VertexId> {
    t.sort_unstable();
    t
}

impl OrientedComplexD {
    pub fn new(
        dim: usize,
        vertex_count: usize,
        facets: Vec<Vec<VertexId>>,
        homology_trivial: bool,
    ) -> Result<Self, HighDimError> {
        if dim < 2 {
            return Err(HighDimError::DimensionTooSmall(dim));
        }
        for (i, f) in facets.iter().enumerate() {
            if f.len() != dim + 1 {
                return Err(HighDimError::FacetSize { facet: i, found: f.len(), expected: dim + 1 });
            }
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(HighDimError::VertexOutOfRange { facet: i, vertex: v, count: vertex_count });
            }
            let s = sorted(f.clone());
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(HighDimError::DegenerateFacet(i));
            }
        }
        let mut used = vec![false; vertex_count];
        facets.iter().flatten().for_each(|&v| used[v] = true);
        if let Some(v) = used.iter().position(|&u| !u) {
            return Err(HighDimError::IsolatedVertex(v));
        }

        // Ridges: each must lie in two facets with opposite induced orientations.
        let mut ridges: BTreeMap<Vec<VertexId>, Vec<(usize, i8)>> = BTreeMap::new();
        for (fi, f) in facets.iter().enumerate() {
            for i in 0..=dim {
                let r = omit(f, i);
                let sign = permutation_sign(&r) * if i % 2 == 0 { 1 } else { -1 };
                ridges.entry(sorted(r)).or_default().push((fi, sign));
            }
        }
        let mut dual: Vec<Vec<usize>> = vec![Vec::new(); facets.len()];
        for (r, list) in &ridges {
            if list.len() != 2 {
                return Err(HighDimError::RidgeCount { ridge: r.clone(), count: list.len() });
            }
            if list[0].1 == list[1].1 {
                return Err(HighDimError::Orientation(r.clone()));
            }
            dual[list[0].0].push(list[1].0);
            dual[list[1].0].push(list[0].0);
        }
        let mut seen = vec![false; facets.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = !facets.is_empty();
        while let Some(f) = queue.pop_front() {
            for &h in &dual[f] {
                if !seen[h] {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(HighDimError::Disconnected);
        }

        let mut stars: BTreeMap<Vec<VertexId>, Vec<usize>> = BTreeMap::new();
        for (fi, f) in facets.iter().enumerate() {
            let s = sorted(f.clone());
            for i in 0..=dim {
                for j in i + 1..=dim {
                    let sigma: Vec<VertexId> =
                        s.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &v)| v).collect();
                    stars.entry(sigma).or_default().push(fi);
                }
            }
        }
        let complex = OrientedComplexD { dim, vertex_count, facets, homology_trivial, stars };
        for sigma in complex.stars.keys() {
            if !complex.link_is_cycle(sigma) {
                return Err(HighDimError::LinkNotCycle(sigma.clone()));
            }
        }
        Ok(complex)
    }

    fn link_is_cycle(&self, sigma: &[VertexId]) -> bool {
        let star = &self.stars[sigma];
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &f in star {
            let rest: Vec<VertexId> = self.facets[f].iter().copied().filter(|v| !sigma.contains(v)).collect();
            adj.entry(rest[0]).or_default().push(rest[1]);
            adj.entry(rest[1]).or_default().push(rest[0]);
        }
        if adj.values().any(|n| n.len() != 2) {
            return false;
        }
        // Walk the cycle from the first vertex and count its length.
        let start = *adj.keys().next().expect("nonempty star");
        let (mut prev, mut cur, mut len) = (start, adj[&start][0], 1);
        while cur != start {
            let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
            prev = cur;
            cur = next;
            len += 1;
        }
        len == adj.len()
    }

    pub fn from_triangulation(g: &OrientedTriangulation2) -> Self {
        let facets = g.faces().iter().map(|f| f.to_vec()).collect();
        Self::new(2, g.vertex_count(), facets, true).expect("a sphere triangulation is a valid complex")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Vec<VertexId>] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn homology_trivial(&self) -> bool {
        self.homology_trivial
    }

    /// (d-2)-simplices, ascending, with the facets of their stars.
    pub fn codim2_stars(&self) -> &BTreeMap<Vec<VertexId>, Vec<usize>> {
        &self.stars
    }

    /// Every (d-2)-simplex lies in an even number of facets.
    pub fn is_even(&self) -> bool {
        self.stars.values().all(|s| s.len() % 2 == 0)
    }

    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count);
        for f in &self.facets {
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    g.add_edge(f[i], f[j]);
                }
            }
        }
        g
    }

    /// Signature of every facet under a proper (d+2)-coloring.
    pub fn facet_signs(&self, alpha: &Coloring) -> Result<Vec<i8>, HighDimError> {
        if alpha.k() != self.dim + 2 {
            return Err(HighDimError::WrongPalette { expected: self.dim + 2, found: alpha.k() });
        }
        if alpha.len() != self.vertex_count {
            return Err(HighDimError::LengthMismatch { expected: self.vertex_count, found: alpha.len() });
        }
        self.facets
            .iter()
            .map(|f| {
                let colors: Vec<Color> = f.iter().map(|&v| alpha.get(v)).collect();
                for i in 0..f.len() {
                    for j in i + 1..f.len() {
                        if colors[i] == colors[j] {
                            return Err(HighDimError::Improper(f[i], f[j]));
                        }
                    }
                }
                Ok(sign_of_colors(&colors))
            })
            .collect()
    }
}

/// Whether every (d-2)-simplex has as many +1 as -1 facets in its star.
pub fn balance_check_d(k: &OrientedComplexD, alpha: &Coloring) -> Result<bool, HighDimError> {
    let signs = k.facet_signs(alpha)?;
    Ok(k.stars.values().all(|star| star.iter().map(|&f| signs[f] as i32).sum::<i32>() == 0))
}

/// Parses a `trid <d> <nV> <nFacets> <h1_trivial>` document and validates it.
pub fn parse_trid(text: &str) -> Result<OrientedComplexD, HighDimError> {
    let mut lines = Lines::new(text);
    let (line, h) = header(&mut lines, "trid", 4)?;
    let (dim, n, nf) = (h[0], h[1], h[2]);
    let homology_trivial = match h[3] {
        0 => false,
        1 => true,
        _ => return Err(ParseError::new(line, "homology flag must be 0 or 1").into()),
    };
    let mut facets = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (line, tokens) = lines.expect_tokens("a facet line")?;
        if tokens.len() != dim + 1 {
            return Err(ParseError::new(line, format!("a facet line has {} vertex ids", dim + 1)).into());
        }
        facets.push(parse_all(&tokens, line)?);
    }
    lines.expect_end()?;
    OrientedComplexD::new(dim, n, facets, homology_trivial)
}

pub fn write_trid(k: &OrientedComplexD) -> String {
    let mut out = format!("trid {} {} {} {}\n", k.dim, k.vertex_count, k.facets.len(), u8::from(k.homology_trivial));
    for f in &k.facets {
        out.push_str(&join(f));
        out.push('\n');
    }
    out
}

/// Join with two new apexes `n` and `n + 1`. Facets `F + [n]` keep the orientation of `F`;
/// facets over the second apex have their first two vertices swapped.
pub fn suspend(k: &OrientedComplexD) -> OrientedComplexD {
    let n = k.vertex_count;
    let mut facets = Vec::with_capacity(2 * k.facets.len());
    for f in &k.facets {
        let mut up = f.clone();
        up.push(n);
        facets.push(up);
    }
    for f in &k.facets {
        let mut down = f.clone();
        down.swap(0, 1);
        down.push(n + 1);
        facets.push(down);
    }
    OrientedComplexD::new(k.dim + 1, n + 2, facets, k.homology_trivial).expect("suspension of a valid complex")
}

pub fn suspend_triangulation(g: &OrientedTriangulation2) -> OrientedComplexD {
    suspend(&OrientedComplexD::from_triangulation(g))
}

/// The 3-sphere `C_m * C_n`: vertices `0..m` on the first cycle, `m..m+n` on the second.
pub fn gen_join_cycles(m: usize, n: usize) -> Result<OrientedComplexD, HighDimError> {
    if m < 4 || n < 4 || m % 2 == 1 || n % 2 == 1 {
        return Err(HighDimError::JoinCycles(m, n));
    }
    let mut facets = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            facets.push(vec![i, (i + 1) % m, m + j, m + (j + 1) % n]);
        }
    }
    OrientedComplexD::new(3, m + n, facets, true)
}

/// Boundary of the (d+1)-simplex on vertices `0..=d+1`, a d-sphere.
pub fn simplex_boundary(d: usize) -> Result<OrientedComplexD, HighDimError> {
    let facets = (0..d + 2)
        .map(|i| {
            let mut f: Vec<VertexId> = (0..d + 2).filter(|&v| v != i).collect();
            if i % 2 == 1 {
                f.swap(0, 1);
            }
            f
        })
        .collect();
    OrientedComplexD::new(d, d + 2, facets, true)
}

/// Net number of laps a cyclic sequence over {0, 1, 2} makes around 0 -> 1 -> 2 -> 0.
pub fn winding_degree(colors: &[Color]) -> Result<i64, HighDimError> {
    if colors.is_empty() {
        return Err(HighDimError::Winding("empty sequence".into()));
    }
    if let Some(&c) = colors.iter().find(|&&c| c > 2) {
        return Err(HighDimError::Winding(format!("color {c} outside {{0, 1, 2}}")));
    }
    let mut steps = 0i64;
    for i in 0..colors.len() {
        let (a, b) = (colors[i], colors[(i + 1) % colors.len()]);
        match (b + 3 - a) % 3 {
            1 => steps += 1,
            2 => steps -= 1,
            _ => return Err(HighDimError::Winding(format!("entries {i} and the next repeat color {a}"))),
        }
    }
    Ok(steps / 3)
}

/// Parses a whitespace-separated color list, as used for cycle colorings.
pub fn parse_color_list(text: &str) -> Result<Vec<Color>, ParseError> {
    text.split_whitespace().map(|t| parse_num(t, 1)).collect()
}
