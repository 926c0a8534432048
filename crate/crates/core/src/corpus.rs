//! Small even triangulations for exhaustive cross-checks.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{
    barycentric_subdivision, double_wheel, glue_along_face, octahedron, tetrahedron, CanonicalCode,
    OrientedTriangulation2,
};
use crate::connectivity::{expand, is_four_connected, ContractionKind};

/// Every expansion of `g` that keeps it even, as `(kind, x, a, b)`.
fn even_expansions(g: &OrientedTriangulation2) -> Vec<(ContractionKind, usize, usize, usize)> {
    let mut out = Vec::new();
    for x in 0..g.vertex_count() {
        let ring = g.neighbors(x);
        let d = ring.len();
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                // Neighbors strictly between the two on each side.
                let inner = (j + d - i) % d - 1;
                let kind = if inner % 2 == 1 { ContractionKind::Four } else { ContractionKind::Twin };
                out.push((kind, x, ring[i], ring[j]));
            }
        }
    }
    out
}

/// All 4-connected even triangulations with at most `max_vertices` vertices, one per
/// isomorphism class, ordered by vertex count and then canonical code. Generated from the
/// octahedron by 4-expansions and twin-expansions.
pub fn four_connected_even(max_vertices: usize) -> Vec<OrientedTriangulation2> {
    let mut seen: BTreeMap<(usize, CanonicalCode), OrientedTriangulation2> = BTreeMap::new();
    let oct = octahedron();
    if max_vertices < oct.vertex_count() {
        return Vec::new();
    }
    seen.insert((6, oct.canonical_code()), oct.clone());
    let mut frontier = vec![oct];
    while let Some(g) = frontier.pop() {
        for (kind, x, a, b) in even_expansions(&g) {
            let grow = if kind == ContractionKind::Four { 2 } else { 3 };
            if g.vertex_count() + grow > max_vertices {
                continue;
            }
            let Ok(h) = expand(&g, kind, x, a, b) else { continue };
            if !h.is_even() || !is_four_connected(&h) {
                continue;
            }
            let key = (h.vertex_count(), h.canonical_code());
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(h.clone());
                frontier.push(h);
            }
        }
    }
    seen.into_values().collect()
}

/// All even triangulations with at most `max_vertices` vertices, one per isomorphism class:
/// the 4-connected ones plus every way of gluing them along faces.
pub fn even_triangulations(max_vertices: usize) -> Vec<OrientedTriangulation2> {
    let pieces = four_connected_even(max_vertices);
    let mut seen: BTreeMap<(usize, CanonicalCode), OrientedTriangulation2> = BTreeMap::new();
    for p in &pieces {
        seen.insert((p.vertex_count(), p.canonical_code()), p.clone());
    }
    let mut frontier: Vec<OrientedTriangulation2> = pieces.clone();
    while let Some(g) = frontier.pop() {
        for p in &pieces {
            if g.vertex_count() + p.vertex_count() - 3 > max_vertices {
                continue;
            }
            for f in 0..g.face_count() {
                let [a, b, c] = g.face(f);
                for matching in [[a, c, b], [c, b, a], [b, a, c]] {
                    let h = glue_along_face(&g, f, p, 0, matching).expect("orientation-reversing matching").tri;
                    let key = (h.vertex_count(), h.canonical_code());
                    if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                        e.insert(h.clone());
                        frontier.push(h);
                    }
                }
            }
        }
    }
    seen.into_values().collect()
}

/// Same triangulation with vertices and faces shuffled.
pub fn shuffled(g: &OrientedTriangulation2, rng: &mut impl Rng) -> OrientedTriangulation2 {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    let mut order: Vec<usize> = (0..g.face_count()).collect();
    order.shuffle(rng);
    g.relabeled(&perm, &order).expect("relabeling keeps validity")
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub tri: OrientedTriangulation2,
}

/// Named even triangulations: the octahedron, the double wheels up to `max_vertices`,
/// every other isomorphism class from [`even_triangulations`], the barycentric
/// subdivision of the tetrahedron (14 vertices), and seeded relabeled copies until there
/// are at least `min_entries`.
pub fn corpus(max_vertices: usize, min_entries: usize, seed: u64) -> Vec<CorpusEntry> {
    let mut out = vec![CorpusEntry { name: "octahedron".into(), tri: octahedron() }];
    for n in (8..=max_vertices).step_by(2) {
        out.push(CorpusEntry { name: format!("double_wheel({n})"), tri: double_wheel(n).expect("n >= 5") });
    }
    let named: Vec<CanonicalCode> = out.iter().map(|e| e.tri.canonical_code()).collect();
    let classes = even_triangulations(max_vertices);
    for (i, g) in classes.iter().enumerate() {
        if !named.contains(&g.canonical_code()) {
            let kind = if is_four_connected(g) { "expanded" } else { "glued" };
            out.push(CorpusEntry { name: format!("{kind}-{}v-{i}", g.vertex_count()), tri: g.clone() });
        }
    }
    out.push(CorpusEntry { name: "barycentric(tetrahedron)".into(), tri: barycentric_subdivision(&tetrahedron()) });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = out.len();
    let mut i = 0;
    while out.len() < min_entries && base > 0 {
        let src = &out[i % base];
        let entry =
            CorpusEntry { name: format!("{} relabeled #{}", src.name, i / base), tri: shuffled(&src.tri, &mut rng) };
        out.push(entry);
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::contraction_sequence;

    #[test]
    fn six_and_eight_vertices() {
        let all = even_triangulations(8);
        let counts: Vec<usize> = all.iter().map(|g| g.vertex_count()).collect();
        assert_eq!(counts, vec![6, 8]);
        assert!(all[1].is_isomorphic(&double_wheel(8).unwrap()));
    }

    #[test]
    fn everything_up_to_eleven_is_even_and_distinct() {
        let all = even_triangulations(11);
        for (i, g) in all.iter().enumerate() {
            assert!(g.is_even());
            for h in &all[..i] {
                assert!(!g.is_isomorphic(h));
            }
        }
        for g in four_connected_even(11) {
            let seq = contraction_sequence(&g).unwrap();
            assert!(seq.iter().all(|(h, _)| h.is_even() && is_four_connected(h)));
        }
    }

    #[test]
    fn corpus_is_seeded() {
        let a = corpus(10, 12, 3);
        let b = corpus(10, 12, 3);
        assert!(a.len() >= 12);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.tri, y.tri);
        }
    }
}
