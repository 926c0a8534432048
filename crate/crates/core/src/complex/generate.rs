//! Standard triangulations and seeded random families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ComplexError, FaceId, OrientedTriangulation2, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Tetrahedron,
    Octahedron,
    /// Total vertex count: a cycle of `n - 2` vertices plus two apexes.
    DoubleWheel(usize),
}

/// Builds the requested triangulation. With `require_even`, odd double wheels are rejected.
pub fn generate(kind: Generator, require_even: bool) -> Result<OrientedTriangulation2, ComplexError> {
    let g = match kind {
        Generator::Tetrahedron => tetrahedron(),
        Generator::Octahedron => octahedron(),
        Generator::DoubleWheel(n) => double_wheel(n)?,
    };
    if require_even {
        if let Some(v) = g.first_odd_vertex() {
            return Err(ComplexError::NotEven(v));
        }
    }
    Ok(g)
}

pub fn tetrahedron() -> OrientedTriangulation2 {
    OrientedTriangulation2::from_faces(4, vec![[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]).expect("tetrahedron")
}

/// The octahedron, which is `double_wheel(6)`. Antipodal pairs are {0,2}, {1,3}, {4,5}.
pub fn octahedron() -> OrientedTriangulation2 {
    double_wheel(6).expect("octahedron")
}

/// Cycle `0..n-2` with apexes `n - 2` (above) and `n - 1` (below).
pub fn double_wheel(n: usize) -> Result<OrientedTriangulation2, ComplexError> {
    if n < 5 {
        return Err(ComplexError::Generator(format!("double wheel needs at least 5 vertices, got {n}")));
    }
    let m = n - 2;
    let (top, bottom) = (n - 2, n - 1);
    let mut faces = Vec::with_capacity(2 * m);
    for i in 0..m {
        faces.push([i, (i + 1) % m, top]);
    }
    for i in 0..m {
        faces.push([(i + 1) % m, i, bottom]);
    }
    OrientedTriangulation2::from_faces(n, faces)
}

/// Repeatedly glues a copy of the octahedron into a uniformly random face, starting from the octahedron.
/// Every result has only octahedral pieces.
pub fn stacked_octahedra(steps: usize, seed: u64) -> OrientedTriangulation2 {
    let oct = octahedron();
    stacked_gluing(&oct, std::slice::from_ref(&oct), steps, seed)
}

/// Starting from `base`, performs `steps` gluings. Each step picks a uniformly random
/// piece from `pieces` and glues its face 0 onto a uniformly random face of the current
/// triangulation, with a random rotation of the matching.
pub fn stacked_gluing(
    base: &OrientedTriangulation2,
    pieces: &[OrientedTriangulation2],
    steps: usize,
    seed: u64,
) -> OrientedTriangulation2 {
    assert!(!pieces.is_empty() || steps == 0, "no pieces to glue");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[VertexId; 3]> = base.faces().to_vec();
    let mut n = base.vertex_count();
    for _ in 0..steps {
        let piece = &pieces[rng.gen_range(0..pieces.len())];
        let target: FaceId = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[target];
        let rot = rng.gen_range(0..3);
        let host = [[a, c, b], [c, b, a], [b, a, c]][rot];
        let [p0, p1, p2] = piece.face(0);
        let mut map = vec![usize::MAX; piece.vertex_count()];
        map[p0] = host[0];
        map[p1] = host[1];
        map[p2] = host[2];
        for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
            *slot = n;
            n += 1;
        }
        let mut new_faces = piece.faces()[1..].iter().map(|f| f.map(|v| map[v]));
        faces[target] = new_faces.next().expect("piece has more than one face");
        faces.extend(new_faces);
    }
    OrientedTriangulation2::from_faces(n, faces).expect("gluing preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_counts() {
        let g = generate(Generator::Octahedron, true).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (6, 12, 8));
    }

    #[test]
    fn double_wheel_eight() {
        let g = double_wheel(8).unwrap();
        assert_eq!((g.vertex_count(), g.face_count()), (8, 12));
        for v in 0..6 {
            assert_eq!(g.degree(v), 4);
        }
        assert_eq!((g.degree(6), g.degree(7)), (6, 6));
        assert!(g.is_even());
        assert_eq!(g.link_cycle(6).len(), 6);
    }

    #[test]
    fn odd_double_wheel_rejected_when_even_requested() {
        assert!(matches!(generate(Generator::DoubleWheel(7), true), Err(ComplexError::NotEven(_))));
        assert!(generate(Generator::DoubleWheel(7), false).is_ok());
        assert!(double_wheel(4).is_err());
    }

    #[test]
    fn tetrahedron_is_valid_not_even() {
        let g = generate(Generator::Tetrahedron, false).unwrap();
        assert_eq!(g.face_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 3));
        assert!(generate(Generator::Tetrahedron, true).is_err());
    }

    #[test]
    fn stacked_octahedra_are_even() {
        let g = stacked_octahedra(50, 7);
        assert_eq!(g.vertex_count(), 6 + 3 * 50);
        assert_eq!(g.face_count(), 8 + 6 * 50);
        assert!(g.is_even());
        assert_eq!(stacked_octahedra(50, 7), g);
    }
}
