//! TRI2 text format and its JSON mirror.

use serde::{Deserialize, Serialize};

use super::{ComplexError, OrientedTriangulation2, VertexId};
use crate::text::{header, parse_all, Lines, ParseError};

/// Parses a `tri2 <nV> <nF>` document and validates it.
pub fn parse_tri2(text: &str) -> Result<OrientedTriangulation2, ComplexError> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "tri2", 2)?;
    let (n, nf) = (h[0], h[1]);
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (line, tokens) = lines.expect_tokens("a face line")?;
        if tokens.len() != 3 {
            return Err(ParseError::new(line, "a face line has exactly three vertex ids").into());
        }
        let v: Vec<VertexId> = parse_all(&tokens, line)?;
        faces.push([v[0], v[1], v[2]]);
    }
    lines.expect_end()?;
    OrientedTriangulation2::from_faces(n, faces)
}

pub fn write_tri2(g: &OrientedTriangulation2) -> String {
    let mut out = format!("tri2 {} {}\n", g.vertex_count(), g.face_count());
    for [a, b, c] in g.faces() {
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct Tri2Json {
    dim: usize,
    vertices: usize,
    faces: Vec<[VertexId; 3]>,
}

pub fn parse_tri2_json(text: &str) -> Result<OrientedTriangulation2, ComplexError> {
    let doc: Tri2Json = serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
    if doc.dim != 2 {
        return Err(ParseError::new(1, format!("expected dim 2, found {}", doc.dim)).into());
    }
    OrientedTriangulation2::from_faces(doc.vertices, doc.faces)
}

pub fn write_tri2_json(g: &OrientedTriangulation2) -> String {
    let doc = Tri2Json { dim: 2, vertices: g.vertex_count(), faces: g.faces().to_vec() };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}
