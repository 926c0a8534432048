//! Pairings of the nonsingular edges at each vertex.

use super::ReconfigureError;
use crate::coloring::{EdgeClass, SignatureState};
use crate::complex::{EdgeId, OrientedTriangulation2, VertexId};

const NONE: EdgeId = usize::MAX;

/// For every vertex, a perfect matching of its nonsingular incident edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NsPairing {
    /// `partner[e][i]` is the edge paired with `e` at endpoint `edges[e][i]`.
    partner: Vec<[EdgeId; 2]>,
}

fn slot(g: &OrientedTriangulation2, v: VertexId, e: EdgeId) -> usize {
    let [a, b] = g.edge(e);
    debug_assert!(a == v || b == v);
    usize::from(a != v)
}

impl NsPairing {
    pub fn empty(g: &OrientedTriangulation2) -> Self {
        NsPairing { partner: vec![[NONE; 2]; g.edge_count()] }
    }

    /// The edge paired with `e` at its endpoint `v`.
    pub fn partner(&self, g: &OrientedTriangulation2, v: VertexId, e: EdgeId) -> Option<EdgeId> {
        let p = self.partner[e][slot(g, v, e)];
        (p != NONE).then_some(p)
    }

    pub fn is_empty(&self) -> bool {
        self.partner.iter().all(|p| p[0] == NONE && p[1] == NONE)
    }

    /// Pairs at `v`, each once, as `(earlier, later)` in rotation order.
    pub fn pairs_at(&self, g: &OrientedTriangulation2, v: VertexId) -> Vec<(EdgeId, EdgeId)> {
        let inc = g.incident_edges(v);
        let mut out = Vec::new();
        for (i, &e) in inc.iter().enumerate() {
            if let Some(p) = self.partner(g, v, e) {
                let j = inc.iter().position(|&x| x == p).expect("partner is incident");
                if i < j {
                    out.push((e, p));
                }
            }
        }
        out
    }

    pub(crate) fn pair(&mut self, g: &OrientedTriangulation2, v: VertexId, e: EdgeId, f: EdgeId) {
        self.partner[e][slot(g, v, e)] = f;
        self.partner[f][slot(g, v, f)] = e;
    }

    /// Removes the pair containing `e` at `v`, returning the former partner.
    pub(crate) fn unpair(&mut self, g: &OrientedTriangulation2, v: VertexId, e: EdgeId) -> Option<EdgeId> {
        let p = self.partner(g, v, e)?;
        self.partner[e][slot(g, v, e)] = NONE;
        self.partner[p][slot(g, v, p)] = NONE;
        Some(p)
    }
}

/// Builds an admissible pairing by matching adjacent opposite-sign edges with a
/// stack, scanning the rotation at each vertex from its first neighbor.
pub fn build_admissible_pairing(
    g: &OrientedTriangulation2,
    state: &SignatureState,
) -> Result<NsPairing, ReconfigureError> {
    let mut pairing = NsPairing::empty(g);
    let mut stack: Vec<EdgeId> = Vec::new();
    for v in 0..g.vertex_count() {
        stack.clear();
        for &e in g.incident_edges(v) {
            let class = state.edge_class(e);
            if class == EdgeClass::Singular {
                continue;
            }
            match stack.last() {
                Some(&top) if state.edge_class(top) != class => {
                    stack.pop();
                    pairing.pair(g, v, top, e);
                }
                _ => stack.push(e),
            }
        }
        if !stack.is_empty() {
            return Err(ReconfigureError::Unbalanced(v));
        }
    }
    Ok(pairing)
}

/// Checks that the pairing at `v` matches exactly the nonsingular edges, pairs
/// opposite signs, and has no crossing pairs in the rotation order.
pub fn check_admissible_at(
    g: &OrientedTriangulation2,
    state: &SignatureState,
    pairing: &NsPairing,
    v: VertexId,
) -> Result<(), String> {
    let inc = g.incident_edges(v);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &e) in inc.iter().enumerate() {
        let partner = pairing.partner(g, v, e);
        let class = state.edge_class(e);
        match (class, partner) {
            (EdgeClass::Singular, None) => continue,
            (EdgeClass::Singular, Some(_)) => return Err(format!("singular edge {e} is paired at vertex {v}")),
            (_, None) => return Err(format!("nonsingular edge {e} is unpaired at vertex {v}")),
            (_, Some(p)) => {
                if pairing.partner(g, v, p) != Some(e) {
                    return Err(format!("pairing of edge {e} at vertex {v} is not symmetric"));
                }
                if state.edge_class(p).sign() != -class.sign() {
                    return Err(format!("pair ({e}, {p}) at vertex {v} does not have opposite signs"));
                }
                let j = inc.iter().position(|&x| x == p).ok_or_else(|| format!("partner {p} not incident to {v}"))?;
                if j > i {
                    stack.push(j);
                } else if stack.pop() != Some(i) {
                    return Err(format!("pairs cross at vertex {v}"));
                }
            }
        }
    }
    Ok(())
}

pub fn check_admissible(g: &OrientedTriangulation2, state: &SignatureState, pairing: &NsPairing) -> Result<(), String> {
    (0..g.vertex_count()).try_for_each(|v| check_admissible_at(g, state, pairing, v))
}
