//! Connectedness of the 4-recoloring graph: pieces, contractions and unbalanced witnesses.

mod contract;
mod pieces;
mod triangles;
mod witness;

use thiserror::Error;

use crate::coloring::ColoringError;
use crate::complex::{ComplexError, VertexId};

pub use contract::{contract, contraction_sequence, expand, next_contraction, ContractionKind, ContractionStep};
pub use pieces::{
    decide_connected, four_connected_pieces, is_octahedron, split_along_triangle, Piece, PieceDecomposition,
};
pub use triangles::{is_four_connected, separating_triangles, triangles};
pub use witness::{double_wheel_8_witness, lift_coloring, unbalanced_witness, DOUBLE_WHEEL_8_UNBALANCED};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("vertex {0} has odd degree")]
    NotEven(VertexId),
    #[error("triangulation is not 4-connected")]
    NotFourConnected,
    #[error("every piece is an octahedron, so every 4-coloring is balanced")]
    AllOctahedral,
    #[error("invalid expansion: {0}")]
    Expansion(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
