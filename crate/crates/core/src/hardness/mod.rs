//! Hard recoloring instances built from planar list-recoloring inputs.
//!
//! A [`GadgetX`] is contracted and its edges replaced by forbidding paths to give a listed
//! plane graph `H`. That graph is made 2-connected, every face gets a hub, and every
//! resulting triangle gets a copy of a frozen gadget, which yields an even triangulation
//! whose 5-colorings outside `H` are forced. Suspension carries the instance to higher
//! dimensions.

mod forbidding;
mod frozen;
mod gadget_x;
mod lists;
mod plane;
mod reduce;

use thiserror::Error;

use crate::coloring::ColoringError;
use crate::complex::ComplexError;
use crate::oracle::OracleError;
use crate::text::ParseError;

pub use forbidding::{admissible_parameters, forbidding_path, ForbiddingPath};
pub use frozen::{
    find_frozen_coloring, frozen_gadget, is_frozen, search_frozen_gadget, FrozenGadget, DEFAULT_GADGET_CAP,
};
pub use gadget_x::{parse_gadget_x, write_gadget_x, ContractedEdge, GadgetX, ListedPlaneGraph, SPARE};
pub use lists::{parse_list_instance, write_list_instance, ListInstance};
pub use plane::PlaneGraph;
pub use reduce::{prepare_planar, reduce_instance, suspend_instance, Insertion, Prepared, Reduction, BRIDGE_COLOR};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("input is not in the gadget class: {0}")]
    NotInClass(String),
    #[error("invalid embedding: {0}")]
    Embedding(String),
    #[error("list coloring: {0}")]
    List(String),
    #[error("gadget: {0}")]
    Gadget(String),
    #[error("no frozen gadget with at most {0} vertices")]
    GadgetSearch(usize),
    #[error("internal: {0}")]
    Internal(String),
}
