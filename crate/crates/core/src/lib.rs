//! Single-vertex recoloring on even triangulations of spheres.
//!
//! The library decides membership in the 3-coloring component of the
//! 4-coloring reconfiguration graph, synthesizes recoloring sequences inside
//! it, decides connectedness of that graph from the 4-connected pieces of the
//! triangulation, and builds hard instances from list-recoloring inputs. A
//! brute-force oracle over the reconfiguration graph provides ground truth on
//! small inputs.

pub mod coloring;
pub mod complex;
pub mod connectivity;
pub mod corpus;
pub mod graph;
pub mod hardness;
pub mod highdim;
pub mod oracle;
pub mod reconfigure;
pub mod text;
