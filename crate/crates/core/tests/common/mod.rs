#![allow(dead_code)]

use std::sync::OnceLock;

use sphere_recolor::coloring::{Color, Coloring};
use sphere_recolor::complex::OrientedTriangulation2;
use sphere_recolor::corpus::even_triangulations;
use sphere_recolor::graph::Graph;
use sphere_recolor::oracle::{enumerate_colorings, DEFAULT_BUDGET};

/// Every even triangulation with at most ten vertices, with all its proper 4-colorings.
pub fn small_even() -> &'static [(OrientedTriangulation2, Vec<Vec<Color>>)] {
    static CELL: OnceLock<Vec<(OrientedTriangulation2, Vec<Vec<Color>>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        even_triangulations(10)
            .into_iter()
            .map(|g| {
                let all = enumerate_colorings(&Graph::from_triangulation(&g), 4, None, DEFAULT_BUDGET).unwrap();
                (g, all)
            })
            .collect()
    })
}

pub fn coloring(colors: &[Color]) -> Coloring {
    Coloring::new(4, colors.to_vec()).unwrap()
}
