//! List-recoloring instances and their text format.

use super::gadget_x::ListedPlaneGraph;
use super::HardnessError;
use crate::coloring::Color;
use crate::graph::Graph;
use crate::text::{header, join, parse_all, parse_num, Lines, ParseError};

/// A graph with lists from `{0, 1, 2, 3}` and two list-colorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListInstance {
    pub graph: Graph,
    pub lists: Vec<Vec<Color>>,
    pub alpha: Vec<Color>,
    pub beta: Vec<Color>,
}

impl ListInstance {
    pub fn new(
        graph: Graph,
        lists: Vec<Vec<Color>>,
        alpha: Vec<Color>,
        beta: Vec<Color>,
    ) -> Result<Self, HardnessError> {
        let n = graph.vertex_count();
        if lists.len() != n {
            return Err(HardnessError::List(format!("{} lists for {n} vertices", lists.len())));
        }
        if let Some(v) = lists.iter().position(|l| l.iter().any(|&c| c > 3)) {
            return Err(HardnessError::List(format!("list of vertex {v} leaves 0..4")));
        }
        let inst = ListInstance { graph, lists, alpha, beta };
        for c in [&inst.alpha, &inst.beta] {
            inst.check(c)?;
        }
        Ok(inst)
    }

    /// Lists of `h` with colorings extended along the paths from the contracted vertices.
    pub fn from_listed(h: &ListedPlaneGraph, alpha: &[Color], beta: &[Color]) -> Result<Self, HardnessError> {
        Self::new(h.plane.graph(), h.lists.clone(), h.extend_coloring(alpha)?, h.extend_coloring(beta)?)
    }

    pub fn check(&self, colors: &[Color]) -> Result<(), HardnessError> {
        if colors.len() != self.graph.vertex_count() {
            return Err(HardnessError::List(format!("{} colors for {} vertices", colors.len(), self.lists.len())));
        }
        if let Some(v) = (0..colors.len()).find(|&v| !self.lists[v].contains(&colors[v])) {
            return Err(HardnessError::List(format!("vertex {v} colored {} outside its list", colors[v])));
        }
        if let Some((u, v)) = self.graph.edges().into_iter().find(|&(u, v)| colors[u] == colors[v]) {
            return Err(HardnessError::List(format!("edge {u}-{v} is monochromatic")));
        }
        Ok(())
    }
}

/// Parses `listinst <nV> <nE>`, then `nE` edge lines, `nV` lines `v: c1 c2 ...` and the two colorings.
pub fn parse_list_instance(text: &str) -> Result<ListInstance, HardnessError> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "listinst", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = lines.expect_tokens("edge")?;
        let e: Vec<usize> = parse_all(&tokens, line)?;
        if e.len() != 2 || e[0] >= n || e[1] >= n || e[0] == e[1] {
            return Err(ParseError::new(line, "edge must join two distinct vertices").into());
        }
        edges.push((e[0], e[1]));
    }
    let mut lists = vec![Vec::new(); n];
    for v in 0..n {
        let (line, tokens) = lines.expect_tokens("list")?;
        let label = tokens[0].strip_suffix(':').ok_or_else(|| ParseError::new(line, "expected `v:`"))?;
        if parse_num::<usize>(label, line)? != v {
            return Err(ParseError::new(line, format!("expected the list of vertex {v}")).into());
        }
        lists[v] = parse_all(&tokens[1..], line)?;
    }
    let mut colorings = [Vec::new(), Vec::new()];
    for c in &mut colorings {
        let (line, tokens) = lines.expect_tokens("coloring")?;
        *c = parse_all(&tokens, line)?;
    }
    lines.expect_end()?;
    let [alpha, beta] = colorings;
    ListInstance::new(Graph::from_edges(n, &edges), lists, alpha, beta)
}

pub fn write_list_instance(inst: &ListInstance) -> String {
    let edges = inst.graph.edges();
    let mut out = format!("listinst {} {}\n", inst.graph.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    for (v, l) in inst.lists.iter().enumerate() {
        out.push_str(&format!("{v}: {}\n", join(l)));
    }
    out.push_str(&format!("{}\n{}\n", join(&inst.alpha), join(&inst.beta)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_errors() {
        let text = "listinst 3 2\n0 1\n1 2\n0: 0 1\n1: 1 2\n2: 0 3\n0 1 0\n1 2 3\n";
        let inst = parse_list_instance(text).unwrap();
        assert_eq!(write_list_instance(&inst), text);
        assert!(parse_list_instance(&text.replace("0 1 0\n", "0 0 0\n")).is_err());
        assert!(parse_list_instance(&text.replace("2: 0 3", "2: 0 4")).is_err());
        assert!(parse_list_instance(&text.replace("1: 1 2", "2: 1 2")).is_err());
    }
}
