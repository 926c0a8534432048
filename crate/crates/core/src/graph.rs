//! Plain undirected simple graphs.

use std::collections::VecDeque;

use crate::complex::{OrientedTriangulation2, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list; duplicate edges are merged, loops are rejected.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn from_triangulation(t: &OrientedTriangulation2) -> Self {
        let mut adj = t.adjacency();
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert_ne!(u, v, "loops are not allowed");
        if let Err(i) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(i, v);
        }
        if let Err(i) = self.adj[v].binary_search(&u) {
            self.adj[v].insert(i, u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbors in ascending order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Connected component index of every vertex, numbered in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        self.components_avoiding(&vec![false; self.adj.len()])
    }

    /// Components of the graph with the `removed` vertices deleted; removed vertices get `usize::MAX`.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.adj.len()];
        let mut next = 0;
        for s in 0..self.adj.len() {
            if removed[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !removed[w] && comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }
}
