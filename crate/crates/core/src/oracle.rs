//! Brute-force ground truth: enumeration of (list-)colorings and the
//! reconfiguration graph under single-vertex changes.
//!
//! Colorings are packed into `u128` codes in radix `k` with vertex 0 as the most
//! significant digit, so numeric order equals lexicographic order by vertex id.

use std::collections::{HashMap, VecDeque};

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::coloring::Color;
use crate::complex::VertexId;
use crate::graph::Graph;

/// Default cap on the number of states the oracle will touch.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("state budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("{0}")]
    InvalidInput(String),
}

/// Per-vertex allowed colors; `None` means the full palette.
pub type Lists = [Vec<Color>];

/// Problem description shared by all oracle queries.
#[derive(Debug, Clone)]
pub struct Instance<'a> {
    graph: &'a Graph,
    k: usize,
    masks: Vec<u32>,
    budget: u64,
}

impl<'a> Instance<'a> {
    pub fn new(graph: &'a Graph, k: usize, lists: Option<&Lists>, budget: u64) -> Result<Self, OracleError> {
        if k == 0 || k > 32 {
            return Err(OracleError::InvalidInput(format!("palette size {k} not supported")));
        }
        let n = graph.vertex_count();
        if (n as f64) * (k as f64).log2() > 127.0 {
            return Err(OracleError::InvalidInput(format!("{n} vertices with {k} colors do not fit a packed code")));
        }
        let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        let masks = match lists {
            None => vec![full; n],
            Some(lists) => {
                if lists.len() != n {
                    return Err(OracleError::InvalidInput(format!("{} lists for {n} vertices", lists.len())));
                }
                lists
                    .iter()
                    .map(|l| {
                        l.iter().try_fold(0u32, |m, &c| {
                            if (c as usize) < k {
                                Ok(m | 1 << c)
                            } else {
                                Err(OracleError::InvalidInput(format!("list color {c} outside palette {k}")))
                            }
                        })
                    })
                    .collect::<Result<_, _>>()?
            }
        };
        Ok(Instance { graph, k, masks, budget })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn encode(&self, colors: &[Color]) -> u128 {
        colors.iter().fold(0u128, |acc, &c| acc * self.k as u128 + c as u128)
    }

    pub fn decode(&self, mut code: u128) -> Vec<Color> {
        let n = self.graph.vertex_count();
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = (code % self.k as u128) as Color;
            code /= self.k as u128;
        }
        out
    }

    fn place_value(&self, v: VertexId) -> u128 {
        (self.k as u128).pow((self.graph.vertex_count() - 1 - v) as u32)
    }

    /// Whether `colors` is a proper coloring respecting the lists.
    pub fn is_valid(&self, colors: &[Color]) -> bool {
        colors.len() == self.graph.vertex_count()
            && colors.iter().enumerate().all(|(v, &c)| (c as usize) < self.k && self.masks[v] & (1 << c) != 0)
            && self.graph.edges().iter().all(|&(u, v)| colors[u] != colors[v])
    }

    /// Colors `v` may switch to in `colors` (excluding its current color).
    fn free_colors(&self, colors: &[Color], v: VertexId) -> u32 {
        let mut mask = self.masks[v] & !(1 << colors[v]);
        for &w in self.graph.neighbors(v) {
            mask &= !(1 << colors[w]);
        }
        mask
    }

    /// All valid colorings as packed codes, ascending.
    pub fn enumerate_codes(&self) -> Result<Vec<u128>, OracleError> {
        let n = self.graph.vertex_count();
        let mut out = Vec::new();
        if n == 0 {
            out.push(0);
            return Ok(out);
        }
        let mut colors: Vec<Color> = vec![0; n];
        // Colors still available to each vertex given its already colored neighbors.
        let mut avail: Vec<u32> = self.masks.clone();
        let mut undo: Vec<Vec<(VertexId, u32)>> = vec![Vec::new(); n];
        self.search(0, &mut colors, &mut avail, &mut undo, &mut out)?;
        Ok(out)
    }

    fn search(
        &self,
        v: VertexId,
        colors: &mut [Color],
        avail: &mut [u32],
        undo: &mut [Vec<(VertexId, u32)>],
        out: &mut Vec<u128>,
    ) -> Result<(), OracleError> {
        let n = colors.len();
        if v == n {
            if out.len() as u64 >= self.budget {
                return Err(OracleError::BudgetExceeded(self.budget));
            }
            out.push(self.encode(colors));
            return Ok(());
        }
        let mut options = avail[v];
        while options != 0 {
            let c = options.trailing_zeros() as Color;
            options &= options - 1;
            colors[v] = c;
            let mut ok = true;
            undo[v].clear();
            for &w in self.graph.neighbors(v) {
                if w > v && avail[w] & (1 << c) != 0 {
                    undo[v].push((w, avail[w]));
                    avail[w] &= !(1 << c);
                    if avail[w] == 0 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.search(v + 1, colors, avail, undo, out)?;
            }
            for i in (0..undo[v].len()).rev() {
                let (w, m) = undo[v][i];
                avail[w] = m;
            }
        }
        Ok(())
    }

    pub fn enumerate_colorings(&self) -> Result<Vec<Vec<Color>>, OracleError> {
        Ok(self.enumerate_codes()?.into_iter().map(|c| self.decode(c)).collect())
    }

    /// Breadth-first search from `alpha` towards `beta`. Returns a shortest sequence of
    /// `(vertex, new color)` steps if `beta` is reachable.
    pub fn shortest_path(
        &self,
        alpha: &[Color],
        beta: &[Color],
    ) -> Result<Option<Vec<(VertexId, Color)>>, OracleError> {
        for c in [alpha, beta] {
            if !self.is_valid(c) {
                return Err(OracleError::InvalidInput("endpoint is not a valid coloring".into()));
            }
        }
        let start = self.encode(alpha);
        let goal = self.encode(beta);
        let mut parent: HashMap<u128, (u128, VertexId, Color)> = HashMap::new();
        parent.insert(start, (start, usize::MAX, 0));
        let mut queue = VecDeque::from([start]);
        while let Some(code) = queue.pop_front() {
            if code == goal {
                let mut steps = Vec::new();
                let mut cur = goal;
                while cur != start {
                    let (prev, v, c) = parent[&cur];
                    steps.push((v, c));
                    cur = prev;
                }
                steps.reverse();
                return Ok(Some(steps));
            }
            let colors = self.decode(code);
            for v in 0..colors.len() {
                let mut free = self.free_colors(&colors, v);
                while free != 0 {
                    let c = free.trailing_zeros() as Color;
                    free &= free - 1;
                    let next = code - colors[v] as u128 * self.place_value(v) + c as u128 * self.place_value(v);
                    if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                        e.insert((code, v, c));
                        queue.push_back(next);
                    }
                }
            }
            if parent.len() as u64 > self.budget {
                return Err(OracleError::BudgetExceeded(self.budget));
            }
        }
        Ok(None)
    }
}

/// The full reconfiguration graph, summarized by its connected components.
#[derive(Debug, Clone)]
pub struct ReconfigGraph {
    states: Vec<u128>,
    component: Vec<u32>,
    component_count: usize,
    k: usize,
    n: usize,
}

impl ReconfigGraph {
    pub fn build(inst: &Instance<'_>) -> Result<Self, OracleError> {
        let states = inst.enumerate_codes()?;
        let mut uf = UnionFind::<usize>::new(states.len());
        for (i, &code) in states.iter().enumerate() {
            let colors = inst.decode(code);
            for v in 0..colors.len() {
                let mut free = inst.free_colors(&colors, v);
                // Each edge is seen from both ends; keep the increasing direction only.
                free &= !((2u32 << colors[v]) - 1);
                while free != 0 {
                    let c = free.trailing_zeros() as u128;
                    free &= free - 1;
                    let next = code + (c - colors[v] as u128) * inst.place_value(v);
                    let j = states.binary_search(&next).expect("neighbor state is enumerated");
                    uf.union(i, j);
                }
            }
        }
        let mut label = vec![u32::MAX; states.len()];
        let mut component = vec![0u32; states.len()];
        let mut count = 0;
        for i in 0..states.len() {
            let r = uf.find_mut(i);
            if label[r] == u32::MAX {
                label[r] = count;
                count += 1;
            }
            component[i] = label[r];
        }
        Ok(ReconfigGraph {
            states,
            component,
            component_count: count as usize,
            k: inst.k,
            n: inst.graph.vertex_count(),
        })
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }

    pub fn states(&self) -> &[u128] {
        &self.states
    }

    pub fn decode(&self, mut code: u128) -> Vec<Color> {
        let mut out = vec![0; self.n];
        for slot in out.iter_mut().rev() {
            *slot = (code % self.k as u128) as Color;
            code /= self.k as u128;
        }
        out
    }

    /// Component of state index `i`.
    pub fn component_of_index(&self, i: usize) -> u32 {
        self.component[i]
    }

    pub fn component_of(&self, colors: &[Color]) -> Option<u32> {
        let code = colors.iter().fold(0u128, |acc, &c| acc * self.k as u128 + c as u128);
        self.states.binary_search(&code).ok().map(|i| self.component[i])
    }

    /// Components containing at least one coloring that uses at most `max_colors` colors.
    pub fn components_with_few_colors(&self, max_colors: usize) -> Vec<bool> {
        let mut marked = vec![false; self.component_count];
        for (i, &code) in self.states.iter().enumerate() {
            let colors = self.decode(code);
            let mut used = 0u32;
            for c in colors {
                used |= 1 << c;
            }
            if used.count_ones() as usize <= max_colors {
                marked[self.component[i] as usize] = true;
            }
        }
        marked
    }
}

/// All valid colorings, lexicographic by vertex id.
pub fn enumerate_colorings(
    graph: &Graph,
    k: usize,
    lists: Option<&Lists>,
    budget: u64,
) -> Result<Vec<Vec<Color>>, OracleError> {
    Instance::new(graph, k, lists, budget)?.enumerate_colorings()
}

/// Whether `beta` is reachable from `alpha`, with a shortest sequence if so.
pub fn same_component(
    graph: &Graph,
    k: usize,
    alpha: &[Color],
    beta: &[Color],
    lists: Option<&Lists>,
    budget: u64,
) -> Result<(bool, Option<Vec<(VertexId, Color)>>), OracleError> {
    let path = Instance::new(graph, k, lists, budget)?.shortest_path(alpha, beta)?;
    Ok((path.is_some(), path))
}

/// Whether the reconfiguration graph is connected.
pub fn reconfig_connected(graph: &Graph, k: usize, lists: Option<&Lists>, budget: u64) -> Result<bool, OracleError> {
    Ok(ReconfigGraph::build(&Instance::new(graph, k, lists, budget)?)?.is_connected())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{double_wheel, octahedron};

    #[test]
    fn small_counts() {
        let oct = Graph::from_triangulation(&octahedron());
        assert_eq!(enumerate_colorings(&oct, 3, None, DEFAULT_BUDGET).unwrap().len(), 6);
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let all = enumerate_colorings(&tri, 4, None, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let edge = Graph::from_edges(2, &[(0, 1)]);
        let lists = vec![vec![0], vec![0]];
        assert!(enumerate_colorings(&edge, 4, Some(&lists), DEFAULT_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let oct = Graph::from_triangulation(&octahedron());
        assert_eq!(enumerate_colorings(&oct, 4, None, 10), Err(OracleError::BudgetExceeded(10)));
    }

    #[test]
    fn octahedron_connected_double_wheel_not() {
        let oct = Graph::from_triangulation(&octahedron());
        assert!(reconfig_connected(&oct, 4, None, DEFAULT_BUDGET).unwrap());
        let dw = Graph::from_triangulation(&double_wheel(8).unwrap());
        assert!(!reconfig_connected(&dw, 4, None, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn shortest_path_replays() {
        let oct = Graph::from_triangulation(&octahedron());
        let a = vec![0, 1, 0, 1, 2, 2];
        let b = vec![1, 2, 1, 2, 0, 0];
        let (same, path) = same_component(&oct, 4, &a, &b, None, DEFAULT_BUDGET).unwrap();
        assert!(same);
        let mut cur = a.clone();
        for (v, c) in path.unwrap() {
            cur[v] = c;
            assert!(oct.edges().iter().all(|&(x, y)| cur[x] != cur[y]));
        }
        assert_eq!(cur, b);
        let (same, path) = same_component(&oct, 4, &a, &a, None, DEFAULT_BUDGET).unwrap();
        assert!(same);
        assert!(path.unwrap().is_empty());
    }

    #[test]
    fn list_constraints_restrict_moves() {
        // Path 0-1 with lists {0,1} and {0,1}: two frozen states.
        let edge = Graph::from_edges(2, &[(0, 1)]);
        let lists = vec![vec![0, 1], vec![0, 1]];
        let inst = Instance::new(&edge, 4, Some(&lists), DEFAULT_BUDGET).unwrap();
        let rg = ReconfigGraph::build(&inst).unwrap();
        assert_eq!(rg.state_count(), 2);
        assert_eq!(rg.component_count(), 2);
    }
}
