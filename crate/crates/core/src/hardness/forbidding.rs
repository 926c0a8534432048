//! Listed paths whose endpoints may take every pair of colors except one.

use super::HardnessError;
use crate::coloring::Color;
use crate::graph::Graph;
use crate::oracle::{enumerate_colorings, Instance, ReconfigGraph, DEFAULT_BUDGET};

const ALL: [Color; 4] = [0, 1, 2, 3];

/// A listed path `u = 0, 1, ..., 6 = v` of length six that forbids exactly the endpoint pair `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddingPath {
    /// Sorted lists, `lists[0]` for `u` and `lists[6]` for `v`.
    pub lists: [Vec<Color>; 7],
    pub a: Color,
    pub b: Color,
    pub c: Color,
}

fn sorted(mut l: Vec<Color>) -> Vec<Color> {
    l.sort_unstable();
    l.dedup();
    l
}

fn check_list(l: &[Color], name: &str) -> Result<(), HardnessError> {
    if l.is_empty() || l.len() >= 4 || l.iter().any(|&c| c > 3) {
        return Err(HardnessError::Precondition(format!("{name} must be a proper nonempty subset of 0..4")));
    }
    Ok(())
}

/// The `(a, b)`-forbidding path between endpoints with lists `l_u` and `l_v`, using the
/// spare color `c`.
pub fn forbidding_path(
    l_u: &[Color],
    l_v: &[Color],
    a: Color,
    b: Color,
    c: Color,
) -> Result<ForbiddingPath, HardnessError> {
    let (l_u, l_v) = (sorted(l_u.to_vec()), sorted(l_v.to_vec()));
    check_list(&l_u, "L_u")?;
    check_list(&l_v, "L_v")?;
    if !l_u.contains(&a) || !l_v.contains(&b) {
        return Err(HardnessError::Precondition(format!("need {a} in L_u and {b} in L_v")));
    }
    if c > 3 || l_u.contains(&c) || l_v.contains(&c) {
        return Err(HardnessError::Precondition(format!("spare color {c} must avoid both endpoint lists")));
    }
    let inner: [[Color; 2]; 5] = if a != b {
        // Two adjacent vertices sharing a 2-list can never change color, so the middle
        // lists follow the a = b pattern with `a` in place of `e`.
        let d = ALL.into_iter().find(|x| ![a, b, c].contains(x)).expect("four colors");
        [[a, c], [c, d], [a, d], [a, c], [b, c]]
    } else {
        let mut rest = ALL.into_iter().filter(|x| *x != a && *x != c);
        let (d, e) = (rest.next().expect("four colors"), rest.next().expect("four colors"));
        [[a, c], [c, d], [d, e], [c, e], [a, c]]
    };
    let mut lists: [Vec<Color>; 7] = Default::default();
    lists[0] = l_u;
    for (i, pair) in inner.iter().enumerate() {
        lists[i + 1] = sorted(pair.to_vec());
    }
    lists[6] = l_v;
    Ok(ForbiddingPath { lists, a, b, c })
}

impl ForbiddingPath {
    pub fn graph() -> Graph {
        Graph::from_edges(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    /// Structural conditions: endpoint lists as given, internal lists of size two, lists
    /// covering all four colors, and `c` next to both endpoints.
    pub fn check_structure(&self) -> Result<(), String> {
        if self.lists[1..6].iter().any(|l| l.len() != 2 || l.iter().any(|&x| x > 3)) {
            return Err("internal list is not a pair of colors".into());
        }
        let mut union: Vec<Color> = self.lists.iter().flatten().copied().collect();
        union = sorted(union);
        if union != ALL {
            return Err(format!("lists cover {union:?}, not all four colors"));
        }
        if !self.lists[1].contains(&self.c) || !self.lists[5].contains(&self.c) {
            return Err(format!("spare color {} missing next to an endpoint", self.c));
        }
        Ok(())
    }

    /// Exhaustive check against the reconfiguration oracle: the endpoint pairs that extend
    /// to a coloring are exactly those other than `(a, b)`, and each endpoint can be moved
    /// to any other realizable color while the other endpoint stays fixed and the moved
    /// endpoint changes only in the last step.
    pub fn verify(&self) -> Result<(), String> {
        self.check_structure()?;
        let g = Self::graph();
        let all = enumerate_colorings(&g, 4, Some(&self.lists), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let realizable = |cu: Color, cv: Color| all.iter().any(|s| s[0] == cu && s[6] == cv);
        for &cu in &self.lists[0] {
            for &cv in &self.lists[6] {
                if realizable(cu, cv) == ((cu, cv) == (self.a, self.b)) {
                    return Err(format!("endpoint pair ({cu}, {cv}) has the wrong realizability"));
                }
            }
        }
        // Moving `end` (0 or 6) from `from` to `to` with the other end pinned at `pin`.
        let movable = |end: usize, from: Color, to: Color, pin: Color| -> Result<bool, String> {
            let mut lists = self.lists.clone();
            lists[end] = vec![from];
            lists[6 - end] = vec![pin];
            let inst = Instance::new(&g, 4, Some(&lists), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let rg = ReconfigGraph::build(&inst).map_err(|e| e.to_string())?;
            let next = if end == 0 { 1 } else { 5 };
            let mut ok = vec![false; rg.component_count()];
            for (i, &code) in rg.states().iter().enumerate() {
                if rg.decode(code)[next] != to {
                    ok[rg.component_of_index(i) as usize] = true;
                }
            }
            Ok(ok.into_iter().all(|x| x))
        };
        for &pin in &self.lists[6] {
            for &from in &self.lists[0] {
                for &to in &self.lists[0] {
                    if from != to && realizable(from, pin) && realizable(to, pin) && !movable(0, from, to, pin)? {
                        return Err(format!("u cannot move {from} -> {to} with v fixed at {pin}"));
                    }
                }
            }
        }
        for &pin in &self.lists[0] {
            for &from in &self.lists[6] {
                for &to in &self.lists[6] {
                    if from != to && realizable(pin, from) && realizable(pin, to) && !movable(6, from, to, pin)? {
                        return Err(format!("v cannot move {from} -> {to} with u fixed at {pin}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Every admissible `(L_u, L_v, a, b, c)` with endpoint lists of size two or three.
pub fn admissible_parameters() -> Vec<(Vec<Color>, Vec<Color>, Color, Color, Color)> {
    let subsets: Vec<Vec<Color>> = (1u8..15)
        .map(|m| ALL.into_iter().filter(|&c| m >> c & 1 == 1).collect::<Vec<_>>())
        .filter(|l| l.len() == 2 || l.len() == 3)
        .collect();
    let mut out = Vec::new();
    for l_u in &subsets {
        for l_v in &subsets {
            for c in ALL.into_iter().filter(|c| !l_u.contains(c) && !l_v.contains(c)) {
                for &a in l_u {
                    for &b in l_v {
                        out.push((l_u.clone(), l_v.clone(), a, b, c));
                    }
                }
            }
        }
    }
    out
}
