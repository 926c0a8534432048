//! Descent from a balanced 4-coloring to a 3-coloring by shrinking the innermost trail.

use std::collections::BTreeSet;

use super::pairing::{build_admissible_pairing, check_admissible, check_admissible_at, NsPairing};
use super::trails::{inside_from_scratch, is_laminar, trace_all, Trail, TrailDecomposition};
use super::{RecolorSequence, ReconfigureError};
use crate::coloring::{recolorable_colors, signatures, Color, Coloring, SignatureState};
use crate::complex::{EdgeId, FaceId, OrientedTriangulation2, VertexId};

/// How trail insides are recomputed after each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RegionMode {
    /// Retrace only the replaced trail, with insides computed inside its old region.
    #[default]
    Incremental,
    /// Retrace every trail and recompute every inside over the whole sphere.
    FromScratch,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DescentOptions {
    pub mode: RegionMode,
    /// Check admissibility of the whole pairing and laminarity after every step.
    pub check_invariants: bool,
}

/// Outcome of a descent.
#[derive(Debug, Clone)]
pub struct Descent {
    pub sequence: RecolorSequence,
    pub coloring: Coloring,
    pub initial_volume: usize,
}

/// Recolors a balanced 4-coloring into a 3-coloring.
pub fn descend_to_3coloring(
    g: &OrientedTriangulation2,
    alpha: &Coloring,
) -> Result<(RecolorSequence, Coloring), ReconfigureError> {
    let d = descend_with(g, alpha, DescentOptions::default())?;
    Ok((d.sequence, d.coloring))
}

pub fn descend_with(
    g: &OrientedTriangulation2,
    alpha: &Coloring,
    options: DescentOptions,
) -> Result<Descent, ReconfigureError> {
    let mut state = DescentState::new(g, alpha, options)?;
    let initial_volume = state.volume();
    let mut steps = Vec::new();
    while let Some(step) = state.step()? {
        steps.push(step);
    }
    Ok(Descent { sequence: RecolorSequence::new(steps), coloring: state.alpha, initial_volume })
}

/// The evolving coloring, pairing and trail family of a descent.
#[derive(Debug, Clone)]
pub struct DescentState<'g> {
    g: &'g OrientedTriangulation2,
    alpha: Coloring,
    state: SignatureState,
    pairing: NsPairing,
    trails: Vec<Option<Trail>>,
    /// Live trails ordered by the innermost rule.
    order: BTreeSet<(usize, FaceId, usize)>,
    volume: usize,
    f_out: FaceId,
    options: DescentOptions,
    // Scratch buffers stamped with `epoch` to avoid clearing per step.
    epoch: u32,
    region_mark: Vec<u32>,
    side_mark: Vec<u32>,
    side: Vec<u8>,
    edge_mark: Vec<u32>,
    visited: Vec<bool>,
}

impl<'g> DescentState<'g> {
    pub fn new(
        g: &'g OrientedTriangulation2,
        alpha: &Coloring,
        options: DescentOptions,
    ) -> Result<Self, ReconfigureError> {
        if let Some(v) = g.first_odd_vertex() {
            return Err(crate::coloring::ColoringError::NotEven(v).into());
        }
        let state = signatures(g, alpha)?;
        let pairing = build_admissible_pairing(g, &state)?;
        let mut d = DescentState {
            g,
            alpha: alpha.clone(),
            state,
            pairing,
            trails: Vec::new(),
            order: BTreeSet::new(),
            volume: 0,
            f_out: 0,
            options,
            epoch: 0,
            region_mark: vec![0; g.face_count()],
            side_mark: vec![0; g.face_count()],
            side: vec![0; g.face_count()],
            edge_mark: vec![0; g.edge_count()],
            visited: vec![false; g.edge_count()],
        };
        d.rebuild_from_scratch();
        if options.check_invariants {
            d.check_invariants()?;
        }
        Ok(d)
    }

    pub fn coloring(&self) -> &Coloring {
        &self.alpha
    }

    pub fn pairing(&self) -> &NsPairing {
        &self.pairing
    }

    pub fn signature(&self) -> &SignatureState {
        &self.state
    }

    pub fn volume(&self) -> usize {
        self.volume
    }

    /// Current trails in innermost order.
    pub fn decomposition(&self) -> TrailDecomposition {
        let trails = self.order.iter().map(|&(_, _, t)| self.trails[t].clone().expect("live trail")).collect();
        TrailDecomposition { trails, f_out: self.f_out }
    }

    fn insert_trail(&mut self, trail: Trail) {
        let (size, min) = trail.key();
        self.volume += size;
        self.order.insert((size, min, self.trails.len()));
        self.trails.push(Some(trail));
    }

    fn rebuild_from_scratch(&mut self) {
        self.trails.clear();
        self.order.clear();
        self.volume = 0;
        let ns = self.state.nonsingular_edges();
        self.visited.iter_mut().for_each(|x| *x = false);
        let traced = trace_all(self.g, &self.pairing, &ns, &mut self.visited);
        let mut on_trail = vec![false; self.g.edge_count()];
        for (darts, edges) in traced {
            for &e in &edges {
                on_trail[e] = true;
            }
            let inside = inside_from_scratch(self.g, &on_trail, self.f_out);
            for &e in &edges {
                on_trail[e] = false;
            }
            self.insert_trail(Trail { darts, edges, inside });
        }
    }

    fn check_invariants(&self) -> Result<(), ReconfigureError> {
        check_admissible(self.g, &self.state, &self.pairing).map_err(ReconfigureError::Internal)?;
        let sets = self.order.iter().map(|&(_, _, t)| self.trails[t].as_ref().expect("live trail").inside.as_slice());
        if !is_laminar(sets, self.g.face_count()) {
            return Err(ReconfigureError::Internal("inside sets are not laminar".into()));
        }
        let on_trails: usize = self.trails.iter().flatten().map(|t| t.edges.len()).sum();
        if on_trails != self.state.nonsingular_edges().len() {
            return Err(ReconfigureError::Internal("trails do not partition the nonsingular edges".into()));
        }
        Ok(())
    }

    /// Performs one recoloring; `None` once no nonsingular edge is left.
    pub fn step(&mut self) -> Result<Option<(VertexId, Color)>, ReconfigureError> {
        let g = self.g;
        let Some(&(_, _, t)) = self.order.iter().next() else {
            return Ok(None);
        };
        let trail = self.trails[t].take().expect("live trail");
        self.order.remove(&(trail.inside.len(), trail.inside[0], t));

        // The inside face at the first edge and its third vertex.
        let (a, b) = trail.darts[0];
        let f_left = g.left_face(a, b).expect("edge");
        let f_in = if trail.contains_face(f_left) { f_left } else { g.left_face(b, a).expect("edge") };
        debug_assert!(trail.contains_face(f_in));
        let v0 = g.third_vertex(f_in, a, b);

        if let Some(&e) = g.incident_edges(v0).iter().find(|&&e| self.state.is_nonsingular(e)) {
            return Err(ReconfigureError::Internal(format!(
                "vertex {v0} inside an innermost trail has nonsingular edge {e}"
            )));
        }
        let options = recolorable_colors(g, &self.alpha, v0);
        if options.len() != 1 {
            return Err(ReconfigureError::Internal(format!("vertex {v0} has {} alternative colors", options.len())));
        }
        let c = options[0];

        let link = g.link_edges(v0);
        let was_ns: Vec<bool> = link.iter().map(|&e| self.state.is_nonsingular(e)).collect();
        self.alpha.set(v0, c);
        self.state.update_after_change(g, &self.alpha, v0);
        self.update_pairing(v0, &link, &was_ns)?;

        let old_volume = self.volume;
        match self.options.mode {
            RegionMode::Incremental => {
                self.volume -= trail.inside.len();
                self.retrace_inside(&trail, &link);
            }
            RegionMode::FromScratch => self.rebuild_from_scratch(),
        }
        if self.volume + g.degree(v0) != old_volume {
            return Err(ReconfigureError::Internal(format!(
                "volume went from {old_volume} to {} after recoloring vertex {v0} of degree {}",
                self.volume,
                g.degree(v0)
            )));
        }
        if self.options.check_invariants {
            self.check_invariants()?;
        }
        Ok(Some((v0, c)))
    }

    /// Repairs the pairing at each neighbor of `v0`, whose two link edges just toggled.
    fn update_pairing(&mut self, v0: VertexId, link: &[EdgeId], was_ns: &[bool]) -> Result<(), ReconfigureError> {
        let g = self.g;
        let ring = g.link_cycle(v0);
        let d = ring.len();
        for i in 0..d {
            let v = ring[i];
            // Link edges at v: before and after v in the link cycle.
            let local = [(i + d - 1) % d, i];
            let mut free: Vec<EdgeId> = Vec::with_capacity(2);
            for &j in &local {
                if was_ns[j] {
                    if let Some(p) = self.pairing.unpair(g, v, link[j]) {
                        if !local.iter().any(|&k| link[k] == p) {
                            free.push(p);
                        }
                    }
                }
            }
            for &j in &local {
                if !was_ns[j] {
                    free.push(link[j]);
                }
            }
            match free.as_slice() {
                [] => {}
                &[x, y] => self.pairing.pair(g, v, x, y),
                _ => {
                    return Err(ReconfigureError::Internal(format!(
                        "{} edges left unpaired at vertex {v} after recoloring {v0}",
                        free.len()
                    )));
                }
            }
            check_admissible_at(g, &self.state, &self.pairing, v).map_err(ReconfigureError::Internal)?;
        }
        Ok(())
    }

    /// Replaces `old` by the trails through its remaining edges and the new link edges,
    /// computing their insides within the inside of `old`.
    fn retrace_inside(&mut self, old: &Trail, link: &[EdgeId]) {
        let g = self.g;
        let mut seeds: Vec<EdgeId> =
            old.edges.iter().chain(link.iter()).copied().filter(|&e| self.state.is_nonsingular(e)).collect();
        seeds.sort_unstable();
        seeds.dedup();
        for &e in &old.edges {
            self.visited[e] = false;
        }
        for &e in link {
            self.visited[e] = false;
        }
        let traced = trace_all(g, &self.pairing, &seeds, &mut self.visited);
        for (darts, edges) in traced {
            let inside = self.inside_within(old, &edges);
            self.insert_trail(Trail { darts, edges, inside });
        }
    }

    /// Checkerboard side of each face of `old.inside` with respect to `edges`, seeded at
    /// the boundary of `old`: a face next to an edge of `old` is inside exactly when that
    /// edge also lies on the new trail.
    fn inside_within(&mut self, old: &Trail, edges: &[EdgeId]) -> Vec<FaceId> {
        let g = self.g;
        self.epoch += 1;
        let epoch = self.epoch;
        for &f in &old.inside {
            self.region_mark[f] = epoch;
        }
        for &e in edges {
            self.edge_mark[e] = epoch;
        }
        let mut queue = std::collections::VecDeque::new();
        for &e in &old.edges {
            let [x, y] = g.edge_faces(e);
            let f = if self.region_mark[x] == epoch { x } else { y };
            debug_assert_eq!(self.region_mark[f], epoch);
            let s = u8::from(self.edge_mark[e] == epoch);
            if self.side_mark[f] != epoch {
                self.side_mark[f] = epoch;
                self.side[f] = s;
                queue.push_back(f);
            } else {
                debug_assert_eq!(self.side[f], s);
            }
        }
        while let Some(f) = queue.pop_front() {
            let [a, b, c] = g.face(f);
            for (x, y) in [(a, b), (b, c), (c, a)] {
                let h = g.left_face(y, x).expect("closed surface");
                if self.region_mark[h] != epoch {
                    continue;
                }
                let e = g.edge_id(x, y).expect("face edge");
                let s = self.side[f] ^ u8::from(self.edge_mark[e] == epoch);
                if self.side_mark[h] != epoch {
                    self.side_mark[h] = epoch;
                    self.side[h] = s;
                    queue.push_back(h);
                } else {
                    debug_assert_eq!(self.side[h], s);
                }
            }
        }
        old.inside.iter().copied().filter(|&f| self.side_mark[f] == epoch && self.side[f] == 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{apply_single_change, find_3_coloring, is_balanced};
    use crate::complex::{double_wheel, octahedron, stacked_octahedra};
    use crate::reconfigure::verify_sequence;
    use rand::{Rng, SeedableRng};

    fn random_balanced(g: &OrientedTriangulation2, seed: u64, moves: usize) -> Coloring {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut a = find_3_coloring(g).unwrap();
        for _ in 0..moves {
            let v = rng.gen_range(0..g.vertex_count());
            let opts = recolorable_colors(g, &a, v);
            if !opts.is_empty() {
                a = apply_single_change(g, &a, v, opts[rng.gen_range(0..opts.len())]).unwrap();
            }
        }
        a
    }

    #[test]
    fn three_coloring_needs_no_steps() {
        let g = octahedron();
        let a = find_3_coloring(&g).unwrap();
        let (seq, out) = descend_to_3coloring(&g, &a).unwrap();
        assert!(seq.is_empty());
        assert_eq!(out, a);
    }

    #[test]
    fn one_pushed_vertex_comes_back_in_one_step() {
        let g = double_wheel(10).unwrap();
        let a = find_3_coloring(&g).unwrap();
        for v in 0..g.vertex_count() {
            let b = apply_single_change(&g, &a, v, 3).unwrap();
            let (seq, out) = descend_to_3coloring(&g, &b).unwrap();
            // With the outer face in the star, the trail encloses everything else instead.
            if !g.star_faces(v).contains(&0) {
                assert_eq!(seq.len(), 1);
                assert_eq!(out, a);
            }
            assert!(out.is_3_coloring());
            verify_sequence(&g, &b, &seq, &out).unwrap();
        }
    }

    #[test]
    fn incremental_matches_from_scratch() {
        let g = stacked_octahedra(8, 3);
        for seed in 0..20 {
            let a = random_balanced(&g, seed, 200);
            let opts = |mode| DescentOptions { mode, check_invariants: true };
            let inc = descend_with(&g, &a, opts(RegionMode::Incremental)).unwrap();
            let scratch = descend_with(&g, &a, opts(RegionMode::FromScratch)).unwrap();
            assert_eq!(inc.sequence, scratch.sequence);
            assert!(inc.sequence.len() <= inc.initial_volume);
            assert!(inc.coloring.is_3_coloring());
            verify_sequence(&g, &a, &inc.sequence, &inc.coloring).unwrap();
        }
    }

    #[test]
    fn stepwise_decompositions_agree() {
        let g = stacked_octahedra(5, 8);
        let a = random_balanced(&g, 99, 150);
        let mut inc =
            DescentState::new(&g, &a, DescentOptions { mode: RegionMode::Incremental, check_invariants: true })
                .unwrap();
        let mut scr =
            DescentState::new(&g, &a, DescentOptions { mode: RegionMode::FromScratch, check_invariants: true })
                .unwrap();
        loop {
            assert_eq!(inc.decomposition(), scr.decomposition());
            let (x, y) = (inc.step().unwrap(), scr.step().unwrap());
            assert_eq!(x, y);
            assert!(is_balanced(&g, inc.coloring()).unwrap());
            if x.is_none() {
                break;
            }
        }
    }

    #[test]
    fn unbalanced_input_is_rejected() {
        let g = double_wheel(8).unwrap();
        // Cycle colored 0,1,2,0,1,2 with apexes 3 and 3 winds around the apex.
        let a = Coloring::proper(&g, 4, vec![0, 1, 2, 0, 1, 2, 3, 3]).unwrap();
        assert!(!is_balanced(&g, &a).unwrap());
        assert!(matches!(descend_to_3coloring(&g, &a), Err(ReconfigureError::Unbalanced(_))));
    }
}
