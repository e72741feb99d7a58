use std::collections::HashSet;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::p3l::p3l_adapter;
use super::sample_indices;
use crate::arrangement::{
    build_arrangement, line_subproblems, vertical_closure_bbox, zone_vertical_pairs, Arrangement, Carrier, ZoneIndex,
};
use crate::cost::QueryLedger;
use crate::exact::{dual_of_point, triangle_area2, ExactLine, ExactPoint, IntLine, Rat};
use crate::rqs::{rqs_solve, ProblemAdapter, Region, RqsParams, RqsResult, SubproblemSpec};

/// Three input points and twice the area of their triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleWitness {
    pub points: [usize; 3],
    pub area2: Rat,
}

#[derive(Clone, Debug)]
pub struct TriangleInstance {
    pub points: Vec<ExactPoint>,
    /// Twice the area bound.
    pub area_bound2: Rat,
}

impl TriangleInstance {
    pub fn new(points: Vec<ExactPoint>, area_bound: Rat) -> Self {
        TriangleInstance { points, area_bound2: &area_bound + &area_bound }
    }

    pub fn verify(&self, w: &TriangleWitness) -> bool {
        let [a, b, c] = w.points;
        let n = self.points.len();
        if a == b || b == c || a == c || a >= n || b >= n || c >= n {
            return false;
        }
        let area2 = triangle_area2(&self.points[a], &self.points[b], &self.points[c]);
        area2 == w.area2 && area2 <= self.area_bound2
    }
}

/// Is there a triangle of area at most the bound? Works in the dual, where
/// points become lines `y = a·x − b`.
#[derive(Clone, Debug)]
pub struct TriangleAdapter {
    points: Arc<Vec<ExactPoint>>,
    duals: Arc<Vec<ExactLine>>,
    ids: Vec<usize>,
    area_bound2: Rat,
}

pub struct TriangleSplit {
    pub arrangement: Arrangement,
    pub sample: Vec<usize>,
    subs: Vec<SubproblemSpec>,
}

pub fn triangle_adapter(inst: &TriangleInstance) -> TriangleAdapter {
    let duals = inst.points.iter().map(dual_of_point).collect();
    TriangleAdapter {
        points: Arc::new(inst.points.clone()),
        duals: Arc::new(duals),
        ids: (0..inst.points.len()).collect(),
        area_bound2: inst.area_bound2.clone(),
    }
}

impl TriangleAdapter {
    fn local_duals(&self) -> Vec<ExactLine> {
        self.ids.iter().map(|&i| self.duals[i].clone()).collect()
    }

    fn triple(&self, a: usize, b: usize, c: usize) -> TriangleWitness {
        let (a, b, c) = (self.ids[a], self.ids[b], self.ids[c]);
        let area2 = triangle_area2(&self.points[a], &self.points[b], &self.points[c]);
        let mut p = [a, b, c];
        p.sort_unstable();
        TriangleWitness { points: p, area2 }
    }

    /// Smallest triangle with the segment between local points `a` and `b`
    /// as base.
    fn best_apex(&self, a: usize, b: usize) -> Option<TriangleWitness> {
        (0..self.ids.len()).filter(|&c| c != a && c != b).map(|c| self.triple(a, b, c)).min_by(|x, y| x.area2.cmp(&y.area2))
    }

    fn within(&self, w: TriangleWitness) -> Option<TriangleWitness> {
        (w.area2 <= self.area_bound2).then_some(w)
    }
}

impl ProblemAdapter for TriangleAdapter {
    type Witness = TriangleWitness;
    type Split = TriangleSplit;

    fn size(&self) -> usize {
        self.ids.len()
    }

    fn decompose(&self, k: usize, rng: &mut ChaCha8Rng) -> TriangleSplit {
        let local = self.local_duals();
        let sample = sample_indices(rng, local.len(), k);
        let sampled: Vec<ExactLine> = sample.iter().map(|&i| local[i].clone()).collect();
        let bbox = vertical_closure_bbox(&local);
        let mut arr = build_arrangement(&sampled, &bbox).expect("distinct points have distinct duals");
        arr.triangulate();
        let pairs: Vec<(usize, usize)> = sample.iter().enumerate().map(|(pos, &i)| (i, pos)).collect();
        let subs = line_subproblems(&arr, &local, &pairs)
            .into_iter()
            .map(|f| SubproblemSpec::new(Region::Face(f.face), f.members))
            .collect();
        TriangleSplit { arrangement: arr, sample, subs }
    }

    fn subproblems(&self, split: &TriangleSplit) -> Vec<SubproblemSpec> {
        split.subs.clone()
    }

    /// Triangles whose dual vertical segment does not stay inside one face:
    /// either the anchor vertex is a vertex of the sample arrangement, or the
    /// segment crosses a supporting diagonal.
    fn span_check(&self, split: &TriangleSplit) -> Option<TriangleWitness> {
        let arr = &split.arrangement;
        for v in 0..arr.num_vertices() {
            let on = arr.input_lines_at(v);
            for i in 0..on.len() {
                for j in i + 1..on.len() {
                    if let Some(w) = self.best_apex(split.sample[on[i]], split.sample[on[j]]).and_then(|w| self.within(w)) {
                        return Some(w);
                    }
                }
            }
        }
        let local = self.local_duals();
        let mut zones = ZoneIndex::new(&local, arr.bbox());
        let mut supports: HashSet<IntLine> = HashSet::new();
        let mut ordered: Vec<IntLine> = Vec::new();
        for f in arr.bounded_faces() {
            for h in arr.face_cycle(f) {
                let e = arr.half_edge(h);
                if e.carrier != Carrier::Support {
                    continue;
                }
                let l = IntLine::through(arr.vertex(e.origin), arr.vertex(arr.half_edge(e.twin).origin));
                if supports.insert(l.clone()) {
                    ordered.push(l);
                }
            }
        }
        for sup in ordered {
            let sl = sup.to_exact();
            let zone = zones.zone(&sl);
            for face in &zone.faces {
                for pair in zone_vertical_pairs(face, &sl) {
                    if let [a, b] = pair.vertex_lines[..] {
                        if let Some(w) = self.within(self.triple(a, b, pair.opposite_line)) {
                            return Some(w);
                        }
                    }
                }
            }
        }
        None
    }

    fn base_solve(&self) -> (Option<TriangleWitness>, u64) {
        let s = self.ids.len();
        let mut best: Option<TriangleWitness> = None;
        for a in 0..s {
            for b in a + 1..s {
                for c in b + 1..s {
                    let w = self.triple(a, b, c);
                    if best.as_ref().is_none_or(|x| w.area2 < x.area2) {
                        best = Some(w);
                    }
                }
            }
        }
        let ops = (s * s.saturating_sub(1) * s.saturating_sub(2) / 6) as u64;
        (best.and_then(|w| self.within(w)), ops)
    }

    fn restrict(&self, _split: &TriangleSplit, sub: &SubproblemSpec) -> Self {
        TriangleAdapter {
            points: Arc::clone(&self.points),
            duals: Arc::clone(&self.duals),
            ids: sub.objects.iter().map(|&i| self.ids[i]).collect(),
            area_bound2: self.area_bound2.clone(),
        }
    }

    fn verify(&self, w: &TriangleWitness) -> bool {
        TriangleInstance { points: self.points.to_vec(), area_bound2: self.area_bound2.clone() }.verify(w)
    }
}

/// Collinearity screen on the duals (three concurrent duals are three
/// collinear points), then the area search.
pub fn solve_area_bound(inst: &TriangleInstance, params: &RqsParams, rng: &mut ChaCha8Rng) -> RqsResult<TriangleWitness> {
    let duals: Vec<ExactLine> = inst.points.iter().map(dual_of_point).collect();
    let screen = rqs_solve(&p3l_adapter(duals), params, rng);
    let mut ledger: QueryLedger = screen.ledger;
    let mut baseline = screen.baseline;
    let screen = screen.map_witness(|c| {
        let mut p = c.lines;
        p.sort_unstable();
        TriangleWitness { points: p, area2: Rat::zero() }
    });
    if screen.exhausted || screen.decision || inst.area_bound2.signum() < 0 {
        return RqsResult { decision: screen.decision && inst.area_bound2.signum() >= 0, ..screen };
    }
    let main = rqs_solve(&triangle_adapter(inst), params, rng);
    ledger.merge(&main.ledger);
    baseline.merge(&main.baseline);
    RqsResult { ledger, baseline, retries: screen.retries + main.retries, redraws: screen.redraws + main.redraws, ..main }
}
