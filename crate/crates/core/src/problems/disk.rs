use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::sample_indices;
use crate::curved::{
    build_disk_arrangement, classify_disks_per_cell, curve_meets, pseudoline_refine, CellDomain, Curve, Subdivision,
    UnitDisk,
};
use crate::exact::{circle_circle_intersections, ApproxPoint, TAU};
use crate::rqs::{ProblemAdapter, Region, SubproblemSpec};

/// Centres of unit disks and the number a point must hit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiskInstance {
    pub points: Vec<ApproxPoint>,
    pub depth_target: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiskWitness {
    pub point: ApproxPoint,
    pub depth: usize,
}

impl DiskInstance {
    pub fn new(points: Vec<ApproxPoint>, depth_target: usize) -> Self {
        DiskInstance { points, depth_target }
    }

    /// Number of centres within distance `1 + τ` of `p`.
    pub fn depth_at(&self, p: &ApproxPoint) -> usize {
        depth(&self.points, p)
    }

    pub fn verify(&self, w: &DiskWitness) -> bool {
        let d = self.depth_at(&w.point);
        d == w.depth && d >= self.depth_target
    }
}

fn depth(points: &[ApproxPoint], p: &ApproxPoint) -> usize {
    points.iter().filter(|c| c.dist(p) <= 1.0 + TAU).count()
}

/// Is there a point covered by at least `depth_target` unit disks? Each
/// subproblem is a cell with its crossing disks and the target left after
/// the disks covering the cell are counted.
#[derive(Clone, Debug)]
pub struct DiskAdapter {
    centers: Arc<Vec<ApproxPoint>>,
    ids: Vec<usize>,
    target: usize,
    depth_target: usize,
    domain: CellDomain,
}

pub struct DiskSplit {
    pub subdivision: Subdivision,
    pub sample: Vec<usize>,
    redraws: u32,
}

/// Sampled pairs closer than this to tangency or coincidence are redrawn.
const NEAR_TANGENT: f64 = TAU;
const MAX_REDRAWS: u32 = 32;

pub fn disk_adapter(inst: &DiskInstance) -> DiskAdapter {
    DiskAdapter {
        centers: Arc::new(inst.points.clone()),
        ids: (0..inst.points.len()).collect(),
        target: inst.depth_target,
        depth_target: inst.depth_target,
        domain: CellDomain::around(&inst.points),
    }
}

impl DiskAdapter {
    pub fn domain(&self) -> &CellDomain {
        &self.domain
    }

    pub fn target(&self) -> usize {
        self.target
    }

    fn disks(&self) -> Vec<UnitDisk> {
        self.ids.iter().map(|&i| UnitDisk::new(i, self.centers[i])).collect()
    }

    fn witness(&self, p: ApproxPoint) -> DiskWitness {
        DiskWitness { point: p, depth: depth(&self.centers, &p) }
    }

    fn local_depth(&self, disks: &[UnitDisk], p: &ApproxPoint) -> usize {
        disks.iter().filter(|d| d.contains(p)).count()
    }

    /// Deepest of the given points, if it reaches the local target.
    fn best_of(&self, disks: &[UnitDisk], pts: impl Iterator<Item = ApproxPoint>) -> (Option<DiskWitness>, u64) {
        let mut best: Option<(usize, ApproxPoint)> = None;
        let mut ops = 0u64;
        for p in pts {
            ops += disks.len() as u64;
            let d = self.local_depth(disks, &p);
            if best.is_none_or(|(b, _)| d > b) {
                best = Some((d, p));
            }
        }
        (best.filter(|&(d, _)| d >= self.target).map(|(_, p)| self.witness(p)), ops)
    }
}

fn near_tangent(a: &ApproxPoint, b: &ApproxPoint) -> bool {
    let d = a.dist(b);
    d <= NEAR_TANGENT || (d - 2.0).abs() <= NEAR_TANGENT
}

impl ProblemAdapter for DiskAdapter {
    type Witness = DiskWitness;
    type Split = DiskSplit;

    fn size(&self) -> usize {
        self.ids.len()
    }

    fn decompose(&self, k: usize, rng: &mut ChaCha8Rng) -> DiskSplit {
        let disks = self.disks();
        let mut redraws = 0;
        let sample = loop {
            let s = sample_indices(rng, disks.len(), k);
            let bad = s.iter().enumerate().any(|(a, &i)| s[a + 1..].iter().any(|&j| near_tangent(&disks[i].center, &disks[j].center)));
            if !bad || redraws == MAX_REDRAWS {
                break s;
            }
            redraws += 1;
        };
        // Coincident centres left after the redraw budget stay unsampled.
        let mut kept: Vec<usize> = Vec::with_capacity(sample.len());
        for i in sample {
            if kept.iter().all(|&j| disks[i].center.dist(&disks[j].center) > TAU) {
                kept.push(i);
            }
        }
        let arr = build_disk_arrangement(&disks, &kept, &self.domain).expect("coincident sampled centres were dropped");
        let mut subdivision = pseudoline_refine(&arr);
        classify_disks_per_cell(&mut subdivision.cells, &disks);
        DiskSplit { subdivision, sample: kept, redraws }
    }

    fn subproblems(&self, split: &DiskSplit) -> Vec<SubproblemSpec> {
        split
            .subdivision
            .cells
            .iter()
            .enumerate()
            .map(|(i, c)| SubproblemSpec {
                region: Region::Cell(i),
                objects: c.crossing.clone(),
                residual_target: self.target.saturating_sub(c.covering) as u64,
                depth: 0,
            })
            .collect()
    }

    /// A cell already covered often enough, or a deep point on a cell
    /// boundary, found by walking every side and stopping at each circle
    /// crossing.
    fn span_check(&self, split: &DiskSplit) -> Option<DiskWitness> {
        let cells = &split.subdivision.cells;
        if let Some(c) = cells.iter().find(|c| c.covering >= self.target) {
            return Some(self.witness(c.region.interior_point()));
        }
        let disks = self.disks();
        for c in cells {
            let r = &c.region;
            let [bl, br, tr, tl] = r.corners();
            let sides = [r.left.restrict(r.y_lo, r.y_hi), r.right.restrict(r.y_lo, r.y_hi)];
            let mut stops: Vec<ApproxPoint> = vec![bl, br, tr, tl];
            for d in &disks {
                for side in &sides {
                    stops.extend(curve_meets(side, &Curve::half(d, -1)));
                    stops.extend(curve_meets(side, &Curve::half(d, 1)));
                }
                for (a, b) in [(bl, br), (tl, tr)] {
                    stops.extend(horizontal_hits(d, a, b));
                }
            }
            let (w, _) = self.best_of(&disks, stops.into_iter());
            if w.is_some() {
                return w;
            }
        }
        None
    }

    /// Depth at every vertex of the disk arrangement clipped to the domain,
    /// plus one point of every circle and the domain corners.
    fn base_solve(&self) -> (Option<DiskWitness>, u64) {
        if self.target == 0 {
            return (Some(self.witness(self.domain.interior_point())), 1);
        }
        let disks = self.disks();
        let dom = &self.domain;
        let mut cands: Vec<ApproxPoint> = dom.corners().to_vec();
        let [bl, br, tr, tl] = dom.corners();
        let sides = [dom.left.restrict(dom.y_lo, dom.y_hi), dom.right.restrict(dom.y_lo, dom.y_hi)];
        for (i, d) in disks.iter().enumerate() {
            let c = d.center;
            cands.push(c);
            cands.extend([(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)].map(|(dx, dy)| ApproxPoint::new(c.x + dx, c.y + dy)));
            for e in &disks[i + 1..] {
                cands.extend(circle_circle_intersections(c, e.center, 1.0));
            }
            for side in &sides {
                cands.extend(curve_meets(side, &Curve::half(d, -1)));
                cands.extend(curve_meets(side, &Curve::half(d, 1)));
            }
            cands.extend(horizontal_hits(d, bl, br));
            cands.extend(horizontal_hits(d, tl, tr));
        }
        self.best_of(&disks, cands.into_iter().filter(|p| dom.contains(p)))
    }

    fn restrict(&self, split: &DiskSplit, sub: &SubproblemSpec) -> Self {
        let Region::Cell(i) = sub.region else { unreachable!("disk subproblems are cells") };
        DiskAdapter {
            centers: Arc::clone(&self.centers),
            ids: sub.objects.iter().map(|&j| self.ids[j]).collect(),
            target: sub.residual_target as usize,
            depth_target: self.depth_target,
            domain: split.subdivision.cells[i].region,
        }
    }

    fn verify(&self, w: &DiskWitness) -> bool {
        let d = depth(&self.centers, &w.point);
        d == w.depth && d >= self.depth_target
    }

    fn redraws(&self, split: &DiskSplit) -> u32 {
        split.redraws
    }
}

/// Points where the circle of `d` meets the horizontal segment `a`–`b`.
fn horizontal_hits(d: &UnitDisk, a: ApproxPoint, b: ApproxPoint) -> Vec<ApproxPoint> {
    let u = a.y - d.center.y;
    if u.abs() > 1.0 + TAU {
        return Vec::new();
    }
    let h = (1.0 - u * u).max(0.0).sqrt();
    let xs = if h <= TAU { vec![d.center.x] } else { vec![d.center.x - h, d.center.x + h] };
    xs.into_iter().filter(|&x| x >= a.x - TAU && x <= b.x + TAU).map(|x| ApproxPoint::new(x, a.y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rqs::{choose_params, rqs_solve};
    use rand::{Rng, SeedableRng};

    fn pt(x: f64, y: f64) -> ApproxPoint {
        ApproxPoint::new(x, y)
    }

    /// Depth at all pairwise circle intersections and all centres.
    fn oracle(points: &[ApproxPoint]) -> usize {
        let mut c: Vec<ApproxPoint> = points.to_vec();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                c.extend(circle_circle_intersections(points[i], points[j], 1.0));
            }
        }
        c.iter().map(|p| depth(points, p)).max().unwrap_or(0)
    }

    #[test]
    fn depth_one_always() {
        let inst = DiskInstance::new(vec![pt(5.0, 5.0)], 1);
        let params = choose_params(1, 0.1, 2.0, std::f64::consts::E);
        let r = rqs_solve(&disk_adapter(&inst), &params, &mut ChaCha8Rng::seed_from_u64(0));
        assert!(r.decision);
        assert!(inst.verify(r.witness.as_ref().unwrap()));
    }

    #[test]
    fn three_close_points() {
        let inst = DiskInstance::new(vec![pt(0.0, 0.0), pt(0.5, 0.2), pt(0.1, 0.6)], 3);
        let params = choose_params(3, 0.1, 2.0, std::f64::consts::E);
        let r = rqs_solve(&disk_adapter(&inst), &params, &mut ChaCha8Rng::seed_from_u64(0));
        assert!(r.decision);
        assert!(inst.verify(r.witness.as_ref().unwrap()));
    }

    #[test]
    fn spread_points_no_pair() {
        let points: Vec<ApproxPoint> = (0..6).map(|i| pt(i as f64 * 2.5, (i % 2) as f64 * 2.5)).collect();
        let inst = DiskInstance::new(points, 2);
        let params = choose_params(6, 0.1, 2.0, std::f64::consts::E);
        let r = rqs_solve(&disk_adapter(&inst), &params, &mut ChaCha8Rng::seed_from_u64(0));
        assert!(!r.decision);
    }

    #[test]
    fn forced_recursion_agrees_with_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for round in 0..6u64 {
            let points: Vec<ApproxPoint> = (0..24).map(|_| pt(rng.gen_range(0.0..5.0), rng.gen_range(0.0..5.0))).collect();
            let best = oracle(&points);
            let params = choose_params(24, 0.1, 2.0, std::f64::consts::E).with_forced_split(4, 6);
            for (q, expect) in [(best, true), (best + 1, false)] {
                let inst = DiskInstance::new(points.clone(), q);
                let r = rqs_solve(&disk_adapter(&inst), &params, &mut ChaCha8Rng::seed_from_u64(round));
                assert!(!r.exhausted);
                assert_eq!(r.decision, expect, "round {round} q {q}");
                if !expect {
                    assert!(r.max_depth >= 1);
                }
                if let Some(w) = &r.witness {
                    assert!(inst.verify(w));
                }
            }
        }
    }

    #[test]
    fn residual_targets_add_up_to_global_depth() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let points: Vec<ApproxPoint> = (0..30).map(|_| pt(rng.gen_range(0.0..3.0), rng.gen_range(0.0..3.0))).collect();
        let inst = DiskInstance::new(points.clone(), 1);
        let a = disk_adapter(&inst);
        let split = a.decompose(5, &mut rng);
        for (i, sub) in a.subproblems(&split).iter().enumerate() {
            let cell = &split.subdivision.cells[i];
            let p = cell.region.interior_point();
            let inside = sub.objects.iter().filter(|&&j| points[j].dist(&p) <= 1.0 + TAU).count();
            assert_eq!(cell.covering + inside, depth(&points, &p));
        }
    }
}
