//! Brute-force reference answers. Nothing here touches the arrangement,
//! the recursive engine or the cost ledger.

use std::f64::consts::PI;

use crate::exact::{circle_circle_intersections, line_intersection, triangle_area2, ApproxPoint, ExactLine, ExactPoint, Intersection, Rat, TAU};
use crate::problems::{check_translation, IntervalInstance, PairSearchInstance, PairWitness};

/// Smallest doubled triangle area over all triples, or `None` below three
/// points.
pub fn oracle_min_area_triangle(points: &[ExactPoint]) -> Option<(Rat, [usize; 3])> {
    let n = points.len();
    let mut best: Option<(Rat, [usize; 3])> = None;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let area2 = triangle_area2(&points[a], &points[b], &points[c]);
                if best.as_ref().is_none_or(|(m, _)| area2 < *m) {
                    best = Some((area2, [a, b, c]));
                }
            }
        }
    }
    best
}

fn depth(points: &[ApproxPoint], p: &ApproxPoint) -> usize {
    points.iter().filter(|c| c.dist(p) <= 1.0 + TAU).count()
}

/// Deepest point of the unit disks around `points`, looked for among the
/// centres and all pairwise circle intersections.
pub fn oracle_max_disk_depth(points: &[ApproxPoint]) -> (usize, Option<ApproxPoint>) {
    let mut best = (0, None);
    let mut consider = |p: ApproxPoint| {
        let d = depth(points, &p);
        if d > best.0 {
            best = (d, Some(p));
        }
    };
    for (i, a) in points.iter().enumerate() {
        consider(*a);
        for b in &points[i + 1..] {
            for p in circle_circle_intersections(*a, *b, 1.0) {
                consider(p);
            }
        }
    }
    best
}

/// First translation, over all endpoint alignments, that puts `P` inside `Q`.
pub fn oracle_interval_containment(inst: &IntervalInstance) -> Option<Rat> {
    let ps = inst.p_endpoints();
    for q in inst.q_endpoints() {
        for p in &ps {
            let t = &q - p;
            if check_translation(inst, &t) {
                return Some(t);
            }
        }
    }
    None
}

/// First ordered pair accepted by the predicate.
pub fn oracle_pair_search(inst: &PairSearchInstance) -> Option<PairWitness> {
    (0..inst.n).flat_map(|i| (0..inst.n).map(move |j| (i, j))).find(|&(i, j)| (inst.predicate)(i, j)).map(|(i, j)| PairWitness { i, j })
}

/// A point on three of the lines and the first such triple.
pub fn oracle_concurrence(lines: &[ExactLine]) -> Option<(ExactPoint, [usize; 3])> {
    let n = lines.len();
    for a in 0..n {
        for b in a + 1..n {
            let Intersection::Point(p) = line_intersection(&lines[a], &lines[b]) else { continue };
            if let Some(c) = (b + 1..n).find(|&c| lines[c].contains(&p)) {
                return Some((p, [a, b, c]));
            }
        }
    }
    None
}

fn spans_disjoint(polygons: &[Vec<ExactPoint>], dx: &Rat, dy: &Rat) -> bool {
    let mut spans: Vec<(Rat, Rat)> = polygons
        .iter()
        .map(|poly| {
            let vals: Vec<Rat> = poly.iter().map(|p| &(dx * &p.x) + &(dy * &p.y)).collect();
            (vals.iter().min().unwrap().clone(), vals.iter().max().unwrap().clone())
        })
        .collect();
    spans.sort();
    spans.windows(2).all(|w| w[0].1 < w[1].0)
}

/// Sweeps the direction of projection over a half turn. Every direction at
/// which two vertices of different polygons project together is critical;
/// the order of all projected vertices is fixed strictly between critical
/// directions, so one probe per gap decides the instance.
pub fn oracle_disjoint_projection(polygons: &[Vec<ExactPoint>]) -> Option<(Rat, Rat)> {
    let mut crit = Vec::new();
    for (i, a) in polygons.iter().enumerate() {
        for b in &polygons[i + 1..] {
            for p in a {
                for q in b {
                    let (ex, ey) = ((&q.x - &p.x).to_f64(), (&q.y - &p.y).to_f64());
                    if ex != 0.0 || ey != 0.0 {
                        crit.push((ey.atan2(ex) + PI / 2.0).rem_euclid(PI));
                    }
                }
            }
        }
    }
    crit.sort_by(f64::total_cmp);
    crit.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    if crit.is_empty() {
        crit.push(0.0);
    }
    let probes = crit.windows(2).map(|w| (w[0] + w[1]) / 2.0).chain([(crit[crit.len() - 1] + crit[0] + PI) / 2.0]);
    for theta in probes {
        let (dx, dy) = (Rat::from_f64(theta.cos()).unwrap(), Rat::from_f64(theta.sin()).unwrap());
        if spans_disjoint(polygons, &dx, &dy) {
            return Some((dx, dy));
        }
    }
    None
}
