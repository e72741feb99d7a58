//! Subdivisions induced by unit circles.
//!
//! Every boundary is kept as a y-monotone [`Curve`]: a left or right half
//! of a unit circle, or a non-horizontal segment. A sweep over the sorted
//! event levels cuts the region into trapezoids between consecutive curves,
//! and vertically adjacent trapezoids with the same left and right curve are
//! merged back. Every resulting cell has at most two side curves and at most
//! two horizontal segments.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{circle_circle_intersections, ApproxPoint, TAU};

/// Slack for "lies on this piece" and "lies in this region" tests, where
/// a square root can amplify rounding well past [`TAU`].
pub const ON_PIECE: f64 = 1e-7;

/// Gaps narrower than this at an event level are treated as pinched shut.
const PINCH: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitDisk {
    pub id: usize,
    pub center: ApproxPoint,
}

impl UnitDisk {
    pub fn new(id: usize, center: ApproxPoint) -> Self {
        UnitDisk { id, center }
    }

    /// Closed disk membership within [`TAU`].
    pub fn contains(&self, p: &ApproxPoint) -> bool {
        self.center.dist(p) <= 1.0 + TAU
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurvedError {
    #[error("sampled disks {0} and {1} have coincident centres")]
    DuplicateDisk(usize, usize),
    #[error("face boundary is not a simple closed curve")]
    SelfIntersecting,
}

/// A y-monotone curve piece.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Curve {
    /// Left (`side = -1`) or right (`side = 1`) half of the unit circle
    /// around `center`, restricted to `y_lo ≤ y ≤ y_hi`.
    Arc { disk: usize, center: ApproxPoint, side: i8, y_lo: f64, y_hi: f64 },
    /// Non-horizontal segment.
    Segment { a: ApproxPoint, b: ApproxPoint },
}

impl Curve {
    pub fn half(disk: &UnitDisk, side: i8) -> Curve {
        let c = disk.center;
        Curve::Arc { disk: disk.id, center: c, side, y_lo: c.y - 1.0, y_hi: c.y + 1.0 }
    }

    /// The four quarter arcs, split at the axis-extreme points.
    pub fn quarters(disk: &UnitDisk) -> [Curve; 4] {
        let c = disk.center;
        let q = |side, y_lo, y_hi| Curve::Arc { disk: disk.id, center: c, side, y_lo, y_hi };
        [q(-1, c.y - 1.0, c.y), q(-1, c.y, c.y + 1.0), q(1, c.y - 1.0, c.y), q(1, c.y, c.y + 1.0)]
    }

    pub fn vertical(x: f64, y_lo: f64, y_hi: f64) -> Curve {
        Curve::Segment { a: ApproxPoint::new(x, y_lo), b: ApproxPoint::new(x, y_hi) }
    }

    pub fn y_range(&self) -> (f64, f64) {
        match *self {
            Curve::Arc { y_lo, y_hi, .. } => (y_lo, y_hi),
            Curve::Segment { a, b } => (a.y.min(b.y), a.y.max(b.y)),
        }
    }

    pub fn x_at(&self, y: f64) -> f64 {
        match *self {
            Curve::Arc { center, side, .. } => {
                let u = y - center.y;
                center.x + side as f64 * (1.0 - u * u).max(0.0).sqrt()
            }
            Curve::Segment { a, b } => {
                if a.y == b.y {
                    return a.x;
                }
                a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y)
            }
        }
    }

    pub fn point_at(&self, y: f64) -> ApproxPoint {
        ApproxPoint::new(self.x_at(y), y)
    }

    pub fn disk(&self) -> Option<usize> {
        match *self {
            Curve::Arc { disk, .. } => Some(disk),
            Curve::Segment { .. } => None,
        }
    }

    /// Both curves lie on the same circle half or the same vertical line.
    pub fn same_support(&self, o: &Curve) -> bool {
        match (self, o) {
            (Curve::Arc { center: c1, side: s1, .. }, Curve::Arc { center: c2, side: s2, .. }) => {
                s1 == s2 && c1.dist(c2) <= TAU
            }
            (Curve::Segment { a: a1, b: b1 }, Curve::Segment { a: a2, b: b2 }) => {
                a1.x == b1.x && a2.x == b2.x && (a1.x - a2.x).abs() <= TAU
            }
            _ => false,
        }
    }

    /// The part of the curve between two levels.
    pub fn restrict(&self, y0: f64, y1: f64) -> Curve {
        match *self {
            Curve::Arc { disk, center, side, .. } => Curve::Arc { disk, center, side, y_lo: y0, y_hi: y1 },
            Curve::Segment { .. } => Curve::Segment { a: self.point_at(y0), b: self.point_at(y1) },
        }
    }

    fn holds(&self, p: &ApproxPoint) -> bool {
        let (lo, hi) = self.y_range();
        if p.y < lo - ON_PIECE || p.y > hi + ON_PIECE {
            return false;
        }
        match *self {
            Curve::Arc { center, side, .. } => (p.x - center.x) * side as f64 >= -ON_PIECE,
            Curve::Segment { .. } => true,
        }
    }

    fn as_piece(&self) -> ArcOrSeg {
        match *self {
            Curve::Arc { disk, center, side, y_lo, y_hi } => {
                let s0 = ((y_lo - center.y).clamp(-1.0, 1.0)).asin();
                let s1 = ((y_hi - center.y).clamp(-1.0, 1.0)).asin();
                let (from, to) = if side > 0 { (s0, s1) } else { (PI - s1, PI - s0) };
                ArcOrSeg::Arc { disk, center, from, to }
            }
            Curve::Segment { a, b } => ArcOrSeg::Segment { a, b },
        }
    }
}

/// Boundary piece of a face or cell.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum ArcOrSeg {
    /// Counter-clockwise arc of the unit circle around `center` from angle
    /// `from` to angle `to` (radians, `from ≤ to ≤ from + 2π`).
    Arc { disk: usize, center: ApproxPoint, from: f64, to: f64 },
    Segment { a: ApproxPoint, b: ApproxPoint },
}

impl ArcOrSeg {
    pub fn endpoints(&self) -> (ApproxPoint, ApproxPoint) {
        match *self {
            ArcOrSeg::Arc { center, from, to, .. } => (on_circle(center, from), on_circle(center, to)),
            ArcOrSeg::Segment { a, b } => (a, b),
        }
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, ArcOrSeg::Arc { .. })
    }

    pub fn y_monotone(&self) -> bool {
        match *self {
            ArcOrSeg::Arc { from, to, .. } => {
                let k0 = ((from - FRAC_PI_2) / PI).floor();
                let k1 = ((to - FRAC_PI_2) / PI).ceil();
                k1 - k0 <= 1.0
            }
            ArcOrSeg::Segment { .. } => true,
        }
    }

    /// Splits arcs at their top and bottom points and drops horizontal
    /// segments.
    fn monotone_curves(&self) -> Vec<Curve> {
        match *self {
            ArcOrSeg::Segment { a, b } => {
                if (a.y - b.y).abs() <= TAU {
                    Vec::new()
                } else {
                    vec![Curve::Segment { a, b }]
                }
            }
            ArcOrSeg::Arc { disk, center, from, to } => {
                let mut cuts = vec![from];
                let mut k = ((from - FRAC_PI_2) / PI).floor() + 1.0;
                loop {
                    let t = FRAC_PI_2 + k * PI;
                    if t >= to - 1e-12 {
                        break;
                    }
                    if t > from + 1e-12 {
                        cuts.push(t);
                    }
                    k += 1.0;
                }
                cuts.push(to);
                cuts.windows(2)
                    .map(|w| {
                        let mid = (w[0] + w[1]) / 2.0;
                        let side = if mid.cos() >= 0.0 { 1 } else { -1 };
                        let (y0, y1) = (center.y + w[0].sin(), center.y + w[1].sin());
                        Curve::Arc { disk, center, side, y_lo: y0.min(y1), y_hi: y0.max(y1) }
                    })
                    .collect()
            }
        }
    }
}

fn on_circle(c: ApproxPoint, t: f64) -> ApproxPoint {
    ApproxPoint::new(c.x + t.cos(), c.y + t.sin())
}

/// Region between two curves and two levels.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CellDomain {
    pub left: Curve,
    pub right: Curve,
    pub y_lo: f64,
    pub y_hi: f64,
}

impl CellDomain {
    pub fn rect(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Self {
        CellDomain { left: Curve::vertical(xmin, ymin, ymax), right: Curve::vertical(xmax, ymin, ymax), y_lo: ymin, y_hi: ymax }
    }

    /// Axis box two units beyond the extreme centres.
    pub fn around(centers: &[ApproxPoint]) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for (i, c) in centers.iter().enumerate() {
            if i == 0 {
                (x0, x1, y0, y1) = (c.x, c.x, c.y, c.y);
            }
            x0 = x0.min(c.x);
            x1 = x1.max(c.x);
            y0 = y0.min(c.y);
            y1 = y1.max(c.y);
        }
        Self::rect(x0 - 2.0, x1 + 2.0, y0 - 2.0, y1 + 2.0)
    }

    /// Closure membership with [`ON_PIECE`] slack.
    pub fn contains(&self, p: &ApproxPoint) -> bool {
        p.y >= self.y_lo - ON_PIECE
            && p.y <= self.y_hi + ON_PIECE
            && p.x >= self.left.x_at(p.y.clamp(self.y_lo, self.y_hi)) - ON_PIECE
            && p.x <= self.right.x_at(p.y.clamp(self.y_lo, self.y_hi)) + ON_PIECE
    }

    pub fn interior_point(&self) -> ApproxPoint {
        let y = (self.y_lo + self.y_hi) / 2.0;
        ApproxPoint::new((self.left.x_at(y) + self.right.x_at(y)) / 2.0, y)
    }

    /// Bottom-left, bottom-right, top-right, top-left.
    pub fn corners(&self) -> [ApproxPoint; 4] {
        [
            self.left.point_at(self.y_lo),
            self.right.point_at(self.y_lo),
            self.right.point_at(self.y_hi),
            self.left.point_at(self.y_hi),
        ]
    }

    /// Side curves, then the bottom and top segments when they have length.
    pub fn boundary(&self) -> Vec<ArcOrSeg> {
        let [bl, br, tr, tl] = self.corners();
        let mut out = vec![self.left.restrict(self.y_lo, self.y_hi).as_piece(), self.right.restrict(self.y_lo, self.y_hi).as_piece()];
        if br.x - bl.x > TAU {
            out.push(ArcOrSeg::Segment { a: bl, b: br });
        }
        if tr.x - tl.x > TAU {
            out.push(ArcOrSeg::Segment { a: tl, b: tr });
        }
        out
    }

    pub fn area(&self) -> f64 {
        integral(&self.right, self.y_lo, self.y_hi) - integral(&self.left, self.y_lo, self.y_hi)
    }
}

fn integral(c: &Curve, y0: f64, y1: f64) -> f64 {
    match *c {
        Curve::Arc { center, side, .. } => {
            let f = |u: f64| {
                let u = u.clamp(-1.0, 1.0);
                (u * (1.0 - u * u).max(0.0).sqrt() + u.asin()) / 2.0
            };
            center.x * (y1 - y0) + side as f64 * (f(y1 - center.y) - f(y0 - center.y))
        }
        Curve::Segment { .. } => (c.x_at(y0) + c.x_at(y1)) / 2.0 * (y1 - y0),
    }
}

/// Cell of a subdivision: a [`CellDomain`] plus its classification.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurvedCell {
    pub face: usize,
    pub region: CellDomain,
    /// Disks containing the whole cell.
    pub covering: usize,
    /// Positions, in the classified disk list, of disks meeting the closed
    /// cell in more than its corners without containing it.
    pub crossing: Vec<usize>,
}

impl CurvedCell {
    pub fn boundary(&self) -> Vec<ArcOrSeg> {
        self.region.boundary()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Subdivision {
    pub domain: CellDomain,
    pub disks: Vec<UnitDisk>,
    pub curves: Vec<Curve>,
    /// Levels of the horizontal lines, domain top and bottom included.
    pub cuts: Vec<f64>,
    pub cells: Vec<CurvedCell>,
    pub num_faces: usize,
}

/// Points shared by two curves.
pub fn curve_meets(a: &Curve, b: &Curve) -> Vec<ApproxPoint> {
    let raw = match (a, b) {
        (Curve::Arc { center: c1, .. }, Curve::Arc { center: c2, .. }) => circle_circle_intersections(*c1, *c2, 1.0),
        (Curve::Arc { center, .. }, Curve::Segment { a: p, b: q }) | (Curve::Segment { a: p, b: q }, Curve::Arc { center, .. }) => {
            line_circle(*p, *q, *center)
        }
        (Curve::Segment { a: p1, b: q1 }, Curve::Segment { a: p2, b: q2 }) => line_line(*p1, *q1, *p2, *q2).into_iter().collect(),
    };
    raw.into_iter().filter(|p| a.holds(p) && b.holds(p)).collect()
}

/// Meets the infinite line through `p` and `q` with the unit circle at `c`.
fn line_circle(p: ApproxPoint, q: ApproxPoint, c: ApproxPoint) -> Vec<ApproxPoint> {
    let (dx, dy) = (q.x - p.x, q.y - p.y);
    let len = dx.hypot(dy);
    if len == 0.0 {
        return Vec::new();
    }
    let (ux, uy) = (dx / len, dy / len);
    let (fx, fy) = (p.x - c.x, p.y - c.y);
    let b = fx * ux + fy * uy;
    let disc = b * b - (fx * fx + fy * fy) + 1.0;
    if disc < -2.0 * TAU {
        return Vec::new();
    }
    if disc <= 2.0 * TAU {
        return vec![ApproxPoint::new(p.x - b * ux, p.y - b * uy)];
    }
    let h = disc.sqrt();
    [-b - h, -b + h].iter().map(|t| ApproxPoint::new(p.x + t * ux, p.y + t * uy)).collect()
}

fn line_line(p1: ApproxPoint, q1: ApproxPoint, p2: ApproxPoint, q2: ApproxPoint) -> Option<ApproxPoint> {
    let (d1x, d1y, d2x, d2y) = (q1.x - p1.x, q1.y - p1.y, q2.x - p2.x, q2.y - p2.y);
    let den = d1x * d2y - d1y * d2x;
    if den.abs() < 1e-15 {
        return None;
    }
    let t = ((p2.x - p1.x) * d2y - (p2.y - p1.y) * d2x) / den;
    Some(ApproxPoint::new(p1.x + t * d1x, p1.y + t * d1y))
}

/// Sorted levels, merged when within [`TAU`] of the first level of a run.
fn cluster(mut ys: Vec<f64>) -> Vec<f64> {
    ys.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(ys.len());
    for y in ys {
        if out.last().is_none_or(|&l| y - l > TAU) {
            out.push(y);
        }
    }
    out
}

fn level_index(levels: &[f64], y: f64) -> Option<usize> {
    let i = levels.partition_point(|&l| l < y - TAU);
    (i < levels.len() && (levels[i] - y).abs() <= TAU).then_some(i)
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

struct Trap {
    slab: usize,
    left: usize,
    right: usize,
}

/// Trapezoid sweep followed by the merge of vertically adjacent trapezoids
/// that share both side curves and are not separated by a cut.
///
/// With `bounds = Some((l, r))` every gap between curves `l` and `r` is a
/// region; otherwise gaps alternate inside/outside from the left.
fn sweep(curves: &[Curve], levels: &[f64], cuts: &[bool], bounds: Option<(usize, usize)>) -> Result<(Vec<CellDomain>, Vec<usize>, usize), CurvedError> {
    let mut traps: Vec<Trap> = Vec::new();
    let mut slab_start: Vec<usize> = Vec::with_capacity(levels.len());
    for s in 0..levels.len().saturating_sub(1) {
        slab_start.push(traps.len());
        let (y0, y1) = (levels[s], levels[s + 1]);
        let ym = (y0 + y1) / 2.0;
        let slack = 2.0 * TAU;
        let mut active: Vec<(f64, usize)> = curves
            .iter()
            .enumerate()
            .filter(|(i, c)| {
                let (lo, hi) = c.y_range();
                bounds.is_some_and(|(l, r)| *i == l || *i == r) || (lo <= y0 + slack && hi >= y1 - slack)
            })
            .map(|(i, c)| (c.x_at(ym), i))
            .collect();
        active.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        match bounds {
            Some((l, r)) => {
                let (xl, xr) = (curves[l].x_at(ym), curves[r].x_at(ym));
                let mut chain = vec![l];
                for &(x, i) in &active {
                    if i == l || i == r || x <= xl + TAU || x >= xr - TAU {
                        continue;
                    }
                    if chain.iter().rev().take(1).any(|&j| curves[j].same_support(&curves[i])) {
                        continue;
                    }
                    if curves[r].same_support(&curves[i]) {
                        continue;
                    }
                    chain.push(i);
                }
                chain.push(r);
                for w in chain.windows(2) {
                    traps.push(Trap { slab: s, left: w[0], right: w[1] });
                }
            }
            None => {
                if active.len() % 2 == 1 {
                    return Err(CurvedError::SelfIntersecting);
                }
                for w in active.chunks(2) {
                    traps.push(Trap { slab: s, left: w[0].1, right: w[1].1 });
                }
            }
        }
    }
    slab_start.push(traps.len());
    let mut sets = DisjointSets((0..traps.len()).collect());
    let mut above: Vec<Option<usize>> = vec![None; traps.len()];
    for s in 0..levels.len().saturating_sub(2) {
        if cuts[s + 1] {
            continue;
        }
        let y = levels[s + 1];
        let (lower, upper) = (slab_start[s]..slab_start[s + 1], slab_start[s + 1]..slab_start[s + 2]);
        let span = |t: &Trap| (curves[t.left].x_at(y), curves[t.right].x_at(y));
        let by_sides: HashMap<(usize, usize), usize> = upper.clone().map(|j| ((traps[j].left, traps[j].right), j)).collect();
        let (mut i, mut j) = (lower.start, upper.start);
        while i < lower.end && j < upper.end {
            let (a0, a1) = span(&traps[i]);
            let (b0, b1) = span(&traps[j]);
            if a1.min(b1) - a0.max(b0) > PINCH {
                sets.union(i, j);
                if by_sides.get(&(traps[i].left, traps[i].right)) == Some(&j) {
                    above[i] = Some(j);
                }
            }
            if a1 < b1 {
                i += 1;
            } else {
                j += 1;
            }
        }
    }
    let mut has_below = vec![false; traps.len()];
    for a in above.iter().flatten() {
        has_below[*a] = true;
    }
    let mut face_ids: HashMap<usize, usize> = HashMap::new();
    let mut cells = Vec::new();
    let mut faces = Vec::new();
    for t in 0..traps.len() {
        if has_below[t] {
            continue;
        }
        let mut top = t;
        while let Some(u) = above[top] {
            top = u;
        }
        let root = sets.find(t);
        let next = face_ids.len();
        let face = *face_ids.entry(root).or_insert(next);
        cells.push(CellDomain {
            left: curves[traps[t].left],
            right: curves[traps[t].right],
            y_lo: levels[traps[t].slab],
            y_hi: levels[traps[top].slab + 1],
        });
        faces.push(face);
    }
    Ok((cells, faces, face_ids.len()))
}

fn subdivide(disks: &[UnitDisk], domain: &CellDomain, tangents: bool) -> Result<Subdivision, CurvedError> {
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            if disks[i].center.dist(&disks[j].center) <= TAU {
                return Err(CurvedError::DuplicateDisk(disks[i].id, disks[j].id));
            }
        }
    }
    let (y_lo, y_hi) = (domain.y_lo, domain.y_hi);
    let mut curves = vec![domain.left, domain.right];
    let mut horizontal = vec![y_lo, y_hi];
    for d in disks {
        curves.extend(Curve::quarters(d));
        if tangents {
            curves.push(Curve::vertical(d.center.x - 1.0, y_lo, y_hi));
            curves.push(Curve::vertical(d.center.x + 1.0, y_lo, y_hi));
            horizontal.push(d.center.y - 1.0);
            horizontal.push(d.center.y + 1.0);
        }
    }
    let mut ys: Vec<f64> = horizontal.clone();
    for (i, c) in curves.iter().enumerate() {
        let (lo, hi) = c.y_range();
        ys.push(lo);
        ys.push(hi);
        for o in &curves[i + 1..] {
            ys.extend(curve_meets(c, o).iter().map(|p| p.y));
        }
    }
    let levels: Vec<f64> = cluster(ys.into_iter().filter(|&y| y >= y_lo - TAU && y <= y_hi + TAU).collect());
    let mut cuts = vec![false; levels.len()];
    let mut cut_levels = Vec::new();
    for h in horizontal {
        if let Some(i) = level_index(&levels, h) {
            cuts[i] = true;
            cut_levels.push(levels[i]);
        }
    }
    let (regions, faces, num_faces) = sweep(&curves, &levels, &cuts, Some((0, 1)))?;
    let cells = regions
        .into_iter()
        .zip(faces)
        .map(|(region, face)| CurvedCell { face, region, covering: 0, crossing: Vec::new() })
        .collect();
    Ok(Subdivision { domain: *domain, disks: disks.to_vec(), curves, cuts: cluster(cut_levels), cells, num_faces })
}

/// Subdivision of `domain` by the circles of the sampled disks alone.
pub fn build_disk_arrangement(disks: &[UnitDisk], sample: &[usize], domain: &CellDomain) -> Result<Subdivision, CurvedError> {
    let chosen: Vec<UnitDisk> = sample.iter().map(|&i| disks[i]).collect();
    subdivide(&chosen, domain, false)
}

/// Adds the four tangent lines of every sampled disk (the extensions of its
/// quarter arcs) and recomputes the cells.
pub fn pseudoline_refine(arr: &Subdivision) -> Subdivision {
    subdivide(&arr.disks, &arr.domain, true).expect("disks were validated when the arrangement was built")
}

/// Cuts a face, given by its boundary pieces, with horizontal segments at
/// every boundary event.
pub fn monotone_sweep_subdivide(face: &[ArcOrSeg]) -> Result<Vec<CurvedCell>, CurvedError> {
    let curves: Vec<Curve> = face.iter().flat_map(ArcOrSeg::monotone_curves).collect();
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let ends: Vec<ApproxPoint> = [&curves[i], &curves[j]]
                .iter()
                .flat_map(|c| {
                    let (lo, hi) = c.y_range();
                    [c.point_at(lo), c.point_at(hi)]
                })
                .collect();
            if curve_meets(&curves[i], &curves[j]).iter().any(|p| ends.iter().all(|e| e.dist(p) > ON_PIECE)) {
                return Err(CurvedError::SelfIntersecting);
            }
        }
    }
    let levels = cluster(curves.iter().flat_map(|c| {
        let (lo, hi) = c.y_range();
        [lo, hi]
    }).collect());
    let cuts = vec![false; levels.len()];
    let (regions, _, _) = sweep(&curves, &levels, &cuts, None)?;
    Ok(regions.into_iter().map(|region| CurvedCell { face: 0, region, covering: 0, crossing: Vec::new() }).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Covering,
    Crossing,
    Outside,
}

/// Nearest and farthest points of a boundary piece.
fn extremes(c: &ApproxPoint, piece: Piece) -> [(f64, ApproxPoint); 2] {
    let (p0, p1) = piece.ends();
    let mut lo = (c.dist(&p0), p0);
    let mut hi = lo;
    let mut consider = |p: ApproxPoint| {
        let d = c.dist(&p);
        if d < lo.0 {
            lo = (d, p);
        }
        if d > hi.0 {
            hi = (d, p);
        }
    };
    consider(p1);
    match piece {
        Piece::Side(curve @ Curve::Arc { center, .. }, y0, y1) => {
            let d = c.dist(&center);
            if d > 1e-12 {
                let (ux, uy) = ((c.x - center.x) / d, (c.y - center.y) / d);
                let part = curve.restrict(y0, y1);
                for s in [1.0, -1.0] {
                    let p = ApproxPoint::new(center.x + s * ux, center.y + s * uy);
                    if part.holds(&p) {
                        consider(p);
                    }
                }
            }
        }
        _ => {
            let (dx, dy) = (p1.x - p0.x, p1.y - p0.y);
            let len2 = dx * dx + dy * dy;
            if len2 > 0.0 {
                let t = (((c.x - p0.x) * dx + (c.y - p0.y) * dy) / len2).clamp(0.0, 1.0);
                consider(ApproxPoint::new(p0.x + t * dx, p0.y + t * dy));
            }
        }
    }
    [lo, hi]
}

#[derive(Clone, Copy)]
enum Piece {
    Side(Curve, f64, f64),
    Flat(ApproxPoint, ApproxPoint),
}

impl Piece {
    fn ends(&self) -> (ApproxPoint, ApproxPoint) {
        match *self {
            Piece::Side(c, y0, y1) => (c.point_at(y0), c.point_at(y1)),
            Piece::Flat(a, b) => (a, b),
        }
    }
}

fn pieces(r: &CellDomain) -> [Piece; 4] {
    let [bl, br, tr, tl] = r.corners();
    [Piece::Side(r.left, r.y_lo, r.y_hi), Piece::Side(r.right, r.y_lo, r.y_hi), Piece::Flat(bl, br), Piece::Flat(tl, tr)]
}

fn region_holds(r: &CellDomain, p: &ApproxPoint) -> bool {
    p.y >= r.y_lo && p.y <= r.y_hi && p.x >= r.left.x_at(p.y) && p.x <= r.right.x_at(p.y)
}

/// How a closed disk meets a closed cell. A disk touching the cell only at
/// a corner is outside.
pub fn relate(r: &CellDomain, d: &UnitDisk) -> Relation {
    let own = [r.left, r.right].iter().any(|c| c.disk() == Some(d.id) && c.same_support(&Curve::half(d, side_of(c))));
    if own {
        return if d.contains(&r.interior_point()) { Relation::Covering } else { Relation::Crossing };
    }
    let ext: Vec<[(f64, ApproxPoint); 2]> = pieces(r).iter().map(|&p| extremes(&d.center, p)).collect();
    if ext.iter().all(|e| e[1].0 <= 1.0 + TAU) {
        return Relation::Covering;
    }
    if region_holds(r, &d.center) {
        return Relation::Crossing;
    }
    let min = ext.iter().map(|e| e[0].0).fold(f64::INFINITY, f64::min);
    if min < 1.0 - TAU {
        return Relation::Crossing;
    }
    if min > 1.0 + TAU {
        return Relation::Outside;
    }
    let corners = r.corners();
    let at_corner_only = ext.iter().filter(|e| e[0].0 <= 1.0 + TAU).all(|e| corners.iter().any(|k| k.dist(&e[0].1) <= ON_PIECE));
    if at_corner_only {
        Relation::Outside
    } else {
        Relation::Crossing
    }
}

fn side_of(c: &Curve) -> i8 {
    match *c {
        Curve::Arc { side, .. } => side,
        Curve::Segment { .. } => 0,
    }
}

/// Fills in the covering count and crossing list of every cell.
pub fn classify_disks_per_cell(cells: &mut [CurvedCell], disks: &[UnitDisk]) {
    for cell in cells.iter_mut() {
        cell.covering = 0;
        cell.crossing.clear();
        for (i, d) in disks.iter().enumerate() {
            match relate(&cell.region, d) {
                Relation::Covering => cell.covering += 1,
                Relation::Crossing => cell.crossing.push(i),
                Relation::Outside => {}
            }
        }
    }
}

impl Subdivision {
    /// Largest number of boundary pieces over all cells.
    pub fn max_boundary_pieces(&self) -> usize {
        self.cells.iter().map(|c| c.boundary().len()).max().unwrap_or(0)
    }

    /// Index of a cell whose closure holds `p`.
    pub fn locate(&self, p: &ApproxPoint) -> Option<usize> {
        self.cells.iter().position(|c| region_holds(&c.region, p))
    }

    pub fn to_svg(&self) -> String {
        let [bl, _, tr, _] = self.domain.corners();
        let (w, h) = (tr.x - bl.x, tr.y - bl.y);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="{}">"#,
            bl.x,
            -tr.y,
            w,
            h,
            (800.0 * h / w.max(1e-9)).round()
        );
        for c in &self.cells {
            let hue = (c.face * 47) % 360;
            let _ = write!(s, r#"<path fill="hsl({hue},60%,80%)" stroke="black" stroke-width="{}" d=""#, w / 800.0);
            let r = &c.region;
            let steps = 16;
            let mut pts: Vec<ApproxPoint> = (0..=steps).map(|i| r.right.point_at(r.y_lo + (r.y_hi - r.y_lo) * i as f64 / steps as f64)).collect();
            pts.extend((0..=steps).rev().map(|i| r.left.point_at(r.y_lo + (r.y_hi - r.y_lo) * i as f64 / steps as f64)));
            for (i, p) in pts.iter().enumerate() {
                let _ = write!(s, "{}{:.6},{:.6} ", if i == 0 { "M" } else { "L" }, p.x, -p.y);
            }
            let _ = writeln!(s, r#"Z"/>"#);
        }
        for d in &self.disks {
            let _ = writeln!(
                s,
                r#"<circle cx="{:.6}" cy="{:.6}" r="1" fill="none" stroke="red" stroke-width="{}"/>"#,
                d.center.x,
                -d.center.y,
                w / 400.0
            );
        }
        s.push_str("</svg>\n");
        s
    }
}
