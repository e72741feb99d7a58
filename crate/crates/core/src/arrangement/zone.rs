use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use serde::Serialize;

use super::bbox::{boundary_hits, BBox};
use super::dcel::Carrier;
use super::envelope::envelope_indices;
use crate::exact::{cmp_angle, sign, ExactLine, ExactPoint, HomPoint, IntLine, Rat};

/// Face of a line arrangement as a counter-clockwise cycle; edge `i` runs
/// from `vertices[i]` to `vertices[i + 1]` on line `carriers[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoneFace {
    pub vertices: Vec<HomPoint>,
    pub carriers: Vec<Carrier>,
}

impl ZoneFace {
    pub fn polygon(&self) -> Vec<ExactPoint> {
        self.vertices.iter().map(HomPoint::to_exact).collect()
    }

    /// Canonical form (rotation starting at the smallest vertex) for
    /// comparing faces found by different procedures.
    pub fn canonical(&self) -> Vec<ExactPoint> {
        let m = self.vertices.len();
        let lo = (0..m).min_by(|&a, &b| self.vertices[a].cmp_xy(&self.vertices[b])).unwrap_or(0);
        (0..m).map(|i| self.vertices[(lo + i) % m].to_exact()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Zone {
    pub line: ExactLine,
    pub faces: Vec<ZoneFace>,
}

impl Zone {
    /// Number of face edges lying on input lines, counted once per face.
    pub fn edge_count(&self) -> usize {
        self.faces.iter().map(|f| f.carriers.iter().filter(|c| matches!(c, Carrier::Input(_))).count()).sum()
    }
}

struct Stop {
    param: Rat,
    point: HomPoint,
    through: Vec<usize>,
}

/// Zone queries against a fixed line set. Each line's ordered crossing list
/// is computed the first time a traced face runs along it.
pub struct ZoneIndex {
    bbox: BBox,
    n: usize,
    lines: Vec<IntLine>,
    stops: Vec<Option<Vec<Stop>>>,
}

type DirEdge = (usize, usize, i8);

impl ZoneIndex {
    pub fn new(lines: &[ExactLine], bbox: &BBox) -> Self {
        let mut all: Vec<IntLine> = lines.iter().map(IntLine::from_exact).collect();
        all.extend(bbox.side_lines().iter().map(IntLine::from_exact));
        let count = all.len();
        ZoneIndex { bbox: bbox.clone(), n: lines.len(), lines: all, stops: (0..count).map(|_| None).collect() }
    }

    fn carrier(&self, j: usize) -> Carrier {
        if j < self.n {
            Carrier::Input(j)
        } else {
            Carrier::Boundary
        }
    }

    fn ensure(&mut self, j: usize) {
        if self.stops[j].is_some() {
            return;
        }
        let lj = &self.lines[j];
        let mut raw: Vec<(Rat, HomPoint, usize)> = Vec::new();
        for (k, lk) in self.lines.iter().enumerate() {
            if k == j {
                continue;
            }
            if let Some(p) = lj.meet(lk) {
                if self.bbox.contains_hom(&p) {
                    raw.push((lj.param(&p), p, k));
                }
            }
        }
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut stops: Vec<Stop> = Vec::new();
        for (t, p, k) in raw {
            match stops.last_mut() {
                Some(s) if s.param == t => s.through.push(k),
                _ => stops.push(Stop { param: t, point: p, through: vec![k] }),
            }
        }
        self.stops[j] = Some(stops);
    }

    fn stops(&self, j: usize) -> &[Stop] {
        self.stops[j].as_deref().expect("stops computed")
    }

    /// Position of `p` on line `j`: `Ok(i)` if it is stop `i`, `Err(i)` if
    /// it lies strictly between stops `i − 1` and `i`.
    fn locate(&mut self, j: usize, p: &HomPoint) -> Result<usize, usize> {
        self.ensure(j);
        let t = self.lines[j].param(p);
        self.stops(j).binary_search_by(|s| s.param.cmp(&t))
    }

    fn direction(&self, e: DirEdge) -> (BigInt, BigInt) {
        let d = self.lines[e.0].direction();
        if e.2 > 0 {
            d
        } else {
            (-d.0, -d.1)
        }
    }

    /// Directed edges leaving stop `idx` of line `j` along every line through it.
    fn rays_at(&mut self, j: usize, idx: usize) -> Vec<DirEdge> {
        let mut members = self.stops(j)[idx].through.clone();
        members.push(j);
        let point = self.stops(j)[idx].point.clone();
        let mut rays = Vec::new();
        for k in members {
            let Ok(i) = self.locate(k, &point) else { continue };
            let len = self.stops(k).len();
            if i + 1 < len {
                rays.push((k, i, 1));
            }
            if i > 0 {
                rays.push((k, i, -1));
            }
        }
        rays
    }

    fn inward_left(&self, e: DirEdge) -> bool {
        if e.0 < self.n {
            return true;
        }
        // Sides in order bottom, right, top, left; inward normals below.
        let inward: [(i64, i64); 4] = [(0, 1), (-1, 0), (0, -1), (1, 0)];
        let (nx, ny) = inward[e.0 - self.n];
        let d = self.direction(e);
        // Left normal of d is (−dy, dx).
        let dot = -&d.1 * BigInt::from(nx) + &d.0 * BigInt::from(ny);
        sign(&dot) > 0
    }

    fn trace(&mut self, start: DirEdge, seen: &mut HashSet<DirEdge>) -> ZoneFace {
        let mut vertices = Vec::new();
        let mut carriers = Vec::new();
        let mut e = start;
        loop {
            seen.insert(e);
            let (j, idx, s) = e;
            vertices.push(self.stops(j)[idx].point.clone());
            carriers.push(self.carrier(j));
            let head = (idx as isize + s as isize) as usize;
            let mut rays = self.rays_at(j, head);
            rays.sort_by(|a, b| cmp_angle(&self.direction(*a), &self.direction(*b)));
            let back = (j, head, -s);
            let k = rays.iter().position(|r| *r == back).expect("reverse ray present");
            e = rays[(k + rays.len() - 1) % rays.len()];
            if e == start {
                break;
            }
        }
        ZoneFace { vertices, carriers }
    }

    /// Starting edges for every face whose closure contains `p`, given the
    /// arrangement lines through `p`.
    fn starts_at(&mut self, p: &HomPoint, through: &[usize]) -> Vec<DirEdge> {
        for &j in through {
            if let Ok(idx) = self.locate(j, p) {
                return self.rays_at(j, idx);
            }
        }
        let mut starts = Vec::new();
        if let Some(&j) = through.first() {
            if let Err(i) = self.locate(j, p) {
                if i > 0 && i < self.stops(j).len() {
                    starts.push((j, i - 1, 1));
                    starts.push((j, i, -1));
                }
            }
        }
        starts
    }

    /// Faces of the arrangement whose closure meets `l`, with their
    /// boundaries.
    pub fn zone(&mut self, l: &ExactLine) -> Zone {
        let il = IntLine::from_exact(l);
        let member = self.lines[..self.n].iter().position(|m| m.coincides(&il));
        let mut starts: Vec<DirEdge> = Vec::new();
        let mut points: HashMap<HomPoint, Vec<usize>> = HashMap::new();
        match member {
            Some(j) => {
                self.ensure(j);
                for idx in 0..self.stops(j).len() {
                    starts.extend(self.rays_at(j, idx));
                }
            }
            None => {
                for j in 0..self.n {
                    if let Some(p) = il.meet(&self.lines[j]) {
                        if self.bbox.contains_hom(&p) {
                            points.entry(p).or_default().push(j);
                        }
                    }
                }
                if points.is_empty() {
                    let hits = boundary_hits(&il, &self.bbox);
                    if hits.len() >= 2 {
                        points.insert(hits[0].clone(), Vec::new());
                    }
                }
                let mut pts: Vec<(HomPoint, Vec<usize>)> = points.into_iter().collect();
                pts.sort_by(|a, b| a.0.cmp_xy(&b.0));
                for (p, mut through) in pts {
                    for s in self.n..self.lines.len() {
                        if self.lines[s].side(&p) == 0 {
                            through.push(s);
                        }
                    }
                    starts.extend(self.starts_at(&p, &through));
                }
            }
        }
        let mut seen: HashSet<DirEdge> = HashSet::new();
        let mut faces = Vec::new();
        for s in starts {
            if seen.contains(&s) || !self.inward_left(s) {
                continue;
            }
            faces.push(self.trace(s, &mut seen));
        }
        Zone { line: l.clone(), faces }
    }
}

/// Zone of `l` in the arrangement of `lines` clipped to `bbox`.
pub fn zone_of_line(lines: &[ExactLine], l: &ExactLine, bbox: &BBox) -> Zone {
    ZoneIndex::new(lines, bbox).zone(l)
}

/// A zone-face vertex and the point of the opposite chain directly above or
/// below it, on opposite sides of a supporting line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerticalPair {
    pub vertex: ExactPoint,
    /// Input lines through the vertex along the face boundary.
    pub vertex_lines: Vec<usize>,
    pub opposite_line: usize,
    pub opposite_point: ExactPoint,
    pub distance: Rat,
}

fn y_on(line: &IntLine, x: &HomPoint) -> Option<HomPoint> {
    // a·x + b·y = c at the given abscissa.
    if line.b == BigInt::from(0) {
        return None;
    }
    let xw = &x.x;
    let w = &x.w;
    let y = &line.c * w - &line.a * xw;
    Some(HomPoint::new(xw * &line.b, y, w * &line.b))
}

fn hom_dist_y(p: &HomPoint, q: &HomPoint) -> Rat {
    (Rat::new(p.y.clone(), p.w.clone()) - Rat::new(q.y.clone(), q.w.clone())).abs()
}

/// All vertex/opposite-chain pairs of a zone face separated strictly by
/// `support`. Each vertex of one chain is matched, by binary search on x,
/// with the non-vertical edges of the other chain spanning its abscissa.
pub fn zone_vertical_pairs(face: &ZoneFace, support: &ExactLine) -> Vec<VerticalPair> {
    let sup = IntLine::from_exact(support);
    let poly = &face.vertices;
    let m = poly.len();
    let Ok((upper, lower)) = envelope_indices(poly) else { return Vec::new() };
    let line_of = |c: Carrier| -> Option<(usize, IntLine)> {
        match c {
            Carrier::Input(i) => Some(i),
            _ => None,
        }
        .map(|i| (i, face_line(face, c)))
    };
    let mut out = Vec::new();
    for (chain, other, other_is_upper) in [(&upper, &lower, false), (&lower, &upper, true)] {
        for &vi in chain.iter() {
            let v = &poly[vi];
            let sv = sup.side(v);
            if sv == 0 {
                continue;
            }
            // Edges of the opposite chain with x-range containing v.x.
            let k = other.partition_point(|&oi| poly[oi].cmp_x(v) == std::cmp::Ordering::Less);
            let lo = k.saturating_sub(1);
            let hi = (k + 1).min(other.len().saturating_sub(1));
            for t in lo..hi {
                let (a, b) = (other[t], other[t + 1]);
                if poly[a].cmp_x(&poly[b]) == std::cmp::Ordering::Equal {
                    continue;
                }
                if poly[a].cmp_x(v) == std::cmp::Ordering::Greater || poly[b].cmp_x(v) == std::cmp::Ordering::Less {
                    continue;
                }
                // Edge a→b in counter-clockwise order for the lower chain,
                // b→a for the upper chain.
                let edge = if other_is_upper { b } else { a };
                if edge == vi || (edge + 1) % m == vi {
                    continue;
                }
                let Some((c, cl)) = line_of(face.carriers[edge]) else { continue };
                let Some(o) = y_on(&cl, v) else { continue };
                if sup.side(&o) * sv >= 0 {
                    continue;
                }
                let mut vertex_lines: Vec<usize> = [face.carriers[(vi + m - 1) % m], face.carriers[vi]]
                    .iter()
                    .filter_map(|c| match c {
                        Carrier::Input(i) => Some(*i),
                        _ => None,
                    })
                    .collect();
                vertex_lines.dedup();
                out.push(VerticalPair {
                    vertex: v.to_exact(),
                    vertex_lines,
                    opposite_line: c,
                    distance: hom_dist_y(v, &o),
                    opposite_point: o.to_exact(),
                });
            }
        }
    }
    out
}

fn face_line(face: &ZoneFace, c: Carrier) -> IntLine {
    let i = face.carriers.iter().position(|&x| x == c).unwrap();
    let m = face.vertices.len();
    IntLine::through(&face.vertices[i], &face.vertices[(i + 1) % m])
}

/// Opposite-side pair of minimum vertical distance within one zone face.
pub fn zone_min_vertical_pair(face: &ZoneFace, support: &ExactLine) -> Option<VerticalPair> {
    zone_vertical_pairs(face, support).into_iter().min_by(|a, b| a.distance.cmp(&b.distance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_arrangement, enclosing_bbox};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn hline(y: i64) -> ExactLine {
        ExactLine::from_slope_intercept(Rat::zero(), Rat::from_int(y))
    }

    #[test]
    fn slab_zone() {
        let lines = vec![hline(1), hline(-1)];
        let b = BBox::from_ints(-3, 3, -3, 3);
        let z = zone_of_line(&lines, &hline(0), &b);
        assert_eq!(z.faces.len(), 1);
        assert_eq!(z.edge_count(), 2);
    }

    #[test]
    fn member_line_zone_is_adjacent_faces() {
        let lines = vec![hline(1), hline(-1)];
        let b = BBox::from_ints(-3, 3, -3, 3);
        let z = zone_of_line(&lines, &hline(1), &b);
        assert_eq!(z.faces.len(), 2);
    }

    fn random_lines(rng: &mut ChaCha8Rng, n: usize) -> Vec<ExactLine> {
        let mut ls: Vec<ExactLine> = Vec::new();
        while ls.len() < n {
            let l = ExactLine::from_slope_intercept(
                Rat::from_int(rng.gen_range(-3..=3)),
                Rat::from_int(rng.gen_range(-3..=3)),
            );
            if !ls.contains(&l) {
                ls.push(l);
            }
        }
        ls
    }

    #[test]
    fn zone_matches_full_arrangement_filter() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let lines = random_lines(&mut rng, 8);
            let l = ExactLine::from_slope_intercept(Rat::new(rng.gen_range(-7..7), 2), Rat::from_int(rng.gen_range(-2..3)));
            let mut with_l = lines.clone();
            with_l.push(l.clone());
            let b = enclosing_bbox(&with_l);
            let arr = build_arrangement(&lines, &b).unwrap();
            let il = IntLine::from_exact(&l);
            let mut expect: Vec<Vec<ExactPoint>> = arr
                .bounded_faces()
                .filter(|&f| {
                    arr.face_vertex_ids(f).iter().any(|&v| il.side(arr.vertex(v)) == 0) || {
                        let s: Vec<i32> = arr.face_vertex_ids(f).iter().map(|&v| il.side(arr.vertex(v))).collect();
                        s.contains(&1) && s.contains(&-1)
                    }
                })
                .map(|f| ZoneFace { vertices: arr.face_vertex_ids(f).iter().map(|&v| arr.vertex(v).clone()).collect(), carriers: vec![] }.canonical())
                .collect();
            let mut got: Vec<Vec<ExactPoint>> = zone_of_line(&lines, &l, &b).faces.iter().map(ZoneFace::canonical).collect();
            expect.sort();
            got.sort();
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn slab_vertical_pair() {
        let lines = vec![hline(0), hline(1)];
        let b = BBox::from_ints(-2, 2, -2, 3);
        let support = ExactLine::from_slope_intercept(Rat::zero(), Rat::new(1, 2));
        let z = zone_of_line(&lines, &support, &b);
        assert_eq!(z.faces.len(), 1);
        let p = zone_min_vertical_pair(&z.faces[0], &support).unwrap();
        assert_eq!(p.distance, Rat::one());
    }

    #[test]
    fn face_on_one_side_gives_nothing() {
        let lines = vec![hline(0), hline(1)];
        let b = BBox::from_ints(-2, 2, -2, 3);
        let support = ExactLine::from_slope_intercept(Rat::zero(), Rat::new(1, 2));
        let z = zone_of_line(&lines, &hline(0), &b);
        let below = z.faces.iter().find(|f| f.vertices.iter().all(|v| v.cmp_y(&HomPoint::from_exact(&ExactPoint::from_ints(0, 0))) != std::cmp::Ordering::Greater)).unwrap();
        assert!(zone_vertical_pairs(below, &support).is_empty());
    }
}
