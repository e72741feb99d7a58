
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::{ExactLine, ExactPoint, HomPoint, IntLine, Rat};

/// Closed axis-parallel rational rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BBox {
    pub xmin: Rat,
    pub xmax: Rat,
    pub ymin: Rat,
    pub ymax: Rat,
}

impl BBox {
    pub fn new(xmin: Rat, xmax: Rat, ymin: Rat, ymax: Rat) -> Self {
        assert!(xmin < xmax && ymin < ymax, "empty bounding box");
        BBox { xmin, xmax, ymin, ymax }
    }

    pub fn from_ints(xmin: i64, xmax: i64, ymin: i64, ymax: i64) -> Self {
        BBox::new(xmin.into(), xmax.into(), ymin.into(), ymax.into())
    }

    pub fn contains(&self, p: &ExactPoint) -> bool {
        p.x >= self.xmin && p.x <= self.xmax && p.y >= self.ymin && p.y <= self.ymax
    }

    pub fn strictly_contains(&self, p: &ExactPoint) -> bool {
        p.x > self.xmin && p.x < self.xmax && p.y > self.ymin && p.y < self.ymax
    }

    pub(crate) fn contains_hom(&self, p: &HomPoint) -> bool {
        // x/w >= n/d  <=>  x·d >= n·w  (w, d > 0)
        let ge = |v: &BigInt, r: &Rat| v * r.denom() >= r.numer() * &p.w;
        let le = |v: &BigInt, r: &Rat| v * r.denom() <= r.numer() * &p.w;
        ge(&p.x, &self.xmin) && le(&p.x, &self.xmax) && ge(&p.y, &self.ymin) && le(&p.y, &self.ymax)
    }

    /// The four sides as lines, in counter-clockwise order starting with the
    /// bottom side: bottom, right, top, left.
    pub fn side_lines(&self) -> [ExactLine; 4] {
        let h = |y: &Rat| ExactLine::new(Rat::zero(), Rat::one(), y.clone()).unwrap();
        let v = |x: &Rat| ExactLine::new(Rat::one(), Rat::zero(), x.clone()).unwrap();
        [h(&self.ymin), v(&self.xmax), h(&self.ymax), v(&self.xmin)]
    }

    pub fn corners(&self) -> [ExactPoint; 4] {
        [
            ExactPoint::new(self.xmin.clone(), self.ymin.clone()),
            ExactPoint::new(self.xmax.clone(), self.ymin.clone()),
            ExactPoint::new(self.xmax.clone(), self.ymax.clone()),
            ExactPoint::new(self.xmin.clone(), self.ymax.clone()),
        ]
    }

    /// Counter-clockwise perimeter coordinate of a boundary point, starting
    /// at the lower-left corner.
    pub(crate) fn perimeter_param(&self, p: &ExactPoint) -> Rat {
        let w = &self.xmax - &self.xmin;
        let h = &self.ymax - &self.ymin;
        if p.y == self.ymin && p.x < self.xmax {
            &p.x - &self.xmin
        } else if p.x == self.xmax && p.y < self.ymax {
            &w + &(&p.y - &self.ymin)
        } else if p.y == self.ymax && p.x > self.xmin {
            &(&w + &h) + &(&self.xmax - &p.x)
        } else {
            &(&(&w + &w) + &h) + &(&self.ymax - &p.y)
        }
    }

    fn grown(&self, by: &Rat) -> BBox {
        BBox::new(&self.xmin - by, &self.xmax + by, &self.ymin - by, &self.ymax + by)
    }
}

/// `(slope, intercept)` of `coord_b = slope·coord_a + intercept` for lines
/// that are functions of `coord_a`, plus the constant positions of the lines
/// that are not.
fn as_functions(lines: &[ExactLine], swap: bool) -> (Vec<(Rat, Rat)>, Vec<Rat>) {
    let mut fns = Vec::new();
    let mut consts = Vec::new();
    for l in lines {
        // In swapped mode the roles of (a, x) and (b, y) exchange.
        let (pa, pb) = if swap { (&l.b, &l.a) } else { (&l.a, &l.b) };
        if pb.is_zero() {
            consts.push(&l.c / pa);
        } else {
            fns.push((-(pa / pb), &l.c / pb));
        }
    }
    (fns, consts)
}

/// Extreme abscissae of all pairwise intersections. The leftmost vertex of a
/// line arrangement is formed by two lines adjacent in the order at −∞, and
/// symmetrically for the rightmost one, so only adjacent pairs are examined.
fn abscissa_extremes(fns: &[(Rat, Rat)], consts: &[Rat]) -> Option<(Rat, Rat)> {
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    let mut push = |v: Rat| {
        lo = Some(match lo.take() {
            Some(c) => c.min(v.clone()),
            None => v.clone(),
        });
        hi = Some(match hi.take() {
            Some(c) => c.max(v.clone()),
            None => v,
        });
    };
    if !fns.is_empty() {
        for c in consts {
            push(c.clone());
        }
    }
    let meet_x = |p: &(Rat, Rat), q: &(Rat, Rat)| &(&q.1 - &p.1) / &(&p.0 - &q.0);
    // Top-to-bottom order at x → −∞: slope ascending, intercept descending.
    let mut left: Vec<&(Rat, Rat)> = fns.iter().collect();
    left.sort_by(|p, q| p.0.cmp(&q.0).then_with(|| q.1.cmp(&p.1)));
    for w in left.windows(2) {
        if w[0].0 != w[1].0 {
            push(meet_x(w[0], w[1]));
        }
    }
    // Top-to-bottom order at x → +∞: slope descending, intercept descending.
    let mut right: Vec<&(Rat, Rat)> = fns.iter().collect();
    right.sort_by(|p, q| q.0.cmp(&p.0).then_with(|| q.1.cmp(&p.1)));
    for w in right.windows(2) {
        if w[0].0 != w[1].0 {
            push(meet_x(w[0], w[1]));
        }
    }
    lo.zip(hi)
}

fn touches_side(lines: &[ExactLine], b: &BBox) -> bool {
    let sides = b.side_lines();
    lines.iter().any(|l| sides.iter().any(|s| s == l))
}

/// Rectangle strictly containing every pairwise intersection of `lines`,
/// with margin 1. Parallel families (no intersections) get a box of half-width
/// 1 around a point of the first line, grown until no line runs along a side.
pub fn enclosing_bbox(lines: &[ExactLine]) -> BBox {
    let one = Rat::one();
    let (fx, cx) = as_functions(lines, false);
    let (fy, cy) = as_functions(lines, true);
    match (abscissa_extremes(&fx, &cx), abscissa_extremes(&fy, &cy)) {
        (Some((x0, x1)), Some((y0, y1))) => BBox::new(&x0 - &one, &x1 + &one, &y0 - &one, &y1 + &one),
        _ => {
            let centre = match lines.first() {
                None => ExactPoint::new(Rat::zero(), Rat::zero()),
                Some(l) if !l.b.is_zero() => ExactPoint::new(Rat::zero(), &l.c / &l.b),
                Some(l) => ExactPoint::new(&l.c / &l.a, Rat::zero()),
            };
            let mut b = BBox::new(&centre.x - &one, &centre.x + &one, &centre.y - &one, &centre.y + &one);
            let half = Rat::new(1, 2);
            while touches_side(lines, &b) {
                b = b.grown(&half);
            }
            b
        }
    }
}

/// Like [`enclosing_bbox`] but with the vertical range widened so that every
/// non-vertical line stays inside the box over the whole horizontal range.
/// Vertical segments from any arrangement vertex to any line then stay in
/// the box.
pub fn vertical_closure_bbox(lines: &[ExactLine]) -> BBox {
    let b = enclosing_bbox(lines);
    let one = Rat::one();
    let mut ymin = b.ymin.clone();
    let mut ymax = b.ymax.clone();
    for l in lines {
        for x in [&b.xmin, &b.xmax] {
            if let Some(y) = l.y_at(x) {
                if y <= ymin {
                    ymin = &y - &one;
                }
                if y >= ymax {
                    ymax = &y + &one;
                }
            }
        }
    }
    BBox::new(b.xmin, b.xmax, ymin, ymax)
}

/// Points where `line` meets the boundary of `b`, deduplicated and sorted
/// along the line.
pub(crate) fn boundary_hits(line: &IntLine, b: &BBox) -> Vec<HomPoint> {
    let mut pts: Vec<HomPoint> = Vec::new();
    for s in b.side_lines() {
        if let Some(p) = line.meet(&s.to_int()) {
            if b.contains_hom(&p) && !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    pts.sort_by(|p, q| line.param(p).cmp(&line.param(q)));
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{line_intersection, Intersection};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_lines_box_around_origin() {
        let l1 = ExactLine::from_slope_intercept(Rat::zero(), Rat::zero());
        let l2 = ExactLine::from_slope_intercept(Rat::one(), Rat::zero());
        let b = enclosing_bbox(&[l1, l2]);
        assert_eq!(b, BBox::from_ints(-1, 1, -1, 1));
    }

    #[test]
    fn parallel_family_gets_unit_box() {
        let ls: Vec<ExactLine> =
            (0..4).map(|i| ExactLine::from_slope_intercept(Rat::from_int(2), Rat::from_int(i))).collect();
        let b = enclosing_bbox(&ls);
        assert_eq!(&b.xmax - &b.xmin, Rat::from_int(2));
        assert!(!touches_side(&ls, &b));
        let horizontal: Vec<ExactLine> =
            (0..3).map(|i| ExactLine::from_slope_intercept(Rat::zero(), Rat::from_int(i))).collect();
        let b = enclosing_bbox(&horizontal);
        assert!(!touches_side(&horizontal, &b));
    }

    #[test]
    fn random_lines_all_intersections_strictly_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let mut lines: Vec<ExactLine> = (0..20)
                .map(|_| {
                    ExactLine::from_slope_intercept(
                        Rat::new(rng.gen_range(-50..50), rng.gen_range(1..9)),
                        Rat::from_int(rng.gen_range(-100..100)),
                    )
                })
                .collect();
            lines.push(ExactLine::new(Rat::one(), Rat::zero(), Rat::from_int(37)).unwrap());
            let b = enclosing_bbox(&lines);
            for i in 0..lines.len() {
                for j in i + 1..lines.len() {
                    if let Intersection::Point(p) = line_intersection(&lines[i], &lines[j]) {
                        assert!(b.strictly_contains(&p), "{p:?} outside {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn vertical_closure_covers_lines() {
        let lines = vec![
            ExactLine::from_slope_intercept(Rat::from_int(100), Rat::zero()),
            ExactLine::from_slope_intercept(Rat::from_int(-1), Rat::one()),
        ];
        let b = vertical_closure_bbox(&lines);
        for l in &lines {
            for x in [&b.xmin, &b.xmax] {
                let y = l.y_at(x).unwrap();
                assert!(y > b.ymin && y < b.ymax);
            }
        }
    }
}
