use serde::Serialize;
use thiserror::Error;

use super::grid_search::PairSearchInstance;
use crate::exact::{orient, ExactPoint, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectionError {
    #[error("polygon {0} is not strictly convex and counter-clockwise")]
    NotConvex(usize),
    #[error("the two polygons must differ")]
    SameObject,
    #[error("polygon index {0} is out of range")]
    BadIndex(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionInstance {
    pub polygons: Vec<Vec<ExactPoint>>,
}

/// Direction `(x, y)` of the line the objects are projected on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Direction {
    pub x: Rat,
    pub y: Rat,
}

impl Direction {
    fn new(x: Rat, y: Rat) -> Self {
        let m = x.abs().max(y.abs());
        Direction { x: &x / &m, y: &y / &m }
    }

    fn dot(&self, p: &ExactPoint) -> Rat {
        &(&self.x * &p.x) + &(&self.y * &p.y)
    }
}

impl ProjectionInstance {
    pub fn new(polygons: Vec<Vec<ExactPoint>>) -> Result<Self, ProjectionError> {
        for (i, poly) in polygons.iter().enumerate() {
            let n = poly.len();
            if n < 3 || (0..n).any(|k| orient(&poly[k], &poly[(k + 1) % n], &poly[(k + 2) % n]) <= 0) {
                return Err(ProjectionError::NotConvex(i));
            }
        }
        Ok(ProjectionInstance { polygons })
    }

    /// Do the projections onto `d` form pairwise disjoint closed intervals?
    pub fn disjoint_along(&self, d: &Direction) -> bool {
        disjoint_by(&self.polygons, |p| d.dot(p))
    }
}

fn disjoint_by<K: Ord + Clone>(polys: &[Vec<ExactPoint>], key: impl Fn(&ExactPoint) -> K) -> bool {
    let mut spans: Vec<(K, K)> = polys
        .iter()
        .map(|poly| {
            let vals: Vec<K> = poly.iter().map(&key).collect();
            (vals.iter().min().unwrap().clone(), vals.iter().max().unwrap().clone())
        })
        .collect();
    spans.sort();
    spans.windows(2).all(|w| w[0].1 < w[1].0)
}

/// Normals of the inner common tangents of `a` and `b`, oriented so that
/// `a` projects below `b`.
fn tangent_normals(a: &[ExactPoint], b: &[ExactPoint]) -> Vec<(Rat, Rat)> {
    let mut out: Vec<(Rat, Rat)> = Vec::new();
    for p in a {
        for q in b {
            if p == q {
                continue;
            }
            let (nx, ny) = (&p.y - &q.y, &q.x - &p.x);
            let side = |r: &ExactPoint| (&(&nx * &(&r.x - &p.x)) + &(&ny * &(&r.y - &p.y))).signum();
            let (sa, sb): (Vec<i32>, Vec<i32>) = (a.iter().map(side).collect(), b.iter().map(side).collect());
            let sign = if sa.iter().all(|&s| s <= 0) && sb.iter().all(|&s| s >= 0) {
                1
            } else if sa.iter().all(|&s| s >= 0) && sb.iter().all(|&s| s <= 0) {
                -1
            } else {
                continue;
            };
            let (mx, my) = if sign > 0 { (nx.clone(), ny.clone()) } else { (-&nx, -&ny) };
            let parallel = out.iter().any(|(x, y)| (&(x * &my) - &(y * &mx)).is_zero() && (x * &mx).signum() + (y * &my).signum() > 0);
            if !parallel {
                out.push((mx, my));
            }
        }
    }
    out
}

/// Directions near which the projections of `i` and `j` touch, tried
/// exactly at the middle of the separating range and just inside either
/// end. Returns the first direction along which all projections are
/// disjoint.
pub fn disjoint_projection_check(inst: &ProjectionInstance, i: usize, j: usize) -> Result<Option<Direction>, ProjectionError> {
    if i == j {
        return Err(ProjectionError::SameObject);
    }
    for k in [i, j] {
        if k >= inst.polygons.len() {
            return Err(ProjectionError::BadIndex(k));
        }
    }
    let normals = tangent_normals(&inst.polygons[i], &inst.polygons[j]);
    let [na, nb] = &normals[..] else { return Ok(None) };
    let mid = Direction::new(&na.0 + &nb.0, &na.1 + &nb.1);
    if inst.disjoint_along(&mid) {
        return Ok(Some(mid));
    }
    for (from, to) in [(na, nb), (nb, na)] {
        let w = (&to.0 - &from.0, &to.1 - &from.1);
        // Infinitesimal rotation: compare by the base value, then the drift.
        let symbolic = disjoint_by(&inst.polygons, |p| {
            (&(&from.0 * &p.x) + &(&from.1 * &p.y), &(&w.0 * &p.x) + &(&w.1 * &p.y))
        });
        if !symbolic {
            continue;
        }
        let mut eta = Rat::new(1, 2);
        loop {
            let d = Direction::new(&from.0 + &(&eta * &w.0), &from.1 + &(&eta * &w.1));
            if inst.disjoint_along(&d) {
                return Ok(Some(d));
            }
            eta = &eta / &Rat::from_int(2);
        }
    }
    Ok(None)
}

/// Pair search over polygon pairs with [`disjoint_projection_check`] as
/// predicate.
pub fn projection_pair_instance(inst: &ProjectionInstance) -> PairSearchInstance {
    let inst = inst.clone();
    PairSearchInstance::new(inst.polygons.len(), 1.0, move |i, j| {
        i != j && matches!(disjoint_projection_check(&inst, i, j), Ok(Some(_)))
    })
}
