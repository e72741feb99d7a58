use serde::Serialize;
use thiserror::Error;

use super::grid_search::PairSearchInstance;
use crate::exact::{orient, ExactLine, ExactPoint, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("a polygon needs at least three vertices")]
    TooFewVertices,
    #[error("vertices must be in counter-clockwise order")]
    Clockwise,
    #[error("edges {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("edge index {0} is out of range")]
    BadEdge(usize),
    #[error("piece count must exceed 2")]
    BadPieceCount,
    #[error("the two vertices must differ")]
    SameVertex,
}

/// Simple polygon with a distinguished edge `e` (from vertex `e` to vertex
/// `e + 1`) and a target piece count.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolygonInstance {
    pub vertices: Vec<ExactPoint>,
    pub edge: usize,
    pub pieces: usize,
}

fn on_segment(p: &ExactPoint, q: &ExactPoint, r: &ExactPoint) -> bool {
    r.x >= p.x.clone().min(q.x.clone())
        && r.x <= p.x.clone().max(q.x.clone())
        && r.y >= p.y.clone().min(q.y.clone())
        && r.y <= p.y.clone().max(q.y.clone())
}

/// Closed segments `ab` and `cd` share a point.
pub(crate) fn segments_meet(a: &ExactPoint, b: &ExactPoint, c: &ExactPoint, d: &ExactPoint) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) || (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b))
}

pub(crate) fn signed_area2(v: &[ExactPoint]) -> Rat {
    let n = v.len();
    (0..n).fold(Rat::zero(), |acc, i| {
        let (p, q) = (&v[i], &v[(i + 1) % n]);
        acc + &(&p.x * &q.y) - &(&q.x * &p.y)
    })
}

impl PolygonInstance {
    pub fn new(vertices: Vec<ExactPoint>, edge: usize, pieces: usize) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices);
        }
        if edge >= n {
            return Err(PolygonError::BadEdge(edge));
        }
        if pieces <= 2 {
            return Err(PolygonError::BadPieceCount);
        }
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let (a, b, c, d) = (&vertices[i], &vertices[(i + 1) % n], &vertices[j], &vertices[(j + 1) % n]);
                let clash = if adjacent {
                    // Adjacent edges may only share their common vertex.
                    let (shared, p, q) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                    orient(p, shared, q) == 0 && (on_segment(shared, p, q) || on_segment(shared, q, p))
                } else {
                    segments_meet(a, b, c, d)
                };
                if clash {
                    return Err(PolygonError::NotSimple(i, j));
                }
            }
        }
        if signed_area2(&vertices).signum() <= 0 {
            return Err(PolygonError::Clockwise);
        }
        Ok(PolygonInstance { vertices, edge, pieces })
    }

    fn edge_points(&self, i: usize) -> (&ExactPoint, &ExactPoint) {
        (&self.vertices[i], &self.vertices[(i + 1) % self.vertices.len()])
    }
}

/// Pieces the polygon falls into when cut along `line`, which must avoid
/// every vertex. `None` if it passes through one.
pub fn pieces_cut_by(vertices: &[ExactPoint], line: &ExactLine) -> Option<usize> {
    let side: Vec<Rat> = vertices.iter().map(|p| line.eval(p)).collect();
    if side.iter().any(Rat::is_zero) {
        return None;
    }
    let n = vertices.len();
    // Each chord enters and leaves through one edge.
    let crossings = (0..n).filter(|&i| side[i].signum() != side[(i + 1) % n].signum()).count();
    Some(crossings / 2 + 1)
}

/// Looks for a witness line near the line through vertices `u` and `v`:
/// the parallel lines halfway between it and the nearest vertex strictly on
/// either side. A witness crosses the distinguished edge and cuts the
/// polygon into exactly the target number of pieces.
pub fn polygon_cut_check(inst: &PolygonInstance, u: usize, v: usize) -> Result<Option<ExactLine>, PolygonError> {
    if u == v {
        return Err(PolygonError::SameVertex);
    }
    let n = inst.vertices.len();
    if u >= n || v >= n {
        return Err(PolygonError::BadEdge(u.max(v)));
    }
    let l1 = ExactLine::through(&inst.vertices[u], &inst.vertices[v]).expect("polygon vertices are distinct");
    let vals: Vec<Rat> = inst.vertices.iter().map(|p| l1.eval(p)).collect();
    for sign in [1, -1] {
        let nearest = vals.iter().filter(|s| s.signum() == sign).min_by(|a, b| a.abs().cmp(&b.abs()));
        let Some(s) = nearest else { continue };
        let half = s / &Rat::from_int(2);
        let cand = ExactLine { a: l1.a.clone(), b: l1.b.clone(), c: &l1.c + &half };
        let (p, q) = inst.edge_points(inst.edge);
        let crosses_edge = cand.eval(p).signum() * cand.eval(q).signum() < 0;
        if crosses_edge && pieces_cut_by(&inst.vertices, &cand) == Some(inst.pieces) {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Pair search over vertex pairs with [`polygon_cut_check`] as predicate.
pub fn polygon_pair_instance(inst: &PolygonInstance) -> PairSearchInstance {
    let inst = inst.clone();
    PairSearchInstance::new(inst.vertices.len(), 1.0, move |u, v| u != v && matches!(polygon_cut_check(&inst, u, v), Ok(Some(_))))
}
