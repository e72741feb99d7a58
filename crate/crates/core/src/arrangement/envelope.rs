use std::cmp::Ordering;

use super::dcel::ArrangementError;
use crate::exact::{sign, ExactPoint, HomPoint};

fn orient(p: &HomPoint, q: &HomPoint, r: &HomPoint) -> i32 {
    let det = &p.x * (&q.y * &r.w - &q.w * &r.y) - &p.y * (&q.x * &r.w - &q.w * &r.x) + &p.w * (&q.x * &r.y - &q.y * &r.x);
    sign(&det)
}

/// Index chains `(upper, lower)` of a counter-clockwise convex polygon, each
/// in ascending x. Both chains start and end at the x-extreme vertices, so
/// a vertical edge at either end belongs to neither chain.
pub(crate) fn envelope_indices(poly: &[HomPoint]) -> Result<(Vec<usize>, Vec<usize>), ArrangementError> {
    let m = poly.len();
    if m < 3 {
        return Err(ArrangementError::NonConvexFace);
    }
    let mut turns = 0;
    for i in 0..m {
        match orient(&poly[i], &poly[(i + 1) % m], &poly[(i + 2) % m]) {
            -1 => return Err(ArrangementError::NonConvexFace),
            1 => turns += 1,
            _ => {}
        }
    }
    // x must change direction at most twice around a convex cycle.
    let mut dirs: Vec<Ordering> =
        (0..m).map(|i| poly[(i + 1) % m].cmp_x(&poly[i])).filter(|o| *o != Ordering::Equal).collect();
    dirs.dedup();
    if dirs.len() > 1 && dirs.first() == dirs.last() {
        dirs.pop();
    }
    if turns == 0 || dirs.len() > 2 {
        return Err(ArrangementError::NonConvexFace);
    }
    let by = |lo_y: bool, min_x: bool| {
        (0..m)
            .min_by(|&a, &b| {
                let ox = poly[a].cmp_x(&poly[b]);
                let ox = if min_x { ox } else { ox.reverse() };
                let oy = poly[a].cmp_y(&poly[b]);
                ox.then(if lo_y { oy } else { oy.reverse() })
            })
            .unwrap()
    };
    let left_low = by(true, true);
    let right_low = by(true, false);
    let right_high = by(false, false);
    let left_high = by(false, true);
    let walk = |from: usize, to: usize| {
        let mut c = vec![from];
        let mut i = from;
        while i != to {
            i = (i + 1) % m;
            c.push(i);
        }
        c
    };
    let lower = walk(left_low, right_low);
    let mut upper = walk(right_high, left_high);
    upper.reverse();
    Ok((upper, lower))
}

/// Upper and lower boundary chains of a convex polygon given in either
/// orientation, each sorted by x.
pub fn face_envelopes(face: &[ExactPoint]) -> Result<(Vec<ExactPoint>, Vec<ExactPoint>), ArrangementError> {
    let mut poly: Vec<HomPoint> = face.iter().map(HomPoint::from_exact).collect();
    let m = poly.len();
    if m >= 3 {
        // Make the cycle counter-clockwise using the turn at the
        // lexicographically smallest vertex.
        let lo = (0..m).min_by(|&a, &b| poly[a].cmp_xy(&poly[b])).unwrap();
        if orient(&poly[(lo + m - 1) % m], &poly[lo], &poly[(lo + 1) % m]) < 0 {
            poly.reverse();
        }
    }
    let (u, l) = envelope_indices(&poly)?;
    let pick = |c: Vec<usize>| c.into_iter().map(|i| poly[i].to_exact()).collect();
    Ok((pick(u), pick(l)))
}
