#![allow(dead_code)]

use std::collections::HashSet;
use std::f64::consts::TAU as FULL_TURN;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rqs_geom::exact::{ApproxPoint, ExactLine, ExactPoint, Rat};
use rqs_geom::problems::{IntervalInstance, PolygonInstance};

/// Distinct lines with small rational coefficients; half the time three of
/// them are forced through a common point.
pub fn p3l_lines(rng: &mut ChaCha8Rng, n: usize) -> Vec<ExactLine> {
    let mut seen = HashSet::new();
    let mut lines = Vec::new();
    if rng.gen_bool(0.5) {
        let (px, py) = (rng.gen_range(-20..=20), rng.gen_range(-20..=20));
        while lines.len() < 3 {
            let s = rng.gen_range(-9..=9);
            let l = ExactLine::from_slope_intercept(Rat::from_int(s), Rat::from_int(py - s * px));
            if seen.insert(l.clone()) {
                lines.push(l);
            }
        }
    }
    while lines.len() < n {
        let l = ExactLine::from_slope_intercept(Rat::new(rng.gen_range(-300..=300), 7), Rat::new(rng.gen_range(-300..=300), 11));
        if seen.insert(l.clone()) {
            lines.push(l);
        }
    }
    lines.shuffle(rng);
    lines
}

pub fn distinct_points(rng: &mut ChaCha8Rng, n: usize, r: i64) -> Vec<ExactPoint> {
    let mut seen = HashSet::new();
    let mut pts = Vec::new();
    while pts.len() < n {
        let p = (rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        if seen.insert(p) {
            pts.push(ExactPoint::from_ints(p.0, p.1));
        }
    }
    pts
}

pub fn disk_points(rng: &mut ChaCha8Rng, n: usize, side: f64) -> Vec<ApproxPoint> {
    (0..n).map(|_| ApproxPoint::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side))).collect()
}

/// `Q` with `m` intervals; `P` is either a translated subset of `Q` with
/// intervals possibly shrunk, or random.
pub fn interval_instance(rng: &mut ChaCha8Rng, n: usize) -> IntervalInstance {
    let m = (n * 2 / 3).max(2);
    let mut x = 0i64;
    let mut q = Vec::new();
    for _ in 0..m {
        x += rng.gen_range(1..6);
        let len = rng.gen_range(0..6);
        q.push((x, x + len));
        x += len;
    }
    let k = (n - m).max(1);
    let p: Vec<(i64, i64)> = if rng.gen_bool(0.5) {
        let mut idx: Vec<usize> = (0..m).collect();
        idx.shuffle(rng);
        let mut idx = idx[..k.min(m)].to_vec();
        idx.sort_unstable();
        let t = rng.gen_range(-50..50);
        idx.iter()
            .map(|&i| {
                let (a, b) = q[i];
                let a2 = if b > a && rng.gen_bool(0.3) { a + 1 } else { a };
                (a2 - t, b - t)
            })
            .collect()
    } else {
        let mut y = 0;
        (0..k)
            .map(|_| {
                y += rng.gen_range(1..5);
                let len = rng.gen_range(0..4);
                let iv = (y, y + len);
                y += len;
                iv
            })
            .collect()
    };
    let rat = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| (Rat::from_int(a), Rat::from_int(b))).collect();
    IntervalInstance::new(rat(&p), rat(&q)).expect("generated sets are sorted and disjoint")
}

/// Star-shaped polygon around the origin with integer vertices.
pub fn star_polygon(rng: &mut ChaCha8Rng, n: usize) -> Vec<ExactPoint> {
    loop {
        let mut angles: Vec<f64> = (0..n).map(|i| (i as f64 + rng.gen_range(0.1..0.9)) * FULL_TURN / n as f64).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<ExactPoint> = angles
            .iter()
            .map(|a| {
                let r = rng.gen_range(20.0..100.0);
                ExactPoint::from_ints((r * a.cos()).round() as i64, (r * a.sin()).round() as i64)
            })
            .collect();
        if PolygonInstance::new(pts.clone(), 0, 3).is_ok() {
            return pts;
        }
    }
}

pub fn polygon_instance(rng: &mut ChaCha8Rng, n: usize) -> PolygonInstance {
    let v = star_polygon(rng, n);
    let edge = rng.gen_range(0..n);
    let pieces = rng.gen_range(3..=5);
    PolygonInstance::new(v, edge, pieces).unwrap()
}

/// Convex polygon: a random axis-aligned rectangle or triangle.
pub fn convex_piece(rng: &mut ChaCha8Rng, spread: i64) -> Vec<ExactPoint> {
    let (x, y) = (rng.gen_range(-spread..=spread), rng.gen_range(-spread..=spread));
    let (w, h) = (rng.gen_range(1..6), rng.gen_range(1..6));
    if rng.gen_bool(0.5) {
        vec![ExactPoint::from_ints(x, y), ExactPoint::from_ints(x + w, y), ExactPoint::from_ints(x + w, y + h), ExactPoint::from_ints(x, y + h)]
    } else {
        vec![ExactPoint::from_ints(x, y), ExactPoint::from_ints(x + w, y), ExactPoint::from_ints(x, y + h)]
    }
}
