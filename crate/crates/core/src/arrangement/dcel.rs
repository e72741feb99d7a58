use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use super::bbox::BBox;
use crate::exact::{cmp_angle, sign, ExactLine, ExactPoint, HomPoint, IntLine};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("input lines {0} and {1} coincide")]
    DuplicateLines(usize, usize),
    #[error("audit failed: {0}")]
    Audit(String),
    #[error("face is not convex")]
    NonConvexFace,
}

/// The line an edge lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Carrier {
    /// Index into the input line list.
    Input(usize),
    /// Triangulation diagonal.
    Support,
    /// Side of the bounding box.
    Boundary,
}

#[derive(Clone, Debug)]
pub struct HalfEdge {
    pub origin: usize,
    pub twin: usize,
    pub next: usize,
    pub face: usize,
    pub carrier: Carrier,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub edge: usize,
    pub bounded: bool,
}

/// Doubly-connected edge list of the lines clipped to a bounding box.
#[derive(Clone, Debug)]
pub struct Arrangement {
    bbox: BBox,
    lines: Vec<IntLine>,
    vertices: Vec<HomPoint>,
    vertex_out: Vec<usize>,
    half_edges: Vec<HalfEdge>,
    faces: Vec<Face>,
    vertex_index: HashMap<HomPoint, usize>,
    // Inner boundary half-edges keyed by the perimeter position of their origin.
    boundary_ring: Vec<(crate::exact::Rat, usize)>,
    triangulated: bool,
}

struct Draft {
    origin: usize,
    line: usize,
    forward: bool,
    dir: (num_bigint::BigInt, num_bigint::BigInt),
}

/// Builds the arrangement of `lines` inside `bbox`. Coincident input lines
/// are rejected.
pub fn build_arrangement(lines: &[ExactLine], bbox: &BBox) -> Result<Arrangement, ArrangementError> {
    let n = lines.len();
    let mut all: Vec<IntLine> = lines.iter().map(IntLine::from_exact).collect();
    let mut seen: HashMap<&IntLine, usize> = HashMap::new();
    for (i, l) in all.iter().enumerate() {
        if let Some(&j) = seen.get(l) {
            return Err(ArrangementError::DuplicateLines(j, i));
        }
        seen.insert(l, i);
    }
    drop(seen);
    all.extend(bbox.side_lines().iter().map(IntLine::from_exact));

    let mut vertices: Vec<HomPoint> = Vec::new();
    let mut vertex_index: HashMap<HomPoint, usize> = HashMap::new();
    let mut drafts: Vec<Draft> = Vec::new();

    for (i, li) in all.iter().enumerate() {
        let mut pts: Vec<(crate::exact::Rat, HomPoint)> = Vec::new();
        for (j, lj) in all.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some(p) = li.meet(lj) {
                if bbox.contains_hom(&p) {
                    pts.push((li.param(&p), p));
                }
            }
        }
        pts.sort_by(|a, b| a.0.cmp(&b.0));
        pts.dedup_by(|a, b| a.0 == b.0);
        if pts.len() < 2 {
            continue;
        }
        let ids: Vec<usize> = pts
            .into_iter()
            .map(|(_, p)| {
                *vertex_index.entry(p.clone()).or_insert_with(|| {
                    vertices.push(p);
                    vertices.len() - 1
                })
            })
            .collect();
        let d = li.direction();
        let back = (-d.0.clone(), -d.1.clone());
        for w in ids.windows(2) {
            drafts.push(Draft { origin: w[0], line: i, forward: true, dir: d.clone() });
            drafts.push(Draft { origin: w[1], line: i, forward: false, dir: back.clone() });
        }
    }

    let mut out: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (h, d) in drafts.iter().enumerate() {
        out[d.origin].push(h);
    }
    let mut pos = vec![0usize; drafts.len()];
    for list in out.iter_mut() {
        list.sort_by(|&a, &b| cmp_angle(&drafts[a].dir, &drafts[b].dir));
        for (k, &h) in list.iter().enumerate() {
            pos[h] = k;
        }
    }

    let mut half_edges: Vec<HalfEdge> = drafts
        .iter()
        .enumerate()
        .map(|(h, d)| HalfEdge {
            origin: d.origin,
            twin: h ^ 1,
            next: usize::MAX,
            face: usize::MAX,
            carrier: if d.line < n { Carrier::Input(d.line) } else { Carrier::Boundary },
        })
        .collect();
    for h in 0..half_edges.len() {
        let t = h ^ 1;
        let head = half_edges[t].origin;
        let list = &out[head];
        let k = (pos[t] + list.len() - 1) % list.len();
        half_edges[h].next = list[k];
    }

    let mut faces: Vec<Face> = Vec::new();
    for h in 0..half_edges.len() {
        if half_edges[h].face != usize::MAX {
            continue;
        }
        let f = faces.len();
        let mut bounded = true;
        let mut e = h;
        loop {
            half_edges[e].face = f;
            // Bottom side traversed towards −x bounds the outer face.
            if drafts[e].line == n && !drafts[e].forward {
                bounded = false;
            }
            e = half_edges[e].next;
            if e == h {
                break;
            }
        }
        faces.push(Face { edge: h, bounded });
    }

    let vertex_out = out.iter().map(|l| l[0]).collect();
    let mut arr = Arrangement {
        bbox: bbox.clone(),
        lines: all[..n].to_vec(),
        vertices,
        vertex_out,
        half_edges,
        faces,
        vertex_index,
        boundary_ring: Vec::new(),
        triangulated: false,
    };
    arr.index_boundary();
    Ok(arr)
}

impl Arrangement {
    fn index_boundary(&mut self) {
        let mut ring: Vec<(crate::exact::Rat, usize)> = (0..self.half_edges.len())
            .filter(|&h| {
                let e = &self.half_edges[h];
                e.carrier == Carrier::Boundary && self.faces[e.face].bounded
            })
            .map(|h| (self.bbox.perimeter_param(&self.vertices[self.half_edges[h].origin].to_exact()), h))
            .collect();
        ring.sort_by(|a, b| a.0.cmp(&b.0));
        self.boundary_ring = ring;
    }

    pub fn bbox(&self) -> &BBox {
        &self.bbox
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn is_triangulated(&self) -> bool {
        self.triangulated
    }

    pub fn vertex(&self, v: usize) -> &HomPoint {
        &self.vertices[v]
    }

    pub fn vertex_point(&self, v: usize) -> ExactPoint {
        self.vertices[v].to_exact()
    }

    pub fn find_vertex(&self, p: &HomPoint) -> Option<usize> {
        self.vertex_index.get(p).copied()
    }

    pub fn half_edge(&self, h: usize) -> &HalfEdge {
        &self.half_edges[h]
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn bounded_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(|&f| self.faces[f].bounded)
    }

    /// Half-edges of a face boundary in counter-clockwise order (clockwise
    /// for the outer face).
    pub fn face_cycle(&self, f: usize) -> Vec<usize> {
        let start = self.faces[f].edge;
        let mut cyc = vec![start];
        let mut e = self.half_edges[start].next;
        while e != start {
            cyc.push(e);
            e = self.half_edges[e].next;
        }
        cyc
    }

    pub fn face_vertex_ids(&self, f: usize) -> Vec<usize> {
        self.face_cycle(f).into_iter().map(|h| self.half_edges[h].origin).collect()
    }

    pub fn face_polygon(&self, f: usize) -> Vec<ExactPoint> {
        self.face_vertex_ids(f).into_iter().map(|v| self.vertex_point(v)).collect()
    }

    /// Outgoing half-edges of `v` in clockwise order.
    pub fn outgoing(&self, v: usize) -> Vec<usize> {
        let start = self.vertex_out[v];
        let mut res = vec![start];
        let mut e = self.half_edges[self.half_edges[start].twin].next;
        while e != start {
            res.push(e);
            e = self.half_edges[self.half_edges[e].twin].next;
        }
        res
    }

    pub fn faces_around(&self, v: usize) -> Vec<usize> {
        self.outgoing(v).into_iter().map(|h| self.half_edges[h].face).collect()
    }

    /// Distinct input lines through vertex `v`.
    pub fn input_lines_at(&self, v: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self
            .outgoing(v)
            .into_iter()
            .filter_map(|h| match self.half_edges[h].carrier {
                Carrier::Input(i) => Some(i),
                _ => None,
            })
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Input lines carrying at least one edge of face `f`.
    pub fn face_carriers(&self, f: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self
            .face_cycle(f)
            .into_iter()
            .filter_map(|h| match self.half_edges[h].carrier {
                Carrier::Input(i) => Some(i),
                _ => None,
            })
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Bounded face adjacent to the boundary at a boundary point that is not
    /// a vertex.
    pub(crate) fn boundary_face_at(&self, p: &ExactPoint) -> Option<usize> {
        let t = self.bbox.perimeter_param(p);
        let k = self.boundary_ring.partition_point(|(s, _)| *s <= t);
        let (_, h) = self.boundary_ring.get(k.checked_sub(1)?)?;
        Some(self.half_edges[*h].face)
    }

    /// Splits every bounded face into triangles by a fan from its
    /// lexicographically smallest corner. Diagonals carry [`Carrier::Support`].
    pub fn triangulate(&mut self) {
        if self.triangulated {
            return;
        }
        let nf = self.faces.len();
        for f in 0..nf {
            if !self.faces[f].bounded {
                continue;
            }
            let mut cyc = self.face_cycle(f);
            let m = cyc.len();
            if m <= 3 {
                continue;
            }
            let apex = (0..m)
                .min_by(|&a, &b| {
                    self.vertices[self.half_edges[cyc[a]].origin].cmp_xy(&self.vertices[self.half_edges[cyc[b]].origin])
                })
                .unwrap();
            cyc.rotate_left(apex);
            let vid: Vec<usize> = cyc.iter().map(|&h| self.half_edges[h].origin).collect();
            // diag[i] runs apex → v_i, its twin v_i → apex, for i in 2..m-1.
            let mut diag = vec![usize::MAX; m];
            for (i, d) in diag.iter_mut().enumerate().take(m - 1).skip(2) {
                let h = self.half_edges.len();
                self.half_edges.push(HalfEdge { origin: vid[0], twin: h + 1, next: 0, face: 0, carrier: Carrier::Support });
                self.half_edges.push(HalfEdge { origin: vid[i], twin: h, next: 0, face: 0, carrier: Carrier::Support });
                *d = h;
            }
            for t in 1..m - 1 {
                // Triangle (v0, v_t, v_{t+1}).
                let first = if t == 1 { cyc[0] } else { diag[t] };
                let second = cyc[t];
                let third = if t == m - 2 { cyc[m - 1] } else { diag[t + 1] + 1 };
                let face = if t == 1 {
                    f
                } else {
                    self.faces.push(Face { edge: first, bounded: true });
                    self.faces.len() - 1
                };
                self.faces[face].edge = first;
                for (a, b) in [(first, second), (second, third), (third, first)] {
                    self.half_edges[a].next = b;
                    self.half_edges[a].face = face;
                }
            }
        }
        self.triangulated = true;
    }

    fn orient_ids(&self, a: usize, b: usize, c: usize) -> i32 {
        let (p, q, r) = (&self.vertices[a], &self.vertices[b], &self.vertices[c]);
        let det = &p.x * (&q.y * &r.w - &q.w * &r.y) - &p.y * (&q.x * &r.w - &q.w * &r.x)
            + &p.w * (&q.x * &r.y - &q.y * &r.x);
        sign(&det)
    }

    /// Structural self-check: twin involution, `next` cycles partitioning the
    /// half-edges with consistent face labels, Euler's formula, simple convex
    /// bounded faces, and triangles after triangulation.
    pub fn audit(&self) -> Result<(), ArrangementError> {
        let fail = |m: String| Err(ArrangementError::Audit(m));
        let he = &self.half_edges;
        for (h, e) in he.iter().enumerate() {
            if e.twin == h || he[e.twin].twin != h {
                return fail(format!("twin of {h} is not an involution"));
            }
            if he[e.next].origin != he[e.twin].origin {
                return fail(format!("next of {h} does not start at its head"));
            }
            if he[e.next].face != e.face {
                return fail(format!("face label changes along next of {h}"));
            }
            if e.origin == he[e.twin].origin {
                return fail(format!("half-edge {h} is a loop"));
            }
        }
        let mut covered = 0;
        let mut outer = 0;
        for f in 0..self.faces.len() {
            let cyc = self.face_cycle(f);
            if cyc.len() > he.len() {
                return fail(format!("face {f} cycle does not close"));
            }
            if cyc.iter().any(|&h| he[h].face != f) {
                return fail(format!("face {f} cycle has foreign half-edges"));
            }
            covered += cyc.len();
            if !self.faces[f].bounded {
                outer += 1;
                continue;
            }
            let mut vs: Vec<usize> = cyc.iter().map(|&h| he[h].origin).collect();
            let m = vs.len();
            if m < 3 {
                return fail(format!("face {f} has {m} edges"));
            }
            if self.triangulated && m != 3 {
                return fail(format!("face {f} is not a triangle"));
            }
            for i in 0..m {
                if self.orient_ids(vs[i], vs[(i + 1) % m], vs[(i + 2) % m]) <= 0 {
                    return fail(format!("face {f} is not strictly convex"));
                }
            }
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != m {
                return fail(format!("face {f} boundary is not simple"));
            }
        }
        if covered != he.len() {
            return fail("next cycles do not partition the half-edges".into());
        }
        if outer != 1 {
            return fail(format!("{outer} unbounded faces"));
        }
        let (v, e, f) = (self.vertices.len() as i64, self.num_edges() as i64, self.faces.len() as i64);
        if v - e + f != 2 {
            return fail(format!("Euler characteristic {} (V={v}, E={e}, F={f})", v - e + f));
        }
        Ok(())
    }
}
