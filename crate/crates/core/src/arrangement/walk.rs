use crate::exact::{ExactLine, HomPoint, IntLine};

use super::bbox::boundary_hits;
use super::dcel::Arrangement;

/// Per-face subproblem: a bounded face and the objects meeting its closure
/// beyond a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSubproblem {
    pub face: usize,
    pub members: Vec<usize>,
}

/// What a single line does to the arrangement.
#[derive(Clone, Debug, Default)]
pub(crate) struct LineTrace {
    pub faces: Vec<usize>,
    pub touched_vertices: Vec<usize>,
    /// Canonical half-edges (the smaller id of the pair) crossed in their
    /// relative interior.
    pub crossed_edges: Vec<usize>,
    pub contained_edges: Vec<usize>,
}

/// Reusable stamp arrays so that walking many lines costs nothing per face
/// that is not visited.
pub(crate) struct Walker<'a> {
    arr: &'a Arrangement,
    stamp: u32,
    face_seen: Vec<u32>,
    sign_at: Vec<u32>,
    sign: Vec<i8>,
    touched: Vec<u32>,
    edge_seen: Vec<u32>,
}

impl<'a> Walker<'a> {
    pub fn new(arr: &'a Arrangement) -> Self {
        Walker {
            arr,
            stamp: 0,
            face_seen: vec![0; arr.num_faces()],
            sign_at: vec![0; arr.num_vertices()],
            sign: vec![0; arr.num_vertices()],
            touched: vec![0; arr.num_vertices()],
            edge_seen: vec![0; 2 * arr.num_edges()],
        }
    }

    fn side(&mut self, line: &IntLine, v: usize) -> i8 {
        if self.sign_at[v] != self.stamp {
            self.sign_at[v] = self.stamp;
            self.sign[v] = line.side(self.arr.vertex(v)) as i8;
        }
        self.sign[v]
    }

    fn push_face(&mut self, f: usize, stack: &mut Vec<usize>) {
        if self.arr.face(f).bounded && self.face_seen[f] != self.stamp {
            self.face_seen[f] = self.stamp;
            stack.push(f);
        }
    }

    /// Faces whose closure meets `line` in more than one point, found by
    /// walking from where the line enters the bounding box.
    pub fn trace(&mut self, line: &IntLine) -> LineTrace {
        self.stamp += 1;
        let mut out = LineTrace::default();
        let hits = boundary_hits(line, self.arr.bbox());
        if hits.len() < 2 {
            return out;
        }
        let mut stack = Vec::new();
        let entry = &hits[0];
        match self.arr.find_vertex(entry) {
            Some(v) => {
                for f in self.arr.faces_around(v) {
                    self.push_face(f, &mut stack);
                }
            }
            None => {
                if let Some(f) = self.arr.boundary_face_at(&entry.to_exact()) {
                    self.push_face(f, &mut stack);
                }
            }
        }
        while let Some(f) = stack.pop() {
            let cyc = self.arr.face_cycle(f);
            let signs: Vec<i8> = cyc.iter().map(|&h| self.side(line, self.arr.half_edge(h).origin)).collect();
            let pos = signs.iter().any(|&s| s > 0);
            let neg = signs.iter().any(|&s| s < 0);
            let zeros = signs.iter().filter(|&&s| s == 0).count();
            if !((pos && neg) || zeros >= 2) {
                continue;
            }
            out.faces.push(f);
            let m = cyc.len();
            for i in 0..m {
                let h = cyc[i];
                let (su, sv) = (signs[i], signs[(i + 1) % m]);
                let twin = self.arr.half_edge(h).twin;
                let key = h.min(twin);
                if su * sv < 0 || (su == 0 && sv == 0) {
                    if self.edge_seen[key] != self.stamp {
                        self.edge_seen[key] = self.stamp;
                        if su == 0 {
                            out.contained_edges.push(key);
                        } else {
                            out.crossed_edges.push(key);
                        }
                    }
                    let g = self.arr.half_edge(twin).face;
                    self.push_face(g, &mut stack);
                }
                if su == 0 {
                    let v = self.arr.half_edge(h).origin;
                    if self.touched[v] != self.stamp {
                        self.touched[v] = self.stamp;
                        out.touched_vertices.push(v);
                        for g in self.arr.faces_around(v) {
                            self.push_face(g, &mut stack);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Closure of a convex face meets the line in more than one point.
pub fn line_hits_face(face: &[HomPoint], line: &IntLine) -> bool {
    let mut pos = false;
    let mut neg = false;
    let mut zeros = 0;
    for p in face {
        match line.side(p) {
            1 => pos = true,
            -1 => neg = true,
            _ => zeros += 1,
        }
    }
    (pos && neg) || zeros >= 2
}

/// Subproblems by exhaustive face × object testing.
pub fn subproblems_of<T>(
    arr: &Arrangement,
    objects: &[T],
    hits: impl Fn(&[HomPoint], &T) -> bool,
) -> Vec<FaceSubproblem> {
    arr.bounded_faces()
        .map(|f| {
            let poly: Vec<HomPoint> = arr.face_vertex_ids(f).into_iter().map(|v| arr.vertex(v).clone()).collect();
            let members = (0..objects.len()).filter(|&i| hits(&poly, &objects[i])).collect();
            FaceSubproblem { face: f, members }
        })
        .collect()
}

/// Per bounded face, the lines (indices into `lines`) meeting its closure in
/// more than a point. Lines that are input lines of `arr` may be listed in
/// `as_input` as `(line index, input index)` pairs; they are assigned through
/// edge carriers instead of being walked.
pub fn line_subproblems(arr: &Arrangement, lines: &[ExactLine], as_input: &[(usize, usize)]) -> Vec<FaceSubproblem> {
    let mut per_face: Vec<Vec<usize>> = vec![Vec::new(); arr.num_faces()];
    let mut is_input = vec![false; lines.len()];
    let mut by_input = vec![usize::MAX; arr.num_lines()];
    for &(li, ii) in as_input {
        is_input[li] = true;
        by_input[ii] = li;
    }
    for f in arr.bounded_faces() {
        for c in arr.face_carriers(f) {
            if by_input[c] != usize::MAX {
                per_face[f].push(by_input[c]);
            }
        }
    }
    let mut walker = Walker::new(arr);
    for (i, l) in lines.iter().enumerate() {
        if is_input[i] {
            continue;
        }
        for f in walker.trace(&IntLine::from_exact(l)).faces {
            per_face[f].push(i);
        }
    }
    arr.bounded_faces()
        .map(|f| {
            let mut members = std::mem::take(&mut per_face[f]);
            members.sort_unstable();
            FaceSubproblem { face: f, members }
        })
        .collect()
}
