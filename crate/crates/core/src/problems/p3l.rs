use std::collections::HashMap;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::sample_indices;
use crate::arrangement::{build_arrangement, enclosing_bbox, line_subproblems, Arrangement, Carrier, Walker};
use crate::exact::{ExactLine, ExactPoint, HomPoint, IntLine};
use crate::rqs::{ProblemAdapter, Region, SubproblemSpec};

/// Three input lines through a common point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Concurrence {
    pub point: ExactPoint,
    pub lines: [usize; 3],
}

/// Is there a point on at least three of the lines?
#[derive(Clone, Debug)]
pub struct P3lAdapter {
    lines: Arc<Vec<ExactLine>>,
    ints: Arc<Vec<IntLine>>,
    ids: Vec<usize>,
}

pub struct P3lSplit {
    pub arrangement: Arrangement,
    /// Local indices of the sampled lines, in arrangement input order.
    pub sample: Vec<usize>,
    subs: Vec<SubproblemSpec>,
    spanning: Option<Concurrence>,
}

pub fn p3l_adapter(lines: Vec<ExactLine>) -> P3lAdapter {
    let ints = lines.iter().map(IntLine::from_exact).collect();
    let ids = (0..lines.len()).collect();
    P3lAdapter { lines: Arc::new(lines), ints: Arc::new(ints), ids }
}

impl P3lAdapter {
    pub fn lines(&self) -> Vec<ExactLine> {
        self.ids.iter().map(|&i| self.lines[i].clone()).collect()
    }

    fn witness(&self, p: &HomPoint, local: &[usize]) -> Concurrence {
        let mut g: Vec<usize> = local.iter().map(|&i| self.ids[i]).collect();
        g.sort_unstable();
        g.dedup();
        Concurrence { point: p.to_exact(), lines: [g[0], g[1], g[2]] }
    }
}

/// Walks every unsampled line and looks for three lines through one
/// triangulation vertex or through one point of a triangulation edge.
fn spanning_concurrence(arr: &Arrangement, ints: &[&IntLine], sampled: &[bool]) -> Option<(HomPoint, Vec<usize>)> {
    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); arr.num_vertices()];
    let mut crossers: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut contained: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut walker = Walker::new(arr);
    for (i, l) in ints.iter().enumerate() {
        if sampled[i] {
            continue;
        }
        let t = walker.trace(l);
        for v in t.touched_vertices {
            at_vertex[v].push(i);
        }
        for e in t.crossed_edges {
            crossers.entry(e).or_default().push(i);
        }
        for e in t.contained_edges {
            contained.entry(e).or_default().push(i);
        }
    }
    let sample_ids: Vec<usize> = (0..ints.len()).filter(|&i| sampled[i]).collect();
    for v in 0..arr.num_vertices() {
        let carried = arr.input_lines_at(v);
        if carried.len() + at_vertex[v].len() >= 3 {
            let mut all: Vec<usize> = carried.iter().map(|&c| sample_ids[c]).collect();
            all.extend(&at_vertex[v]);
            return Some((arr.vertex(v).clone(), all));
        }
    }
    let mut edges: Vec<usize> = crossers.keys().chain(contained.keys()).copied().collect();
    edges.sort_unstable();
    edges.dedup();
    for e in edges {
        let h = arr.half_edge(e);
        let own = match h.carrier {
            Carrier::Input(c) => vec![sample_ids[c]],
            _ => Vec::new(),
        };
        let inside = contained.get(&e).cloned().unwrap_or_default();
        let cross = crossers.get(&e).cloned().unwrap_or_default();
        if own.len() + inside.len() + cross.len() < 3 {
            continue;
        }
        let (u, v) = (arr.vertex(h.origin), arr.vertex(arr.half_edge(h.twin).origin));
        let support = IntLine::through(u, v);
        let mut by_point: HashMap<HomPoint, Vec<usize>> = HashMap::new();
        for &c in &cross {
            if let Some(p) = support.meet(ints[c]) {
                by_point.entry(p).or_default().push(c);
            }
        }
        let base = own.len() + inside.len();
        // A line lying along the edge meets every crosser.
        let mut best: Option<(HomPoint, Vec<usize>)> = None;
        for (p, group) in by_point {
            if base + group.len() >= 3 {
                let mut all = own.clone();
                all.extend(&inside);
                all.extend(group);
                if best.as_ref().is_none_or(|(q, _)| p.cmp_xy(q).is_lt()) {
                    best = Some((p, all));
                }
            }
        }
        if let Some(b) = best {
            return Some(b);
        }
    }
    None
}

impl ProblemAdapter for P3lAdapter {
    type Witness = Concurrence;
    type Split = P3lSplit;

    fn size(&self) -> usize {
        self.ids.len()
    }

    fn decompose(&self, k: usize, rng: &mut ChaCha8Rng) -> P3lSplit {
        let n = self.ids.len();
        let local = self.lines();
        let sample = sample_indices(rng, n, k);
        let sampled_lines: Vec<ExactLine> = sample.iter().map(|&i| local[i].clone()).collect();
        let bbox = enclosing_bbox(&local);
        let mut arr = build_arrangement(&sampled_lines, &bbox).expect("input lines are distinct");
        arr.triangulate();
        let mut sampled = vec![false; n];
        for &i in &sample {
            sampled[i] = true;
        }
        let ints: Vec<&IntLine> = self.ids.iter().map(|&i| &self.ints[i]).collect();
        let spanning = spanning_concurrence(&arr, &ints, &sampled).map(|(p, l)| self.witness(&p, &l));
        let subs = if spanning.is_some() {
            Vec::new()
        } else {
            let pairs: Vec<(usize, usize)> = sample.iter().enumerate().map(|(pos, &i)| (i, pos)).collect();
            line_subproblems(&arr, &local, &pairs)
                .into_iter()
                .map(|f| SubproblemSpec::new(Region::Face(f.face), f.members))
                .collect()
        };
        P3lSplit { arrangement: arr, sample, subs, spanning }
    }

    fn subproblems(&self, split: &P3lSplit) -> Vec<SubproblemSpec> {
        split.subs.clone()
    }

    fn span_check(&self, split: &P3lSplit) -> Option<Concurrence> {
        split.spanning.clone()
    }

    fn base_solve(&self) -> (Option<Concurrence>, u64) {
        let s = self.ids.len();
        let mut seen: HashMap<HomPoint, Vec<usize>> = HashMap::new();
        let mut found: Option<(HomPoint, Vec<usize>)> = None;
        for i in 0..s {
            for j in i + 1..s {
                if let Some(p) = self.ints[self.ids[i]].meet(&self.ints[self.ids[j]]) {
                    let e = seen.entry(p.clone()).or_default();
                    for x in [i, j] {
                        if !e.contains(&x) {
                            e.push(x);
                        }
                    }
                    if e.len() >= 3 && found.as_ref().is_none_or(|(q, _)| p.cmp_xy(q).is_lt()) {
                        found = Some((p, e.clone()));
                    }
                }
            }
        }
        let ops = (s * s.saturating_sub(1) / 2) as u64;
        (found.map(|(p, l)| self.witness(&p, &l)), ops)
    }

    fn restrict(&self, _split: &P3lSplit, sub: &SubproblemSpec) -> Self {
        P3lAdapter {
            lines: Arc::clone(&self.lines),
            ints: Arc::clone(&self.ints),
            ids: sub.objects.iter().map(|&i| self.ids[i]).collect(),
        }
    }

    fn verify(&self, w: &Concurrence) -> bool {
        let [a, b, c] = w.lines;
        a != b
            && b != c
            && a != c
            && [a, b, c].iter().all(|&i| i < self.lines.len() && self.lines[i].contains(&w.point))
    }
}
