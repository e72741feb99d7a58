use std::fmt::Debug;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::sample_indices;
use crate::arrangement::{grid_cells, GridArrangement, GridCell, HyperplaneId};
use crate::exact::Rat;
use crate::rqs::{ProblemAdapter, Region, SubproblemSpec};

/// A search over tuples with one hyperplane index per axis.
pub trait GridProblem {
    type Witness: Clone + Debug;

    /// Number of hyperplanes on each axis.
    fn axis_lens(&self) -> Vec<usize>;

    fn check(&self, tuple: &[usize]) -> Option<Self::Witness>;

    fn verify(&self, w: &Self::Witness) -> bool;

    /// Operations charged per call to [`GridProblem::check`].
    fn check_cost(&self) -> u64 {
        1
    }
}

/// Recursive search over the product of hyperplane index ranges. A
/// subproblem is a box of consecutive indices; its open bounds are `lo` and
/// `hi` on each axis, with `-1` and the axis length standing for the outer
/// rectangle.
#[derive(Debug)]
pub struct GridAdapter<P> {
    problem: Arc<P>,
    ranges: Vec<(i64, i64)>,
}

impl<P> Clone for GridAdapter<P> {
    fn clone(&self) -> Self {
        GridAdapter { problem: Arc::clone(&self.problem), ranges: self.ranges.clone() }
    }
}

pub struct GridSplit {
    pub cells: Vec<GridCell>,
    pub sample: Vec<HyperplaneId>,
    /// Sampled coordinates and real range bounds on each axis.
    pub cuts: Vec<Vec<usize>>,
}

pub fn grid_adapter<P: GridProblem>(problem: P) -> GridAdapter<P> {
    let ranges = problem.axis_lens().iter().map(|&n| (-1, n as i64)).collect();
    GridAdapter { problem: Arc::new(problem), ranges }
}

impl<P: GridProblem> GridAdapter<P> {
    pub fn problem(&self) -> &P {
        &self.problem
    }

    pub fn ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    fn members(&self) -> Vec<Vec<i64>> {
        self.ranges.iter().map(|&(lo, hi)| (lo + 1..hi).collect()).collect()
    }

    /// Range bounds that are actual hyperplanes.
    fn real_bounds(&self, axis: usize) -> Vec<usize> {
        let n = self.problem.axis_lens()[axis] as i64;
        let (lo, hi) = self.ranges[axis];
        [lo, hi].into_iter().filter(|&c| c >= 0 && c < n).map(|c| c as usize).collect()
    }

    /// First tuple in lexicographic order passing the check.
    fn search(&self, cands: &[Vec<usize>]) -> (Option<P::Witness>, u64) {
        let total: usize = cands.iter().map(Vec::len).product();
        let mut idx = vec![0usize; cands.len()];
        let mut tuple = vec![0usize; cands.len()];
        for count in 0..total {
            for (a, &i) in idx.iter().enumerate() {
                tuple[a] = cands[a][i];
            }
            if let Some(w) = self.problem.check(&tuple) {
                return (Some(w), (count as u64 + 1) * self.problem.check_cost());
            }
            for a in (0..idx.len()).rev() {
                idx[a] += 1;
                if idx[a] < cands[a].len() {
                    break;
                }
                idx[a] = 0;
            }
        }
        (None, total as u64 * self.problem.check_cost())
    }
}

impl<P: GridProblem> ProblemAdapter for GridAdapter<P> {
    type Witness = P::Witness;
    type Split = GridSplit;

    fn size(&self) -> usize {
        self.ranges.iter().map(|&(lo, hi)| (hi - lo - 1).max(0) as usize).sum()
    }

    fn decompose(&self, k: usize, rng: &mut ChaCha8Rng) -> GridSplit {
        let members = self.members();
        let mut flat: Vec<HyperplaneId> = Vec::with_capacity(self.size());
        for (axis, m) in members.iter().enumerate() {
            flat.extend((0..m.len()).map(|index| HyperplaneId { axis, index }));
        }
        let sample: Vec<HyperplaneId> = sample_indices(rng, flat.len(), k).into_iter().map(|i| flat[i]).collect();
        let grid = GridArrangement { axes: members.clone(), bounds: self.ranges.clone() };
        let cells = grid_cells(&grid, &sample);
        let cuts = (0..members.len())
            .map(|axis| {
                let mut c = self.real_bounds(axis);
                c.extend(sample.iter().filter(|h| h.axis == axis).map(|h| members[axis][h.index] as usize));
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        GridSplit { cells, sample, cuts }
    }

    fn subproblems(&self, split: &GridSplit) -> Vec<SubproblemSpec> {
        let mut offset = vec![0usize; self.ranges.len()];
        for a in 1..self.ranges.len() {
            let (lo, hi) = self.ranges[a - 1];
            offset[a] = offset[a - 1] + (hi - lo - 1).max(0) as usize;
        }
        split
            .cells
            .iter()
            .map(|c| {
                let objects = c.crossing.iter().map(|h| offset[h.axis] + h.index).collect();
                SubproblemSpec::new(Region::GridCell(c.slabs.clone()), objects)
            })
            .collect()
    }

    /// Every vertex of the sampled grid, range bounds included.
    fn span_check(&self, split: &GridSplit) -> Option<P::Witness> {
        self.search(&split.cuts).0
    }

    fn base_solve(&self) -> (Option<P::Witness>, u64) {
        let lens = self.problem.axis_lens();
        let cands: Vec<Vec<usize>> = self
            .ranges
            .iter()
            .zip(&lens)
            .map(|(&(lo, hi), &n)| (lo.max(0)..=hi.min(n as i64 - 1)).map(|c| c as usize).collect())
            .collect();
        self.search(&cands)
    }

    fn restrict(&self, split: &GridSplit, sub: &SubproblemSpec) -> Self {
        let Region::GridCell(slabs) = &sub.region else { unreachable!("grid subproblems are grid cells") };
        let cell = split.cells.iter().find(|c| &c.slabs == slabs).expect("subproblem comes from this split");
        GridAdapter { problem: Arc::clone(&self.problem), ranges: cell.lo.iter().zip(&cell.hi).map(|(&l, &h)| (l, h)).collect() }
    }

    fn verify(&self, w: &P::Witness) -> bool {
        self.problem.verify(w)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntervalError {
    #[error("interval {0} has its left end after its right end")]
    Reversed(usize),
    #[error("intervals {0} and {1} overlap or are out of order")]
    NotDisjointSorted(usize, usize),
    #[error("P must contain at least one interval")]
    EmptyP,
}

/// Two sets of pairwise-disjoint closed intervals, each sorted.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntervalInstance {
    pub p: Vec<(Rat, Rat)>,
    pub q: Vec<(Rat, Rat)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalWitness {
    pub translation: Rat,
    /// Index into the sorted endpoints of `q` and of `p`.
    pub q_endpoint: usize,
    pub p_endpoint: usize,
}

fn check_sorted(set: &[(Rat, Rat)]) -> Result<(), IntervalError> {
    for (i, (a, b)) in set.iter().enumerate() {
        if a > b {
            return Err(IntervalError::Reversed(i));
        }
        if i > 0 && set[i - 1].1 >= *a {
            return Err(IntervalError::NotDisjointSorted(i - 1, i));
        }
    }
    Ok(())
}

impl IntervalInstance {
    pub fn new(p: Vec<(Rat, Rat)>, q: Vec<(Rat, Rat)>) -> Result<Self, IntervalError> {
        if p.is_empty() {
            return Err(IntervalError::EmptyP);
        }
        check_sorted(&p)?;
        check_sorted(&q)?;
        Ok(IntervalInstance { p, q })
    }

    fn endpoints(set: &[(Rat, Rat)]) -> Vec<Rat> {
        set.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect()
    }

    pub fn p_endpoints(&self) -> Vec<Rat> {
        Self::endpoints(&self.p)
    }

    pub fn q_endpoints(&self) -> Vec<Rat> {
        Self::endpoints(&self.q)
    }
}

/// Is every interval of `P + t` inside some interval of `Q`?
pub fn check_translation(inst: &IntervalInstance, t: &Rat) -> bool {
    let mut j = 0;
    for (a, b) in &inst.p {
        let (a, b) = (a + t, b + t);
        while j < inst.q.len() && inst.q[j].1 < b {
            j += 1;
        }
        if j == inst.q.len() || inst.q[j].0 > a {
            return false;
        }
    }
    true
}

/// Axis 0 holds the endpoints of `Q`, axis 1 those of `P`; a grid vertex
/// aligns one with the other.
#[derive(Clone, Debug)]
pub struct IntervalGrid {
    pub inst: IntervalInstance,
    q_ends: Vec<Rat>,
    p_ends: Vec<Rat>,
}

impl GridProblem for IntervalGrid {
    type Witness = IntervalWitness;

    fn axis_lens(&self) -> Vec<usize> {
        vec![self.q_ends.len(), self.p_ends.len()]
    }

    fn check(&self, tuple: &[usize]) -> Option<IntervalWitness> {
        let t = &self.q_ends[tuple[0]] - &self.p_ends[tuple[1]];
        check_translation(&self.inst, &t).then_some(IntervalWitness { translation: t, q_endpoint: tuple[0], p_endpoint: tuple[1] })
    }

    fn verify(&self, w: &IntervalWitness) -> bool {
        check_translation(&self.inst, &w.translation)
    }

    fn check_cost(&self) -> u64 {
        (self.inst.p.len() + self.inst.q.len()) as u64
    }
}

pub type IntervalAdapter = GridAdapter<IntervalGrid>;

pub fn interval_adapter(inst: &IntervalInstance) -> IntervalAdapter {
    grid_adapter(IntervalGrid { q_ends: inst.q_endpoints(), p_ends: inst.p_endpoints(), inst: inst.clone() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
}

pub type PairPredicate = Arc<dyn Fn(usize, usize) -> bool + Send + Sync>;

/// `n` elements and a predicate on ordered pairs whose evaluation costs
/// `⌈n^β⌉` operations.
#[derive(Clone)]
pub struct PairSearchInstance {
    pub n: usize,
    pub beta: f64,
    pub predicate: PairPredicate,
}

impl Debug for PairSearchInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PairSearchInstance").field("n", &self.n).field("beta", &self.beta).finish_non_exhaustive()
    }
}

impl PairSearchInstance {
    pub fn new(n: usize, beta: f64, predicate: impl Fn(usize, usize) -> bool + Send + Sync + 'static) -> Self {
        PairSearchInstance { n, beta, predicate: Arc::new(predicate) }
    }
}

impl GridProblem for PairSearchInstance {
    type Witness = PairWitness;

    fn axis_lens(&self) -> Vec<usize> {
        vec![self.n, self.n]
    }

    fn check(&self, t: &[usize]) -> Option<PairWitness> {
        (self.predicate)(t[0], t[1]).then_some(PairWitness { i: t[0], j: t[1] })
    }

    fn verify(&self, w: &PairWitness) -> bool {
        w.i < self.n && w.j < self.n && (self.predicate)(w.i, w.j)
    }

    fn check_cost(&self) -> u64 {
        (self.n.max(1) as f64).powf(self.beta).ceil() as u64
    }
}

pub type PairAdapter = GridAdapter<PairSearchInstance>;

pub fn pair_adapter(inst: &PairSearchInstance) -> PairAdapter {
    grid_adapter(inst.clone())
}

pub type TuplePredicate = Arc<dyn Fn(&[usize]) -> bool + Send + Sync>;

/// `d`-tuples of `n` elements, one axis per position.
#[derive(Clone)]
pub struct TupleSearchInstance {
    pub n: usize,
    pub d: usize,
    pub predicate: TuplePredicate,
}

impl Debug for TupleSearchInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TupleSearchInstance").field("n", &self.n).field("d", &self.d).finish_non_exhaustive()
    }
}

impl GridProblem for TupleSearchInstance {
    type Witness = Vec<usize>;

    fn axis_lens(&self) -> Vec<usize> {
        vec![self.n; self.d]
    }

    fn check(&self, t: &[usize]) -> Option<Vec<usize>> {
        (self.predicate)(t).then(|| t.to_vec())
    }

    fn verify(&self, w: &Vec<usize>) -> bool {
        w.len() == self.d && w.iter().all(|&x| x < self.n) && (self.predicate)(w)
    }
}

pub fn tuple_adapter(inst: &TupleSearchInstance) -> GridAdapter<TupleSearchInstance> {
    grid_adapter(inst.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rqs::{choose_params, rqs_solve};
    use rand::{Rng, SeedableRng};

    fn iv(v: &[(i64, i64)]) -> Vec<(Rat, Rat)> {
        v.iter().map(|&(a, b)| (Rat::from_int(a), Rat::from_int(b))).collect()
    }

    fn params(n: usize) -> crate::rqs::RqsParams {
        choose_params(n, 0.1, 2.0, std::f64::consts::E)
    }

    /// All endpoint alignments.
    fn oracle(inst: &IntervalInstance) -> bool {
        inst.q_endpoints().iter().any(|q| inst.p_endpoints().iter().any(|p| check_translation(inst, &(q - p))))
    }

    #[test]
    fn translation_examples() {
        let inst = IntervalInstance::new(iv(&[(0, 1)]), iv(&[(5, 7)])).unwrap();
        assert!(check_translation(&inst, &Rat::from_int(5)));
        assert!(check_translation(&inst, &Rat::from_int(6)));
        assert!(!check_translation(&inst, &Rat::new(13, 2)));
        let r = rqs_solve(&interval_adapter(&inst), &params(6), &mut ChaCha8Rng::seed_from_u64(0));
        assert!(r.decision);
    }

    #[test]
    fn gap_mismatch_no() {
        let inst = IntervalInstance::new(iv(&[(0, 1), (2, 3)]), iv(&[(0, 1), (3, 4)])).unwrap();
        assert!(!oracle(&inst));
        let r = rqs_solve(&interval_adapter(&inst), &params(8), &mut ChaCha8Rng::seed_from_u64(0));
        assert!(!r.decision);
    }

    #[test]
    fn identical_sets_zero_translation() {
        let inst = IntervalInstance::new(iv(&[(0, 1), (4, 6)]), iv(&[(0, 1), (4, 6)])).unwrap();
        assert!(check_translation(&inst, &Rat::zero()));
    }

    #[test]
    fn invalid_sets_rejected() {
        assert_eq!(IntervalInstance::new(iv(&[(0, 2), (1, 3)]), vec![]), Err(IntervalError::NotDisjointSorted(0, 1)));
        assert_eq!(IntervalInstance::new(iv(&[(2, 1)]), vec![]), Err(IntervalError::Reversed(0)));
    }

    fn random_intervals(rng: &mut ChaCha8Rng, count: usize, span: i64) -> Vec<(Rat, Rat)> {
        let mut out = Vec::new();
        let mut x = rng.gen_range(0..span);
        for _ in 0..count {
            let len = rng.gen_range(0..span);
            out.push((Rat::from_int(x), Rat::from_int(x + len)));
            x += len + rng.gen_range(1..span);
        }
        out
    }

    #[test]
    fn forced_recursion_matches_alignment_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let p = params(40).with_forced_split(5, 6);
        let mut yes = 0;
        for round in 0..40u64 {
            let q = random_intervals(&mut rng, 12, 6);
            // Half of the rounds plant P inside Q.
            let pset = if round % 2 == 0 {
                let shift = Rat::from_int(rng.gen_range(-20..20));
                q.iter().step_by(3).map(|(a, b)| (a - &shift, b - &shift)).collect()
            } else {
                random_intervals(&mut rng, 4, 4)
            };
            let inst = IntervalInstance::new(pset, q).unwrap();
            let expect = oracle(&inst);
            yes += expect as usize;
            let r = rqs_solve(&interval_adapter(&inst), &p, &mut ChaCha8Rng::seed_from_u64(round));
            assert_eq!(r.decision, expect, "round {round}");
            if let Some(w) = &r.witness {
                assert!(check_translation(&inst, &w.translation));
            }
        }
        assert!(yes >= 20);
    }

    #[test]
    fn planted_pair_found() {
        let inst = PairSearchInstance::new(10, 0.0, |i, j| (i, j) == (3, 7));
        let r = rqs_solve(&pair_adapter(&inst), &params(20), &mut ChaCha8Rng::seed_from_u64(0));
        assert_eq!(r.witness, Some(PairWitness { i: 3, j: 7 }));
        let p = params(200).with_forced_split(6, 8);
        let inst = PairSearchInstance::new(100, 0.0, |i, j| (i, j) == (31, 77));
        for seed in 0..5 {
            let r = rqs_solve(&pair_adapter(&inst), &p, &mut ChaCha8Rng::seed_from_u64(seed));
            assert_eq!(r.witness, Some(PairWitness { i: 31, j: 77 }));
            assert!(r.max_depth >= 1);
        }
    }

    #[test]
    fn never_true_pair_no() {
        let inst = PairSearchInstance::new(30, 0.0, |_, _| false);
        let r = rqs_solve(&pair_adapter(&inst), &params(60).with_forced_split(5, 6), &mut ChaCha8Rng::seed_from_u64(1));
        assert!(!r.decision && !r.exhausted);
    }

    #[test]
    fn triple_search_in_three_dimensions() {
        let inst = TupleSearchInstance { n: 20, d: 3, predicate: Arc::new(|t: &[usize]| t == [4, 15, 9]) };
        let r = rqs_solve(&tuple_adapter(&inst), &params(60).with_forced_split(6, 6), &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(r.witness, Some(vec![4, 15, 9]));
    }

    #[test]
    fn subproblems_partition_unsampled_hyperplanes() {
        let inst = PairSearchInstance::new(30, 0.0, |_, _| false);
        let a = pair_adapter(&inst);
        let split = a.decompose(6, &mut ChaCha8Rng::seed_from_u64(4));
        let subs = a.subproblems(&split);
        for s in &subs {
            let child = a.restrict(&split, s);
            assert_eq!(child.size(), s.size());
        }
    }
}
