//! The recursive search driver shared by all problems.

use std::fmt::Debug;

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cost::{amplify, grover_find, AmplificationPolicy, QueryLedger};

/// Region of the parent decomposition a subproblem lives in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Region {
    Face(usize),
    Cell(usize),
    GridCell(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubproblemSpec {
    pub region: Region,
    /// Indices into the parent's object list.
    pub objects: Vec<usize>,
    /// Remaining target inside the region (disk depth); zero elsewhere.
    pub residual_target: u64,
    pub depth: usize,
}

impl SubproblemSpec {
    pub fn new(region: Region, objects: Vec<usize>) -> Self {
        SubproblemSpec { region, objects, residual_target: 0, depth: 0 }
    }

    pub fn size(&self) -> usize {
        self.objects.len()
    }
}

/// What a problem supplies to the driver.
pub trait ProblemAdapter: Sized {
    type Witness: Clone + Debug;
    type Split;

    fn size(&self) -> usize;

    /// Samples `k` objects and partitions the problem around them.
    fn decompose(&self, k: usize, rng: &mut ChaCha8Rng) -> Self::Split;

    fn subproblems(&self, split: &Self::Split) -> Vec<SubproblemSpec>;

    /// Solutions that are not interior to a single subproblem.
    fn span_check(&self, split: &Self::Split) -> Option<Self::Witness>;

    /// Exhaustive search; returns the witness and the operations spent.
    fn base_solve(&self) -> (Option<Self::Witness>, u64);

    fn restrict(&self, split: &Self::Split, sub: &SubproblemSpec) -> Self;

    fn verify(&self, w: &Self::Witness) -> bool;

    /// Samples thrown away because they were degenerate.
    fn redraws(&self, _split: &Self::Split) -> u32 {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RqsParams {
    pub n0: usize,
    pub epsilon: f64,
    pub delta: f64,
    pub c3: f64,
    pub alpha: f64,
    /// Sample size at the root.
    pub k: usize,
    /// Exhaustive search below this size at the root.
    pub base_threshold: usize,
    pub amplification: AmplificationPolicy,
    /// Fixed sample size at every level instead of the formula.
    pub k_override: Option<usize>,
    /// Fixed base-case threshold at every level instead of the formula.
    pub threshold_override: Option<usize>,
}

/// Parameters for an input of size `n`.
pub fn choose_params(n: usize, epsilon: f64, delta: f64, c3: f64) -> RqsParams {
    assert!(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
    let nf = (n.max(4)) as f64;
    let alpha = (2.0 * nf.ln() / (c3.ln() + nf.ln().ln())).sqrt();
    let mut p = RqsParams {
        n0: n,
        epsilon,
        delta,
        c3,
        alpha,
        k: 0,
        base_threshold: 0,
        amplification: AmplificationPolicy::new(epsilon),
        k_override: None,
        threshold_override: None,
    };
    p.k = p.sample_size(n);
    p.base_threshold = p.base_threshold_at(n);
    p
}

impl RqsParams {
    /// `m^{1/α}·δ·(ln m + ln 1/ε)` before rounding.
    pub fn k_formula(&self, m: usize) -> f64 {
        let mf = m.max(1) as f64;
        mf.powf(1.0 / self.alpha) * self.delta * (mf.ln() + (1.0 / self.epsilon).ln())
    }

    /// Sample size at a level of size `m`, clamped to `[2, m − 1]`.
    pub fn sample_size(&self, m: usize) -> usize {
        let k = self.k_override.unwrap_or_else(|| self.k_formula(m).ceil() as usize);
        k.min(m.saturating_sub(1)).max(2)
    }

    /// Sizes strictly below this are solved exhaustively.
    pub fn base_threshold_at(&self, m: usize) -> usize {
        self.threshold_override.unwrap_or_else(|| self.k_formula(m).ceil() as usize)
    }

    /// Largest subproblem size accepted without reporting Error.
    pub fn oversize_bound(&self, m: usize, k: usize) -> f64 {
        let mf = m as f64;
        mf / k as f64 * self.delta * (mf.ln() + (1.0 / self.epsilon).ln())
    }

    /// Fixed sample size and base threshold at every level.
    pub fn with_forced_split(mut self, k: usize, threshold: usize) -> Self {
        self.k_override = Some(k);
        self.threshold_override = Some(threshold);
        self.k = self.sample_size(self.n0);
        self.base_threshold = threshold;
        self
    }
}

#[derive(Clone, Debug)]
pub struct RqsResult<W> {
    pub decision: bool,
    pub witness: Option<W>,
    /// Cost under the Grover model.
    pub ledger: QueryLedger,
    /// Cost of the same run with every subproblem evaluated classically.
    pub baseline: QueryLedger,
    /// Amplification rounds beyond the first.
    pub retries: u32,
    pub exhausted: bool,
    pub max_depth: usize,
    pub redraws: u32,
}

impl<W> RqsResult<W> {
    pub fn map_witness<V>(self, f: impl FnOnce(W) -> V) -> RqsResult<V> {
        RqsResult {
            decision: self.decision,
            witness: self.witness.map(f),
            ledger: self.ledger,
            baseline: self.baseline,
            retries: self.retries,
            exhausted: self.exhausted,
            max_depth: self.max_depth,
            redraws: self.redraws,
        }
    }
}

struct Node<W> {
    witness: Option<W>,
    ledger: QueryLedger,
    baseline: QueryLedger,
    depth: usize,
    redraws: u32,
}

/// A subproblem exceeded the size bound; carries the work already spent.
struct Oversize {
    ledger: QueryLedger,
    baseline: QueryLedger,
}

fn ln_ceil(m: usize) -> u64 {
    (m.max(2) as f64).ln().ceil() as u64
}

fn base<A: ProblemAdapter>(a: &A, depth: usize) -> Node<A::Witness> {
    let (witness, ops) = a.base_solve();
    Node { witness, ledger: QueryLedger::classical(ops), baseline: QueryLedger::classical(ops), depth, redraws: 0 }
}

fn solve_rec<A: ProblemAdapter>(
    a: &A,
    params: &RqsParams,
    rng: &mut ChaCha8Rng,
    depth: usize,
) -> Result<Node<A::Witness>, Oversize> {
    let m = a.size();
    if m < params.base_threshold_at(m) || m < 3 {
        return Ok(base(a, depth));
    }
    let k = params.sample_size(m);
    let split = a.decompose(k, rng);
    let split_cost = (m as u64).saturating_mul((k * k) as u64).saturating_mul(ln_ceil(m));
    let mut ledger = QueryLedger::classical(split_cost);
    let mut baseline = ledger;
    let mut redraws = a.redraws(&split);
    if let Some(w) = a.span_check(&split) {
        return Ok(Node { witness: Some(w), ledger, baseline, depth, redraws });
    }
    let subs = a.subproblems(&split);
    let bound = params.oversize_bound(m, k);
    if subs.iter().any(|s| s.size() as f64 > bound) {
        return Err(Oversize { ledger, baseline });
    }
    let mut witnesses: Vec<Option<A::Witness>> = Vec::with_capacity(subs.len());
    let mut max_depth = depth;
    let found = grover_find(
        &subs,
        |_, s, child_ledger| {
            let child = a.restrict(&split, s);
            // A child no smaller than its parent would recurse forever.
            let node = if child.size() >= m { base(&child, depth + 1) } else { solve_rec(&child, params, rng, depth + 1)? };
            child_ledger.merge(&node.ledger);
            baseline.merge(&node.baseline);
            max_depth = max_depth.max(node.depth);
            redraws += node.redraws;
            let hit = node.witness.is_some();
            witnesses.push(node.witness);
            Ok(hit)
        },
        &mut ledger,
    );
    match found {
        Ok(idx) => {
            let witness = idx.and_then(|i| witnesses[i].take());
            Ok(Node { witness, ledger, baseline, depth: max_depth, redraws })
        }
        Err(Oversize { ledger: l, baseline: b }) => {
            ledger.merge(&l);
            baseline.merge(&b);
            Err(Oversize { ledger, baseline })
        }
    }
}

/// Recursive search with amplification at the root: an oversized
/// subproblem anywhere aborts the attempt and a fresh sample is drawn.
pub fn rqs_solve<A: ProblemAdapter>(adapter: &A, params: &RqsParams, rng: &mut ChaCha8Rng) -> RqsResult<A::Witness> {
    let mut ledger = QueryLedger::default();
    let mut baseline = QueryLedger::default();
    let mut out: Option<Node<A::Witness>> = None;
    let mut attempts = 0u32;
    let res = amplify(&params.amplification, &mut ledger, |attempt, spent| {
        attempts = attempt + 1;
        match solve_rec(adapter, params, rng, 0) {
            Ok(node) => {
                out = Some(node);
                Some(())
            }
            Err(Oversize { ledger: l, baseline: b }) => {
                // Work spent on failed attempts is still paid.
                spent.merge(&l);
                baseline.merge(&b);
                None
            }
        }
    });
    baseline.amplification_invocations = ledger.amplification_invocations;
    match (res, out) {
        (Ok(()), Some(node)) => {
            ledger.merge(&node.ledger);
            baseline.merge(&node.baseline);
            RqsResult {
                decision: node.witness.is_some(),
                witness: node.witness,
                ledger,
                baseline,
                retries: attempts.saturating_sub(1),
                exhausted: false,
                max_depth: node.depth,
                redraws: node.redraws,
            }
        }
        _ => RqsResult {
            decision: false,
            witness: None,
            ledger,
            baseline,
            retries: attempts.saturating_sub(1),
            exhausted: true,
            max_depth: 0,
            redraws: 0,
        },
    }
}

/// Checks a witness with the problem's own solution predicate.
pub fn verify_witness<A: ProblemAdapter>(adapter: &A, w: &A::Witness) -> bool {
    adapter.verify(w)
}
