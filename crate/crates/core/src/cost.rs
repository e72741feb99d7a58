//! Query accounting for simulated Grover search and amplitude amplification.
//!
//! Nothing quantum is simulated here. Every search is answered by a plain
//! classical scan and the ledger is charged what the quantum algorithm would
//! have cost: `⌈√t⌉` queries for a search over `t` items, with the work done
//! per item scaled by `⌈√t⌉/t`.

use std::ops::{Add, AddAssign};

use num_integer::Roots;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QueryLedger {
    pub classical_ops: u64,
    pub grover_queries: u64,
    pub amplification_invocations: u64,
}

impl QueryLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn classical(ops: u64) -> Self {
        QueryLedger { classical_ops: ops, ..Self::default() }
    }

    pub fn charge_classical(&mut self, ops: u64) {
        self.classical_ops = self.classical_ops.saturating_add(ops);
    }

    pub fn merge(&mut self, o: &QueryLedger) {
        self.classical_ops = self.classical_ops.saturating_add(o.classical_ops);
        self.grover_queries = self.grover_queries.saturating_add(o.grover_queries);
        self.amplification_invocations = self.amplification_invocations.saturating_add(o.amplification_invocations);
    }

    /// Every counter multiplied by `num/den`, rounded up.
    pub fn scaled(&self, num: u64, den: u64) -> QueryLedger {
        let s = |v: u64| -> u64 {
            let p = v as u128 * num as u128;
            let q = p.div_ceil(den as u128);
            q.min(u64::MAX as u128) as u64
        };
        QueryLedger {
            classical_ops: s(self.classical_ops),
            grover_queries: s(self.grover_queries),
            amplification_invocations: s(self.amplification_invocations),
        }
    }

    /// Cost used for scaling fits: classical work plus oracle queries.
    pub fn total_cost(&self) -> u64 {
        self.classical_ops.saturating_add(self.grover_queries)
    }
}

impl Add for QueryLedger {
    type Output = QueryLedger;
    fn add(mut self, o: QueryLedger) -> QueryLedger {
        self.merge(&o);
        self
    }
}

impl AddAssign for QueryLedger {
    fn add_assign(&mut self, o: QueryLedger) {
        self.merge(&o);
    }
}

/// `⌈√t⌉` in exact integer arithmetic.
pub fn ceil_sqrt(t: u64) -> u64 {
    let r = t.sqrt();
    if r * r == t {
        r
    } else {
        r + 1
    }
}

/// Searches `items` for one satisfying `predicate`, charging the modeled
/// Grover cost. All items are evaluated so that the charge never depends on
/// where a marked item sits; the returned index is the first hit.
pub fn grover_find<T, E>(
    items: &[T],
    mut predicate: impl FnMut(usize, &T, &mut QueryLedger) -> Result<bool, E>,
    ledger: &mut QueryLedger,
) -> Result<Option<usize>, E> {
    let t = items.len() as u64;
    if t == 0 {
        return Ok(None);
    }
    let g = ceil_sqrt(t);
    let mut work = QueryLedger::default();
    let mut found = None;
    for (i, it) in items.iter().enumerate() {
        let mut l = QueryLedger::default();
        let hit = predicate(i, it, &mut l)?;
        work.merge(&l);
        if hit && found.is_none() {
            found = Some(i);
        }
    }
    ledger.grover_queries = ledger.grover_queries.saturating_add(g);
    ledger.merge(&work.scaled(g, t));
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmplificationPolicy {
    /// Target failure probability of the amplified procedure.
    pub epsilon: f64,
    pub c_amp: f64,
    /// Explicit repeat budget; overrides the formula when set.
    pub budget_override: Option<u32>,
}

impl AmplificationPolicy {
    pub fn new(epsilon: f64) -> Self {
        assert!(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
        AmplificationPolicy { epsilon, c_amp: 3.0, budget_override: None }
    }

    pub fn with_budget(epsilon: f64, budget: u32) -> Self {
        AmplificationPolicy { budget_override: Some(budget.max(1)), ..Self::new(epsilon) }
    }

    /// `⌈c_amp/√p⌉` with `p = 1 − ε` the per-run success probability.
    pub fn budget(&self) -> u32 {
        if let Some(b) = self.budget_override {
            return b;
        }
        let p = 1.0 - self.epsilon;
        ((self.c_amp / p.sqrt()).ceil() as u32).max(1)
    }
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("all {attempts} amplification rounds returned Error")]
pub struct ExhaustedRepeats {
    pub attempts: u32,
}

/// Runs `procedure` until it returns `Some`, at most `policy.budget()` times,
/// counting each run.
pub fn amplify<T>(
    policy: &AmplificationPolicy,
    ledger: &mut QueryLedger,
    mut procedure: impl FnMut(u32, &mut QueryLedger) -> Option<T>,
) -> Result<T, ExhaustedRepeats> {
    let budget = policy.budget();
    for attempt in 0..budget {
        ledger.amplification_invocations += 1;
        if let Some(v) = procedure(attempt, ledger) {
            return Ok(v);
        }
    }
    Err(ExhaustedRepeats { attempts: budget })
}
