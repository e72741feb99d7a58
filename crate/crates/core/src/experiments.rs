//! Measurements of subproblem sizes after one random split, and of how the
//! ledger cost of the recursive search grows with the input size.
//!
//! Every trial draws from its own ChaCha8 stream of the configured seed, so
//! reports are reproducible bit for bit and trials can run in any order.

use std::collections::HashSet;
use std::fs::File;
use std::io;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arrangement::{build_arrangement, enclosing_bbox, grid_cells, line_subproblems, GridArrangement, HyperplaneId};
use crate::curved::{build_disk_arrangement, classify_disks_per_cell, curve_meets, pseudoline_refine, CellDomain, Curve, UnitDisk};
use crate::exact::{dual_of_point, ApproxPoint, ExactLine, ExactPoint, Rat, TAU};
use crate::problems::{p3l_adapter, pair_adapter, sample_indices, PairSearchInstance};
use crate::rqs::{choose_params, rqs_solve, RqsParams};

/// Largest pseudoline crossing constant used in the disk bound.
pub const MAX_CROSSING_CONSTANT: usize = 8;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("sampled centres closer than the tolerance")]
    DegenerateInput,
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn check(ok: bool, msg: &str) -> Result<(), ExperimentError> {
    if ok {
        Ok(())
    } else {
        Err(ExperimentError::Config(msg.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConcentrationTrial {
    pub trial: usize,
    pub regions: usize,
    /// Largest number of unsampled objects meeting one region.
    pub max_crossing: usize,
    pub oversize_regions: usize,
    /// Largest number of meeting points between the curves of two sampled
    /// disks; zero for the other experiments.
    pub crossing_constant: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConcentrationReport {
    pub experiment: String,
    pub n: usize,
    pub k: usize,
    pub epsilon: f64,
    pub bound: f64,
    pub violation_fraction: f64,
    pub trials: Vec<ConcentrationTrial>,
}

impl ConcentrationReport {
    fn new(experiment: &str, n: usize, k: usize, epsilon: f64, bound: f64, per_trial: Vec<(usize, Vec<usize>, usize)>) -> Self {
        let trials: Vec<ConcentrationTrial> = per_trial
            .into_iter()
            .enumerate()
            .map(|(trial, (regions, counts, crossing_constant))| ConcentrationTrial {
                trial,
                regions,
                max_crossing: counts.iter().copied().max().unwrap_or(0),
                oversize_regions: counts.iter().filter(|&&c| c as f64 > bound).count(),
                crossing_constant,
            })
            .collect();
        let bad = trials.iter().filter(|t| t.oversize_regions > 0).count();
        ConcentrationReport {
            experiment: experiment.to_string(),
            n,
            k,
            epsilon,
            bound,
            violation_fraction: bad as f64 / trials.len().max(1) as f64,
            trials,
        }
    }

    /// Fraction of trials with a region above `bound`.
    pub fn violation_fraction_at(&self, bound: f64) -> f64 {
        let bad = self.trials.iter().filter(|t| t.max_crossing as f64 > bound).count();
        bad as f64 / self.trials.len().max(1) as f64
    }

    pub fn passes(&self) -> bool {
        self.violation_fraction <= self.epsilon
    }
}

/// `δ·n/k·(ln n + ln 1/ε)`.
pub fn line_bound(n: usize, k: usize, delta: f64, epsilon: f64) -> f64 {
    let nf = n as f64;
    delta * nf / k as f64 * (nf.ln() + (1.0 / epsilon).ln())
}

/// `C·n/k·(5 ln(C·n) + ln 1/ε)`.
pub fn pseudoline_bound(n: usize, k: usize, c: usize, epsilon: f64) -> f64 {
    let cn = (c * n) as f64;
    cn / k as f64 * (5.0 * cn.ln() + (1.0 / epsilon).ln())
}

/// `2d²·n/k·(5 ln n + ln 1/ε)`.
pub fn grid_bound(n: usize, d: usize, k: usize, epsilon: f64) -> f64 {
    let nf = n as f64;
    (2 * d * d) as f64 * nf / k as f64 * (5.0 * nf.ln() + (1.0 / epsilon).ln())
}

/// Lines dual to distinct points whose coordinates are multiples of 1/1000
/// in `[−1000, 1000]`.
pub fn random_lines(n: usize, rng: &mut ChaCha8Rng) -> Vec<ExactLine> {
    let mut seen = HashSet::new();
    let mut lines = Vec::with_capacity(n);
    while lines.len() < n {
        let (x, y) = (rng.gen_range(-1_000_000i64..=1_000_000), rng.gen_range(-1_000_000i64..=1_000_000));
        if seen.insert((x, y)) {
            lines.push(dual_of_point(&ExactPoint::new(Rat::new(x, 1000), Rat::new(y, 1000))));
        }
    }
    lines
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinesConfig {
    pub n: usize,
    pub k: usize,
    pub delta: f64,
    pub epsilon: f64,
    pub trials: usize,
    pub seed: u64,
}

/// Draws `k` of `n` random lines, triangulates their arrangement and counts
/// the other lines meeting each closed face beyond a vertex.
pub fn concentration_lines(cfg: &LinesConfig) -> Result<ConcentrationReport, ExperimentError> {
    check(cfg.trials > 0, "trials must be positive")?;
    check(cfg.k >= 2 && cfg.k < cfg.n, "need 2 ≤ k < n")?;
    check(cfg.epsilon > 0.0 && cfg.epsilon < 1.0 && cfg.delta > 0.0, "need 0 < ε < 1 and δ > 0")?;
    let per_trial = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(cfg.seed, t);
            let lines = random_lines(cfg.n, &mut rng);
            let sample = sample_indices(&mut rng, cfg.n, cfg.k);
            let sampled: Vec<ExactLine> = sample.iter().map(|&i| lines[i].clone()).collect();
            let mut arr = build_arrangement(&sampled, &enclosing_bbox(&lines)).expect("random lines are distinct");
            arr.triangulate();
            let rest: Vec<ExactLine> =
                (0..cfg.n).filter(|i| sample.binary_search(i).is_err()).map(|i| lines[i].clone()).collect();
            let counts: Vec<usize> = line_subproblems(&arr, &rest, &[]).iter().map(|f| f.members.len()).collect();
            (counts.len(), counts, 0)
        })
        .collect();
    Ok(ConcentrationReport::new("conc-lines", cfg.n, cfg.k, cfg.epsilon, line_bound(cfg.n, cfg.k, cfg.delta, cfg.epsilon), per_trial))
}

/// Smallest δ among `deltas` whose bound keeps the violation fraction at or
/// below ε.
pub fn smallest_passing_delta(report: &ConcentrationReport, deltas: &[f64]) -> Option<f64> {
    let mut ds = deltas.to_vec();
    ds.sort_by(f64::total_cmp);
    ds.into_iter().find(|&d| report.violation_fraction_at(line_bound(report.n, report.k, d, report.epsilon)) <= report.epsilon)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DisksConfig {
    pub n: usize,
    pub k: usize,
    pub epsilon: f64,
    /// Side of the square the centres are drawn from.
    pub side: f64,
    pub trials: usize,
    pub seed: u64,
}

/// Most points shared by the boundary of two sampled disks, where the
/// boundary of a disk is its circle and its two vertical tangent lines.
fn crossing_constant(disks: &[UnitDisk], curves: &[Curve]) -> usize {
    let owner = |c: &Curve| -> Option<usize> {
        match c {
            Curve::Arc { disk, .. } => Some(*disk),
            Curve::Segment { a, .. } => disks.iter().find(|d| ((a.x - d.center.x).abs() - 1.0).abs() <= TAU).map(|d| d.id),
        }
    };
    let mut by_disk: Vec<Vec<&Curve>> = vec![Vec::new(); disks.iter().map(|d| d.id + 1).max().unwrap_or(0)];
    for c in curves {
        if let Some(d) = owner(c) {
            by_disk[d].push(c);
        }
    }
    let mut best = 0;
    for (i, ci) in by_disk.iter().enumerate() {
        for cj in &by_disk[i + 1..] {
            let mut pts: Vec<ApproxPoint> = Vec::new();
            for p in ci.iter().flat_map(|a| cj.iter().flat_map(move |b| curve_meets(a, b))) {
                if pts.iter().all(|q| q.dist(&p) > TAU) {
                    pts.push(p);
                }
            }
            best = best.max(pts.len());
        }
    }
    best
}

/// Draws `k` of `n` unit disks with centres uniform in a square, refines
/// their arrangement into pseudoline cells and counts the other disks
/// crossing each cell. The crossing constant is measured per trial; the
/// bound uses the largest one seen, capped at [`MAX_CROSSING_CONSTANT`].
pub fn concentration_pseudolines(cfg: &DisksConfig) -> Result<ConcentrationReport, ExperimentError> {
    check(cfg.trials > 0, "trials must be positive")?;
    check(cfg.k >= 2 && cfg.k < cfg.n, "need 2 ≤ k < n")?;
    check(cfg.epsilon > 0.0 && cfg.epsilon < 1.0 && cfg.side > 0.0, "need 0 < ε < 1 and a positive side")?;
    let per_trial: Vec<Result<(usize, Vec<usize>, usize), ExperimentError>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(cfg.seed, t);
            let centers: Vec<ApproxPoint> =
                (0..cfg.n).map(|_| ApproxPoint::new(rng.gen_range(0.0..cfg.side), rng.gen_range(0.0..cfg.side))).collect();
            disk_trial(&centers, cfg.k, &mut rng)
        })
        .collect();
    let per_trial = per_trial.into_iter().collect::<Result<Vec<_>, _>>()?;
    let c = per_trial.iter().map(|t| t.2).max().unwrap_or(0).clamp(1, MAX_CROSSING_CONSTANT);
    Ok(ConcentrationReport::new("conc-disks", cfg.n, cfg.k, cfg.epsilon, pseudoline_bound(cfg.n, cfg.k, c, cfg.epsilon), per_trial))
}

/// One split of the disks around `centers`: cell count, unsampled disks
/// crossing each cell and the crossing constant.
pub fn disk_trial(centers: &[ApproxPoint], k: usize, rng: &mut ChaCha8Rng) -> Result<(usize, Vec<usize>, usize), ExperimentError> {
    let disks: Vec<UnitDisk> = centers.iter().enumerate().map(|(i, &c)| UnitDisk::new(i, c)).collect();
    let sample = sample_indices(rng, disks.len(), k);
    let domain = CellDomain::around(centers);
    let arr = build_disk_arrangement(&disks, &sample, &domain).map_err(|_| ExperimentError::DegenerateInput)?;
    let mut sub = pseudoline_refine(&arr);
    let rest: Vec<UnitDisk> = disks.iter().filter(|d| sample.binary_search(&d.id).is_err()).copied().collect();
    classify_disks_per_cell(&mut sub.cells, &rest);
    let counts = sub.cells.iter().map(|c| c.crossing.len()).collect();
    Ok((sub.cells.len(), counts, crossing_constant(&sub.disks, &sub.curves)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridConfig {
    /// Total number of hyperplanes, spread evenly over the axes.
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub epsilon: f64,
    pub trials: usize,
    pub seed: u64,
}

/// Draws `k` of `n` axis-parallel hyperplanes with random integer offsets
/// and counts the unsampled ones crossing each cell.
pub fn concentration_grid_d(cfg: &GridConfig) -> Result<ConcentrationReport, ExperimentError> {
    check(cfg.trials > 0, "trials must be positive")?;
    check(cfg.d == 2 || cfg.d == 3, "d must be 2 or 3")?;
    check(cfg.k >= 1 && cfg.k <= cfg.n && cfg.n >= cfg.d, "need 1 ≤ k ≤ n and n ≥ d")?;
    check(cfg.epsilon > 0.0 && cfg.epsilon < 1.0, "need 0 < ε < 1")?;
    let per_trial = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(cfg.seed, t);
            let axes: Vec<Vec<i64>> = (0..cfg.d)
                .map(|a| {
                    let len = cfg.n / cfg.d + usize::from(a < cfg.n % cfg.d);
                    rand::seq::index::sample(&mut rng, 100 * cfg.n, len).into_iter().map(|v| v as i64).collect()
                })
                .collect();
            let grid = GridArrangement::new(axes);
            let ids: Vec<HyperplaneId> =
                (0..cfg.d).flat_map(|axis| (0..grid.axes[axis].len()).map(move |index| HyperplaneId { axis, index })).collect();
            let sample: Vec<HyperplaneId> = sample_indices(&mut rng, ids.len(), cfg.k).into_iter().map(|i| ids[i]).collect();
            let counts: Vec<usize> = grid_cells(&grid, &sample).iter().map(|c| c.crossing.len()).collect();
            (counts.len(), counts, 0)
        })
        .collect();
    Ok(ConcentrationReport::new(&format!("conc-grid-{}", cfg.d), cfg.n, cfg.k, cfg.epsilon, grid_bound(cfg.n, cfg.d, cfg.k, cfg.epsilon), per_trial))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Lines in general position, no three concurrent.
    PointOn3Lines,
    /// Pair search whose predicate never holds and costs `n` per call.
    PairLinear,
    /// Pair search whose predicate never holds and costs 1 per call.
    PairConstant,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::PointOn3Lines => "p3l",
            Family::PairLinear => "pair-linear",
            Family::PairConstant => "pair-constant",
        }
    }
}

/// Lines dual to distinct points with six decimal digits in
/// `[−1000, 1000]`; no three of them meet at a point in practice.
pub fn p3l_family(n: usize, rng: &mut ChaCha8Rng) -> Vec<ExactLine> {
    let mut seen = HashSet::new();
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let p = (rng.gen_range(-1_000_000_000i64..=1_000_000_000), rng.gen_range(-1_000_000_000i64..=1_000_000_000));
        if seen.insert(p) {
            pts.push(p);
        }
    }
    pts.iter().map(|&(x, y)| dual_of_point(&ExactPoint::new(Rat::new(x, 1_000_000), Rat::new(y, 1_000_000)))).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub epsilon: f64,
    pub delta: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingRun {
    pub n: usize,
    pub seed: u64,
    pub decision: bool,
    pub exhausted: bool,
    pub retries: u32,
    pub max_depth: usize,
    pub grover_cost: u64,
    pub baseline_cost: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    /// One residual per run, in run order.
    pub residuals: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingReport {
    pub family: Family,
    pub epsilon: f64,
    pub delta: f64,
    pub grover: Fit,
    pub baseline: Fit,
    pub runs: Vec<ScalingRun>,
}

/// Ordinary least squares `y ≈ slope·x + intercept`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Fit {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals = xs.iter().zip(ys).map(|(x, y)| y - (slope * x + intercept)).collect();
    Fit { slope, intercept, residuals }
}

fn scaling_run(cfg: &ScalingConfig, n: usize, seed: u64) -> ScalingRun {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params: RqsParams = choose_params(n, cfg.epsilon, cfg.delta, std::f64::consts::E);
    let (decision, exhausted, retries, max_depth, ledger, baseline) = match cfg.family {
        Family::PointOn3Lines => {
            let a = p3l_adapter(p3l_family(n, &mut rng));
            let r = rqs_solve(&a, &params, &mut rng);
            (r.decision, r.exhausted, r.retries, r.max_depth, r.ledger, r.baseline)
        }
        Family::PairLinear | Family::PairConstant => {
            let beta = if cfg.family == Family::PairLinear { 1.0 } else { 0.0 };
            // The pair grid has 2n hyperplanes.
            let params = choose_params(2 * n, cfg.epsilon, cfg.delta, std::f64::consts::E);
            let a = pair_adapter(&PairSearchInstance::new(n, beta, |_, _| false));
            let r = rqs_solve(&a, &params, &mut rng);
            (r.decision, r.exhausted, r.retries, r.max_depth, r.ledger, r.baseline)
        }
    };
    ScalingRun {
        n,
        seed,
        decision,
        exhausted,
        retries,
        max_depth,
        grover_cost: ledger.total_cost(),
        baseline_cost: baseline.total_cost(),
    }
}

/// Runs the recursive search on one instance per (size, seed) and fits
/// `log cost` against `log n` for the Grover ledger and the classical
/// baseline of the same runs.
pub fn cost_scaling(cfg: &ScalingConfig) -> Result<ScalingReport, ExperimentError> {
    let distinct: HashSet<usize> = cfg.sizes.iter().copied().collect();
    check(distinct.len() >= 3, "need at least three distinct sizes to fit")?;
    check(cfg.sizes.iter().all(|&n| n >= 4), "sizes must be at least 4")?;
    check(!cfg.seeds.is_empty(), "need at least one seed")?;
    check(cfg.epsilon > 0.0 && cfg.epsilon < 1.0 && cfg.delta > 0.0, "need 0 < ε < 1 and δ > 0")?;
    let jobs: Vec<(usize, u64)> = cfg.sizes.iter().flat_map(|&n| cfg.seeds.iter().map(move |&s| (n, s))).collect();
    let runs: Vec<ScalingRun> = jobs.par_iter().map(|&(n, s)| scaling_run(cfg, n, s)).collect();
    let xs: Vec<f64> = runs.iter().map(|r| (r.n as f64).ln()).collect();
    let g: Vec<f64> = runs.iter().map(|r| (r.grover_cost.max(1) as f64).ln()).collect();
    let b: Vec<f64> = runs.iter().map(|r| (r.baseline_cost.max(1) as f64).ln()).collect();
    Ok(ScalingReport {
        family: cfg.family,
        epsilon: cfg.epsilon,
        delta: cfg.delta,
        grover: least_squares(&xs, &g),
        baseline: least_squares(&xs, &b),
        runs,
    })
}

/// Writes `<stem>.json` with the whole report and `<stem>.csv` with one row
/// per trial. Returns both paths.
pub fn write_report<R: Serialize, T: Serialize>(dir: &Path, stem: &str, report: &R, rows: &[T]) -> Result<(PathBuf, PathBuf), ExperimentError> {
    std::fs::create_dir_all(dir)?;
    let json = dir.join(format!("{stem}.json"));
    serde_json::to_writer_pretty(File::create(&json)?, report)?;
    let csv_path = dir.join(format!("{stem}.csv"));
    let mut w = csv::Writer::from_path(&csv_path)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok((json, csv_path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_squares_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 1.5 * x - 2.0).collect();
        let f = least_squares(&xs, &ys);
        assert!((f.slope - 1.5).abs() < 1e-12 && (f.intercept + 2.0).abs() < 1e-12);
        assert!(f.residuals.iter().all(|r| r.abs() < 1e-12));
    }

    #[test]
    fn lines_small_run_is_reproducible() {
        let cfg = LinesConfig { n: 60, k: 8, delta: 2.0, epsilon: 0.1, trials: 4, seed: 3 };
        let a = concentration_lines(&cfg).unwrap();
        assert_eq!(a, concentration_lines(&cfg).unwrap());
        assert_eq!(a.trials.len(), 4);
        assert!(a.trials.iter().all(|t| t.max_crossing <= 52 && t.regions > 0));
    }

    #[test]
    fn lines_full_sample_has_no_crossings() {
        let cfg = LinesConfig { n: 20, k: 19, delta: 2.0, epsilon: 0.05, trials: 2, seed: 1 };
        let r = concentration_lines(&cfg).unwrap();
        assert!(r.trials.iter().all(|t| t.max_crossing <= 1));
        assert_eq!(r.violation_fraction, 0.0);
    }

    #[test]
    fn lines_tiny_delta_violates() {
        let cfg = LinesConfig { n: 200, k: 10, delta: 0.01, epsilon: 0.05, trials: 3, seed: 5 };
        assert_eq!(concentration_lines(&cfg).unwrap().violation_fraction, 1.0);
    }

    #[test]
    fn configs_rejected() {
        assert!(concentration_lines(&LinesConfig { n: 10, k: 3, delta: 2.0, epsilon: 0.1, trials: 0, seed: 0 }).is_err());
        assert!(concentration_grid_d(&GridConfig { n: 10, d: 4, k: 3, epsilon: 0.1, trials: 1, seed: 0 }).is_err());
        let cfg = ScalingConfig { family: Family::PairConstant, sizes: vec![8, 16], seeds: vec![1], epsilon: 0.1, delta: 2.0 };
        assert!(cost_scaling(&cfg).is_err());
    }

    #[test]
    fn disjoint_disks_cross_at_most_one() {
        let centers: Vec<ApproxPoint> = (0..12).map(|i| ApproxPoint::new(3.0 * (i % 4) as f64, 3.0 * (i / 4) as f64)).collect();
        let (_, counts, c) = disk_trial(&centers, 11, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
        assert!(counts.iter().all(|&x| x <= 1));
        assert!(counts.contains(&1));
        assert!(c <= MAX_CROSSING_CONSTANT);
    }

    #[test]
    fn coincident_centres_rejected() {
        let centers = vec![ApproxPoint::new(0.0, 0.0); 6];
        assert!(matches!(disk_trial(&centers, 3, &mut ChaCha8Rng::seed_from_u64(0)), Err(ExperimentError::DegenerateInput)));
    }

    #[test]
    fn grid_full_sample_has_no_crossings() {
        let r = concentration_grid_d(&GridConfig { n: 30, d: 2, k: 30, epsilon: 0.05, trials: 2, seed: 0 }).unwrap();
        assert!(r.trials.iter().all(|t| t.max_crossing == 0));
    }

    #[test]
    fn small_scaling_fit() {
        let cfg = ScalingConfig { family: Family::PairConstant, sizes: vec![8, 16, 32], seeds: vec![1], epsilon: 0.1, delta: 2.0 };
        let r = cost_scaling(&cfg).unwrap();
        assert_eq!(r.runs.len(), 3);
        assert!(r.runs.iter().all(|run| !run.decision));
        assert!(r.grover.slope.is_finite() && r.baseline.slope.is_finite());
    }

    #[test]
    fn report_files_written() {
        let dir = tempfile::tempdir().unwrap();
        let r = concentration_grid_d(&GridConfig { n: 30, d: 3, k: 6, epsilon: 0.05, trials: 3, seed: 0 }).unwrap();
        let (j, c) = write_report(dir.path(), "grid", &r, &r.trials).unwrap();
        let text = std::fs::read_to_string(c).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(std::fs::read_to_string(j).unwrap().contains("\"violation_fraction\""));
    }
}
