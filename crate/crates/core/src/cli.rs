//! The `rqs` command line: solve one instance read from JSON, or run an
//! experiment and write its reports.
//!
//! Exit codes: 0 on success, 1 on bad input, 2 when amplification ran out
//! of repeats.

use std::collections::HashSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cost::QueryLedger;
use crate::exact::{ApproxPoint, ExactLine, ExactPoint, Rat};
use crate::experiments::{
    concentration_grid_d, concentration_lines, concentration_pseudolines, cost_scaling, smallest_passing_delta, write_report,
    DisksConfig, ExperimentError, Family, GridConfig, LinesConfig, ScalingConfig,
};
use crate::oracles::{
    oracle_concurrence, oracle_disjoint_projection, oracle_interval_containment, oracle_max_disk_depth, oracle_min_area_triangle,
    oracle_pair_search,
};
use crate::problems::{
    disjoint_projection_check, disk_adapter, interval_adapter, p3l_adapter, pair_adapter, polygon_cut_check, polygon_pair_instance,
    projection_pair_instance, solve_area_bound, DiskInstance, DiskWitness, IntervalInstance, PairSearchInstance, PolygonInstance,
    ProjectionInstance, TriangleInstance, TriangleWitness,
};
use crate::rqs::{choose_params, rqs_solve, ProblemAdapter, RqsParams, RqsResult};

pub const FORMAT: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "rqs", version, about = "Recursive geometric search with a Grover query ledger")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one instance and print the result as JSON.
    Solve(SolveArgs),
    /// Run an experiment and write CSV and JSON reports.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    P3l,
    Triangle,
    Disk,
    Intervals,
    Pair,
    PolygonCut,
    DisjointProj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    Rqs,
    Bruteforce,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub problem: Problem,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 2.0)]
    pub delta: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Backend::Rqs)]
    pub backend: Backend,
    /// Writes the first curved subdivision (disk problem only).
    #[arg(long)]
    pub emit_svg: Option<PathBuf>,
    /// Triangle area bound, as a decimal or a fraction.
    #[arg(long)]
    pub area_bound: Option<String>,
    #[arg(long)]
    pub depth_target: Option<usize>,
    #[arg(long)]
    pub pieces: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExperimentKind {
    ConcLines,
    ConcDisks,
    ConcGrid,
    CostScaling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    P3l,
    PairLinear,
    PairConstant,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, value_enum)]
    pub experiment: ExperimentKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 2.0)]
    pub delta: f64,
    #[arg(long, default_value_t = 0.05)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Grid dimension.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Side of the square disk centres are drawn from.
    #[arg(long, default_value_t = 10.0)]
    pub side: f64,
    #[arg(long, value_enum, default_value_t = FamilyArg::P3l)]
    pub family: FamilyArg,
    #[arg(long, value_delimiter = ',', default_values_t = [256usize, 512, 1024, 2048, 4096])]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [1u64])]
    pub seeds: Vec<u64>,
    #[arg(long, default_value = "reports")]
    pub out: PathBuf,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("malformed JSON at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error(transparent)]
    Experiment(#[from] ExperimentError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn input_err<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Input(msg.into()))
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    let res = match cli.command {
        Command::Solve(a) => cmd_solve(&a).and_then(|(v, exhausted)| {
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("values serialize"))?;
            Ok(if exhausted { 2 } else { 0 })
        }),
        Command::Experiment(a) => cmd_experiment(&a).and_then(|line| {
            writeln!(out, "{line}")?;
            Ok(0)
        }),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Rounds every float to 12 significant digits.
fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap();
            let r: f64 = format!("{x:.11e}").parse().unwrap();
            if let Some(m) = serde_json::Number::from_f64(r) {
                *n = m;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

#[derive(Deserialize)]
struct Header {
    format: u32,
}

fn read_input<T: DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let json_err = |e: serde_json::Error| CliError::Json { line: e.line(), column: e.column(), msg: e.to_string() };
    let header: Header = serde_json::from_str(&text).map_err(json_err)?;
    if header.format != FORMAT {
        return input_err(format!("unsupported format {}, expected {FORMAT}", header.format));
    }
    serde_json::from_str(&text).map_err(json_err)
}

fn points(raw: &[(Rat, Rat)]) -> Vec<ExactPoint> {
    raw.iter().map(|(x, y)| ExactPoint::new(x.clone(), y.clone())).collect()
}

#[derive(Deserialize)]
struct LinesInput {
    /// `[slope, intercept]` pairs.
    lines: Vec<(Rat, Rat)>,
}

#[derive(Deserialize)]
struct PointsInput {
    points: Vec<(Rat, Rat)>,
}

#[derive(Deserialize)]
struct IntervalsInput {
    #[serde(rename = "P")]
    p: Vec<(Rat, Rat)>,
    #[serde(rename = "Q")]
    q: Vec<(Rat, Rat)>,
}

#[derive(Deserialize)]
struct PairInput {
    n: usize,
    #[serde(default)]
    beta: f64,
    /// Ordered pairs on which the predicate holds.
    pairs: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct PolygonInput {
    vertices: Vec<(Rat, Rat)>,
    edge: usize,
}

#[derive(Deserialize)]
struct ProjectionInput {
    polygons: Vec<Vec<(Rat, Rat)>>,
}

struct Outcome {
    decision: bool,
    witness: Value,
    ledger: Option<QueryLedger>,
    baseline: Option<QueryLedger>,
    params: Option<RqsParams>,
    retries: u32,
    exhausted: bool,
}

impl Outcome {
    fn brute(decision: bool, witness: Value) -> Self {
        Outcome { decision, witness, ledger: None, baseline: None, params: None, retries: 0, exhausted: false }
    }

    fn from_rqs<W>(r: RqsResult<W>, params: RqsParams, witness: impl FnOnce(W) -> Value) -> Self {
        Outcome {
            decision: r.decision,
            witness: r.witness.map(witness).unwrap_or(Value::Null),
            ledger: Some(r.ledger),
            baseline: Some(r.baseline),
            params: Some(params),
            retries: r.retries,
            exhausted: r.exhausted,
        }
    }
}

fn to_value<T: Serialize>(t: T) -> Value {
    serde_json::to_value(t).expect("witnesses serialize")
}

fn distinct<T: std::hash::Hash + Eq>(items: &[T], what: &str) -> Result<(), CliError> {
    let set: HashSet<&T> = items.iter().collect();
    if set.len() == items.len() {
        Ok(())
    } else {
        input_err(format!("{what} must be distinct"))
    }
}

struct Ctx<'a> {
    args: &'a SolveArgs,
    rng: ChaCha8Rng,
}

impl Ctx<'_> {
    fn params(&self, size: usize) -> RqsParams {
        choose_params(size, self.args.epsilon, self.args.delta, std::f64::consts::E)
    }

    fn solve<A: ProblemAdapter>(&mut self, a: &A) -> (RqsResult<A::Witness>, RqsParams) {
        let p = self.params(a.size());
        (rqs_solve(a, &p, &mut self.rng), p)
    }
}

/// Decides the instance; returns the JSON payload and whether the repeat
/// budget ran out.
pub fn cmd_solve(args: &SolveArgs) -> Result<(Value, bool), CliError> {
    if !(args.epsilon > 0.0 && args.epsilon < 1.0) || args.delta <= 0.0 {
        return input_err("need 0 < epsilon < 1 and delta > 0");
    }
    if args.emit_svg.is_some() && args.problem != Problem::Disk {
        return input_err("--emit-svg is only available for --problem disk");
    }
    let brute = args.backend == Backend::Bruteforce;
    let mut ctx = Ctx { args, rng: ChaCha8Rng::seed_from_u64(args.seed) };
    let out = match args.problem {
        Problem::P3l => {
            let input: LinesInput = read_input(&args.input)?;
            let lines: Vec<ExactLine> = input.lines.into_iter().map(|(s, c)| ExactLine::from_slope_intercept(s, c)).collect();
            distinct(&lines, "lines")?;
            if brute {
                let w = oracle_concurrence(&lines);
                Outcome::brute(w.is_some(), w.map(|(point, lines)| json!({ "point": point, "lines": lines })).unwrap_or(Value::Null))
            } else {
                let (r, p) = ctx.solve(&p3l_adapter(lines));
                Outcome::from_rqs(r, p, to_value)
            }
        }
        Problem::Triangle => {
            let input: PointsInput = read_input(&args.input)?;
            let Some(bound) = &args.area_bound else { return input_err("--area-bound is required") };
            let bound: Rat = bound.parse().map_err(|e| CliError::Input(format!("--area-bound: {e}")))?;
            let pts = points(&input.points);
            distinct(&pts, "points")?;
            let inst = TriangleInstance::new(pts, bound);
            if brute {
                let best = oracle_min_area_triangle(&inst.points).filter(|(a, _)| *a <= inst.area_bound2);
                Outcome::brute(
                    best.is_some(),
                    best.map(|(area2, points)| to_value(TriangleWitness { points, area2 })).unwrap_or(Value::Null),
                )
            } else {
                let p = ctx.params(inst.points.len());
                let r = solve_area_bound(&inst, &p, &mut ctx.rng);
                Outcome::from_rqs(r, p, to_value)
            }
        }
        Problem::Disk => {
            let input: PointsInput = read_input(&args.input)?;
            let Some(q) = args.depth_target else { return input_err("--depth-target is required") };
            let pts = input
                .points
                .iter()
                .map(|(x, y)| ApproxPoint::checked(x.to_f64(), y.to_f64()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let inst = DiskInstance::new(pts, q);
            if q > inst.points.len() {
                Outcome::brute(false, Value::Null)
            } else if brute {
                let (depth, at) = oracle_max_disk_depth(&inst.points);
                let w = at.filter(|_| depth >= q).map(|point| DiskWitness { point, depth });
                Outcome::brute(w.is_some(), w.map(to_value).unwrap_or(Value::Null))
            } else {
                let a = disk_adapter(&inst);
                if let Some(path) = &args.emit_svg {
                    let p = ctx.params(a.size());
                    let split = a.decompose(p.k, &mut ChaCha8Rng::seed_from_u64(args.seed));
                    std::fs::write(path, split.subdivision.to_svg())?;
                }
                let (r, p) = ctx.solve(&a);
                Outcome::from_rqs(r, p, to_value)
            }
        }
        Problem::Intervals => {
            let input: IntervalsInput = read_input(&args.input)?;
            let inst = IntervalInstance::new(input.p, input.q).map_err(|e| CliError::Input(e.to_string()))?;
            if brute {
                let t = oracle_interval_containment(&inst);
                Outcome::brute(t.is_some(), t.map(|t| json!({ "translation": t })).unwrap_or(Value::Null))
            } else {
                let (r, p) = ctx.solve(&interval_adapter(&inst));
                Outcome::from_rqs(r, p, to_value)
            }
        }
        Problem::Pair => {
            let input: PairInput = read_input(&args.input)?;
            if input.pairs.iter().any(|&(i, j)| i >= input.n || j >= input.n) {
                return input_err("pair index out of range");
            }
            if !(input.beta >= 0.0) {
                return input_err("beta must be non-negative");
            }
            let marked: HashSet<(usize, usize)> = input.pairs.into_iter().collect();
            let inst = PairSearchInstance::new(input.n, input.beta, move |i, j| marked.contains(&(i, j)));
            if brute {
                let w = oracle_pair_search(&inst);
                Outcome::brute(w.is_some(), w.map(to_value).unwrap_or(Value::Null))
            } else {
                let (r, p) = ctx.solve(&pair_adapter(&inst));
                Outcome::from_rqs(r, p, to_value)
            }
        }
        Problem::PolygonCut => {
            let input: PolygonInput = read_input(&args.input)?;
            let Some(k) = args.pieces else { return input_err("--pieces is required") };
            let inst = PolygonInstance::new(points(&input.vertices), input.edge, k).map_err(|e| CliError::Input(e.to_string()))?;
            let witness = |u: usize, v: usize| {
                let line = polygon_cut_check(&inst, u, v).ok().flatten();
                json!({ "vertices": [u, v], "line": line })
            };
            let pairs = polygon_pair_instance(&inst);
            if brute {
                let w = oracle_pair_search(&pairs);
                Outcome::brute(w.is_some(), w.map(|w| witness(w.i, w.j)).unwrap_or(Value::Null))
            } else {
                let (r, p) = ctx.solve(&pair_adapter(&pairs));
                Outcome::from_rqs(r, p, |w| witness(w.i, w.j))
            }
        }
        Problem::DisjointProj => {
            let input: ProjectionInput = read_input(&args.input)?;
            if input.polygons.len() < 2 {
                return input_err("need at least two polygons");
            }
            let inst = ProjectionInstance::new(input.polygons.iter().map(|p| points(p)).collect())
                .map_err(|e| CliError::Input(e.to_string()))?;
            if brute {
                let d = oracle_disjoint_projection(&inst.polygons);
                Outcome::brute(d.is_some(), d.map(|(x, y)| json!({ "direction": [x, y] })).unwrap_or(Value::Null))
            } else {
                let (r, p) = ctx.solve(&pair_adapter(&projection_pair_instance(&inst)));
                Outcome::from_rqs(r, p, |w| {
                    let d = disjoint_projection_check(&inst, w.i, w.j).ok().flatten();
                    json!({ "objects": [w.i, w.j], "direction": d.map(|d| [d.x, d.y]) })
                })
            }
        }
    };
    let mut v = json!({
        "format": FORMAT,
        "problem": args.problem,
        "backend": args.backend,
        "decision": out.decision,
        "witness": out.witness,
        "ledger": out.ledger,
        "baseline": out.baseline,
        "params": {
            "epsilon": args.epsilon,
            "delta": args.delta,
            "seed": args.seed,
            "rqs": out.params,
        },
        "retries": out.retries,
        "exhausted": out.exhausted,
    });
    round_floats(&mut v);
    Ok((v, out.exhausted))
}

/// Runs the experiment, writes its reports under `--out` and returns a
/// one-line summary.
pub fn cmd_experiment(a: &ExperimentArgs) -> Result<String, CliError> {
    match a.experiment {
        ExperimentKind::ConcLines => {
            let cfg = LinesConfig {
                n: a.n.unwrap_or(1000),
                k: a.k.unwrap_or(50),
                delta: a.delta,
                epsilon: a.epsilon,
                trials: a.trials,
                seed: a.seed,
            };
            let r = concentration_lines(&cfg)?;
            let (json, _) = write_report(&a.out, "conc-lines", &r, &r.trials)?;
            let best = smallest_passing_delta(&r, &[1.0, 2.0, 4.0]);
            Ok(format!(
                "conc-lines n={} k={} bound={:.3} violation_fraction={:.4} smallest_passing_delta={} report={}",
                r.n,
                r.k,
                r.bound,
                r.violation_fraction,
                best.map_or("none".to_string(), |d| d.to_string()),
                json.display()
            ))
        }
        ExperimentKind::ConcDisks => {
            let cfg = DisksConfig {
                n: a.n.unwrap_or(500),
                k: a.k.unwrap_or(25),
                epsilon: a.epsilon,
                side: a.side,
                trials: a.trials,
                seed: a.seed,
            };
            let r = concentration_pseudolines(&cfg)?;
            let (json, _) = write_report(&a.out, "conc-disks", &r, &r.trials)?;
            let c = r.trials.iter().map(|t| t.crossing_constant).max().unwrap_or(0);
            Ok(format!(
                "conc-disks n={} k={} crossing_constant={c} bound={:.3} violation_fraction={:.4} report={}",
                r.n,
                r.k,
                r.bound,
                r.violation_fraction,
                json.display()
            ))
        }
        ExperimentKind::ConcGrid => {
            let cfg = GridConfig { n: a.n.unwrap_or(500), d: a.d, k: a.k.unwrap_or(40), epsilon: a.epsilon, trials: a.trials, seed: a.seed };
            let r = concentration_grid_d(&cfg)?;
            let stem = format!("conc-grid-{}", cfg.d);
            let (json, _) = write_report(&a.out, &stem, &r, &r.trials)?;
            Ok(format!(
                "{stem} n={} k={} bound={:.3} violation_fraction={:.4} report={}",
                r.n,
                r.k,
                r.bound,
                r.violation_fraction,
                json.display()
            ))
        }
        ExperimentKind::CostScaling => {
            let family = match a.family {
                FamilyArg::P3l => Family::PointOn3Lines,
                FamilyArg::PairLinear => Family::PairLinear,
                FamilyArg::PairConstant => Family::PairConstant,
            };
            let cfg = ScalingConfig { family, sizes: a.sizes.clone(), seeds: a.seeds.clone(), epsilon: a.epsilon, delta: a.delta };
            let r = cost_scaling(&cfg)?;
            let stem = format!("cost-scaling-{}", family.name());
            let (json, _) = write_report(&a.out, &stem, &r, &r.runs)?;
            Ok(format!(
                "{stem} grover_slope={:.4} baseline_slope={:.4} report={}",
                r.grover.slope,
                r.baseline.slope,
                json.display()
            ))
        }
    }
}
