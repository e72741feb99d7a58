//! Fits the growth of the Grover ledger and of the classical baseline
//! against the input size.

use rqs_geom::experiments::{cost_scaling, Family, ScalingConfig};

fn main() {
    for (family, sizes) in [(Family::PointOn3Lines, vec![256, 512, 1024]), (Family::PairConstant, vec![128, 256, 512])] {
        let cfg = ScalingConfig { family, sizes, seeds: vec![1], epsilon: 0.1, delta: 2.0 };
        let r = cost_scaling(&cfg).unwrap();
        for run in &r.runs {
            println!("{} n={:5} seed={} grover={:>12} baseline={:>12}", family.name(), run.n, run.seed, run.grover_cost, run.baseline_cost);
        }
        println!("{}: grover slope {:.3}, baseline slope {:.3}", family.name(), r.grover.slope, r.baseline.slope);
    }
}
