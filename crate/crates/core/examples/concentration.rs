//! Sizes of the subproblems left after one random split, against the
//! bounds they are expected to respect.

use rqs_geom::experiments::{
    concentration_grid_d, concentration_lines, concentration_pseudolines, smallest_passing_delta, DisksConfig, GridConfig,
    LinesConfig,
};

fn main() {
    let lines = concentration_lines(&LinesConfig { n: 300, k: 20, delta: 2.0, epsilon: 0.05, trials: 10, seed: 1 }).unwrap();
    println!(
        "lines: bound {:.1}, largest face {}, violations {}, smallest passing delta {:?}",
        lines.bound,
        lines.trials.iter().map(|t| t.max_crossing).max().unwrap(),
        lines.violation_fraction,
        smallest_passing_delta(&lines, &[0.5, 1.0, 2.0, 4.0])
    );
    let disks = concentration_pseudolines(&DisksConfig { n: 120, k: 10, epsilon: 0.05, side: 6.0, trials: 5, seed: 1 }).unwrap();
    println!(
        "disks: bound {:.1}, largest cell {}, crossing constant {}",
        disks.bound,
        disks.trials.iter().map(|t| t.max_crossing).max().unwrap(),
        disks.trials.iter().map(|t| t.crossing_constant).max().unwrap()
    );
    for d in [2, 3] {
        let grid = concentration_grid_d(&GridConfig { n: 200, d, k: 30, epsilon: 0.05, trials: 20, seed: 1 }).unwrap();
        println!("grid d={d}: bound {:.1}, largest cell {}", grid.bound, grid.trials.iter().map(|t| t.max_crossing).max().unwrap());
    }
}
