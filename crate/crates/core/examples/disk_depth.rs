//! Is some point covered by q of the unit disks around the input points?

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rqs_geom::exact::ApproxPoint;
use rqs_geom::oracles::oracle_max_disk_depth;
use rqs_geom::problems::{disk_adapter, DiskInstance};
use rqs_geom::rqs::{choose_params, rqs_solve};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let points: Vec<ApproxPoint> = (0..40).map(|_| ApproxPoint::new(rng.gen_range(0.0..8.0), rng.gen_range(0.0..8.0))).collect();
    let (best, at) = oracle_max_disk_depth(&points);
    println!("deepest point {at:?} lies in {best} disks");
    let params = choose_params(points.len(), 0.1, 2.0, std::f64::consts::E).with_forced_split(5, 8);
    for q in [best, best + 1] {
        let inst = DiskInstance::new(points.clone(), q);
        let r = rqs_solve(&disk_adapter(&inst), &params, &mut rng);
        println!("q = {q}: decision {} witness {:?} depth reached {}", r.decision, r.witness, r.max_depth);
    }
}
