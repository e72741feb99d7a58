//! Is there a triangle of area at most q? Decided in the dual arrangement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rqs_geom::exact::{ExactPoint, Rat};
use rqs_geom::oracles::oracle_min_area_triangle;
use rqs_geom::problems::{solve_area_bound, TriangleInstance};
use rqs_geom::rqs::choose_params;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let points: Vec<ExactPoint> = (0..30).map(|_| ExactPoint::from_ints(rng.gen_range(-500..500), rng.gen_range(-500..500))).collect();
    let (best, triple) = oracle_min_area_triangle(&points).unwrap();
    println!("smallest doubled area {best} at {triple:?}");
    let params = choose_params(points.len(), 0.1, 2.0, std::f64::consts::E).with_forced_split(6, 8);
    for bound2 in [&best - &Rat::one(), best.clone()] {
        let inst = TriangleInstance::new(points.clone(), &bound2 / &Rat::from_int(2));
        let r = solve_area_bound(&inst, &params, &mut rng);
        println!("area bound {}: decision {} witness {:?}", &bound2 / &Rat::from_int(2), r.decision, r.witness);
    }
}
