//! Can P be translated into the union of Q?

use rqs_geom::exact::Rat;
use rqs_geom::oracles::oracle_interval_containment;
use rqs_geom::problems::{interval_adapter, IntervalInstance};
use rqs_geom::rqs::{choose_params, rqs_solve};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn iv(v: &[(i64, i64)]) -> Vec<(Rat, Rat)> {
    v.iter().map(|&(a, b)| (Rat::from_int(a), Rat::from_int(b))).collect()
}

fn main() {
    let q = iv(&[(0, 2), (5, 9), (12, 13), (15, 21), (30, 31), (33, 40)]);
    let yes = IntervalInstance::new(iv(&[(0, 1), (3, 4), (10, 13)]), q.clone()).unwrap();
    let no = IntervalInstance::new(iv(&[(0, 8)]), q).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (name, inst) in [("yes", yes), ("no", no)] {
        let a = interval_adapter(&inst);
        let params = choose_params(18, 0.1, 2.0, std::f64::consts::E).with_forced_split(4, 4);
        let r = rqs_solve(&a, &params, &mut rng);
        println!("{name}: rqs {} {:?}, oracle {:?}", r.decision, r.witness.map(|w| w.translation), oracle_interval_containment(&inst));
    }
}
