//! Plants three concurrent lines among random ones and finds them with the
//! recursive search, compared with the all-triples scan.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rqs_geom::exact::{ExactLine, Rat};
use rqs_geom::oracles::oracle_concurrence;
use rqs_geom::problems::p3l_adapter;
use rqs_geom::rqs::{choose_params, rqs_solve};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut lines: Vec<ExactLine> = (0..400)
        .map(|_| ExactLine::from_slope_intercept(Rat::new(rng.gen_range(-10_000..10_000), 997), Rat::new(rng.gen_range(-10_000..10_000), 991)))
        .collect();
    // Three lines through (2, 5).
    for s in [3, -4, 7] {
        lines.push(ExactLine::from_slope_intercept(Rat::from_int(s), Rat::from_int(5 - 2 * s)));
    }
    let oracle = oracle_concurrence(&lines);
    let params = choose_params(lines.len(), 0.1, 2.0, std::f64::consts::E);
    let r = rqs_solve(&p3l_adapter(lines), &params, &mut rng);
    println!("k = {}, base threshold = {}", params.k, params.base_threshold);
    println!("rqs: decision {} witness {:?}", r.decision, r.witness);
    println!("oracle: {:?}", oracle.map(|(p, ids)| (p, ids)));
    println!("ledger {:?} vs classical baseline {:?}", r.ledger, r.baseline);
}
