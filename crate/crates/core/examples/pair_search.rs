//! Pair search with geometric predicates: cutting a polygon into K pieces
//! with a line, and projecting convex polygons to disjoint intervals.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rqs_geom::exact::ExactPoint;
use rqs_geom::oracles::{oracle_disjoint_projection, oracle_pair_search};
use rqs_geom::problems::{
    disjoint_projection_check, pair_adapter, polygon_cut_check, polygon_pair_instance, projection_pair_instance, PolygonInstance,
    ProjectionInstance,
};
use rqs_geom::rqs::{choose_params, rqs_solve};

fn pts(v: &[(i64, i64)]) -> Vec<ExactPoint> {
    v.iter().map(|&(x, y)| ExactPoint::from_ints(x, y)).collect()
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let comb = pts(&[(0, 0), (11, 0), (11, 4), (9, 4), (9, 1), (7, 1), (7, 4), (5, 4), (5, 1), (3, 1), (3, 4), (0, 4)]);
    let poly = PolygonInstance::new(comb, 11, 4).unwrap();
    let pairs = polygon_pair_instance(&poly);
    let params = choose_params(2 * pairs.n, 0.1, 2.0, std::f64::consts::E).with_forced_split(4, 6);
    let r = rqs_solve(&pair_adapter(&pairs), &params, &mut rng);
    let w = r.witness.unwrap();
    println!("comb cut into 4 pieces near vertices ({}, {}): {:?}", w.i, w.j, polygon_cut_check(&poly, w.i, w.j).unwrap());
    println!("oracle pair: {:?}", oracle_pair_search(&pairs));

    let square = |x: i64, y: i64| pts(&[(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]);
    let proj = ProjectionInstance::new(vec![square(0, 0), square(3, 1), square(6, -1), square(1, 4)]).unwrap();
    let pairs = projection_pair_instance(&proj);
    let params = choose_params(2 * pairs.n, 0.1, 2.0, std::f64::consts::E);
    let r = rqs_solve(&pair_adapter(&pairs), &params, &mut rng);
    match r.witness {
        Some(w) => println!("disjoint projections along {:?}", disjoint_projection_check(&proj, w.i, w.j).unwrap()),
        None => println!("no direction separates all projections"),
    }
    let sweep = oracle_disjoint_projection(&proj.polygons).map(|(x, y)| (x.to_f64(), y.to_f64()));
    println!("direction sweep: {sweep:?}");
}
