//! The cost model: a classical scan charged as a Grover search, and
//! amplification with a bounded repeat budget.

use std::convert::Infallible;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rqs_geom::cost::{amplify, grover_find, AmplificationPolicy, QueryLedger};

fn main() {
    let items: Vec<u32> = (0..100).collect();
    let mut ledger = QueryLedger::new();
    let hit = grover_find(&items, |_, &x, _| Ok::<_, Infallible>(x == 42), &mut ledger).unwrap();
    println!("search over 100 items found {hit:?} for {} queries", ledger.grover_queries);

    // Outer search of 16 items, each an inner search of 16.
    let mut outer = QueryLedger::new();
    grover_find(
        &items[..16],
        |_, _, inner| {
            grover_find(&items[..16], |_, _, _| Ok::<_, Infallible>(false), inner)?;
            Ok::<_, Infallible>(false)
        },
        &mut outer,
    )
    .unwrap();
    println!("nested 16 x 16 search: {} queries against 256 classical checks", outer.grover_queries);

    let policy = AmplificationPolicy::new(0.1);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut l = QueryLedger::new();
    let r = amplify(&policy, &mut l, |_, _| rng.gen_bool(0.5).then_some(()));
    println!("coin-flip procedure with budget {}: {:?} after {} runs", policy.budget(), r, l.amplification_invocations);
}
