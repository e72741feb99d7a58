//! Problem instantiations of the recursive search.

pub mod disk;
pub mod grid_search;
pub mod p3l;
pub mod polygon;
pub mod projection;
pub mod triangle;

use rand_chacha::ChaCha8Rng;

pub use disk::{disk_adapter, DiskAdapter, DiskInstance, DiskSplit, DiskWitness};
pub use grid_search::{
    check_translation, grid_adapter, interval_adapter, pair_adapter, tuple_adapter, GridAdapter, GridProblem, GridSplit,
    IntervalError, IntervalInstance, IntervalWitness, PairSearchInstance, PairWitness, TupleSearchInstance,
};
pub use polygon::{pieces_cut_by, polygon_cut_check, polygon_pair_instance, PolygonError, PolygonInstance};
pub use projection::{
    disjoint_projection_check, projection_pair_instance, Direction, ProjectionError, ProjectionInstance,
};
pub use p3l::{p3l_adapter, Concurrence, P3lAdapter, P3lSplit};
pub use triangle::{solve_area_bound, triangle_adapter, TriangleAdapter, TriangleInstance, TriangleSplit, TriangleWitness};

/// `k` distinct indices from `0..n`, sorted.
pub fn sample_indices(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut s = rand::seq::index::sample(rng, n, k.min(n)).into_vec();
    s.sort_unstable();
    s
}
