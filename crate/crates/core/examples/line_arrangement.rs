//! Builds and triangulates a line arrangement, audits it and walks a zone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rqs_geom::arrangement::{build_arrangement, enclosing_bbox, line_subproblems, zone_of_line};
use rqs_geom::exact::{ExactLine, Rat};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let lines: Vec<ExactLine> = (0..12)
        .map(|_| ExactLine::from_slope_intercept(Rat::new(rng.gen_range(-50..50), 7), Rat::new(rng.gen_range(-50..50), 3)))
        .collect();
    let bbox = enclosing_bbox(&lines);
    let sample = &lines[..5];
    let mut arr = build_arrangement(sample, &bbox).unwrap();
    println!("5 lines: {} vertices, {} edges, {} faces", arr.num_vertices(), arr.num_edges(), arr.num_faces());
    arr.triangulate();
    arr.audit().unwrap();
    println!("after triangulation: {} faces, all triangles: {}", arr.num_faces(), arr.is_triangulated());

    let subs = line_subproblems(&arr, &lines[5..], &[]);
    let largest = subs.iter().map(|s| s.members.len()).max().unwrap_or(0);
    println!("{} bounded faces, the busiest is met by {largest} of the other 7 lines", subs.len());

    let zone = zone_of_line(&lines[1..], &lines[0], &bbox);
    println!("zone of line 0 among 11 others: {} faces, {} edges", zone.faces.len(), zone.edge_count());
}
