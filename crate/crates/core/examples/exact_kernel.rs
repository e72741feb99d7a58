//! Exact rational predicates and the point-line duality.

use rqs_geom::exact::{
    circle_circle_intersections, dual_of_point, line_intersection, triangle_area2, vertical_distance, ApproxPoint, ExactLine,
    ExactPoint, Intersection, Rat,
};

fn main() {
    let l1 = ExactLine::from_slope_intercept(Rat::from_int(2), Rat::from_int(-3));
    let l2 = ExactLine::from_slope_intercept(Rat::one(), Rat::from_int(-1));
    if let Intersection::Point(p) = line_intersection(&l1, &l2) {
        println!("y = 2x - 3 and y = x - 1 meet at ({}, {})", p.x, p.y);
    }

    let q = ExactPoint::from_ints(1, 0);
    let l = ExactLine::from_slope_intercept(Rat::from_int(3), Rat::from_int(-1));
    println!("vertical distance from (1, 0) to y = 3x - 1: {}", vertical_distance(&q, &l).unwrap());

    let (a, b, c) = (ExactPoint::from_ints(0, 0), ExactPoint::from_ints(3, 1), ExactPoint::from_ints(1, 4));
    println!("twice the area of (0,0),(3,1),(1,4): {}", triangle_area2(&a, &b, &c));

    let third: Rat = "1/3".parse().unwrap();
    let d = dual_of_point(&ExactPoint::new(third.clone(), "0.25".parse().unwrap()));
    println!("dual of (1/3, 1/4): {}x + {}y = {}", d.a, d.b, d.c);

    for p in circle_circle_intersections(ApproxPoint::new(0.0, 0.0), ApproxPoint::new(1.0, 0.0), 1.0) {
        println!("unit circles around (0,0) and (1,0) meet at ({:.6}, {:.6})", p.x, p.y);
    }
}
