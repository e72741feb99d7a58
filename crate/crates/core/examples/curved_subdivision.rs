//! Subdivides the plane around sampled unit disks into cells bounded by at
//! most two arcs and two segments, and classifies the remaining disks.

use rqs_geom::curved::{build_disk_arrangement, classify_disks_per_cell, pseudoline_refine, CellDomain, UnitDisk};
use rqs_geom::exact::ApproxPoint;

fn main() {
    let centers = [(0.0, 0.0), (1.2, 0.3), (0.4, 1.5), (2.5, 1.0), (1.0, -1.1), (3.0, -0.5)];
    let centers: Vec<ApproxPoint> = centers.iter().map(|&(x, y)| ApproxPoint::new(x, y)).collect();
    let disks: Vec<UnitDisk> = centers.iter().enumerate().map(|(i, &c)| UnitDisk::new(i, c)).collect();
    let domain = CellDomain::around(&centers);

    let arr = build_disk_arrangement(&disks, &[0, 1, 2], &domain).unwrap();
    println!("3 sampled disks: {} faces, {} cells", arr.num_faces, arr.cells.len());
    let mut refined = pseudoline_refine(&arr);
    println!("with tangent lines: {} cells, at most {} boundary pieces each", refined.cells.len(), refined.max_boundary_pieces());

    classify_disks_per_cell(&mut refined.cells, &disks[3..]);
    let crossed = refined.cells.iter().filter(|c| !c.crossing.is_empty()).count();
    println!("{crossed} cells are crossed by an unsampled disk");

    let path = std::env::temp_dir().join("curved_subdivision.svg");
    std::fs::write(&path, refined.to_svg()).unwrap();
    println!("wrote {}", path.display());
}
