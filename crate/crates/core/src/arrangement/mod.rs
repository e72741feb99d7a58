//! Line arrangements over exact rationals.

mod bbox;
mod dcel;
mod envelope;
mod grid;
mod walk;
mod zone;

pub use bbox::{enclosing_bbox, vertical_closure_bbox, BBox};
pub use dcel::{build_arrangement, Arrangement, ArrangementError, Carrier, Face, HalfEdge};
pub use envelope::face_envelopes;
pub use grid::{grid_cells, GridArrangement, GridCell, HyperplaneId};
pub(crate) use walk::Walker;
pub use walk::{line_hits_face, line_subproblems, subproblems_of, FaceSubproblem};
pub use zone::{zone_min_vertical_pair, zone_of_line, zone_vertical_pairs, VerticalPair, Zone, ZoneFace, ZoneIndex};
