//! Fenchel–Nielsen coordinates on the space of GHMC AdS structures and on
//! its augmentation by pinched multicurves.

pub mod augmented;
pub mod decomposition;
pub mod limit;
pub mod pinch;
pub mod point;
pub mod structure;

pub use augmented::{
    h_inverse, h_map, reduce_twist, stratum_coords, stratum_coords_inverse, theta_renorm, twist_from_theta,
    DegenerateEntry, StratumPoint, UndegenerateEntry,
};
pub use decomposition::{Curve, PantsDecomposition, SlotUse};
pub use limit::{limit_set_sample, preserves_cyclic_order};
pub use pinch::{pinch_path, PinchCurve, PinchSchedule, PinchStep, ScheduleStep};
pub use point::{CurveCoords, FNPoint, PeripheralCoords, Tolerances};
pub use structure::{coords_to_structure, coords_to_structure_with, structure_to_coords, SurfaceStructure};
