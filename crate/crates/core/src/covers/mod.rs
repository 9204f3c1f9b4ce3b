//! Orientation character of a triangulated manifold, its oriented double
//! cover, and lifting of simplicial self-maps to the cover.

mod cover;
pub mod fixtures;
mod manifold;
mod maps;

pub use cover::{cover_is_orientable, lift_map, oriented_double_cover, DoubleCover, LiftOutcome};
pub use manifold::{orientation_character, CombinatorialManifold, DualEdge, OrientationCharacter};
pub use maps::{CellularMap, CellularSelfMap};
