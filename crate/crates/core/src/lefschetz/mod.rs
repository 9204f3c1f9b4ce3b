//! Induced maps on homology, Lefschetz numbers, fixed-point indices and
//! periodic-point counts, with brute-force oracles for toral automorphisms
//! and the doubling map.

mod family;
mod index;
mod oracle;

pub use family::{
    lefschetz_number, periodic_count_formula, solenoid_family, toral_induced_family, InducedMapFamily, PeriodicCount,
};
pub use index::{fixed_point_index, verify_lefschetz_hopf, FixedPointIndex, HopfReport, HyperbolicFixedPointData};
pub use oracle::{solenoid_count, toral_periodic_points_bruteforce, ENUMERATION_LIMIT, SOLENOID_MAX_ITERATE};
