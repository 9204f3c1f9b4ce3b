//! Cellular chain complexes of pairs, integral homology through Smith normal
//! form, standard space models, and exact-sequence rank bookkeeping.

mod complex;
mod les;
mod spaces;

pub use complex::{
    cohomology_rank, euler_characteristic_of, homology, homology_of_complex, ChainComplexPair, HomologyGroup,
    HomologyMode,
};
pub use les::{les_rank_solver, ArrowConstraint, ExactSequenceSpec, LesSolution, LesStatus, SequenceTerm};
pub use spaces::{build_standard_space, StandardSpace, MAX_GENUS};
