//! Symbolic models of structurally stable diffeomorphisms of 3-manifolds:
//! Smale order of the basic sets, the cohomology ledger of the filtration
//! pairs, eigenvalue budgets, and the attractor structure checker.

mod check;
pub mod fixtures;
mod ledger;
mod model;
mod order;

pub use check::{theorem_check, CheckReport, Step, TraceStep, Verdict};
pub use ledger::{
    eigenvalue_budget, pair_ledger, permutation_h0_eigen, ActionClass, EigenvalueBudget, LedgerEntry, PairLedger,
    PairRecord, PermutationSpectrum, SpectralClass,
};
pub use model::{Ambient, BasicSetKind, BasicSetSpec, StructureModel, TrappingTopology};
pub use order::{smale_order, SmaleOrder};
