//! Exact algebraic topology for hyperbolic dynamics models.
//!
//! Everything in this crate works over arbitrary-precision integers and
//! rationals; there is no floating point anywhere. The crate is `no_std` and
//! only needs `alloc`.
//!
//! - [`linalg`]: integer/rational matrices and polynomials, Smith normal form,
//!   characteristic polynomials, exterior powers, certified spectral predicates.
//! - [`homology`]: chain-complex pairs, standard low-dimensional spaces,
//!   integral (relative) homology and the exact-sequence rank solver.
//! - [`lefschetz`]: induced map families, Lefschetz numbers, fixed-point indices
//!   and brute-force periodic point oracles.
//! - [`duality`]: dual-basis transport of induced maps and reciprocal spectra.
//! - [`covers`]: orientation character, orientation double cover, map lifting.
//! - [`structure`]: Smale order, pair ledgers and the attractor structure checker.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod covers;
pub mod duality;
pub mod error;
pub mod homology;
pub mod lefschetz;
pub mod linalg;
pub mod structure;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
