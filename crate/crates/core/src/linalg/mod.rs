//! Exact integer and rational linear algebra.

mod exterior;
mod matrix;
mod poly;
pub mod real_roots;
mod snf;
mod spectral;

pub use exterior::{binomial, exterior_power, k_subsets};
pub use matrix::{IntMatrix, Matrix, RatMatrix, Scalar, MATRIX_SIZE_LIMIT};
pub use poly::{IntPoly, Poly, RatPoly};
pub use snf::{smith_normal_form, SnfDecomposition};
pub use spectral::{
    char_poly, char_poly_rat, graeffe_orbit, graeffe_step, is_roots_of_unity_only, spectral_radius_exceeds_one,
};
