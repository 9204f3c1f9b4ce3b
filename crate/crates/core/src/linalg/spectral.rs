//! Characteristic polynomials and exact spectral predicates.
//!
//! The predicates never compute roots numerically. They run Graeffe
//! root-squaring on monic integer polynomials: if every root lies in the closed
//! unit disk then every coefficient of every iterate is bounded by the binomial
//! coefficient `C(n, k)`, so the iterates live in a finite set and must cycle.
//! A cycle forces every root to have modulus 0 or 1; a coefficient escaping the
//! bound certifies a root of modulus greater than one.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::exterior::binomial;
use super::matrix::{IntMatrix, Matrix, RatMatrix, Scalar};
use super::poly::{IntPoly, Poly, RatPoly};
use crate::error::{Error, Result};

fn char_poly_generic<T: Scalar>(a: &Matrix<T>) -> Result<Poly<T>> {
    let n = a.require_square()?;
    let mut coeffs = alloc::vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m = Matrix::<T>::zeros(n, n);
    for k in 1..=n {
        let mut next = a * &m;
        for i in 0..n {
            next[(i, i)] = next[(i, i)].clone() + coeffs[n - k + 1].clone();
        }
        m = next;
        let tr = (a * &m).trace();
        coeffs[n - k] = -(tr / T::from_usize(k).expect("usize fits"));
    }
    Ok(Poly::new(coeffs))
}

/// `det(xI - A)`, monic of degree `n`, computed exactly (Faddeev-LeVerrier;
/// the divisions by `k` are exact over the integers).
pub fn char_poly(a: &IntMatrix) -> Result<IntPoly> {
    char_poly_generic(a)
}

/// Characteristic polynomial of a rational matrix.
pub fn char_poly_rat(a: &RatMatrix) -> Result<RatPoly> {
    char_poly_generic(a)
}

/// One root-squaring step: the monic polynomial whose roots are the squares
/// of the roots of `p`, i.e. `q(x^2) = (-1)^n p(x) p(-x)`.
pub fn graeffe_step(p: &IntPoly) -> IntPoly {
    let prod = p.mul(&p.negate_variable());
    let n = p.degree().unwrap_or(0);
    let sign = if n.is_multiple_of(2) { BigInt::from(1) } else { BigInt::from(-1) };
    IntPoly::new(prod.coeffs().iter().step_by(2).map(|c| c * &sign).collect())
}

fn within_unit_disk_bound(p: &IntPoly) -> bool {
    let n = p.degree().unwrap_or(0);
    p.coeffs().iter().enumerate().all(|(k, c)| {
        let bound = BigInt::from(binomial(n, k));
        c.abs() <= bound
    })
}

fn require_monic(p: &IntPoly) -> Result<()> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if !p.is_monic() {
        Err(Error::NotMonic)
    } else {
        Ok(())
    }
}

/// True iff some complex root of the monic integer polynomial `p` has
/// absolute value strictly greater than one.
pub fn spectral_radius_exceeds_one(p: &IntPoly) -> Result<bool> {
    require_monic(p)?;
    let mut seen = BTreeSet::new();
    let mut cur = p.clone();
    loop {
        if !within_unit_disk_bound(&cur) {
            return Ok(true);
        }
        if !seen.insert(cur.clone()) {
            return Ok(false);
        }
        cur = graeffe_step(&cur);
    }
}

/// True iff every complex root of the monic integer polynomial `p` is a root
/// of unity (Kronecker: a monic integer polynomial with nonzero constant term
/// and all roots in the closed unit disk has only roots of unity as roots).
pub fn is_roots_of_unity_only(p: &IntPoly) -> Result<bool> {
    require_monic(p)?;
    if p.constant().is_zero() {
        return Ok(false);
    }
    Ok(!spectral_radius_exceeds_one(p)?)
}

/// Graeffe orbit of `p` up to the first repeat or bound violation; useful for
/// reports. The last element is either a repeat or the escaping polynomial.
pub fn graeffe_orbit(p: &IntPoly) -> Result<Vec<IntPoly>> {
    require_monic(p)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut cur = p.clone();
    loop {
        out.push(cur.clone());
        if !within_unit_disk_bound(&cur) || !seen.insert(cur.clone()) {
            return Ok(out);
        }
        cur = graeffe_step(&cur);
    }
}
