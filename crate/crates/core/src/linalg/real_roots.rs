//! Sturm sequences and exact root location for rational polynomials.
//!
//! Used where Graeffe cycling does not apply (non-monic, rational
//! characteristic polynomials): counting real roots in intervals, and counting
//! roots inside/outside the unit disk through the Cayley transform
//! `x = (1 + z) / (1 - z)` and the argument principle on the imaginary axis.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::RatPoly;

/// Signed remainder sequence starting from `f0, f1`.
fn remainder_chain(f0: RatPoly, f1: RatPoly) -> Vec<RatPoly> {
    let mut chain = alloc::vec![f0, f1];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        chain.push(r);
    }
}

/// Where a chain is evaluated: a finite point or one of the infinities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    NegInfinity,
    At(BigRational),
    PosInfinity,
}

fn sign_at(p: &RatPoly, at: &Point) -> i8 {
    let v = match at {
        Point::At(x) => p.eval(x),
        Point::PosInfinity => p.leading(),
        Point::NegInfinity => {
            let d = p.degree().unwrap_or(0);
            if d.is_multiple_of(2) {
                p.leading()
            } else {
                -p.leading()
            }
        }
    };
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(chain: &[RatPoly], at: &Point) -> usize {
    let signs: Vec<i8> = chain.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
///
/// Finite endpoints must not be roots of `p`; returns `None` if one is.
pub fn count_real_roots(p: &RatPoly, a: &Point, b: &Point) -> Option<usize> {
    if p.is_zero() {
        return None;
    }
    for e in [a, b] {
        if let Point::At(x) = e {
            if p.eval(x).is_zero() {
                return None;
            }
        }
    }
    if p.degree() == Some(0) {
        return Some(0);
    }
    let chain = remainder_chain(p.clone(), p.derivative());
    Some(variations(&chain, a).saturating_sub(variations(&chain, b)))
}

/// Cauchy index of `num / den` over the whole real line: the number of poles
/// where the quotient jumps from -inf to +inf minus those jumping the other way.
pub fn cauchy_index(num: &RatPoly, den: &RatPoly) -> i64 {
    let proper = num.rem(den);
    if proper.is_zero() {
        return 0;
    }
    let chain = remainder_chain(den.clone(), proper);
    variations(&chain, &Point::NegInfinity) as i64 - variations(&chain, &Point::PosInfinity) as i64
}

/// Root counts of a polynomial with no roots on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiskCensus {
    /// Roots with `|z| < 1`, with multiplicity.
    pub inside: usize,
    /// Roots with `|z| > 1`, with multiplicity.
    pub outside: usize,
}

fn binomial_poly(plus: usize, minus: usize) -> RatPoly {
    // (1 + z)^plus (1 - z)^minus
    let one_plus = RatPoly::from_i64(&[1, 1]);
    let one_minus = RatPoly::from_i64(&[1, -1]);
    one_plus.pow(plus as u32).mul(&one_minus.pow(minus as u32))
}

/// `(1 - z)^n p((1 + z) / (1 - z))`: maps roots inside the unit disk to the
/// open left half-plane and roots outside to the right half-plane.
pub fn cayley_transform(p: &RatPoly) -> RatPoly {
    let n = p.degree().unwrap_or(0);
    p.coeffs().iter().enumerate().fold(RatPoly::zero(), |acc, (k, c)| acc.add(&binomial_poly(k, n - k).scale(c)))
}

/// Real and imaginary parts of `q(iw)` as real polynomials in `w`.
fn imaginary_axis_parts(q: &RatPoly) -> (RatPoly, RatPoly) {
    let mut re = Vec::new();
    let mut im = Vec::new();
    for (k, c) in q.coeffs().iter().enumerate() {
        let (target, other) = if k % 2 == 0 { (&mut re, &mut im) } else { (&mut im, &mut re) };
        // i^k = 1, i, -1, -i
        let c = if (k / 2) % 2 == 0 { c.clone() } else { -c.clone() };
        target.push(c);
        other.push(BigRational::zero());
    }
    (RatPoly::new(re), RatPoly::new(im))
}

/// True iff `p` has a root on the unit circle.
pub fn has_unit_circle_root(p: &RatPoly) -> bool {
    let one = BigRational::one();
    if p.eval(&one).is_zero() || p.eval(&-one).is_zero() {
        return true;
    }
    let (re, im) = imaginary_axis_parts(&cayley_transform(p));
    let g = re.gcd(&im);
    match g.degree() {
        None | Some(0) => false,
        Some(_) => count_real_roots(&g, &Point::NegInfinity, &Point::PosInfinity).is_some_and(|c| c > 0),
    }
}

/// Counts roots inside and outside the unit disk; `None` if a root lies on
/// the unit circle (or `p` is zero).
pub fn unit_disk_census(p: &RatPoly) -> Option<DiskCensus> {
    let n = p.degree()?;
    if has_unit_circle_root(p) {
        return None;
    }
    if n == 0 {
        return Some(DiskCensus { inside: 0, outside: 0 });
    }
    let q = cayley_transform(p);
    debug_assert_eq!(q.degree(), Some(n));
    let (re, im) = imaginary_axis_parts(&q);
    // total change of arg q(iw), in units of pi, equals (#left - #right)
    let winding = if n % 2 == 0 { -cauchy_index(&im, &re) } else { cauchy_index(&re, &im) };
    let right = (n as i64 - winding) / 2;
    debug_assert!((0..=n as i64).contains(&right));
    Some(DiskCensus { inside: n - right as usize, outside: right as usize })
}

/// Real roots strictly less than -1, counted with multiplicity.
pub fn real_roots_below_minus_one(p: &RatPoly) -> Option<usize> {
    with_multiplicity(p, &Point::NegInfinity, &Point::At(-BigRational::one()))
}

/// Real roots strictly greater than 1, counted with multiplicity.
pub fn real_roots_above_one(p: &RatPoly) -> Option<usize> {
    with_multiplicity(p, &Point::At(BigRational::one()), &Point::PosInfinity)
}

/// Counts with multiplicity by peeling off repeated factors `gcd(p, p')`.
fn with_multiplicity(p: &RatPoly, a: &Point, b: &Point) -> Option<usize> {
    let mut total = 0;
    let mut cur = p.clone();
    while cur.degree().is_some_and(|d| d > 0) {
        total += count_real_roots(&cur, a, b)?;
        cur = cur.gcd(&cur.derivative());
    }
    Some(total)
}

/// Integer helper for tests and reports.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntPoly;

    fn from_roots(roots: &[BigRational]) -> RatPoly {
        roots.iter().fold(RatPoly::one(), |acc, r| acc.mul(&RatPoly::linear_root(r.clone())))
    }

    #[test]
    fn sturm_counts_real_roots() {
        let p = from_roots(&[rat(-3, 1), rat(1, 2), rat(5, 2)]);
        let all = count_real_roots(&p, &Point::NegInfinity, &Point::PosInfinity);
        assert_eq!(all, Some(3));
        assert_eq!(count_real_roots(&p, &Point::At(rat(0, 1)), &Point::At(rat(3, 1))), Some(2));
        assert_eq!(count_real_roots(&p, &Point::At(rat(1, 2)), &Point::PosInfinity), None);
        // x^2 + 1 has none
        let q = IntPoly::from_i64(&[1, 0, 1]).to_rational();
        assert_eq!(count_real_roots(&q, &Point::NegInfinity, &Point::PosInfinity), Some(0));
    }

    #[test]
    fn disk_census_real_roots() {
        let p = from_roots(&[rat(3, 1), rat(1, 3), rat(-1, 2), rat(-7, 4)]);
        assert_eq!(unit_disk_census(&p), Some(DiskCensus { inside: 2, outside: 2 }));
        assert_eq!(real_roots_below_minus_one(&p), Some(1));
        assert_eq!(real_roots_above_one(&p), Some(1));
        let odd = from_roots(&[rat(2, 1), rat(1, 2), rat(1, 5)]);
        assert_eq!(unit_disk_census(&odd), Some(DiskCensus { inside: 2, outside: 1 }));
    }

    #[test]
    fn disk_census_complex_pairs() {
        // x^2 - 2ax + (a^2 + b^2): roots a +- bi
        let pair = |a: BigRational, m: BigRational| RatPoly::new(alloc::vec![m, -(a * rat(2, 1)), BigRational::one()]);
        let big = pair(rat(1, 1), rat(5, 1)); // |z|^2 = 5
        let small = pair(rat(1, 3), rat(1, 4)); // |z|^2 = 1/4
        assert_eq!(unit_disk_census(&big), Some(DiskCensus { inside: 0, outside: 2 }));
        assert_eq!(unit_disk_census(&small), Some(DiskCensus { inside: 2, outside: 0 }));
        let both = big.mul(&small).mul(&from_roots(&[rat(-4, 1)]));
        assert_eq!(unit_disk_census(&both), Some(DiskCensus { inside: 2, outside: 3 }));
        assert_eq!(real_roots_below_minus_one(&both), Some(1));
    }

    #[test]
    fn unit_circle_roots_are_detected() {
        assert!(has_unit_circle_root(&IntPoly::from_i64(&[1, 0, 1]).to_rational()));
        assert!(has_unit_circle_root(&IntPoly::from_i64(&[1, 1, 1]).to_rational()));
        assert!(has_unit_circle_root(&IntPoly::from_i64(&[1, 1]).to_rational()));
        // (3/5 + 4/5 i) pair: x^2 - 6/5 x + 1
        let p = RatPoly::new(alloc::vec![rat(1, 1), rat(-6, 5), rat(1, 1)]);
        assert!(has_unit_circle_root(&p));
        assert_eq!(unit_disk_census(&p), None);
        // reciprocal pair 2, 1/2 is off the circle
        let q = from_roots(&[rat(2, 1), rat(1, 2)]);
        assert!(!has_unit_circle_root(&q));
        assert_eq!(unit_disk_census(&q), Some(DiskCensus { inside: 1, outside: 1 }));
    }

    #[test]
    fn multiplicities_are_counted() {
        let p = from_roots(&[rat(-2, 1), rat(-2, 1), rat(3, 1), rat(3, 1), rat(3, 1)]);
        assert_eq!(real_roots_below_minus_one(&p), Some(2));
        assert_eq!(real_roots_above_one(&p), Some(3));
        assert_eq!(unit_disk_census(&p), Some(DiskCensus { inside: 0, outside: 5 }));
    }
}
