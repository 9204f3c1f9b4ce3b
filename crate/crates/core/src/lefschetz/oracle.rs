//! Brute-force periodic-point counts, independent of any trace formula.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Outer-loop iterations allowed in the lattice enumeration.
pub const ENUMERATION_LIMIT: u128 = 200_000_000;

/// Largest iterate accepted by [`solenoid_count`].
pub const SOLENOID_MAX_ITERATE: u32 = 24;

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(|| Error::EnumerationLimit(alloc::format!("entry {x} exceeds 128 bits")))
}

fn overflow() -> Error {
    Error::EnumerationLimit("intermediate value exceeds 128 bits".into())
}

/// Integer adjugate by cofactors; fine for the small matrices enumerated here.
fn adjugate(b: &IntMatrix) -> Result<IntMatrix> {
    let n = b.rows();
    let mut adj = IntMatrix::zeros(n, n);
    if n == 1 {
        adj[(0, 0)] = BigInt::from(1);
        return Ok(adj);
    }
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = b.submatrix(&rows, &cols).det()?;
            adj[(i, j)] = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    Ok(adj)
}

/// Counts points `x` in `[0, 1)^n` with `(A^m - I) x` integral, i.e. the
/// fixed points of `x -> A^m x` on the torus.
///
/// Each such `x` corresponds to one integer point `z = (A^m - I) x` of the
/// half-open parallelepiped spanned by the columns of `A^m - I`. The
/// enumeration walks the integer points of its bounding box in all but the
/// last coordinate and solves for the admissible range of the last one
/// exactly, using `x = adj(B) z / det(B)`.
pub fn toral_periodic_points_bruteforce(a: &IntMatrix, m: u32) -> Result<BigInt> {
    let n = a.require_square()?;
    if m == 0 {
        return Err(Error::ZeroIterate);
    }
    let b = a.pow(m)?.try_sub(&IntMatrix::identity(n))?;
    let det = b.det()?;
    if det.is_zero() {
        return Err(Error::NonHyperbolic(alloc::format!("A^{m} - I is singular")));
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let adj = adjugate(&b)?;
    // normalize to a positive denominator
    let sign: i128 = if det > BigInt::zero() { 1 } else { -1 };
    let d = to_i128(&det)? * sign;
    let adj: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| to_i128(&adj[(i, j)]).map(|v| v * sign)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    // bounding box of B [0,1)^n in the first n - 1 coordinates
    let mut lo = Vec::with_capacity(n - 1);
    let mut hi = Vec::with_capacity(n - 1);
    let mut volume: u128 = 1;
    for i in 0..n - 1 {
        let row: Vec<i128> = b.row(i).iter().map(to_i128).collect::<Result<_>>()?;
        let neg: i128 = row.iter().filter(|v| **v < 0).sum();
        let pos: i128 = row.iter().filter(|v| **v > 0).sum();
        lo.push(neg);
        hi.push(pos);
        volume = volume.saturating_mul((pos - neg + 1) as u128);
    }
    if volume > ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit(alloc::format!("{volume} lattice slices")));
    }
    let mut z = lo.clone();
    let mut count: u128 = 0;
    loop {
        // constraints 0 <= c_i + a_i z_n < d for every row i of adj
        let mut zmin = i128::MIN;
        let mut zmax = i128::MAX;
        for row in &adj {
            let mut c: i128 = 0;
            for j in 0..n - 1 {
                c = row[j].checked_mul(z[j]).and_then(|t| c.checked_add(t)).ok_or_else(overflow)?;
            }
            let coef = row[n - 1];
            if coef == 0 {
                if c < 0 || c >= d {
                    zmin = 1;
                    zmax = 0;
                }
            } else if coef > 0 {
                zmin = zmin.max(Integer::div_ceil(&-c, &coef));
                zmax = zmax.min(Integer::div_floor(&(d - 1 - c), &coef));
            } else {
                let a = -coef;
                zmin = zmin.max(Integer::div_ceil(&(c + 1 - d), &a));
                zmax = zmax.min(Integer::div_floor(&c, &a));
            }
        }
        if zmin <= zmax {
            count += (zmax - zmin + 1) as u128;
        }
        // odometer over the first n - 1 coordinates
        let mut i = 0;
        loop {
            if i == n - 1 {
                return Ok(BigInt::from(count));
            }
            if z[i] < hi[i] {
                z[i] += 1;
                break;
            }
            z[i] = lo[i];
            i += 1;
        }
    }
}

/// Fixed points of the `m`-th iterate of angle doubling on the circle,
/// found by testing every rational `k / (2^m - 1)` in `[0, 1)`.
pub fn solenoid_count(m: u32) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroIterate);
    }
    if m > SOLENOID_MAX_ITERATE {
        return Err(Error::EnumerationLimit(alloc::format!("iterate {m} exceeds {SOLENOID_MAX_ITERATE}")));
    }
    let den: u64 = (1 << m) - 1;
    let mut fixed = 0;
    for k in 0..den {
        let mut x = k;
        for _ in 0..m {
            x = (2 * x) % den;
        }
        if x == k {
            fixed += 1;
        }
    }
    Ok(fixed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]])
    }

    #[test]
    fn cat_map_counts() {
        let got: Vec<BigInt> = (1..=3).map(|m| toral_periodic_points_bruteforce(&cat(), m).unwrap()).collect();
        assert_eq!(got, alloc::vec![BigInt::from(1), BigInt::from(5), BigInt::from(16)]);
    }

    #[test]
    fn agrees_with_determinant_on_assorted_matrices() {
        let ms = [
            IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]),
            IntMatrix::from_i64_rows(&[&[0, 1], &[1, 1]]),
            IntMatrix::from_i64_rows(&[&[-3, 1], &[1, 0]]),
            IntMatrix::from_i64_rows(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]]),
            IntMatrix::from_i64_rows(&[&[5]]),
            IntMatrix::from_i64_rows(&[&[-2]]),
        ];
        for a in &ms {
            for m in 1..=4 {
                let n = a.rows();
                let det = a.pow(m).unwrap().try_sub(&IntMatrix::identity(n)).unwrap().det().unwrap();
                assert_eq!(toral_periodic_points_bruteforce(a, m).unwrap(), num_traits::Signed::abs(&det), "{a} m={m}");
            }
        }
    }

    #[test]
    fn non_hyperbolic_iterate_is_rejected() {
        // rotation by a quarter turn: A^4 = I
        let r = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]);
        assert!(toral_periodic_points_bruteforce(&r, 1).is_ok());
        assert!(matches!(toral_periodic_points_bruteforce(&r, 4), Err(Error::NonHyperbolic(_))));
        assert_eq!(toral_periodic_points_bruteforce(&r, 0), Err(Error::ZeroIterate));
    }

    #[test]
    fn doubling_map() {
        assert_eq!(solenoid_count(1).unwrap(), 1);
        assert_eq!(solenoid_count(3).unwrap(), 7);
        assert_eq!(solenoid_count(10).unwrap(), 1023);
        assert_eq!(solenoid_count(0), Err(Error::ZeroIterate));
        assert!(solenoid_count(SOLENOID_MAX_ITERATE + 1).is_err());
    }
}
