use alloc::vec::Vec;

use super::matrix::{IntMatrix, MATRIX_SIZE_LIMIT};
use crate::error::{Error, Result};

const EXTERIOR_BASIS_LIMIT: u128 = 10_000;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Matrix of the `k`-th exterior power in the lexicographic basis of `k`-subsets.
///
/// Entry `(I, J)` is the minor `det A[I, J]`, so `Λ^0 A = [1]`, `Λ^1 A = A`
/// and `Λ^n A = [det A]`.
pub fn exterior_power(a: &IntMatrix, k: usize) -> Result<IntMatrix> {
    let n = a.require_square()?;
    if n > MATRIX_SIZE_LIMIT {
        return Err(Error::TooLarge { limit: MATRIX_SIZE_LIMIT });
    }
    if k > n {
        return Err(Error::DegreeOutOfRange { k, n });
    }
    let count = binomial(n, k);
    if count > EXTERIOR_BASIS_LIMIT {
        return Err(Error::ExteriorTooLarge { count });
    }
    let basis = k_subsets(n, k);
    let mut out = IntMatrix::zeros(basis.len(), basis.len());
    for (r, rows) in basis.iter().enumerate() {
        for (c, cols) in basis.iter().enumerate() {
            out[(r, c)] = a.submatrix(rows, cols).det()?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            k_subsets(4, 2),
            alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![0, 2],
                alloc::vec![0, 3],
                alloc::vec![1, 2],
                alloc::vec![1, 3],
                alloc::vec![2, 3]
            ]
        );
        assert_eq!(k_subsets(3, 0), alloc::vec![Vec::<usize>::new()]);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn extreme_degrees() {
        let a = IntMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 1, 3], &[0, -1, 4]]);
        assert_eq!(exterior_power(&a, 0).unwrap(), IntMatrix::identity(1));
        assert_eq!(exterior_power(&a, 1).unwrap(), a);
        assert_eq!(exterior_power(&a, 3).unwrap()[(0, 0)], a.det().unwrap());
        assert_eq!(exterior_power(&a, 4), Err(Error::DegreeOutOfRange { k: 4, n: 3 }));
    }

    #[test]
    fn exterior_is_multiplicative() {
        let a = IntMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 1, 3], &[0, -1, 4]]);
        let b = IntMatrix::from_i64_rows(&[&[1, 0, 2], &[-1, 3, 1], &[2, 2, 0]]);
        let ab = &a * &b;
        let lhs = exterior_power(&ab, 2).unwrap();
        let rhs = &exterior_power(&a, 2).unwrap() * &exterior_power(&b, 2).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.rows(), 3);
    }

    #[test]
    fn guardrail_refuses_huge_bases() {
        let a = IntMatrix::identity(20);
        assert_eq!(exterior_power(&a, 10), Err(Error::ExteriorTooLarge { count: 184_756 }));
        assert!(exterior_power(&a, 3).is_ok());
    }
}
