use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form `U * M * V = D` with `U`, `V` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// Nonzero diagonal entries of `D`, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).take_while(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Invariant factors greater than one: the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors().into_iter().filter(|x| !x.is_one()).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m.cols() {
                let s = m[(src, j)].clone();
                if !s.is_zero() {
                    m[(dst, j)] += c * s;
                }
            }
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for i in 0..m.rows() {
                let s = m[(i, src)].clone();
                if !s.is_zero() {
                    m[(i, dst)] += c * s;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m.cols() {
                let x = -m[(i, j)].clone();
                m[(i, j)] = x;
            }
        }
    }

    /// Nonzero entry of least absolute value in the block starting at (t, t);
    /// ties go to the lexicographically smallest (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let mag = x.abs();
                if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                    best = Some(((i, j), mag));
                }
            }
        }
        best.map(|(p, _)| p)
    }
}

/// Smith normal form with minimal-absolute-value pivoting.
///
/// Total: every integer matrix (including empty and zero matrices) has one.
/// `D` is diagonal, nonnegative, and each diagonal entry divides the next.
pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work { a: m.clone(), u: IntMatrix::identity(rows), v: IntMatrix::identity(cols) };
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = w.pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let p = w.a[(t, t)].clone();
            for i in t + 1..rows {
                let x = w.a[(i, t)].clone();
                if !x.is_zero() {
                    w.add_row(i, t, &-x.div_floor(&p));
                }
            }
            for j in t + 1..cols {
                let x = w.a[(t, j)].clone();
                if !x.is_zero() {
                    w.add_col(j, t, &-x.div_floor(&p));
                }
            }
            let dirty = (t + 1..rows).any(|i| !w.a[(i, t)].is_zero()) || (t + 1..cols).any(|j| !w.a[(t, j)].is_zero());
            if !dirty {
                let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[(i, j)].is_multiple_of(&p)));
                match offender {
                    Some(i) => w.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            // Remainders are strictly smaller than the old pivot, so re-pivoting terminates.
            let (pi, pj) = w.pivot(t).expect("block still has a nonzero entry");
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    SnfDecomposition { u: w.u, d: w.a, v: w.v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> SnfDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.u.det().unwrap().abs().is_one());
        assert!(s.v.det().unwrap().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                } else {
                    assert!(!s.d[(i, i)].is_negative());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "{:?}", f);
        }
        s
    }

    #[test]
    fn zero_matrix_keeps_identity_transforms() {
        let s = check(&IntMatrix::zeros(2, 2));
        assert!(s.d.is_zero());
        assert!(s.u.is_identity() && s.v.is_identity());
    }

    #[test]
    fn identity_is_its_own_form() {
        let s = check(&IntMatrix::identity(4));
        assert!(s.d.is_identity());
    }

    #[test]
    fn two_four_six_eight() {
        // gcd of entries 2, |det| = 8, so diag(2, 4).
        let s = check(&IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.d, IntMatrix::from_i64_rows(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn non_square_and_empty() {
        let s = check(&IntMatrix::from_i64_rows(&[&[2, 0, 0], &[0, 3, 0]]));
        assert_eq!(s.invariant_factors(), alloc::vec![BigInt::from(1), BigInt::from(6)]);
        let e = check(&IntMatrix::zeros(0, 3));
        assert_eq!(e.rank(), 0);
        let e = check(&IntMatrix::zeros(3, 0));
        assert_eq!(e.u, IntMatrix::identity(3));
    }

    proptest! {
        #[test]
        fn random_small_matrices(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-6i64..=6, 16)) {
            let data: Vec<BigInt> = (0..rows * cols).map(|k| BigInt::from(seed[k])).collect();
            let m = IntMatrix::from_vec(rows, cols, data).unwrap();
            let s = check(&m);
            // product of invariant factors equals |det| for full-rank square input
            if rows == cols {
                let det = m.det().unwrap().abs();
                let prod: BigInt = if s.rank() == rows { s.invariant_factors().iter().product() } else { BigInt::zero() };
                prop_assert_eq!(det, prod);
            }
        }
    }
}
