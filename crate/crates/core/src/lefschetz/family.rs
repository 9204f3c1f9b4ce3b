use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{exterior_power, IntMatrix};

/// Matrices of `f_*` on the free part of `H_k`, one per degree `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMapFamily {
    maps: Vec<IntMatrix>,
}

impl InducedMapFamily {
    pub fn new(maps: Vec<IntMatrix>) -> Result<Self> {
        for m in &maps {
            if !m.is_square() {
                return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
            }
        }
        Ok(InducedMapFamily { maps })
    }

    pub fn top_degree(&self) -> usize {
        self.maps.len().saturating_sub(1)
    }

    pub fn maps(&self) -> &[IntMatrix] {
        &self.maps
    }

    pub fn map(&self, k: usize) -> Option<&IntMatrix> {
        self.maps.get(k)
    }

    /// Per-degree `m`-th powers: the family of `f^m`.
    pub fn power(&self, m: u32) -> Self {
        InducedMapFamily { maps: self.maps.iter().map(|a| a.pow(m).expect("square by construction")).collect() }
    }

    /// Ranks of the underlying homology groups.
    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(IntMatrix::rows).collect()
    }
}

/// Family of a linear toral map `x -> Ax` on `T^n`: `f_{*k}` is the `k`-th
/// exterior power of `A`.
pub fn toral_induced_family(a: &IntMatrix) -> Result<InducedMapFamily> {
    let n = a.require_square()?;
    if a.det()?.is_zero() {
        return Err(Error::Singular);
    }
    InducedMapFamily::new((0..=n).map(|k| exterior_power(a, k)).collect::<Result<_>>()?)
}

/// Mapping a circle-cross-disk onto itself by winding twice: `H_0 = H_1 = Z`
/// with `f_{*1} = [2]`.
pub fn solenoid_family() -> InducedMapFamily {
    InducedMapFamily { maps: alloc::vec![IntMatrix::from_i64_rows(&[&[1]]), IntMatrix::from_i64_rows(&[&[2]])] }
}

/// `sum_k (-1)^k tr(f_{*k}^m)`. For `m = 0` this is the Euler characteristic.
pub fn lefschetz_number(family: &InducedMapFamily, m: u32) -> BigInt {
    family
        .maps
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let t = a.pow(m).expect("square by construction").trace();
            if k % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// Periodic-point count predicted by the counting form of the Lefschetz-Hopf
/// theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicCount {
    pub m: u32,
    pub lefschetz: BigInt,
    /// `|lefschetz|`.
    pub count: BigInt,
    /// The count equals `|Fix(f^m)|` only if every fixed point of `f^m` has
    /// the same index; that hypothesis is not checked here.
    pub requires_equal_indices: bool,
}

pub fn periodic_count_formula(family: &InducedMapFamily, m: u32) -> PeriodicCount {
    let lefschetz = lefschetz_number(family, m);
    PeriodicCount { m, count: lefschetz.abs(), lefschetz, requires_equal_indices: true }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cat() -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]])
    }

    #[test]
    fn toral_families() {
        let id = toral_induced_family(&IntMatrix::identity(2)).unwrap();
        assert_eq!(id.maps(), &[IntMatrix::identity(1), IntMatrix::identity(2), IntMatrix::identity(1)]);
        assert_eq!(lefschetz_number(&id, 1), BigInt::zero());
        let c = toral_induced_family(&cat()).unwrap();
        assert_eq!(c.map(1), Some(&cat()));
        assert_eq!(c.map(2), Some(&IntMatrix::identity(1)));
        let d = toral_induced_family(&IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(d.map(2), Some(&IntMatrix::from_i64_rows(&[&[6]])));
        assert_eq!(toral_induced_family(&IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn lefschetz_examples() {
        let c = toral_induced_family(&cat()).unwrap();
        assert_eq!(lefschetz_number(&c, 1), BigInt::from(-1));
        assert_eq!(periodic_count_formula(&c, 1).count, BigInt::from(1));
        assert_eq!(periodic_count_formula(&c, 3).count, BigInt::from(16));
        assert_eq!(lefschetz_number(&solenoid_family(), 3), BigInt::from(-7));
        assert_eq!(periodic_count_formula(&solenoid_family(), 5).count, BigInt::from(31));
        assert!(periodic_count_formula(&c, 2).requires_equal_indices);
    }

    proptest! {
        #[test]
        fn powering_commutes_with_lefschetz(e in proptest::collection::vec(-3i64..=3, 9), m in 1u32..=10) {
            let a = IntMatrix::from_i64_rows(&[&e[0..3], &e[3..6], &e[6..9]]);
            let fam = InducedMapFamily::new((0..=3).map(|k| exterior_power(&a, k).unwrap()).collect()).unwrap();
            prop_assert_eq!(lefschetz_number(&fam, m), lefschetz_number(&fam.power(m), 1));
        }
    }
}
