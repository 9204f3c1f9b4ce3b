use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::family::{lefschetz_number, InducedMapFamily};
use crate::error::{Error, Result};
use crate::linalg::real_roots::{real_roots_below_minus_one, unit_disk_census};
use crate::linalg::{char_poly_rat, RatMatrix};

/// Derivative at a hyperbolic fixed point, with its unstable dimension and
/// the orientation sign of `Df` on the unstable subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicFixedPointData {
    df: RatMatrix,
    unstable_dimension: usize,
    orientation_sign: i8,
}

impl HyperbolicFixedPointData {
    /// Certifies hyperbolicity exactly: the characteristic polynomial must
    /// have no root on the unit circle. The unstable dimension is the number
    /// of roots outside the disk; the orientation sign is `-1` to the number
    /// of real roots below `-1` (complex pairs contribute `|λ|^2 > 0`).
    pub fn new(df: RatMatrix) -> Result<Self> {
        df.require_square()?;
        let p = char_poly_rat(&df)?;
        let census = unit_disk_census(&p)
            .ok_or_else(|| Error::NonHyperbolic(alloc::format!("Df = {df} has an eigenvalue on the unit circle")))?;
        let flips = real_roots_below_minus_one(&p).expect("-1 is not a root");
        Ok(HyperbolicFixedPointData {
            df,
            unstable_dimension: census.outside,
            orientation_sign: if flips.is_multiple_of(2) { 1 } else { -1 },
        })
    }

    pub fn df(&self) -> &RatMatrix {
        &self.df
    }

    pub fn unstable_dimension(&self) -> usize {
        self.unstable_dimension
    }

    pub fn orientation_sign(&self) -> i8 {
        self.orientation_sign
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedPointIndex {
    /// `sign det(I - Df)`.
    pub index: i8,
    pub unstable_dimension: usize,
    pub orientation_sign: i8,
    /// Whether `index = (-1)^unstable_dimension * orientation_sign`.
    pub decomposition_agrees: bool,
}

pub fn fixed_point_index(data: &HyperbolicFixedPointData) -> FixedPointIndex {
    let n = data.df.rows();
    let det = RatMatrix::identity(n).try_sub(&data.df).expect("square").det().expect("square");
    debug_assert!(!det.is_zero());
    let index = if det.is_positive() { 1 } else { -1 };
    let parity = if data.unstable_dimension.is_multiple_of(2) { 1 } else { -1 };
    FixedPointIndex {
        index,
        unstable_dimension: data.unstable_dimension,
        orientation_sign: data.orientation_sign,
        decomposition_agrees: index == parity * data.orientation_sign,
    }
}

/// Both sides of the Lefschetz-Hopf equality for `f^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfReport {
    pub m: u32,
    pub indices: Vec<FixedPointIndex>,
    pub index_sum: BigInt,
    pub lefschetz: BigInt,
    pub agrees: bool,
}

/// Compares `sum_p I(p, f^m)` with `Λ(f^m)`. Each entry of `fixed_points`
/// carries the derivative of `f^m` at one point of `Fix(f^m)`.
pub fn verify_lefschetz_hopf(
    family: &InducedMapFamily,
    fixed_points: &[HyperbolicFixedPointData],
    m: u32,
) -> Result<HopfReport> {
    if m == 0 {
        return Err(Error::ZeroIterate);
    }
    let indices: Vec<FixedPointIndex> = fixed_points.iter().map(fixed_point_index).collect();
    let index_sum: BigInt = indices.iter().map(|i| BigInt::from(i.index)).sum();
    let lefschetz = lefschetz_number(family, m);
    Ok(HopfReport { m, agrees: index_sum == lefschetz, indices, index_sum, lefschetz })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::toral_induced_family;
    use crate::linalg::real_roots::rat;
    use crate::linalg::IntMatrix;

    fn diag(entries: &[(i64, i64)]) -> RatMatrix {
        let n = entries.len();
        let mut m = RatMatrix::zeros(n, n);
        for (i, &(a, b)) in entries.iter().enumerate() {
            m[(i, i)] = rat(a, b);
        }
        m
    }

    fn point(entries: &[(i64, i64)]) -> HyperbolicFixedPointData {
        HyperbolicFixedPointData::new(diag(entries)).unwrap()
    }

    #[test]
    fn one_dimensional_examples() {
        let sink = fixed_point_index(&point(&[(1, 2)]));
        assert_eq!((sink.index, sink.unstable_dimension, sink.orientation_sign), (1, 0, 1));
        let source = fixed_point_index(&point(&[(2, 1)]));
        assert_eq!((source.index, source.unstable_dimension, source.orientation_sign), (-1, 1, 1));
        let flip = fixed_point_index(&point(&[(-2, 1)]));
        assert_eq!((flip.index, flip.unstable_dimension, flip.orientation_sign), (1, 1, -1));
        for i in [sink, source, flip] {
            assert!(i.decomposition_agrees);
        }
    }

    #[test]
    fn unit_circle_is_rejected() {
        assert!(matches!(HyperbolicFixedPointData::new(diag(&[(1, 1)])), Err(Error::NonHyperbolic(_))));
        assert!(matches!(HyperbolicFixedPointData::new(diag(&[(3, 1), (-1, 1)])), Err(Error::NonHyperbolic(_))));
        // rotation by a quarter turn
        let rot = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]).to_rational();
        assert!(HyperbolicFixedPointData::new(rot).is_err());
    }

    #[test]
    fn complex_unstable_pair_is_orientation_preserving() {
        // 2 * rotation by a quarter turn, plus a contracting direction
        let mut m = RatMatrix::zeros(3, 3);
        m[(0, 1)] = rat(-2, 1);
        m[(1, 0)] = rat(2, 1);
        m[(2, 2)] = rat(-1, 3);
        let i = fixed_point_index(&HyperbolicFixedPointData::new(m).unwrap());
        assert_eq!((i.unstable_dimension, i.orientation_sign, i.index), (2, 1, 1));
        assert!(i.decomposition_agrees);
    }

    #[test]
    fn hopf_examples() {
        let circle = InducedMapFamily::new(alloc::vec![IntMatrix::identity(1), IntMatrix::identity(1)]).unwrap();
        let r = verify_lefschetz_hopf(&circle, &[point(&[(1, 2)]), point(&[(2, 1)])], 1).unwrap();
        assert!(r.agrees && r.lefschetz.is_zero());
        let sphere =
            InducedMapFamily::new(alloc::vec![IntMatrix::identity(1), IntMatrix::zeros(0, 0), IntMatrix::identity(1)])
                .unwrap();
        let north_south = [point(&[(1, 3), (1, 3)]), point(&[(3, 1), (3, 1)])];
        let r = verify_lefschetz_hopf(&sphere, &north_south, 1).unwrap();
        assert!(r.agrees);
        assert_eq!(r.index_sum, BigInt::from(2));
        let cat = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let origin = HyperbolicFixedPointData::new(cat.to_rational()).unwrap();
        let r = verify_lefschetz_hopf(&toral_induced_family(&cat).unwrap(), &[origin], 1).unwrap();
        assert!(r.agrees);
        assert_eq!(r.lefschetz, BigInt::from(-1));
    }

    #[test]
    fn equal_unstable_data_gives_equal_indices() {
        // every point has one unstable direction with positive eigenvalue
        let pts: Vec<_> = [(3, 1), (5, 2), (7, 1)].iter().map(|&e| point(&[e, (1, 4)])).collect();
        let idx: Vec<i8> = pts.iter().map(|p| fixed_point_index(p).index).collect();
        assert!(idx.iter().all(|&i| i == -1));
        let sum: i64 = idx.iter().map(|&i| i as i64).sum();
        assert_eq!(sum, -(pts.len() as i64));
    }
}
