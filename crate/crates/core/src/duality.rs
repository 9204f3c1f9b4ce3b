//! Transport of induced maps to the dual basis of an intersection pairing,
//! and the matching reciprocity of characteristic polynomials.
//!
//! If `f` acts by `A` on a basis `e` and by `B` on a basis `ε` paired with
//! it by the intersection matrix `G`, invariance of intersection numbers up
//! to the degree of `f` reads `A^T G B = ±G`, so `B = ±G^{-1} (A^T)^{-1} G`.
//! For dual bases (`G = I`) this is `B^T = ±A^{-1}`.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, RatMatrix, RatPoly};

/// Degree of the map on the ambient manifold: `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeSign {
    Plus,
    Minus,
}

impl DegreeSign {
    pub fn value(self) -> i64 {
        match self {
            DegreeSign::Plus => 1,
            DegreeSign::Minus => -1,
        }
    }

    fn rational(self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.value()))
    }
}

impl TryFrom<i64> for DegreeSign {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(DegreeSign::Plus),
            -1 => Ok(DegreeSign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }
}

impl fmt::Display for DegreeSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeSign::Plus => "+",
            DegreeSign::Minus => "-",
        })
    }
}

/// Intersection numbers between a basis and its partner basis in the
/// complementary degree, together with the degree of the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPairing {
    pub intersection_matrix: IntMatrix,
    pub degree_sign: DegreeSign,
}

impl DualPairing {
    pub fn new(intersection_matrix: IntMatrix, degree_sign: DegreeSign) -> Result<Self> {
        intersection_matrix.require_square()?;
        if intersection_matrix.det()?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(DualPairing { intersection_matrix, degree_sign })
    }

    /// Dual bases: the pairing matrix is the identity.
    pub fn dual_bases(n: usize, degree_sign: DegreeSign) -> Self {
        DualPairing { intersection_matrix: IntMatrix::identity(n), degree_sign }
    }

    /// `B = ±G^{-1} (A^T)^{-1} G`.
    pub fn transport(&self, a: &RatMatrix) -> Result<RatMatrix> {
        let g = self.intersection_matrix.to_rational();
        if a.rows() != g.rows() || !a.is_square() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "map is {}x{}, pairing is {}x{}",
                a.rows(),
                a.cols(),
                g.rows(),
                g.cols()
            )));
        }
        let at_inv = a.transpose().inverse()?;
        Ok(g.inverse()?.try_mul(&at_inv)?.try_mul(&g)?.scale(&self.degree_sign.rational()))
    }

    /// Whether `A^T G B = ±G` holds exactly.
    pub fn preserves(&self, a: &RatMatrix, b: &RatMatrix) -> bool {
        let g = self.intersection_matrix.to_rational();
        match a.transpose().try_mul(&g).and_then(|m| m.try_mul(b)) {
            Ok(lhs) => lhs == g.scale(&self.degree_sign.rational()),
            Err(_) => false,
        }
    }
}

/// `±(A^{-1})^T`: the map on the dual basis.
pub fn dual_map(a: &RatMatrix, sign: DegreeSign) -> Result<RatMatrix> {
    DualPairing::dual_bases(a.rows(), sign).transport(a)
}

fn require_transportable(p: &RatPoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.constant().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

/// Monic polynomial whose roots are `±1/λ` for the roots `λ` of `p`:
/// `x^n p(±1/x) / p(0)`.
pub fn cohomology_transport(p: &RatPoly, sign: DegreeSign) -> Result<RatPoly> {
    require_transportable(p)?;
    let n = p.degree().expect("nonzero");
    let a0 = p.constant();
    let s = sign.rational();
    let mut coeffs = alloc::vec![BigRational::zero(); n + 1];
    let mut s_pow = BigRational::one();
    for (k, c) in p.coeffs().iter().enumerate() {
        coeffs[n - k] = c * &s_pow / &a0;
        s_pow *= &s;
    }
    Ok(RatPoly::new(coeffs))
}

/// True iff the roots of `pb` are exactly `{±1/λ : λ root of pa}` with
/// multiplicity.
pub fn reciprocal_eigen_check(pa: &RatPoly, pb: &RatPoly, sign: DegreeSign) -> Result<bool> {
    require_transportable(pa)?;
    if pb.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !pb.is_monic() {
        return Err(Error::NotMonic);
    }
    let (da, db) = (pa.degree().expect("nonzero"), pb.degree().expect("nonzero"));
    if da != db {
        return Err(Error::DegreeMismatch(da, db));
    }
    Ok(cohomology_transport(pa, sign)? == *pb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::real_roots::rat;
    use crate::linalg::{char_poly_rat, IntPoly};
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> RatPoly {
        IntPoly::from_i64(c).to_rational()
    }

    #[test]
    fn dual_map_examples() {
        let id = RatMatrix::identity(2);
        assert_eq!(dual_map(&id, DegreeSign::Plus).unwrap(), id);
        assert_eq!(dual_map(&id, DegreeSign::Minus).unwrap(), -&id);
        let cat = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]).to_rational();
        let b = dual_map(&cat, DegreeSign::Plus).unwrap();
        assert_eq!(b, IntMatrix::from_i64_rows(&[&[1, -1], &[-1, 2]]).to_rational());
        assert!(b.transpose().try_mul(&cat).unwrap().is_identity());
        assert_eq!(dual_map(&RatMatrix::zeros(2, 2), DegreeSign::Plus), Err(Error::Singular));
    }

    #[test]
    fn transport_examples() {
        let golden = ip(&[1, -3, 1]);
        assert!(reciprocal_eigen_check(&golden, &golden, DegreeSign::Plus).unwrap());
        assert!(reciprocal_eigen_check(&golden, &ip(&[1, 3, 1]), DegreeSign::Minus).unwrap());
        assert!(!reciprocal_eigen_check(&golden, &ip(&[1, 3, 1]), DegreeSign::Plus).unwrap());
        let half = RatPoly::new(alloc::vec![rat(-1, 2), rat(1, 1)]);
        assert!(reciprocal_eigen_check(&ip(&[-2, 1]), &half, DegreeSign::Plus).unwrap());
        assert_eq!(cohomology_transport(&ip(&[-1, 1]), DegreeSign::Plus).unwrap(), ip(&[-1, 1]));
        assert_eq!(cohomology_transport(&ip(&[1, 3, 1]), DegreeSign::Minus).unwrap(), golden);
        assert_eq!(cohomology_transport(&ip(&[0, 1]), DegreeSign::Plus), Err(Error::ZeroConstantTerm));
        assert_eq!(reciprocal_eigen_check(&golden, &ip(&[-1, 1]), DegreeSign::Plus), Err(Error::DegreeMismatch(2, 1)));
        assert_eq!(DegreeSign::try_from(2), Err(Error::InvalidSign(2)));
    }

    #[test]
    fn general_pairing() {
        let g = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let pairing = DualPairing::new(g, DegreeSign::Minus).unwrap();
        let a = IntMatrix::from_i64_rows(&[&[3, 1], &[2, 1]]).to_rational();
        let b = pairing.transport(&a).unwrap();
        assert!(pairing.preserves(&a, &b));
        let pa = char_poly_rat(&a).unwrap();
        assert!(reciprocal_eigen_check(&pa, &char_poly_rat(&b).unwrap(), DegreeSign::Minus).unwrap());
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn dual_map_is_an_involution(n in 1usize..=4, entries in proptest::collection::vec(small_rational(), 16), minus in any::<bool>()) {
            let a = RatMatrix::from_vec(n, n, entries[..n * n].to_vec()).unwrap();
            prop_assume!(!a.det().unwrap().is_zero());
            let s = if minus { DegreeSign::Minus } else { DegreeSign::Plus };
            let b = dual_map(&a, s).unwrap();
            prop_assert_eq!(dual_map(&b, s).unwrap(), a.clone());
            let pa = char_poly_rat(&a).unwrap();
            prop_assert!(reciprocal_eigen_check(&pa, &char_poly_rat(&b).unwrap(), s).unwrap());
        }
    }
}
