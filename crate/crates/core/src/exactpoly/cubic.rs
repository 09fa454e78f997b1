use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{IntPolynomial, PolyError};

/// Discriminant of `a3 b^3 + a2 b^2 + a1 b + a0`.
///
/// Positive exactly when the cubic has three distinct real roots, zero on a
/// repeated root.
pub fn cubic_discriminant(
    a3: &BigRational,
    a2: &BigRational,
    a1: &BigRational,
    a0: &BigRational,
) -> Result<BigRational, PolyError> {
    if a3.is_zero() {
        return Err(PolyError::DegenerateCubic);
    }
    let k = |n: i64| BigRational::from_integer(BigInt::from(n));
    let a2sq = a2 * a2;
    Ok(k(18) * a3 * a2 * a1 * a0 - k(4) * &a2sq * a2 * a0 + &a2sq * a1 * a1
        - k(4) * a3 * a1 * a1 * a1
        - k(27) * a3 * a3 * a0 * a0)
}

/// Discriminant of an integer cubic given as a polynomial of degree exactly 3.
pub fn cubic_discriminant_of(poly: &IntPolynomial) -> Result<BigRational, PolyError> {
    if poly.degree() != Some(3) {
        return Err(PolyError::DegenerateCubic);
    }
    let c = |i| BigRational::from_integer(poly.coeff(i));
    cubic_discriminant(&c(3), &c(2), &c(1), &c(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn triple_root_vanishes() {
        let p = IntPolynomial::from_i64s(&[-1, 3, -3, 1]);
        assert!(cubic_discriminant_of(&p).unwrap().is_zero());
    }

    #[test]
    fn three_real_roots_positive() {
        // (b-1)(b-2)(b-3): discriminant = prod of squared differences = 4
        let p = IntPolynomial::from_i64s(&[-6, 11, -6, 1]);
        assert_eq!(cubic_discriminant_of(&p).unwrap(), BigRational::from_integer(4.into()));
        let one_real = IntPolynomial::from_i64s(&[1, 0, 0, 1]);
        assert!(cubic_discriminant_of(&one_real).unwrap().is_negative());
    }

    #[test]
    fn rejects_non_cubic() {
        let z = BigRational::zero();
        assert_eq!(cubic_discriminant(&z, &z, &z, &z), Err(PolyError::DegenerateCubic));
        assert!(cubic_discriminant_of(&IntPolynomial::from_i64s(&[1, 1])).is_err());
    }
}
