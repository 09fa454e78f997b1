use alloc::vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::CscError;
use crate::exactpoly::IntPolynomial;
use crate::joinspace::JoinParams;

/// The polynomial `f(b)` whose positive zeros mark the CSC rays of the
/// `w`-Sasaki cone, together with the parameters it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CscPolynomial {
    pub poly: IntPolynomial,
    pub params: JoinParams,
    /// `w2 / w1`, a forced root that corresponds to no admissible ray when `w1 > w2`.
    pub forbidden_root: BigRational,
}

impl CscPolynomial {
    /// Wraps an externally supplied polynomial; [`build_f`] is the normal constructor.
    pub fn from_parts(poly: IntPolynomial, params: JoinParams) -> Self {
        let forbidden_root = forbidden_root(&params);
        Self {
            poly,
            params,
            forbidden_root,
        }
    }

    /// Degrees `2p+4, 2p+3, p+3, p+2, p+1, 1, 0`, highest first.
    pub fn term_degrees(&self) -> [usize; 7] {
        let p = self.params.p() as usize;
        [2 * p + 4, 2 * p + 3, p + 3, p + 2, p + 1, 1, 0]
    }
}

fn forbidden_root(params: &JoinParams) -> BigRational {
    BigRational::new(BigInt::from(params.w2()), BigInt::from(params.w1()))
}

/// Builds the seven-term polynomial
///
/// ```text
/// f(b) = -l1 w1^{2p+3} b^{2p+4}
///      + (l2 + l1 w2) w1^{2p+2} b^{2p+3}
///      - ((p+1)^2 l2 - l1((p+1)w1 + (p+2)w2)) w1^{p+2} w2^p b^{p+3}
///      + (2p(p+2) l2 - (2p+3) l1 (w1+w2)) w1^{p+1} w2^{p+1} b^{p+2}
///      - ((p+1)^2 l2 - l1((p+2)w1 + (p+1)w2)) w1^p w2^{p+2} b^{p+1}
///      + (l2 + l1 w1) w2^{2p+2} b
///      - l1 w2^{2p+3}
/// ```
pub fn build_f(params: &JoinParams) -> CscPolynomial {
    let p = params.p();
    let pu = p as usize;
    let big = |v: u64| BigInt::from(v);
    let (l1, l2, w1, w2) = (big(params.l1()), big(params.l2()), big(params.w1()), big(params.w2()));
    let pb = BigInt::from(p);
    let p1 = &pb + 1u32;
    let p2 = &pb + 2u32;
    let sq = &p1 * &p1;
    let w1p = |e: u32| w1.pow(e);
    let w2p = |e: u32| w2.pow(e);

    let mut coeffs = vec![BigInt::zero(); 2 * pu + 5];
    coeffs[2 * pu + 4] = -(&l1 * w1p(2 * p + 3));
    coeffs[2 * pu + 3] = (&l2 + &l1 * &w2) * w1p(2 * p + 2);
    coeffs[pu + 3] = -((&sq * &l2 - &l1 * (&p1 * &w1 + &p2 * &w2)) * w1p(p + 2) * w2p(p));
    coeffs[pu + 2] = (BigInt::from(2) * &pb * &p2 * &l2 - (BigInt::from(2) * &pb + 3u32) * &l1 * (&w1 + &w2))
        * w1p(p + 1)
        * w2p(p + 1);
    coeffs[pu + 1] = -((&sq * &l2 - &l1 * (&p2 * &w1 + &p1 * &w2)) * w1p(p) * w2p(p + 2));
    coeffs[1] = (&l2 + &l1 * &w1) * w2p(2 * p + 2);
    coeffs[0] = -(&l1 * w2p(2 * p + 3));
    CscPolynomial::from_parts(IntPolynomial::new(coeffs), *params)
}

/// The cubic cofactor for `p = 1`: `f(b) = (w1 b - w2)^3 g(b)` with
/// `g(b) = -l1 w1^2 b^3 + w1(l2 - 2 l1 w2) b^2 - w2(l2 - 2 l1 w1) b + l1 w2^2`.
pub fn build_g_p1(l1: u64, l2: u64, w1: u64, w2: u64) -> IntPolynomial {
    let big = |v: u64| BigInt::from(v);
    let (l1, l2, w1, w2) = (big(l1), big(l2), big(w1), big(w2));
    let two = BigInt::from(2);
    IntPolynomial::new(vec![
        &l1 * &w2 * &w2,
        -(&w2 * (&l2 - &two * &l1 * &w1)),
        &w1 * (&l2 - &two * &l1 * &w2),
        -(&l1 * &w1 * &w1),
    ])
}

/// `f^{(4)}(1) = 2 (1+p) (p+2) (p(p+1) l2 - 2(3+2p) l1)` for `w = (1,1)`.
///
/// Its sign decides whether `f` has roots besides `b = 1`.
pub fn fourth_derivative_at_one(p: u32, l1: u64, l2: u64) -> BigInt {
    let pb = BigInt::from(p);
    let p1 = &pb + 1u32;
    BigInt::from(2)
        * &p1
        * (&pb + 2u32)
        * (&pb * &p1 * BigInt::from(l2) - BigInt::from(2) * (BigInt::from(3) + BigInt::from(2) * &pb) * BigInt::from(l1))
}

/// `2(3+2p) l1 / (p(p+1))`: for `w = (1,1)` two further CSC rays exist exactly when `l2` exceeds it.
pub fn wz_threshold(p: u32, l1: u64) -> BigRational {
    let pb = BigInt::from(p);
    BigRational::new(
        BigInt::from(2) * (BigInt::from(3) + BigInt::from(2) * &pb) * BigInt::from(l1),
        &pb * (&pb + 1u32),
    )
}

/// Least multiplicity of the forced root: 4 for `w = (1,1)`, 3 otherwise.
pub fn forced_multiplicity_floor(params: &JoinParams) -> u32 {
    if params.is_homogeneous() {
        4
    } else {
        3
    }
}

/// Divides the forced root out of `f`.
///
/// Returns the quotient and the exact multiplicity `k` of `w2/w1` (of `1` when
/// `w = (1,1)`). `k` must reach 3 for `w1 > w2` and 4 for `w = (1,1)`.
pub fn deflate_forbidden(fp: &CscPolynomial) -> Result<(IntPolynomial, u32), CscError> {
    let floor = forced_multiplicity_floor(&fp.params);
    if fp.poly.is_zero() {
        return Err(CscError::MultiplicityBelowFloor { found: 0, floor });
    }
    let factor = IntPolynomial::linear_factor(&fp.forbidden_root);
    let mut quotient = fp.poly.clone();
    let mut k = 0u32;
    while let Some(next) = quotient.div_exact(&factor) {
        quotient = next;
        k += 1;
    }
    if k < floor {
        return Err(CscError::MultiplicityBelowFloor { found: k, floor });
    }
    Ok((quotient, k))
}

/// Smallest coprime `(l1, l2)` with
/// `2(1 + 2^p(2^{p+2} - (p^2+2p+5))) l2 = (-1 + 2^{p+1}(2^{p+2} - (2p+3))) l1`;
/// for such pairs `f` vanishes at `1/2`, `1` and `2`.
pub fn quasireg_family(p: u32) -> Result<(u64, u64), CscError> {
    if p == 0 {
        return Err(CscError::DegenerateFamily { p });
    }
    let pb = BigInt::from(p);
    let two = BigInt::from(2);
    let pow2 = |e: u32| two.pow(e);
    let l2_coeff = &two * (BigInt::from(1) + pow2(p) * (pow2(p + 2) - (&pb * &pb + &two * &pb + 5u32)));
    let l1_coeff = BigInt::from(-1) + pow2(p + 1) * (pow2(p + 2) - (&two * &pb + 3u32));
    if l2_coeff.is_zero() || l1_coeff.is_zero() {
        return Err(CscError::DegenerateFamily { p });
    }
    if l2_coeff.is_positive() != l1_coeff.is_positive() {
        return Err(CscError::NoPositiveFamily { p });
    }
    // a * l2 = c * l1  =>  (l1, l2) = (a, c) / gcd
    let g = l2_coeff.gcd(&l1_coeff);
    let l1 = (&l2_coeff / &g).abs();
    let l2 = (&l1_coeff / &g).abs();
    match (l1.to_u64(), l2.to_u64()) {
        (Some(l1), Some(l2)) => Ok((l1, l2)),
        _ => Err(CscError::FamilyTooLarge { p }),
    }
}
