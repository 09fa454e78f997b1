//! Yun square-free decomposition over Q.

use alloc::vec::Vec;

use super::{IntPolynomial, PolyError};

/// Square-free factors `(factor, multiplicity)` with `poly = unit * prod factor^mult`.
///
/// Factors are primitive with positive leading coefficient, pairwise coprime,
/// and listed by increasing multiplicity. Constants contribute no factor.
pub fn squarefree_decompose(poly: &IntPolynomial) -> Result<Vec<(IntPolynomial, u32)>, PolyError> {
    if poly.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    // Every quotient below is by a primitive divisor over Q, hence integral.
    let f = poly.primitive_part();
    let df = f.derivative(1);
    let a0 = f.gcd(&df);
    let mut b = exact(&f, &a0);
    let c = exact(&df, &a0);
    let mut d = &c - &b.derivative(1);
    let mut out = Vec::new();
    let mut mult = 1u32;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = b.gcd(&d);
        b = exact(&b, &a);
        let c = exact(&d, &a);
        d = &c - &b.derivative(1);
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a, mult));
        }
        mult += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible factors, primitive with positive leading coefficient.
pub fn squarefree_part(poly: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
    if poly.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let f = poly.primitive_part();
    let g = f.gcd(&f.derivative(1));
    Ok(exact(&f, &g).primitive_part())
}

fn exact(num: &IntPolynomial, den: &IntPolynomial) -> IntPolynomial {
    match num.div_exact(den) {
        Some(q) => q,
        None => unreachable!("gcd divides its arguments"),
    }
}
