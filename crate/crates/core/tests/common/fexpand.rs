//! Coefficients of `f(b)` expanded directly from the seven-term formula, for
//! any positive weights (including `w1 < w2`, which parameter validation refuses).

use num_bigint::BigInt;
use num_traits::Zero;

use sasaki_join_core::exactpoly::IntPolynomial;

pub fn expand_f(p: u32, l1: u64, l2: u64, w1: u64, w2: u64) -> IntPolynomial {
    let n = p as usize;
    let (l1, l2, v1, v2) = (BigInt::from(l1), BigInt::from(l2), BigInt::from(w1), BigInt::from(w2));
    let pb = BigInt::from(p);
    let (p1, p2) = (&pb + 1u32, &pb + 2u32);
    let mut c = vec![BigInt::zero(); 2 * n + 5];
    c[2 * n + 4] = -(&l1 * v1.pow(2 * p + 3));
    c[2 * n + 3] = (&l2 + &l1 * &v2) * v1.pow(2 * p + 2);
    c[n + 3] = -((&p1 * &p1 * &l2 - &l1 * (&p1 * &v1 + &p2 * &v2)) * v1.pow(p + 2) * v2.pow(p));
    c[n + 2] = (BigInt::from(2) * &pb * &p2 * &l2 - (BigInt::from(2) * &pb + 3u32) * &l1 * (&v1 + &v2))
        * v1.pow(p + 1)
        * v2.pow(p + 1);
    c[n + 1] = -((&p1 * &p1 * &l2 - &l1 * (&p2 * &v1 + &p1 * &v2)) * v1.pow(p) * v2.pow(p + 2));
    c[1] = (&l2 + &l1 * &v1) * v2.pow(2 * p + 2);
    c[0] = -(&l1 * v2.pow(2 * p + 3));
    IntPolynomial::new(c)
}
