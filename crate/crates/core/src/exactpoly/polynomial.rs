//! Dense univariate polynomials over Z and Q.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(coeffs: &mut Vec<T>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * b^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The primitive linear factor `den*b - num` vanishing at `q`.
    pub fn linear_factor(q: &BigRational) -> Self {
        Self::new(vec![-q.numer().clone(), q.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `b^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and fixes the sign so the leading coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.coeffs.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    /// Exact value at a rational point (Horner).
    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `den^deg * p(num/den)`, an integer with the same sign as `p(q)`.
    pub fn eval_homogeneous(&self, q: &BigRational) -> BigInt {
        let (num, den) = (q.numer(), q.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Horner in num with the den powers folded in from the top coefficient down.
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    /// Sign of the value at `q`, computed without leaving the integers.
    pub fn sign_at(&self, q: &BigRational) -> Sign {
        self.eval_homogeneous(q).sign()
    }

    /// Sign as `b -> +inf`.
    pub fn sign_at_pos_infinity(&self) -> Sign {
        self.leading_coefficient().map_or(Sign::NoSign, BigInt::sign)
    }

    /// Sign as `b -> -inf`.
    pub fn sign_at_neg_infinity(&self) -> Sign {
        match (self.sign_at_pos_infinity(), self.degree()) {
            (s, Some(d)) if d % 2 == 1 => -s,
            (s, _) => s,
        }
    }

    /// The `order`-th formal derivative. Order 0 returns a copy.
    pub fn derivative(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..order {
            if coeffs.is_empty() {
                break;
            }
            coeffs = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect();
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(BigInt::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients in reverse order: `b^deg * p(1/b)` (trailing zeros of the
    /// input become a lower degree).
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for c in &self.coeffs {
            let s = c.sign();
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// Division with remainder over Q.
    pub fn divrem(&self, den: &IntPolynomial) -> Result<(RatPolynomial, RatPolynomial), PolyError> {
        self.to_rational().divrem(&den.to_rational())
    }

    /// Quotient when `den` divides `self` with an integral quotient.
    pub fn div_exact(&self, den: &IntPolynomial) -> Option<IntPolynomial> {
        let den_deg = den.degree()?;
        let den_lc = &den.coeffs[den_deg];
        let Some(num_deg) = self.degree() else {
            return Some(Self::zero());
        };
        if num_deg < den_deg {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); num_deg - den_deg + 1];
        for k in (0..quot.len()).rev() {
            let (factor, r) = rem[k + den_deg].div_rem(den_lc);
            if !r.is_zero() {
                return None;
            }
            if factor.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &factor * d;
            }
            quot[k] = factor;
        }
        rem[..den_deg].iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// Pseudo-remainder: the remainder of `lc(den)^(deg self - deg den + 1) * self` by `den`,
    /// computed in the integers. Returns `self` unchanged when its degree is lower.
    pub fn pseudo_rem(&self, den: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
        let den_deg = den.degree().ok_or(PolyError::DivisionByZero)?;
        let den_lc = &den.coeffs[den_deg];
        let mut rem = self.coeffs.clone();
        let Some(num_deg) = self.degree().filter(|&d| d >= den_deg) else {
            return Ok(self.clone());
        };
        for top in (den_deg..=num_deg).rev() {
            let lead = core::mem::take(&mut rem[top]);
            for c in rem[..top].iter_mut() {
                *c *= den_lc;
            }
            if lead.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs[..den_deg].iter().enumerate() {
                rem[top - den_deg + j] -= &lead * d;
            }
        }
        rem.truncate(den_deg);
        Ok(Self::new(rem))
    }

    /// Greatest common divisor up to units, primitive with positive leading coefficient.
    ///
    /// Primitive remainder sequence; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = match a.pseudo_rem(&b) {
                Ok(r) => r,
                Err(_) => unreachable!("b is nonzero"),
            };
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Multiplicity of `q` as a root: how many times `linear_factor(q)` divides exactly.
    pub fn root_multiplicity(&self, q: &BigRational) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let factor = Self::linear_factor(q);
        let mut rest = self.clone();
        let mut k = 0;
        while let Some(next) = rest.div_exact(&factor) {
            rest = next;
            k += 1;
        }
        k
    }
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Scaled to leading coefficient 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => Self::zero(),
            Some(lc) => Self {
                coeffs: self.coeffs.iter().map(|c| c / lc).collect(),
            },
        }
    }

    pub fn divrem(&self, den: &RatPolynomial) -> Result<(RatPolynomial, RatPolynomial), PolyError> {
        let den_deg = den.degree().ok_or(PolyError::DivisionByZero)?;
        let den_lc = &den.coeffs[den_deg];
        let mut rem = self.coeffs.clone();
        let Some(num_deg) = self.degree().filter(|&d| d >= den_deg) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![BigRational::zero(); num_deg - den_deg + 1];
        for k in (0..quot.len()).rev() {
            let factor = &rem[k + den_deg] / den_lc;
            if factor.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &factor * d;
            }
            quot[k] = factor;
        }
        rem.truncate(den_deg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic gcd over Q (Euclid). `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPolynomial) -> RatPolynomial {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = match a.divrem(&b) {
                Ok((_, r)) => r,
                Err(_) => unreachable!("b is nonzero"),
            };
            a = b;
            b = r.monic();
        }
        a
    }

    /// Integer coefficients when every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Positive rational multiple with coprime integer coefficients and
    /// positive leading coefficient.
    pub fn primitive_integer(&self) -> IntPolynomial {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        );
        scaled.primitive_part()
    }

    /// Like [`primitive_integer`](Self::primitive_integer) but keeping the sign of every value.
    pub fn sign_preserving_integer(&self) -> IntPolynomial {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        );
        let content = scaled.content();
        if content.is_zero() {
            return scaled;
        }
        IntPolynomial::new(scaled.coeffs.iter().map(|c| c / &content).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPolynomial::new(out)
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &RatPolynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        RatPolynomial::new((0..n).map(|i| get(self, i) - get(rhs, i)).collect())
    }
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

fn write_terms<T: fmt::Display + Zero + Signed + One + PartialEq>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        let unit = abs.is_one();
        match i {
            0 => write!(f, "{abs}")?,
            _ => {
                if !unit {
                    write!(f, "{abs}*")?;
                }
                if i == 1 {
                    f.write_str("b")?;
                } else {
                    write!(f, "b^{i}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn zero_is_canonical() {
        let p = IntPolynomial::from_i64s(&[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p.eval(&q(3, 7)), BigRational::zero());
    }

    #[test]
    fn derivative_of_square() {
        let p = IntPolynomial::from_i64s(&[0, 0, 1]);
        assert_eq!(p.derivative(1), IntPolynomial::from_i64s(&[0, 2]));
        assert_eq!(p.derivative(0), p);
        assert!(IntPolynomial::from_i64s(&[7]).derivative(1).is_zero());
        assert!(IntPolynomial::from_i64s(&[7]).derivative(5).is_zero());
    }

    #[test]
    fn divrem_simple() {
        let num = IntPolynomial::from_i64s(&[0, 0, 1]);
        let den = IntPolynomial::from_i64s(&[0, 1]);
        let (quot, rem) = num.divrem(&den).unwrap();
        assert_eq!(quot, IntPolynomial::from_i64s(&[0, 1]).to_rational());
        assert!(rem.is_zero());
        assert_eq!(num.divrem(&IntPolynomial::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn divrem_reconstructs() {
        let num = IntPolynomial::from_i64s(&[5, -3, 0, 7, 2]);
        let den = IntPolynomial::from_i64s(&[1, 0, 3]);
        let (quot, rem) = num.divrem(&den).unwrap();
        assert!(rem.degree().unwrap_or(0) < 2);
        let back = &(&quot * &den.to_rational()) - &(&RatPolynomial::zero() - &rem);
        assert_eq!(back, num.to_rational());
    }

    #[test]
    fn homogeneous_sign_matches_eval() {
        let p = IntPolynomial::from_i64s(&[-2, 0, 1]);
        for (n, d) in [(1, 1), (3, 2), (7, 5), (-3, 2), (0, 1)] {
            let x = q(n, d);
            assert_eq!(p.sign_at(&x), p.eval(&x).numer().sign());
        }
    }

    #[test]
    fn sign_variations_skip_zeros() {
        let p = IntPolynomial::from_i64s(&[-1, 0, 3, 0, -2, 5]);
        assert_eq!(p.sign_variations(), 3);
    }

    #[test]
    fn root_multiplicity_counts_exact_powers() {
        let lin = IntPolynomial::linear_factor(&q(2, 3));
        let p = &lin.pow(3) * &IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!(p.root_multiplicity(&q(2, 3)), 3);
        assert_eq!(p.root_multiplicity(&q(-1, 1)), 1);
        assert_eq!(p.root_multiplicity(&q(1, 1)), 0);
    }

    #[test]
    fn display() {
        let p = IntPolynomial::from_i64s(&[4, -26, 45, -9]);
        assert_eq!(alloc::format!("{p}"), "-9*b^3 + 45*b^2 - 26*b + 4");
    }

    #[test]
    fn exact_division_over_integers() {
        let a = IntPolynomial::from_i64s(&[-2, 3]);
        let g = IntPolynomial::from_i64s(&[4, -26, 45, -9]);
        let f = &a.pow(3) * &g;
        assert_eq!(f.div_exact(&a.pow(3)), Some(g.clone()));
        assert_eq!(f.div_exact(&g), Some(a.pow(3)));
        // quotient exists over Q but not over Z
        assert_eq!(IntPolynomial::from_i64s(&[1, 1]).div_exact(&IntPolynomial::from_i64s(&[2, 2])), None);
        assert_eq!(g.div_exact(&a), None);
        assert_eq!(g.div_exact(&IntPolynomial::zero()), None);
    }

    #[test]
    fn pseudo_remainder_matches_rational_remainder() {
        let num = IntPolynomial::from_i64s(&[3, -1, 0, 5, 2]);
        let den = IntPolynomial::from_i64s(&[1, 0, 3]);
        let prem = num.pseudo_rem(&den).unwrap();
        let (_, rem) = num.divrem(&den).unwrap();
        // lc(den)^(4 - 2 + 1) = 27
        let scaled: Vec<BigRational> = rem.coeffs().iter().map(|c| c * q(27, 1)).collect();
        assert_eq!(prem.to_rational(), RatPolynomial::new(scaled));
        assert_eq!(den.pseudo_rem(&num).unwrap(), den);
    }

    #[test]
    fn integer_gcd() {
        let a = IntPolynomial::from_i64s(&[-1, 1]);
        let b = IntPolynomial::from_i64s(&[1, 2]);
        let c = IntPolynomial::from_i64s(&[5, 0, 1]);
        let x = &(&a * &b) * &IntPolynomial::from_i64s(&[-6]);
        let y = &(&a * &c) * &IntPolynomial::from_i64s(&[4]);
        assert_eq!(x.gcd(&y), a);
        assert_eq!(x.gcd(&IntPolynomial::zero()), (&a * &b).primitive_part());
        assert!(IntPolynomial::zero().gcd(&IntPolynomial::zero()).is_zero());
        assert_eq!(b.gcd(&c), IntPolynomial::constant(BigInt::one()));
    }
}
