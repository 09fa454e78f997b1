//! Sturm chains and distinct-root counting.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::Sign;
use num_rational::BigRational;

use super::{squarefree_part, IntPolynomial, PolyError};

/// An endpoint of a counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl Bound {
    fn rank(&self) -> u8 {
        match self {
            Bound::NegInfinity => 0,
            Bound::Finite(_) => 1,
            Bound::PosInfinity => 2,
        }
    }

    fn less_than(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

impl From<BigRational> for Bound {
    fn from(q: BigRational) -> Self {
        Bound::Finite(q)
    }
}

/// Sturm chain of the square-free part of a polynomial.
///
/// Members after the first two are negated remainders rescaled by positive
/// constants to primitive integer form; rescaling keeps every sign intact.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(poly: &IntPolynomial) -> Result<Self, PolyError> {
        Ok(Self::from_squarefree(squarefree_part(poly)?))
    }

    /// Builds the chain assuming `sf` is already square-free.
    pub fn from_squarefree(sf: IntPolynomial) -> Self {
        let d = sf.derivative(1);
        let mut chain = vec![sf];
        if d.is_zero() {
            return Self { chain };
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let prem = match a.pseudo_rem(b) {
                Ok(r) => r,
                Err(_) => unreachable!("chain members are nonzero"),
            };
            if prem.is_zero() {
                break;
            }
            // prem = lc(b)^e * rem; flip when that multiplier is negative
            let e = a.coeffs().len() - b.coeffs().len() + 1;
            let multiplier_negative = b.sign_at_pos_infinity() == Sign::Minus && e % 2 == 1;
            let content = prem.content();
            let scaled = IntPolynomial::new(prem.coeffs().iter().map(|c| c / &content).collect());
            chain.push(if multiplier_negative { scaled } else { -&scaled });
        }
        Self { chain }
    }

    /// The square-free polynomial heading the chain.
    pub fn head(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    pub fn members(&self) -> &[IntPolynomial] {
        &self.chain
    }

    /// Sign variations of the chain at `x`, zeros dropped.
    pub fn variations(&self, x: &Bound) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for p in &self.chain {
            let s = match x {
                Bound::NegInfinity => p.sign_at_neg_infinity(),
                Bound::PosInfinity => p.sign_at_pos_infinity(),
                Bound::Finite(q) => p.sign_at(q),
            };
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

    /// Distinct real roots in `(lo, hi]`. Caller guarantees `lo < hi`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    pub(crate) fn count_finite(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let lo = Bound::Finite(lo.clone());
        let hi = Bound::Finite(hi.clone());
        self.count(&lo, &hi)
    }
}

/// Number of distinct real roots of `poly` in `(lo, hi]`.
pub fn sturm_count(poly: &IntPolynomial, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
    if !lo.less_than(hi) {
        return Err(PolyError::EmptyInterval);
    }
    Ok(SturmChain::new(poly)?.count(lo, hi))
}
