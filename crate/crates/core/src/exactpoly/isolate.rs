//! Certified isolation of real roots.
//!
//! Roots are located by Sturm bisection of the square-free part. A located
//! root is rational exactly when it equals `m / |lc|` for some integer `m`,
//! where `lc` is the leading coefficient of the primitive square-free part,
//! so narrowing an isolating interval below width `1/|lc|` leaves a single
//! candidate to test.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{squarefree_decompose, IntPolynomial, PolyError, SturmChain};

/// Decimal digits to which irrational roots are narrowed unless asked otherwise.
pub const DEFAULT_DIGITS: u32 = 12;

/// Half-open interval `(lo, hi]` with rational endpoints, `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self, PolyError> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(PolyError::EmptyInterval)
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    /// Membership in the open interval `(lo, hi)`.
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Image under `b -> 1/b`, for intervals in the positive reals.
    pub fn reciprocal(&self) -> Option<Self> {
        if !self.lo.is_positive() {
            return None;
        }
        Some(Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RootValue {
    Exact(BigRational),
    Isolating(RationalInterval),
}

/// One distinct real root of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootRecord {
    pub value: RootValue,
    pub multiplicity: u32,
    pub is_rational: bool,
}

impl RootRecord {
    pub fn exact(&self) -> Option<&BigRational> {
        match &self.value {
            RootValue::Exact(q) => Some(q),
            RootValue::Isolating(_) => None,
        }
    }

    pub fn interval(&self) -> Option<&RationalInterval> {
        match &self.value {
            RootValue::Exact(_) => None,
            RootValue::Isolating(iv) => Some(iv),
        }
    }

    /// A rational point inside (or equal to) the root's location, for ordering and display.
    pub fn representative(&self) -> BigRational {
        match &self.value {
            RootValue::Exact(q) => q.clone(),
            RootValue::Isolating(iv) => iv.midpoint(),
        }
    }
}

/// `1 + ceil(max |a_i| / |a_n|)`: every real root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(poly: &IntPolynomial) -> BigInt {
    let Some(lc) = poly.leading_coefficient() else {
        return BigInt::one();
    };
    let lc = lc.abs();
    let n = poly.coeffs().len() - 1;
    let max = poly.coeffs()[..n]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    BigInt::one() + Integer::div_ceil(&max, &lc)
}

enum Located {
    Exact(BigRational),
    Interval(BigRational, BigRational),
}

struct Isolator {
    chain: SturmChain,
    lc: BigRational,
    factors: Vec<(IntPolynomial, u32)>,
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

impl Isolator {
    fn new(poly: &IntPolynomial) -> Result<Self, PolyError> {
        let factors = squarefree_decompose(poly)?;
        let sf = factors
            .iter()
            .fold(IntPolynomial::constant(BigInt::one()), |acc, (f, _)| &acc * f)
            .primitive_part();
        let lc = BigRational::from_integer(sf.leading_coefficient().cloned().unwrap_or_else(BigInt::one).abs());
        Ok(Self {
            chain: SturmChain::from_squarefree(sf),
            lc,
            factors,
        })
    }

    fn sf(&self) -> &IntPolynomial {
        self.chain.head()
    }

    fn is_root(&self, x: &BigRational) -> bool {
        self.sf().sign_at(x).eq(&num_bigint::Sign::NoSign)
    }

    /// Locates every root in `(lo, hi]`, ascending.
    fn locate(&self, lo: BigRational, hi: BigRational, digits: Option<u32>) -> Vec<Located> {
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi)];
        while let Some((lo, hi)) = stack.pop() {
            match self.chain.count_finite(&lo, &hi) {
                0 => {}
                1 => out.push(self.resolve(lo, hi, digits)),
                _ => {
                    let mid = (&lo + &hi) * half();
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        out
    }

    /// Narrows an interval holding exactly one root and decides rationality.
    fn resolve(&self, mut lo: BigRational, mut hi: BigRational, digits: Option<u32>) -> Located {
        if self.is_root(&hi) {
            return Located::Exact(hi);
        }
        // lo can be a root inherited from a neighbouring interval; step off it
        // with Sturm counts, after which the simple root is a sign change.
        while self.is_root(&lo) {
            let mid = (&lo + &hi) * half();
            if self.chain.count_finite(&lo, &mid) == 1 {
                if self.is_root(&mid) {
                    return Located::Exact(mid);
                }
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let lo_sign = self.sf().sign_at(&lo);
        let bisect = |lo: &mut BigRational, hi: &mut BigRational| -> Option<BigRational> {
            let mid = (&*lo + &*hi) * half();
            let s = self.sf().sign_at(&mid);
            if s == Sign::NoSign {
                return Some(mid);
            }
            if s == lo_sign {
                *lo = mid;
            } else {
                *hi = mid;
            }
            None
        };
        let unit = BigRational::one();
        while (&hi - &lo) * &self.lc >= unit {
            if let Some(root) = bisect(&mut lo, &mut hi) {
                return Located::Exact(root);
            }
        }
        let candidate = (&hi * &self.lc).floor() / &self.lc;
        if candidate > lo && self.is_root(&candidate) {
            return Located::Exact(candidate);
        }
        // Irrational from here on, so midpoints are never roots.
        if let Some(d) = digits {
            let eps = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(d));
            while &hi - &lo > eps {
                bisect(&mut lo, &mut hi);
            }
        }
        Located::Interval(lo, hi)
    }

    fn record(&self, located: Located) -> RootRecord {
        match located {
            Located::Exact(q) => {
                let multiplicity = self
                    .factors
                    .iter()
                    .find(|(f, _)| f.sign_at(&q) == num_bigint::Sign::NoSign)
                    .map_or(1, |(_, m)| *m);
                RootRecord {
                    value: RootValue::Exact(q),
                    multiplicity,
                    is_rational: true,
                }
            }
            Located::Interval(lo, hi) => {
                // exactly one coprime square-free factor changes sign across the interval
                let multiplicity = self
                    .factors
                    .iter()
                    .find(|(f, _)| f.sign_at(&lo) != f.sign_at(&hi))
                    .map_or(1, |(_, m)| *m);
                RootRecord {
                    value: RootValue::Isolating(RationalInterval { lo, hi }),
                    multiplicity,
                    is_rational: false,
                }
            }
        }
    }
}

/// Distinct positive real roots, ascending, irrational ones narrowed to width `<= 10^-12`.
pub fn isolate_positive_roots(poly: &IntPolynomial) -> Result<Vec<RootRecord>, PolyError> {
    isolate_positive_roots_with_precision(poly, DEFAULT_DIGITS)
}

/// Distinct positive real roots, ascending, irrational ones narrowed to width `<= 10^-digits`.
pub fn isolate_positive_roots_with_precision(
    poly: &IntPolynomial,
    digits: u32,
) -> Result<Vec<RootRecord>, PolyError> {
    let iso = Isolator::new(poly)?;
    let bound = BigRational::from_integer(cauchy_bound(iso.sf()));
    Ok(iso
        .locate(BigRational::zero(), bound, Some(digits))
        .into_iter()
        .map(|l| iso.record(l))
        .collect())
}

/// All distinct real roots, ascending.
pub fn isolate_real_roots(poly: &IntPolynomial, digits: u32) -> Result<Vec<RootRecord>, PolyError> {
    let iso = Isolator::new(poly)?;
    let bound = BigRational::from_integer(cauchy_bound(iso.sf()));
    Ok(iso
        .locate(-bound.clone(), bound, Some(digits))
        .into_iter()
        .map(|l| iso.record(l))
        .collect())
}

/// Every rational root with its exact multiplicity, ascending.
pub fn rational_roots(poly: &IntPolynomial) -> Result<Vec<(BigRational, u32)>, PolyError> {
    let iso = Isolator::new(poly)?;
    let bound = BigRational::from_integer(cauchy_bound(iso.sf()));
    Ok(iso
        .locate(-bound.clone(), bound, None)
        .into_iter()
        .filter(|l| matches!(l, Located::Exact(_)))
        .map(|l| iso.record(l))
        .filter_map(|r| match r.value {
            RootValue::Exact(q) => Some((q, r.multiplicity)),
            RootValue::Isolating(_) => None,
        })
        .collect())
}
