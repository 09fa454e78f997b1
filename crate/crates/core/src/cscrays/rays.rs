use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::{build_f, deflate_forbidden, CscError, CscPolynomial};
use crate::exactpoly::{
    isolate_positive_roots_with_precision, IntPolynomial, RootRecord, RootValue, SturmChain, DEFAULT_DIGITS,
};
use crate::joinspace::JoinParams;

/// Extra digits tried, in steps, when isolating intervals are too wide to certify a pairing.
const PAIRING_RETRIES: u32 = 8;
const PAIRING_STEP: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RayClass {
    Regular,
    QuasiRegular,
    Irregular,
}

impl fmt::Display for RayClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RayClass::Regular => "regular",
            RayClass::QuasiRegular => "quasi-regular",
            RayClass::Irregular => "irregular",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub root: RootRecord,
    pub class: RayClass,
    /// Index of the reciprocal ray `1/b` in the same report, for `w = (1,1)`.
    pub partner: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayReport {
    /// Ascending in `b`.
    pub rays: Vec<Ray>,
    pub unreduced_count: usize,
    /// Rays after identifying `b` with `1/b` when `w = (1,1)`.
    pub reduced_count: usize,
    pub weyl_paired: bool,
    /// Exact multiplicity of `w2/w1` in `f`.
    pub forbidden_multiplicity: u32,
}

impl RayReport {
    pub fn count_of(&self, class: RayClass) -> usize {
        self.rays.iter().filter(|r| r.class == class).count()
    }
}

pub fn csc_rays(params: &JoinParams) -> Result<RayReport, CscError> {
    csc_rays_with_precision(params, DEFAULT_DIGITS)
}

/// Enumerates and classifies the CSC rays, narrowing irrational ones to width `<= 10^-digits`.
pub fn csc_rays_with_precision(params: &JoinParams, digits: u32) -> Result<RayReport, CscError> {
    let fp = build_f(params);
    let (rest, k) = deflate_forbidden(&fp)?;
    if !params.is_homogeneous() {
        let rays = classify_roots(&fp, &rest, k, digits)?;
        let n = rays.len();
        return Ok(RayReport {
            rays,
            unreduced_count: n,
            reduced_count: n,
            weyl_paired: false,
            forbidden_multiplicity: k,
        });
    }
    let chain = SturmChain::new(&rest)?;
    for attempt in 0..=PAIRING_RETRIES {
        let mut rays = classify_roots(&fp, &rest, k, digits + attempt * PAIRING_STEP)?;
        if let Some(pairs) = pair_reciprocals(&mut rays, &chain) {
            let n = rays.len();
            return Ok(RayReport {
                rays,
                unreduced_count: n,
                reduced_count: n - pairs,
                weyl_paired: true,
                forbidden_multiplicity: k,
            });
        }
    }
    Err(CscError::UnpairedRoots)
}

/// Roots of `f` off the forced root are the roots of the deflated `rest`,
/// with the same multiplicities. The forced root itself becomes the regular
/// ray when `w = (1,1)` and is dropped otherwise.
fn classify_roots(fp: &CscPolynomial, rest: &IntPolynomial, k: u32, digits: u32) -> Result<Vec<Ray>, CscError> {
    let mut rays = Vec::new();
    let mut regular = fp.params.is_homogeneous().then(|| Ray {
        root: RootRecord {
            value: RootValue::Exact(fp.forbidden_root.clone()),
            multiplicity: k,
            is_rational: true,
        },
        class: RayClass::Regular,
        partner: None,
    });
    let roots = if rest.degree().is_some_and(|d| d > 0) {
        isolate_positive_roots_with_precision(rest, digits)?
    } else {
        Vec::new()
    };
    for root in roots {
        if regular.is_some() && root.representative() > fp.forbidden_root {
            rays.extend(regular.take());
        }
        let class = if root.is_rational {
            RayClass::QuasiRegular
        } else {
            RayClass::Irregular
        };
        rays.push(Ray {
            root,
            class,
            partner: None,
        });
    }
    rays.extend(regular);
    Ok(rays)
}

/// Pairs the rays on either side of `b = 1` from the outside in.
///
/// `f` is palindromic for `w = (1,1)`, so the `i`-th smallest root below 1
/// must be the reciprocal of the `i`-th largest above 1. Each pair is
/// certified exactly; `None` means some pair could not be certified at the
/// current precision.
fn pair_reciprocals(rays: &mut [Ray], chain: &SturmChain) -> Option<usize> {
    let one = BigRational::one();
    let others: Vec<usize> = (0..rays.len()).filter(|&i| rays[i].class != RayClass::Regular).collect();
    if others.len() % 2 == 1 {
        return None;
    }
    let n = others.len();
    for i in 0..n / 2 {
        let (a, b) = (others[i], others[n - 1 - i]);
        if !reciprocal_pair(&rays[a].root, &rays[b].root, chain, &one) {
            return None;
        }
        rays[a].partner = Some(b);
        rays[b].partner = Some(a);
    }
    Some(n / 2)
}

fn reciprocal_pair(a: &RootRecord, b: &RootRecord, chain: &SturmChain, one: &BigRational) -> bool {
    match (a.exact(), b.exact(), a.interval(), b.interval()) {
        (Some(x), Some(y), _, _) => &(x * y) == one,
        (_, _, Some(ia), Some(ib)) => {
            let Some(inv) = ia.reciprocal() else {
                return false;
            };
            if !inv.overlaps(ib) {
                return false;
            }
            let hull = inv.hull(ib);
            chain.count_finite(hull.lo(), hull.hi()) == 1
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn jp(p: u32, l1: u64, l2: u64, w1: u64, w2: u64) -> JoinParams {
        JoinParams::new(p, l1, l2, w1, w2).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Sign of `b^2 - c1 b + c0` at `x`, from exact arithmetic.
    fn quad_sign(x: &BigRational, c1: &BigRational, c0: &BigRational) -> i8 {
        let v = x * x - c1 * x + c0;
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    fn brackets_quadratic_root(root: &RootRecord, c1: &BigRational, c0: &BigRational) -> bool {
        let iv = root.interval().unwrap();
        quad_sign(iv.lo(), c1, c0) * quad_sign(iv.hi(), c1, c0) < 0
    }

    #[test]
    fn nonhomogeneous_threshold_example() {
        let report = csc_rays(&jp(1, 1, 19, 3, 2)).unwrap();
        assert_eq!((report.unreduced_count, report.reduced_count), (3, 3));
        assert!(!report.weyl_paired);
        assert_eq!(report.forbidden_multiplicity, 3);
        // ascending: (7 - sqrt 37)/3 ~ 0.306 sits below 1/3
        assert_eq!(report.rays[1].root.exact(), Some(&q(1, 3)));
        assert_eq!(report.rays[1].class, RayClass::QuasiRegular);
        // (7 +- sqrt 37)/3 are the roots of b^2 - (14/3) b + 4/3
        let (c1, c0) = (q(14, 3), q(4, 3));
        for ray in [&report.rays[0], &report.rays[2]] {
            assert_eq!(ray.class, RayClass::Irregular);
            assert!(brackets_quadratic_root(&ray.root, &c1, &c0));
            assert!(ray.root.interval().unwrap().width() <= q(1, 1_000_000_000_000));
        }
    }

    #[test]
    fn homogeneous_pair_above_threshold() {
        let report = csc_rays(&jp(1, 1, 6, 1, 1)).unwrap();
        assert_eq!((report.unreduced_count, report.reduced_count), (3, 2));
        assert!(report.weyl_paired);
        let classes: Vec<_> = report.rays.iter().map(|r| r.class).collect();
        assert_eq!(classes, [RayClass::Irregular, RayClass::Regular, RayClass::Irregular]);
        assert_eq!(report.rays[0].partner, Some(2));
        assert_eq!(report.rays[1].root.multiplicity, 4);
        for ray in [&report.rays[0], &report.rays[2]] {
            assert!(brackets_quadratic_root(&ray.root, &q(3, 1), &q(1, 1)));
        }
    }

    #[test]
    fn rational_family_pairs_exactly() {
        let report = csc_rays(&jp(1, 2, 11, 1, 1)).unwrap();
        let roots: Vec<_> = report.rays.iter().map(|r| r.root.exact().cloned().unwrap()).collect();
        assert_eq!(roots, [q(1, 2), q(1, 1), q(2, 1)]);
        assert_eq!(report.reduced_count, 2);
        assert_eq!(report.count_of(RayClass::QuasiRegular), 2);
    }

    #[test]
    fn single_ray_cases() {
        let report = csc_rays(&jp(1, 5, 1, 3, 2)).unwrap();
        assert_eq!(report.unreduced_count, 1);
        let report = csc_rays(&jp(2, 1, 2, 1, 1)).unwrap();
        assert_eq!((report.unreduced_count, report.reduced_count), (1, 1));
        assert_eq!(report.rays[0].class, RayClass::Regular);
        let report = csc_rays(&jp(1, 1, 5, 1, 1)).unwrap();
        assert_eq!(report.reduced_count, 1);
        assert_eq!(report.forbidden_multiplicity, 6);
        assert_eq!(report.rays[0].root.multiplicity, 6);
    }

    #[test]
    fn low_precision_still_pairs() {
        let report = csc_rays_with_precision(&jp(3, 1, 40, 1, 1), 0).unwrap();
        assert_eq!(report.reduced_count, 2);
    }
}
