//! Homotopy, homeomorphism and diffeomorphism predicates in dimension 7.
//!
//! Homotopy equivalence covers general weights with `l1, w1, w2` odd.
//! Homeomorphism and diffeomorphism are decided only for the homogeneous
//! family `w = (1,1)`, where they reduce to congruences on `l2`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::joinspace::{JoinParams, ParamError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("classification is defined in dimension 7 only (p = 2), got p = {p}")]
    NotDimensionSeven { p: u32 },
    #[error("{name} must be odd, got {value}")]
    EvenParameter { name: &'static str, value: u64 },
    #[error(transparent)]
    Params(#[from] ParamError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equivalence {
    Homotopy,
    Homeomorphism,
    Diffeomorphism,
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equivalence::Homotopy => "homotopy",
            Equivalence::Homeomorphism => "homeomorphism",
            Equivalence::Diffeomorphism => "diffeomorphism",
        })
    }
}

/// One checked condition with the integers that decide it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: &'static str,
    pub holds: bool,
    pub witnesses: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub relation: Equivalence,
    /// Conjunction of every condition.
    pub overall: bool,
    pub conditions: Vec<Condition>,
}

impl ClassificationVerdict {
    fn new(relation: Equivalence, conditions: Vec<Condition>) -> Self {
        Self {
            relation,
            overall: conditions.iter().all(|c| c.holds),
            conditions,
        }
    }

    pub fn condition(&self, label: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.label == label)
    }
}

pub const COND_H4_ORDER: &str = "equal |H^4|";
pub const COND_L2_PARITY: &str = "l2' = l2 mod 2";
pub const COND_SQUARED_WEIGHTS: &str = "l1'^2|w'|^2 - l1^2|w|^2 = 0 mod 3|H^4|";
pub const COND_LINKING: &str = "l2'^3 = +-l2^3 mod |H^4|";
pub const COND_CONGRUENCE: &str = "l2' = l2 mod N";

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn check_odd_seven(params: &JoinParams) -> Result<(), ClassifyError> {
    if params.p() != 2 {
        return Err(ClassifyError::NotDimensionSeven { p: params.p() });
    }
    for (name, value) in [("l1", params.l1()), ("w1", params.w1()), ("w2", params.w2())] {
        if value % 2 == 0 {
            return Err(ClassifyError::EvenParameter { name, value });
        }
    }
    Ok(())
}

/// Homotopy equivalence of two 7-dimensional joins with `l1, w1, w2` odd.
///
/// Four conditions: equal `|H^4| = m`; equal parity of `l2`;
/// `3m | l1'^2 (w1'+w2')^2 - l1^2 (w1+w2)^2`; and `l2'^3 = +-l2^3 mod m`.
/// When the two orders differ the last two conditions are evaluated against
/// their gcd, so the verdict stays symmetric.
pub fn kruggel_homotopy_equivalent(
    a: &JoinParams,
    b: &JoinParams,
) -> Result<ClassificationVerdict, ClassifyError> {
    check_odd_seven(a)?;
    check_odd_seven(b)?;
    let order = |x: &JoinParams| big(x.w1()) * big(x.w2()) * big(x.l1()) * big(x.l1());
    let (ma, mb) = (order(a), order(b));
    let m = ma.gcd(&mb);

    let parity_a = big(a.l2() % 2);
    let parity_b = big(b.l2() % 2);

    let weighted = |x: &JoinParams| {
        let s = big(x.l1()) * BigInt::from(x.weight_sum());
        &s * &s
    };
    let diff = weighted(b) - weighted(a);
    let modulus3 = BigInt::from(3) * &m;
    let residue3 = diff.mod_floor(&modulus3);

    let cube = |x: &JoinParams| big(x.l2()).pow(3).mod_floor(&m);
    let (ca, cb) = (cube(a), cube(b));
    let linking = ca == cb || (&ca + &cb).mod_floor(&m).is_zero();

    Ok(ClassificationVerdict::new(
        Equivalence::Homotopy,
        vec![
            Condition {
                label: COND_H4_ORDER,
                holds: ma == mb,
                witnesses: vec![ma, mb],
            },
            Condition {
                label: COND_L2_PARITY,
                holds: parity_a == parity_b,
                witnesses: vec![parity_a, parity_b],
            },
            Condition {
                label: COND_SQUARED_WEIGHTS,
                holds: residue3.is_zero(),
                witnesses: vec![diff, modulus3, residue3],
            },
            Condition {
                label: COND_LINKING,
                holds: linking,
                witnesses: vec![ca, cb, m],
            },
        ],
    ))
}

/// Exponents of 2 and 7 in the diffeomorphism modulus `2^l2 7^l7 l1^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LambdaExponents {
    pub lambda2: u8,
    pub lambda7: u8,
}

pub fn lambda_exponents(l1: u64) -> LambdaExponents {
    let lambda2 = match l1 % 8 {
        2 | 6 => 0,
        1 | 7 => 1,
        3 | 5 => 2,
        _ => 3, // 0, 4
    };
    let lambda7 = match l1 % 7 {
        0 | 3 | 4 => 1,
        _ => 0, // 1, 2, 5, 6
    };
    LambdaExponents { lambda2, lambda7 }
}

/// `2 l1^2` for `l1` odd or divisible by 4, `l1^2` for `l1 = 2 mod 4`.
pub fn homeomorphism_modulus(l1: u64) -> BigInt {
    let sq = big(l1) * big(l1);
    if l1 % 4 == 2 {
        sq
    } else {
        sq * 2
    }
}

/// `2^lambda2 * 7^lambda7 * l1^2`.
pub fn diffeomorphism_modulus(l1: u64) -> BigInt {
    let LambdaExponents { lambda2, lambda7 } = lambda_exponents(l1);
    BigInt::from(2).pow(u32::from(lambda2)) * BigInt::from(7).pow(u32::from(lambda7)) * big(l1) * big(l1)
}

fn congruent(l2: u64, l2p: u64, modulus: &BigInt) -> bool {
    (big(l2p) - big(l2)).mod_floor(modulus).is_zero()
}

fn check_homogeneous(l1: u64, l2: u64, l2p: u64) -> Result<(), ClassifyError> {
    JoinParams::homogeneous(2, l1, l2)?;
    JoinParams::homogeneous(2, l1, l2p)?;
    Ok(())
}

/// Congruence verdict for `M_{l1,l2,(1,1)}` against `M_{l1,l2',(1,1)}` in dimension 7.
pub fn ks_verdict(
    relation: Equivalence,
    l1: u64,
    l2: u64,
    l2p: u64,
) -> Result<ClassificationVerdict, ClassifyError> {
    check_homogeneous(l1, l2, l2p)?;
    let modulus = match relation {
        Equivalence::Homeomorphism => homeomorphism_modulus(l1),
        Equivalence::Diffeomorphism => diffeomorphism_modulus(l1),
        Equivalence::Homotopy => {
            let a = JoinParams::homogeneous(2, l1, l2)?;
            let b = JoinParams::homogeneous(2, l1, l2p)?;
            return kruggel_homotopy_equivalent(&a, &b);
        }
    };
    let diff = big(l2p) - big(l2);
    let residue = diff.mod_floor(&modulus);
    Ok(ClassificationVerdict::new(
        relation,
        vec![Condition {
            label: COND_CONGRUENCE,
            holds: residue.is_zero(),
            witnesses: vec![diff, modulus, residue],
        }],
    ))
}

pub fn ks_homeomorphic(l1: u64, l2: u64, l2p: u64) -> Result<bool, ClassifyError> {
    check_homogeneous(l1, l2, l2p)?;
    Ok(congruent(l2, l2p, &homeomorphism_modulus(l1)))
}

pub fn ks_diffeomorphic(l1: u64, l2: u64, l2p: u64) -> Result<bool, ClassifyError> {
    check_homogeneous(l1, l2, l2p)?;
    Ok(congruent(l2, l2p, &diffeomorphism_modulus(l1)))
}

/// Diffeomorphism classes among `l2` values for fixed `l1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffeoPartition {
    pub l1: u64,
    pub modulus: BigInt,
    /// Each class ascending; classes ordered by smallest member.
    pub classes: Vec<Vec<u64>>,
    /// Inputs that do not form a valid homogeneous pair with `l1`.
    pub rejected: Vec<(u64, ParamError)>,
}

/// Partitions `l2_values` by [`ks_diffeomorphic`]. Duplicates collapse.
pub fn partition_diffeo_types(l1: u64, l2_values: &[u64]) -> DiffeoPartition {
    let mut values: Vec<u64> = l2_values.to_vec();
    values.sort_unstable();
    values.dedup();
    let mut classes: Vec<Vec<u64>> = Vec::new();
    let mut rejected = Vec::new();
    for l2 in values {
        if let Err(e) = JoinParams::homogeneous(2, l1, l2) {
            rejected.push((l2, e));
            continue;
        }
        let home = classes
            .iter_mut()
            .find(|class| matches!(ks_diffeomorphic(l1, class[0], l2), Ok(true)));
        match home {
            Some(class) => class.push(l2),
            None => classes.push(vec![l2]),
        }
    }
    DiffeoPartition {
        l1,
        modulus: diffeomorphism_modulus(l1),
        classes,
        rejected,
    }
}
