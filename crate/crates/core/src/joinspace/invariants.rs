use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{JoinParams, ParamError, RingPresentation, TopologyError};

/// Finitely generated abelian group `Z^free_rank + sum Z_t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: u32,
    /// Orders of the cyclic torsion summands, each `> 1`.
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn integers() -> Self {
        Self {
            free_rank: 1,
            torsion: Vec::new(),
        }
    }

    /// `Z_n`; trivial when `n = 1`.
    pub fn cyclic(n: BigInt) -> Self {
        let torsion = if n > BigInt::one() { vec![n] } else { Vec::new() };
        Self { free_rank: 0, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let r = if first { Ok(()) } else { f.write_str(" + ") };
            first = false;
            r
        };
        match self.free_rank {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("Z")?;
            }
            r => {
                sep(f)?;
                write!(f, "Z^{r}")?;
            }
        }
        for t in &self.torsion {
            sep(f)?;
            write!(f, "Z_{t}")?;
        }
        Ok(())
    }
}

/// Residue class `value mod modulus`, `value` in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    pub value: BigInt,
    pub modulus: BigInt,
}

impl Residue {
    pub fn new(value: BigInt, modulus: BigInt) -> Self {
        let value = value.mod_floor(&modulus);
        Self { value, modulus }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Diffeomorphism type of an `S^{2p+1}`-bundle over `S^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SphereBundle {
    Trivial,
    Nontrivial,
}

/// The two simply connected 5-manifolds reached when `p = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim5Type {
    /// `S^2 x S^3`
    Product,
    /// The non-trivial `S^3`-bundle over `S^2`.
    Twisted,
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

/// Coefficient of `c1(D)` against the positive generator of `H^2`: `l2 (p+1) - l1 (w1+w2)`.
pub fn c1_coefficient(params: &JoinParams) -> BigInt {
    big(params.l2()) * BigInt::from(params.p() + 1) - big(params.l1()) * BigInt::from(params.weight_sum())
}

/// `w2` vanishes exactly when the `c1` coefficient is even.
pub fn is_spin(params: &JoinParams) -> bool {
    c1_coefficient(params).is_even()
}

/// `|H^4| = w1 w2 l1^2`, defined for `p > 1`.
pub fn h4_order(params: &JoinParams) -> Result<BigInt, TopologyError> {
    require_p_above_one(params)?;
    Ok(torsion_order(params))
}

fn torsion_order(params: &JoinParams) -> BigInt {
    let l1 = big(params.l1());
    big(params.w1()) * big(params.w2()) * &l1 * &l1
}

fn require_p_above_one(params: &JoinParams) -> Result<(), TopologyError> {
    if params.p() > 1 {
        Ok(())
    } else {
        Err(TopologyError::RequiresPAboveOne { p: params.p() })
    }
}

fn require_dimension_seven(params: &JoinParams) -> Result<(), TopologyError> {
    if params.p() == 2 {
        Ok(())
    } else {
        Err(TopologyError::RequiresDimensionSeven { p: params.p() })
    }
}

/// `Z[x,y]/(w1 w2 l1^2 x^2, x^{p+1}, x^2 y, y^2)` with `|x| = 2`, `|y| = 2p+1`.
pub fn cohomology_ring(params: &JoinParams) -> Result<RingPresentation, TopologyError> {
    require_p_above_one(params)?;
    let p = params.p();
    let one = BigInt::one;
    let ring = RingPresentation::new(
        vec![("x", 2), ("y", 2 * p + 1)],
        vec![
            (torsion_order(params), vec![(0, 2)]),
            (one(), vec![(0, p + 1)]),
            (one(), vec![(0, 2), (1, 1)]),
            (one(), vec![(1, 2)]),
        ],
    );
    Ok(ring.unwrap_or_else(|| unreachable!("coefficients and degrees are positive")))
}

/// `H^degree(M; Z)` read off the ring: `Z` in degrees `0, 2, 2p+1, 2p+3`,
/// `Z_{w1 w2 l1^2}` in even degrees `4..=2p`, zero elsewhere.
pub fn cohomology_group(params: &JoinParams, degree: u32) -> Result<AbelianGroup, TopologyError> {
    require_p_above_one(params)?;
    let p = params.p();
    let top = 2 * p + 3;
    if degree > top {
        return Err(TopologyError::DegreeOutOfRange { degree, top });
    }
    Ok(match degree {
        0 | 2 => AbelianGroup::integers(),
        d if d == 2 * p + 1 || d == top => AbelianGroup::integers(),
        d if d % 2 == 0 && (4..=2 * p).contains(&d) => AbelianGroup::cyclic(torsion_order(params)),
        _ => AbelianGroup::trivial(),
    })
}

/// `pi_i(M)` for `1 <= i <= 4` and `p > 1`: `0, Z, Z, Z_2`.
pub fn homotopy_group(params: &JoinParams, i: u32) -> Result<AbelianGroup, TopologyError> {
    require_p_above_one(params)?;
    match i {
        1 => Ok(AbelianGroup::trivial()),
        2 | 3 => Ok(AbelianGroup::integers()),
        4 => Ok(AbelianGroup::cyclic(BigInt::from(2))),
        _ => Err(TopologyError::HomotopyIndexUnsupported { i }),
    }
}

/// First Pontrjagin class `(3 l2^2 - l1^2 (w1^2 + w2^2)) x^2` in `H^4 = Z_{w1 w2 l1^2}`.
pub fn p1_class(params: &JoinParams) -> Result<Residue, TopologyError> {
    require_dimension_seven(params)?;
    let (l1, l2, w1, w2) = (big(params.l1()), big(params.l2()), big(params.w1()), big(params.w2()));
    let value = BigInt::from(3) * &l2 * &l2 - &l1 * &l1 * (&w1 * &w1 + &w2 * &w2);
    Ok(Residue::new(value, torsion_order(params)))
}

/// Linking form representative `l2^3` in `Z_{w1 w2 l1^2}`.
pub fn linking_form(params: &JoinParams) -> Result<Residue, TopologyError> {
    require_dimension_seven(params)?;
    let l2 = big(params.l2());
    Ok(Residue::new(&l2 * &l2 * &l2, torsion_order(params)))
}

/// Bundle type of the `l1 = 1, w = (1,1)` member: trivial for odd `p` or even `l2`.
pub fn bundle_type_wz(p: u32, l2: u64) -> SphereBundle {
    if p % 2 == 1 || l2.is_multiple_of(2) {
        SphereBundle::Trivial
    } else {
        SphereBundle::Nontrivial
    }
}

/// For `p = 1`: `S^2 x S^3` when `l1 (w1 + w2)` is even, the twisted bundle otherwise.
pub fn diffeo_type_dim5(params: &JoinParams) -> Result<Dim5Type, TopologyError> {
    if params.p() != 1 {
        return Err(TopologyError::RequiresDimensionFive { p: params.p() });
    }
    let parity = (u128::from(params.l1() % 2) * (params.weight_sum() % 2)) % 2;
    Ok(if parity == 0 { Dim5Type::Product } else { Dim5Type::Twisted })
}

/// Ring of the iterated join over `S^2 x S^3`:
/// `Z[x,y,u,z]/(x^2, l2 xy, w1 w2 l1^2 y^2, z^2, u^2, zu, zx, ux, uy)`,
/// `x, y` of degree 2 and `u, z` of degree 5.
pub fn iterated_join_ring(l1: u64, l2: u64, w1: u64, w2: u64) -> Result<RingPresentation, TopologyError> {
    for (name, v) in [("l1", l1), ("l2", l2), ("w1", w1), ("w2", w2)] {
        if v == 0 {
            return Err(ParamError::NotPositive { name, value: 0 }.into());
        }
    }
    let g = l1.gcd(&l2);
    if g != 1 {
        return Err(TopologyError::IteratedNotCoprime { pair: "(l1, l2)", gcd: g });
    }
    let g = w1.gcd(&w2);
    if g != 1 {
        return Err(TopologyError::IteratedNotCoprime { pair: "(w1, w2)", gcd: g });
    }
    let one = BigInt::one;
    let (x, y, u, z) = (0, 1, 2, 3);
    let torsion = big(w1) * big(w2) * big(l1) * big(l1);
    let ring = RingPresentation::new(
        vec![("x", 2), ("y", 2), ("u", 5), ("z", 5)],
        vec![
            (one(), vec![(x, 2)]),
            (big(l2), vec![(x, 1), (y, 1)]),
            (torsion, vec![(y, 2)]),
            (one(), vec![(z, 2)]),
            (one(), vec![(u, 2)]),
            (one(), vec![(z, 1), (u, 1)]),
            (one(), vec![(z, 1), (x, 1)]),
            (one(), vec![(u, 1), (x, 1)]),
            (one(), vec![(u, 1), (y, 1)]),
        ],
    );
    Ok(ring.unwrap_or_else(|| unreachable!("coefficients and degrees are positive")))
}
