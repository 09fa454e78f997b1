use core::fmt;

use num_integer::Integer;

use super::ParamError;

/// Validated parameters `(p, l1, l2, w1, w2)` of the join `S^{2p+1} *_{l1,l2} S^3_w`.
///
/// Invariants: all entries positive, `gcd(w1, w2) = 1`, `w1 >= w2`, and
/// `l2` coprime to both `l1*w1` and `l1*w2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JoinParams {
    p: u32,
    l1: u64,
    l2: u64,
    w1: u64,
    w2: u64,
}

impl JoinParams {
    /// Checks every constraint and names the first one violated.
    ///
    /// A weight vector with `w1 < w2` is rejected rather than swapped.
    pub fn validate(p: i64, l1: i64, l2: i64, w1: i64, w2: i64) -> Result<Self, ParamError> {
        let positive = |name: &'static str, v: i64| {
            u64::try_from(v)
                .ok()
                .filter(|&v| v > 0)
                .ok_or(ParamError::NotPositive { name, value: v })
        };
        let p = u32::try_from(positive("p", p)?).map_err(|_| ParamError::TooLarge { name: "p" })?;
        let l1 = positive("l1", l1)?;
        let l2 = positive("l2", l2)?;
        let w1 = positive("w1", w1)?;
        let w2 = positive("w2", w2)?;
        Self::new(p, l1, l2, w1, w2)
    }

    pub fn new(p: u32, l1: u64, l2: u64, w1: u64, w2: u64) -> Result<Self, ParamError> {
        for (name, v) in [("l1", l1), ("l2", l2), ("w1", w1), ("w2", w2)] {
            if v == 0 {
                return Err(ParamError::NotPositive { name, value: 0 });
            }
        }
        if p == 0 {
            return Err(ParamError::NotPositive { name: "p", value: 0 });
        }
        if w1 < w2 {
            return Err(ParamError::WeightOrder { w1, w2 });
        }
        let g = w1.gcd(&w2);
        if g != 1 {
            return Err(ParamError::WeightsNotCoprime { w1, w2, gcd: g });
        }
        for (which, w) in [(1u8, w1), (2u8, w2)] {
            let g = coprime_gcd(l2, l1, w);
            if g != 1 {
                return Err(ParamError::L2NotCoprime { which, gcd: g });
            }
        }
        Ok(Self { p, l1, l2, w1, w2 })
    }

    /// `l1 = 1, w = (1, 1)`: the Wang-Ziller family indexed by `l2`.
    pub fn homogeneous(p: u32, l1: u64, l2: u64) -> Result<Self, ParamError> {
        Self::new(p, l1, l2, 1, 1)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn l1(&self) -> u64 {
        self.l1
    }

    pub fn l2(&self) -> u64 {
        self.l2
    }

    pub fn w1(&self) -> u64 {
        self.w1
    }

    pub fn w2(&self) -> u64 {
        self.w2
    }

    /// `|w| = w1 + w2`, widened so it cannot overflow.
    pub fn weight_sum(&self) -> u128 {
        u128::from(self.w1) + u128::from(self.w2)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.w1 == 1 && self.w2 == 1
    }

    /// Manifold dimension `2p + 3`.
    pub fn dimension(&self) -> u32 {
        2 * self.p + 3
    }

    /// Same tuple with a different `l2`, re-validated.
    pub fn with_l2(&self, l2: u64) -> Result<Self, ParamError> {
        Self::new(self.p, self.l1, l2, self.w1, self.w2)
    }
}

/// `gcd(l2, l1 * w)`, exact in 128 bits.
fn coprime_gcd(l2: u64, l1: u64, w: u64) -> u64 {
    let g = u128::from(l2).gcd(&(u128::from(l1) * u128::from(w)));
    // g divides l2, so it fits
    g as u64
}

impl fmt::Display for JoinParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "M^{}_{{{},{},({},{})}}",
            self.dimension(),
            self.l1,
            self.l2,
            self.w1,
            self.w2
        )
    }
}
