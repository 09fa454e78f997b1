use alloc::vec::Vec;

use super::{csc_rays_with_precision, CscError, RayClass};
use crate::joinspace::{JoinParams, ParamError};

/// Ray counts do not depend on interval width, so scans isolate coarsely.
const SCAN_DIGITS: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepPoint {
    pub unreduced_count: usize,
    pub reduced_count: usize,
    pub forbidden_multiplicity: u32,
    pub regular: usize,
    pub quasi_regular: usize,
    pub irregular: usize,
    /// Maximal ray count reached: 3 unreduced rays for `w1 > w2`, 2 reduced rays for `w = (1,1)`.
    pub qualifies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepOutcome {
    Evaluated(SweepPoint),
    /// `l2` violates a coprimality constraint.
    Skipped(ParamError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub l2: u64,
    pub outcome: SweepOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CscSweep {
    /// Ascending in `l2`, one row per distinct value.
    pub rows: Vec<SweepRow>,
    /// Smallest qualifying `l2`.
    pub threshold: Option<u64>,
    pub skipped: Vec<u64>,
}

impl CscSweep {
    /// Merges rows evaluated in any order.
    pub fn from_rows(mut rows: Vec<SweepRow>) -> Self {
        rows.sort_by_key(|r| r.l2);
        rows.dedup_by_key(|r| r.l2);
        let threshold = rows
            .iter()
            .find(|r| matches!(r.outcome, SweepOutcome::Evaluated(pt) if pt.qualifies))
            .map(|r| r.l2);
        let skipped = rows
            .iter()
            .filter(|r| matches!(r.outcome, SweepOutcome::Skipped(_)))
            .map(|r| r.l2)
            .collect();
        Self {
            rows,
            threshold,
            skipped,
        }
    }
}

fn qualifies(params: &JoinParams, unreduced: usize, reduced: usize) -> bool {
    if params.is_homogeneous() {
        reduced >= 2
    } else {
        unreduced >= 3
    }
}

/// Ray counts for one `l2`, or the constraint it violates.
pub fn evaluate_l2(p: u32, l1: u64, w1: u64, w2: u64, l2: u64) -> Result<SweepRow, CscError> {
    let params = match JoinParams::new(p, l1, l2, w1, w2) {
        Ok(params) => params,
        Err(e) => {
            return Ok(SweepRow {
                l2,
                outcome: SweepOutcome::Skipped(e),
            })
        }
    };
    let report = csc_rays_with_precision(&params, SCAN_DIGITS)?;
    Ok(SweepRow {
        l2,
        outcome: SweepOutcome::Evaluated(SweepPoint {
            unreduced_count: report.unreduced_count,
            reduced_count: report.reduced_count,
            forbidden_multiplicity: report.forbidden_multiplicity,
            regular: report.count_of(RayClass::Regular),
            quasi_regular: report.count_of(RayClass::QuasiRegular),
            irregular: report.count_of(RayClass::Irregular),
            qualifies: qualifies(&params, report.unreduced_count, report.reduced_count),
        }),
    })
}

/// Checks the `l2`-independent parameters, using `l2 = 1` which is coprime to everything.
fn check_base(p: u32, l1: u64, w1: u64, w2: u64) -> Result<(), CscError> {
    JoinParams::new(p, l1, 1, w1, w2)?;
    Ok(())
}

/// Evaluates every `l2` in order.
pub fn threshold_sweep(p: u32, l1: u64, w1: u64, w2: u64, l2_values: &[u64]) -> Result<CscSweep, CscError> {
    check_base(p, l1, w1, w2)?;
    let rows = l2_values
        .iter()
        .map(|&l2| evaluate_l2(p, l1, w1, w2, l2))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CscSweep::from_rows(rows))
}

/// Least valid `l2 <= search_bound` reaching the maximal CSC ray count.
pub fn min_l2_multiple_csc(p: u32, l1: u64, w1: u64, w2: u64, search_bound: u64) -> Result<Option<u64>, CscError> {
    check_base(p, l1, w1, w2)?;
    for l2 in 1..=search_bound {
        if let SweepOutcome::Evaluated(pt) = evaluate_l2(p, l1, w1, w2, l2)?.outcome {
            if pt.qualifies {
                return Ok(Some(l2));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn known_thresholds() {
        assert_eq!(min_l2_multiple_csc(1, 1, 3, 2, 30).unwrap(), Some(19));
        assert_eq!(min_l2_multiple_csc(1, 1, 1, 1, 10).unwrap(), Some(6));
        assert_eq!(min_l2_multiple_csc(2, 1, 1, 1, 10).unwrap(), Some(3));
        assert_eq!(min_l2_multiple_csc(1, 1, 3, 2, 18).unwrap(), None);
    }

    #[test]
    fn bad_base_is_an_error() {
        assert!(min_l2_multiple_csc(1, 1, 2, 3, 10).is_err());
        assert!(threshold_sweep(1, 1, 4, 2, &[1]).is_err());
    }

    #[test]
    fn sweep_records_skips_and_sorts() {
        let sweep = threshold_sweep(1, 1, 3, 2, &[20, 2, 19, 18, 3]).unwrap();
        let l2s: Vec<_> = sweep.rows.iter().map(|r| r.l2).collect();
        assert_eq!(l2s, vec![2, 3, 18, 19, 20]);
        assert_eq!(sweep.skipped, vec![2, 3, 18, 20]);
        assert_eq!(sweep.threshold, Some(19));
    }
}
