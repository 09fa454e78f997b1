//! Naive positive-root oracle used to cross-check isolation.
//!
//! It shares nothing with the isolator beyond coefficient storage:
//! square-free part by rational Euclid, location by sign changes on a grid
//! refined by bisection, rationality by enumerating `+-c/d` with `c | a0`,
//! `d | an`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sasaki_join_core::exactpoly::{isolate_positive_roots, IntPolynomial, RatPolynomial, RootValue};

const GRID: i64 = 4096;

pub struct OracleRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub rational: bool,
}

fn squarefree_by_euclid(p: &IntPolynomial) -> RatPolynomial {
    let f = p.to_rational();
    let g = f.gcd(&f.derivative());
    let (q, r) = f.divrem(&g).unwrap();
    assert!(r.is_zero());
    q
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs().to_u64().expect("small coefficients");
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(BigInt::from).collect()
}

fn has_rational_root_in(sf: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> bool {
    let coeffs = sf.coeffs();
    let trailing = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let a0 = &coeffs[trailing];
    let an = coeffs.last().unwrap();
    for c in divisors(a0) {
        for d in divisors(an) {
            let q = BigRational::new(c.clone(), d);
            if &q > lo && &q <= hi && sf.eval(&q).is_zero() {
                return true;
            }
        }
    }
    false
}

pub fn oracle(p: &IntPolynomial) -> Vec<OracleRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf_rat = squarefree_by_euclid(p);
    let lcm = sf_rat.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let sf = IntPolynomial::new(
        sf_rat
            .coeffs()
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    )
    .primitive_part();
    let lc = sf.leading_coefficient().unwrap().abs();
    let max = sf.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let bound = BigRational::from_integer(BigInt::one() + max.div_ceil(&lc));
    let step = &bound / BigRational::from_integer(GRID.into());

    // sign of den^n * sf(num/den), by Horner over the integers
    let eval_sign = |x: &BigRational| {
        let (num, den) = (x.numer(), x.denom());
        let mut v = BigInt::zero();
        let mut scale = BigInt::one();
        for c in sf.coeffs().iter().rev() {
            v = v * num + c * &scale;
            scale *= den;
        }
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    };
    let mut out = Vec::new();
    let mut prev = BigRational::zero();
    // just right of zero the sign is that of the lowest nonzero coefficient
    let lowest = sf.coeffs().iter().find(|c| !c.is_zero()).unwrap();
    let mut prev_sign = if lowest.is_positive() { 1 } else { -1 };
    for k in 1..=GRID {
        let x = &step * BigRational::from_integer(k.into());
        let s = eval_sign(&x);
        if s == 0 {
            out.push(OracleRoot {
                lo: x.clone(),
                hi: x.clone(),
                rational: true,
            });
            prev = x;
            prev_sign = -prev_sign;
            continue;
        }
        if s != prev_sign {
            let (mut lo, mut hi) = (prev.clone(), x.clone());
            for _ in 0..30 {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                let ms = eval_sign(&mid);
                if ms == 0 {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                if ms == prev_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let rational = lo == hi || has_rational_root_in(&sf, &prev, &x);
            out.push(OracleRoot { lo, hi, rational });
        }
        prev = x;
        prev_sign = s;
    }
    out
}

pub fn random_poly(rng: &mut ChaCha8Rng) -> IntPolynomial {
    loop {
        let degree = rng.gen_range(1..=10);
        let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-50..=50)).collect();
        let p = IntPolynomial::from_i64s(&coeffs);
        if p.degree().is_some_and(|d| d >= 1) {
            return p;
        }
    }
}

/// Products of small linear factors, so rational and repeated roots actually occur.
pub fn planted_poly(rng: &mut ChaCha8Rng) -> IntPolynomial {
    let mut p = IntPolynomial::from_i64s(&[rng.gen_range(1..=5)]);
    let factors = rng.gen_range(1..=4);
    for _ in 0..factors {
        let f = if rng.gen_bool(0.7) {
            IntPolynomial::from_i64s(&[-rng.gen_range(-5..=7), rng.gen_range(1..=3)])
        } else {
            IntPolynomial::from_i64s(&[rng.gen_range(-6..=6), rng.gen_range(-6..=6), 1])
        };
        p = &p * &f;
    }
    p
}


/// Runs `count` seeded polynomials through both the isolator and the oracle.
/// Returns `(polynomials with roots, rational roots seen)` or the first disagreement.
pub fn compare_seeded(seed: u64, count: usize) -> Result<(usize, usize), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut with_roots = 0;
    let mut rational_seen = 0;
    for i in 0..count {
        let p = if i % 2 == 0 { random_poly(&mut rng) } else { planted_poly(&mut rng) };
        let got = isolate_positive_roots(&p).map_err(|e| format!("{p}: {e}"))?;
        let want = oracle(&p);
        if got.len() != want.len() {
            return Err(format!("count mismatch for {p}: {} vs {}", got.len(), want.len()));
        }
        for (g, w) in got.iter().zip(&want) {
            if g.is_rational != w.rational {
                return Err(format!("rationality mismatch for {p}"));
            }
            let inside = match &g.value {
                RootValue::Exact(q) => &w.lo <= q && q <= &w.hi,
                RootValue::Isolating(iv) => iv.lo() <= &w.hi && &w.lo <= iv.hi(),
            };
            if !inside {
                return Err(format!("{p}: isolator and oracle disagree on location"));
            }
        }
        with_roots += usize::from(!got.is_empty());
        rational_seen += got.iter().filter(|r| r.is_rational).count();
    }
    Ok((with_roots, rational_seen))
}
