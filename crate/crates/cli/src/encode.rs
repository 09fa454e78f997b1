//! Canonical JSON fragments: integers and rationals travel as strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use sasaki_join_core::exactpoly::{IntPolynomial, RationalInterval, RootRecord};
use sasaki_join_core::joinspace::{AbelianGroup, JoinParams, Residue};

pub fn big(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

/// `"num/den"` in lowest terms, denominator always written.
pub fn rational_str(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn rational(q: &BigRational) -> Value {
    Value::String(rational_str(q))
}

/// `q` rounded half away from zero to `digits` decimals.
pub fn decimal(q: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let num = q.numer().abs() * &scale * 2u32 + q.denom();
    let rounded = num / (q.denom() * 2u32);
    let (int, frac) = (&rounded / &scale, &rounded % &scale);
    let sign = if q.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{frac:0>width$}", frac = frac.to_string(), width = digits as usize)
}

pub fn poly(p: &IntPolynomial) -> Value {
    json!({
        "coefficients": p.coeffs().iter().map(big).collect::<Vec<_>>(),
        "degree": p.degree(),
        "text": p.to_string(),
    })
}

pub fn interval(iv: &RationalInterval, digits: u32) -> Value {
    json!({
        "lo": rational(iv.lo()),
        "hi": rational(iv.hi()),
        "approx": decimal(&iv.midpoint(), digits),
    })
}

pub fn root(r: &RootRecord, digits: u32) -> Value {
    json!({
        "exact": r.exact().map(rational),
        "interval": r.interval().map(|iv| interval(iv, digits)),
        "approx": decimal(&r.representative(), digits),
        "multiplicity": r.multiplicity,
        "rational": r.is_rational,
    })
}

pub fn params(jp: &JoinParams) -> Value {
    json!({
        "p": jp.p(),
        "l1": jp.l1(),
        "l2": jp.l2(),
        "w": [jp.w1(), jp.w2()],
        "dimension": jp.dimension(),
    })
}

pub fn group(g: &AbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank,
        "torsion": g.torsion.iter().map(big).collect::<Vec<_>>(),
        "text": g.to_string(),
    })
}

pub fn residue(r: &Residue) -> Value {
    json!({ "value": big(&r.value), "modulus": big(&r.modulus) })
}

/// Root text for tables: the exact value, or the bracket with its decimal.
pub fn root_text(r: &RootRecord, digits: u32) -> String {
    match (r.exact(), r.interval()) {
        (Some(q), _) => rational_text(q),
        (None, Some(iv)) => format!("~{}", decimal(&iv.midpoint(), digits)),
        (None, None) => unreachable!("a root is exact or bracketed"),
    }
}

/// `3` rather than `3/1` for display.
pub fn rational_text(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        rational_str(q)
    }
}
