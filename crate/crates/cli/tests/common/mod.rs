#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use sasaki_join::report::Output;

pub fn run(args: &[&str]) -> Output {
    sasaki_join::run(std::iter::once("sasaki-join").chain(args.iter().copied()))
}

/// Runs with `--json` and parses stdout, asserting success.
pub fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = run(&full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("stdout is JSON")
}

/// Parses a `"num/den"` string back into a rational.
pub fn rat(v: &Value) -> BigRational {
    let s = v.as_str().expect("rational is a string");
    let (n, d) = s.split_once('/').expect("num/den");
    BigRational::new(n.parse().unwrap(), d.parse().unwrap())
}

pub fn int(v: &Value) -> BigInt {
    v.as_str().expect("integer is a string").parse().unwrap()
}
