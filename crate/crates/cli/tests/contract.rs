mod common;

use std::process::Command;

use num_rational::BigRational;
use proptest::prelude::*;
use serde_json::Value;

use sasaki_join::commands::csc_report;
use sasaki_join::error::{CliError, EXIT_INTERNAL, EXIT_INVALID};
use sasaki_join::resolve_jobs;
use sasaki_join_core::cscrays::{build_f, csc_rays_with_precision, CscError, CscPolynomial};
use sasaki_join_core::exactpoly::IntPolynomial;
use sasaki_join_core::joinspace::JoinParams;

use common::{int, json, rat, run};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sasaki-join"))
}

#[test]
fn invalid_input_exits_one() {
    let cases: &[&[&str]] = &[
        &["invariants", "-p", "1", "-l1", "1", "-l2", "10", "-w", "3,2"],
        &["csc", "-p", "0", "-l1", "1", "-l2", "1"],
        &["csc", "-p", "1", "-l1", "-3", "-l2", "1"],
        &["csc", "-p", "1", "-l1", "1", "-l2", "1", "-w", "2,3"],
        &["csc", "-p", "1", "-l1", "1", "-l2", "1", "--precision", "0"],
        &["csc", "-p", "1", "-l1", "1", "-l2", "1", "--precision", "1001"],
        &["csc", "-p", "1", "-l1", "1"],
        &["classify", "homotopy", "(4,21,1,1)", "(5,21,1,1)"],
        &["classify", "diffeo", "-p", "3", "-l1", "5", "-l2", "39", "-l2p", "89"],
        &["classify", "homeo", "(5,39,3,1)", "(5,89,1,1)"],
        &["sweep", "csc", "-p", "1", "-l1", "1", "-w", "3,2", "--l2", "6..6"],
        &["sweep", "csc", "-p", "1", "-l1", "1", "-w", "3,2", "--l2", "9..1"],
        &["sweep", "diffeo", "-l1", "2", "--l2", "2..8:even"],
        &["sweep", "diffeo", "-l1", "2", "--l2", "1..9:prime"],
        &["frobnicate"],
        &[],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.code, EXIT_INVALID, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn messages_name_the_constraint() {
    let out = run(&["invariants", "-p", "1", "-l1", "1", "-l2", "10", "-w", "3,2"]);
    assert!(out.stderr.contains("gcd(l2, l1*w2) = 2"), "{}", out.stderr);
    let out = run(&["classify", "homotopy", "(4,21,1,1)", "(5,21,1,1)"]);
    assert!(out.stderr.contains("l1 must be odd"), "{}", out.stderr);
}

#[test]
fn malformed_polynomial_exits_two() {
    let params = JoinParams::new(1, 1, 19, 3, 2).unwrap();
    // (3b - 2)^2: the forced root is present but below its floor
    let poly = IntPolynomial::from_i64s(&[-2, 3]).pow(2);
    let err = csc_report(&CscPolynomial::from_parts(poly, params), 12, Value::Null).unwrap_err();
    assert_eq!(err.exit_code(), EXIT_INTERNAL, "{err}");
    assert!(err.to_string().contains("multiplicity 2"));

    assert_eq!(CliError::from(CscError::UnpairedRoots).exit_code(), EXIT_INTERNAL);
    assert_eq!(CliError::from(CscError::NoPositiveFamily { p: 3 }).exit_code(), EXIT_INVALID);
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("sweep"));
}

#[test]
fn process_exit_status_matches() {
    let ok = binary().args(["csc", "-p", "1", "-l1", "2", "-l2", "11", "--json"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = binary().args(["csc", "-p", "1", "-l1", "1", "-l2", "2", "-w", "4,2"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("gcd(w1, w2) = 2"));
    let usage = binary().args(["csc", "--precision", "x"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
}

#[test]
fn sweep_is_independent_of_worker_count() {
    let base = ["sweep", "csc", "-p", "1", "-l1", "1", "-w", "3,2", "--l2", "1..60", "--json"];
    let reference = run(&[&base[..], &["--jobs", "1"]].concat()).stdout;
    for jobs in ["2", "3", "8"] {
        assert_eq!(run(&[&base[..], &["--jobs", jobs]].concat()).stdout, reference, "jobs = {jobs}");
    }
    // the echo leaves out the worker count
    assert!(!reference.contains("jobs"));

    let via_env = binary().args(base).env("SASAKI_JOBS", "5").output().unwrap();
    assert_eq!(String::from_utf8(via_env.stdout).unwrap(), reference);
    let bad_env = binary().args(base).env("SASAKI_JOBS", "zero").output().unwrap();
    assert_eq!(bad_env.status.code(), Some(1));
}

#[test]
fn jobs_resolution() {
    assert_eq!(resolve_jobs(Some(3), None).unwrap(), 3);
    assert_eq!(resolve_jobs(Some(3), Some("7")).unwrap(), 7);
    assert!(resolve_jobs(None, Some("0")).is_err());
    assert!(resolve_jobs(None, None).unwrap() >= 1);
}

fn homogeneous_or_weighted() -> impl Strategy<Value = JoinParams> {
    (1u32..=3, 1u64..=6, 1u64..=40, 1u64..=4, 1u64..=4)
        .prop_filter_map("valid", |(p, l1, l2, a, b)| JoinParams::new(p, l1, l2, a.max(b), a.min(b)).ok())
}

fn csc_args(jp: &JoinParams, digits: u32) -> Vec<String> {
    [
        "csc".to_string(),
        "-p".into(),
        jp.p().to_string(),
        "-l1".into(),
        jp.l1().to_string(),
        "-l2".into(),
        jp.l2().to_string(),
        "-w".into(),
        format!("{},{}", jp.w1(), jp.w2()),
        "--precision".into(),
        digits.to_string(),
    ]
    .to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn csc_json_round_trips(jp in homogeneous_or_weighted(), digits in 1u32..=20) {
        let args = csc_args(&jp, digits);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run(&[&args[..], &["--json"]].concat());
        prop_assert_eq!(first.code, 0);
        // byte-stable across runs
        prop_assert_eq!(&run(&[&args[..], &["--json"]].concat()).stdout, &first.stdout);

        // re-serializing the parsed document reproduces it exactly
        let doc: Value = serde_json::from_str(&first.stdout).unwrap();
        prop_assert_eq!(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), first.stdout.clone());

        // and the exact values decode to what the library computes
        let payload = &doc["payload"];
        let f = build_f(&jp).poly;
        let coeffs: Vec<_> = payload["f"]["coefficients"].as_array().unwrap().iter().map(int).collect();
        prop_assert_eq!(coeffs.as_slice(), f.coeffs());
        let report = csc_rays_with_precision(&jp, digits).unwrap();
        let rays = payload["rays"].as_array().unwrap();
        prop_assert_eq!(rays.len(), report.rays.len());
        for (json_ray, ray) in rays.iter().zip(&report.rays) {
            prop_assert_eq!(json_ray["class"].as_str().unwrap(), ray.class.to_string());
            prop_assert_eq!(json_ray["multiplicity"].as_u64().unwrap(), u64::from(ray.root.multiplicity));
            match ray.root.exact() {
                Some(q) => prop_assert_eq!(&rat(&json_ray["exact"]), q),
                None => {
                    let iv = ray.root.interval().unwrap();
                    prop_assert_eq!(&rat(&json_ray["interval"]["lo"]), iv.lo());
                    prop_assert_eq!(&rat(&json_ray["interval"]["hi"]), iv.hi());
                    // the decimal is display-only but must sit inside the bracket up to rounding
                    let approx: f64 = json_ray["interval"]["approx"].as_str().unwrap().parse().unwrap();
                    let slack = 10f64.powi(-(digits as i32));
                    let to_f64 = |q: &BigRational| q.numer().to_string().parse::<f64>().unwrap()
                        / q.denom().to_string().parse::<f64>().unwrap();
                    prop_assert!(approx >= to_f64(iv.lo()) - slack && approx <= to_f64(iv.hi()) + slack);
                }
            }
        }
        prop_assert_eq!(payload["reduced_count"].as_u64().unwrap(), report.reduced_count as u64);
    }

    #[test]
    fn sweep_json_is_deterministic(
        p in 1u32..=3, l1 in 1u64..=4, w in prop::sample::select(vec![(1u64, 1u64), (2, 1), (3, 2), (5, 3)]),
        start in 1u64..=20, len in 0u64..=15, jobs in 1u32..=6,
    ) {
        let args = [
            "sweep".to_string(), "csc".into(), "-p".into(), p.to_string(), "-l1".into(), l1.to_string(),
            "-w".into(), format!("{},{}", w.0, w.1), "--l2".into(), format!("{}..{}", start, start + len), "--json".into(),
        ];
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let serial = run(&[&args[..], &["--jobs", "1"]].concat());
        let parallel = run(&[&args[..], &["--jobs", &jobs.to_string()]].concat());
        prop_assert_eq!(&serial, &parallel);
        if serial.code == 0 {
            let doc: Value = serde_json::from_str(&serial.stdout).unwrap();
            let l2s: Vec<u64> = doc["payload"]["rows"].as_array().unwrap().iter().map(|r| r["l2"].as_u64().unwrap()).collect();
            prop_assert_eq!(l2s, (start..=start + len).collect::<Vec<_>>());
        } else {
            prop_assert_eq!(serial.code, EXIT_INVALID);
        }
    }
}

#[test]
fn sweep_rows_agree_with_single_reports() {
    let doc = json(&["sweep", "csc", "-p", "1", "-l1", "1", "-w", "1,1", "--l2", "1..12"]);
    for row in doc["payload"]["rows"].as_array().unwrap() {
        let l2 = row["l2"].as_u64().unwrap().to_string();
        let single = json(&["csc", "-p", "1", "-l1", "1", "-l2", &l2]);
        assert_eq!(row["reduced_count"], single["payload"]["reduced_count"], "l2 = {l2}");
        assert_eq!(row["unreduced_count"], single["payload"]["unreduced_count"], "l2 = {l2}");
    }
}
