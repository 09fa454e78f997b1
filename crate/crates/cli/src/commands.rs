use rayon::prelude::*;
use serde_json::{json, Map, Value};

use sasaki_join_core::classify::{
    kruggel_homotopy_equivalent, ks_verdict, partition_diffeo_types, ClassificationVerdict, ClassifyError,
    Equivalence,
};
use sasaki_join_core::cscrays::{
    build_f, csc_rays_with_precision, deflate_forbidden, evaluate_l2, forced_multiplicity_floor, CscPolynomial,
    CscSweep, RayClass, SweepOutcome,
};
use sasaki_join_core::joinspace::{
    bundle_type_wz, c1_coefficient, cohomology_group, cohomology_ring, diffeo_type_dim5, h4_order, homotopy_group,
    is_spin, linking_form, p1_class, Dim5Type, JoinParams, SphereBundle,
};

use crate::args::{ClassifyArgs, JoinArgs, L2Range, OutputArgs, Relation, SweepCscArgs, SweepDiffeoArgs};
use crate::encode::{self, big, rational};
use crate::error::CliError;
use crate::report::{request, Grid, Report};

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn obj(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn join_args_echo(a: &JoinArgs) -> Map<String, Value> {
    obj(vec![("p", a.p.into()), ("l1", a.l1.into()), ("l2", a.l2.into()), ("w", json!([a.w.0, a.w.1]))])
}

fn validate(a: &JoinArgs) -> Result<JoinParams, CliError> {
    Ok(JoinParams::validate(a.p, a.l1, a.l2, a.w.0, a.w.1)?)
}

fn report(request: Value, payload: Map<String, Value>, summary: Vec<(&str, String)>, table: Grid) -> Report {
    Report {
        request,
        payload: Value::Object(payload),
        warnings: Vec::new(),
        summary: summary.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        table,
        caveat: false,
    }
}

pub fn invariants(args: &JoinArgs, out: &OutputArgs) -> Result<Report, CliError> {
    let jp = validate(args)?;
    let c1 = c1_coefficient(&jp);
    let mut payload = obj(vec![
        ("params", encode::params(&jp)),
        ("c1_coefficient", big(&c1)),
        ("spin", is_spin(&jp).into()),
    ]);
    let mut summary = vec![
        ("join", jp.to_string()),
        ("c1 coefficient", c1.to_string()),
        ("spin", yes_no(is_spin(&jp))),
    ];
    let mut grid = Grid::new(&["degree", "H^k", "pi_k"]);
    if jp.p() == 1 {
        let (key, text) = match diffeo_type_dim5(&jp)? {
            Dim5Type::Product => ("product", "S^2 x S^3"),
            Dim5Type::Twisted => ("twisted", "non-trivial S^3-bundle over S^2"),
        };
        payload.insert("dim5_type".into(), json!({ "type": key, "text": text }));
        summary.push(("diffeomorphism type", text.to_string()));
    } else {
        let m = h4_order(&jp)?;
        let ring = cohomology_ring(&jp)?;
        payload.insert("h4_order".into(), big(&m));
        payload.insert(
            "ring".into(),
            json!({
                "text": ring.to_string(),
                "generators": ring.generators().iter().map(|g| json!({"name": g.name, "degree": g.degree})).collect::<Vec<_>>(),
                "relations": ring.relations().iter().map(|r| json!({
                    "coefficient": big(&r.coefficient),
                    "exponents": r.exponents,
                    "text": ring.format_relation(r),
                })).collect::<Vec<_>>(),
            }),
        );
        summary.push(("|H^4|", m.to_string()));
        summary.push(("cohomology ring", ring.to_string()));
        let mut groups = Vec::new();
        let mut homotopy = Vec::new();
        for k in 0..=jp.dimension() {
            let g = cohomology_group(&jp, k)?;
            let pi = (1..=4).contains(&k).then(|| homotopy_group(&jp, k)).transpose()?;
            grid.push(vec![
                k.to_string(),
                g.to_string(),
                pi.as_ref().map_or_else(String::new, |g| g.to_string()),
            ]);
            groups.push(json!({ "degree": k, "group": encode::group(&g) }));
            if let Some(pi) = pi {
                homotopy.push(json!({ "index": k, "group": encode::group(&pi) }));
            }
        }
        payload.insert("cohomology".into(), groups.into());
        payload.insert("homotopy".into(), homotopy.into());
    }
    if jp.p() == 2 {
        let (p1, link) = (p1_class(&jp)?, linking_form(&jp)?);
        payload.insert("p1".into(), encode::residue(&p1));
        payload.insert("linking".into(), encode::residue(&link));
        summary.push(("p1", p1.to_string()));
        summary.push(("linking form", link.to_string()));
    }
    if jp.l1() == 1 && jp.is_homogeneous() {
        let bundle = match bundle_type_wz(jp.p(), jp.l2()) {
            SphereBundle::Trivial => "trivial",
            SphereBundle::Nontrivial => "non-trivial",
        };
        payload.insert("sphere_bundle".into(), bundle.into());
        summary.push(("sphere bundle over S^2", bundle.to_string()));
    }
    let req = request("invariants", join_args_echo(args), out.format(), out.precision, out.quote_caveat);
    Ok(report(req, payload, summary, grid))
}

pub fn csc(args: &JoinArgs, out: &OutputArgs) -> Result<Report, CliError> {
    let jp = validate(args)?;
    let req = request("csc", join_args_echo(args), out.format(), out.precision, out.quote_caveat);
    csc_report(&build_f(&jp), out.precision, req)
}

/// Rays of a given polynomial record. A malformed record surfaces as an internal error.
pub fn csc_report(fp: &CscPolynomial, digits: u32, request: Value) -> Result<Report, CliError> {
    let (rest, k) = deflate_forbidden(fp)?;
    let rays = csc_rays_with_precision(&fp.params, digits)?;
    let floor = forced_multiplicity_floor(&fp.params);
    let root = encode::rational_text(&fp.forbidden_root);

    let mut grid = Grid::new(&["#", "b", "class", "mult", "partner", "lo", "hi"]);
    let mut listed = Vec::new();
    for (i, ray) in rays.rays.iter().enumerate() {
        let (lo, hi) = ray
            .root
            .interval()
            .map_or((String::new(), String::new()), |iv| (encode::rational_str(iv.lo()), encode::rational_str(iv.hi())));
        grid.push(vec![
            i.to_string(),
            encode::root_text(&ray.root, digits),
            ray.class.to_string(),
            ray.root.multiplicity.to_string(),
            ray.partner.map_or_else(|| "-".into(), |j| j.to_string()),
            lo,
            hi,
        ]);
        let mut entry = encode::root(&ray.root, digits);
        entry["index"] = i.into();
        entry["class"] = ray.class.to_string().into();
        entry["partner"] = ray.partner.into();
        listed.push(entry);
    }
    let counts = json!({
        "regular": rays.count_of(RayClass::Regular),
        "quasi_regular": rays.count_of(RayClass::QuasiRegular),
        "irregular": rays.count_of(RayClass::Irregular),
    });
    let payload = obj(vec![
        ("params", encode::params(&fp.params)),
        ("f", encode::poly(&fp.poly)),
        ("deflated", encode::poly(&rest)),
        ("forbidden_root", json!({ "value": rational(&fp.forbidden_root), "multiplicity": k, "floor": floor })),
        ("rays", listed.into()),
        ("unreduced_count", rays.unreduced_count.into()),
        ("reduced_count", rays.reduced_count.into()),
        ("weyl_paired", rays.weyl_paired.into()),
        ("class_counts", counts),
        ("digits", digits.into()),
    ]);
    let summary = vec![
        ("join", fp.params.to_string()),
        ("f(b)", fp.poly.to_string()),
        ("forced root", format!("b = {root}, multiplicity {k} (floor {floor})")),
        ("rays", format!("{} unreduced, {} reduced", rays.unreduced_count, rays.reduced_count)),
    ];
    let mut rep = report(request, payload, summary, grid);
    if k > floor {
        rep.warnings.push(format!("forced root b = {root} has multiplicity {k}, above the floor {floor}"));
    }
    rep.caveat = true;
    Ok(rep)
}

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::Homotopy => "homotopy",
        Relation::Homeo => "homeo",
        Relation::Diffeo => "diffeo",
    }
}

fn verdict_for(args: &ClassifyArgs) -> Result<(Vec<JoinParams>, ClassificationVerdict), CliError> {
    let seven = |p: i64| -> Result<(), CliError> {
        if p == 2 {
            Ok(())
        } else {
            let p = u32::try_from(p).unwrap_or(0);
            Err(ClassifyError::NotDimensionSeven { p }.into())
        }
    };
    let relation = match args.relation {
        Relation::Homotopy => Equivalence::Homotopy,
        Relation::Homeo => Equivalence::Homeomorphism,
        Relation::Diffeo => Equivalence::Diffeomorphism,
    };
    match (args.first, args.second, args.l1, args.l2, args.l2p) {
        (Some(a), Some(b), _, _, _) => {
            let a = JoinParams::validate(args.p, a[0], a[1], a[2], a[3])?;
            let b = JoinParams::validate(args.p, b[0], b[1], b[2], b[3])?;
            let verdict = match relation {
                Equivalence::Homotopy => kruggel_homotopy_equivalent(&a, &b)?,
                _ => {
                    seven(args.p)?;
                    if !(a.is_homogeneous() && b.is_homogeneous()) || a.l1() != b.l1() {
                        return Err(CliError::invalid(
                            "homeomorphism and diffeomorphism are decided only for w = (1,1) and a shared l1",
                        ));
                    }
                    ks_verdict(relation, a.l1(), a.l2(), b.l2())?
                }
            };
            Ok((vec![a, b], verdict))
        }
        (None, None, Some(l1), Some(l2), Some(l2p)) => {
            seven(args.p)?;
            let a = JoinParams::validate(2, l1, l2, 1, 1)?;
            let b = JoinParams::validate(2, l1, l2p, 1, 1)?;
            let verdict = ks_verdict(relation, a.l1(), a.l2(), b.l2())?;
            Ok((vec![a, b], verdict))
        }
        _ => Err(CliError::invalid("give two joins as (l1,l2,w1,w2), or -l1, -l2 and -l2p")),
    }
}

pub fn classify(args: &ClassifyArgs, out: &OutputArgs) -> Result<Report, CliError> {
    let (joins, verdict) = verdict_for(args)?;
    let tuple = |t: Option<[i64; 4]>| t.map_or(Value::Null, |t| json!(t));
    let echo = obj(vec![
        ("relation", relation_name(args.relation).into()),
        ("p", args.p.into()),
        ("first", tuple(args.first)),
        ("second", tuple(args.second)),
        ("l1", args.l1.into()),
        ("l2", args.l2.into()),
        ("l2p", args.l2p.into()),
    ]);
    let mut grid = Grid::new(&["condition", "holds", "witnesses"]);
    let mut conditions = Vec::new();
    for c in &verdict.conditions {
        let witnesses: Vec<String> = c.witnesses.iter().map(|w| w.to_string()).collect();
        grid.push(vec![c.label.to_string(), yes_no(c.holds), witnesses.join(" ")]);
        conditions.push(json!({ "label": c.label, "holds": c.holds, "witnesses": witnesses }));
    }
    let payload = obj(vec![
        ("relation", verdict.relation.to_string().into()),
        ("overall", verdict.overall.into()),
        ("conditions", conditions.into()),
        ("joins", joins.iter().map(encode::params).collect::<Vec<_>>().into()),
    ]);
    let summary = vec![
        ("joins", format!("{} vs {}", joins[0], joins[1])),
        ("relation", verdict.relation.to_string()),
        ("equivalent", yes_no(verdict.overall)),
    ];
    let req = request("classify", echo, out.format(), out.precision, out.quote_caveat);
    Ok(report(req, payload, summary, grid))
}

fn range_values(range: Option<L2Range>, bound: u64) -> (L2Range, Vec<u64>) {
    let range = range.unwrap_or(L2Range::upto(bound));
    (range, range.values())
}

pub fn sweep_csc(args: &SweepCscArgs, out: &OutputArgs, jobs: usize) -> Result<Report, CliError> {
    let base = JoinParams::validate(args.p, args.l1, 1, args.w.0, args.w.1)?;
    let (range, values) = range_values(args.l2, args.bound);
    if values.is_empty() {
        return Err(CliError::invalid(format!("no l2 values in {range}")));
    }
    let (p, l1, w1, w2) = (base.p(), base.l1(), base.w1(), base.w2());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    // collect keeps input order; from_rows sorts by l2 regardless
    let rows = pool.install(|| {
        values
            .par_iter()
            .map(|&l2| evaluate_l2(p, l1, w1, w2, l2))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let sweep = CscSweep::from_rows(rows);
    if sweep.skipped.len() == sweep.rows.len() {
        return Err(CliError::invalid(format!("no valid l2 in {range}: every value shares a factor with l1*w1 or l1*w2")));
    }

    let mut grid = Grid::new(&[
        "l2", "valid", "unreduced", "reduced", "regular", "quasi_regular", "irregular", "multiplicity", "qualifies", "reason",
    ]);
    let mut rows = Vec::new();
    for row in &sweep.rows {
        match &row.outcome {
            SweepOutcome::Evaluated(pt) => {
                grid.push(vec![
                    row.l2.to_string(),
                    "yes".into(),
                    pt.unreduced_count.to_string(),
                    pt.reduced_count.to_string(),
                    pt.regular.to_string(),
                    pt.quasi_regular.to_string(),
                    pt.irregular.to_string(),
                    pt.forbidden_multiplicity.to_string(),
                    yes_no(pt.qualifies),
                    String::new(),
                ]);
                rows.push(json!({
                    "l2": row.l2,
                    "valid": true,
                    "unreduced_count": pt.unreduced_count,
                    "reduced_count": pt.reduced_count,
                    "class_counts": {
                        "regular": pt.regular,
                        "quasi_regular": pt.quasi_regular,
                        "irregular": pt.irregular,
                    },
                    "forbidden_multiplicity": pt.forbidden_multiplicity,
                    "qualifies": pt.qualifies,
                }));
            }
            SweepOutcome::Skipped(e) => {
                let mut cells = vec![row.l2.to_string(), "no".into()];
                cells.extend(std::iter::repeat_n(String::new(), 7));
                cells.push(e.to_string());
                grid.push(cells);
                rows.push(json!({ "l2": row.l2, "valid": false, "reason": e.to_string() }));
            }
        }
    }
    let target = if base.is_homogeneous() {
        "2 rays up to b -> 1/b"
    } else {
        "3 rays"
    };
    let payload = obj(vec![
        ("p", p.into()),
        ("l1", l1.into()),
        ("w", json!([w1, w2])),
        ("range", range.to_string().into()),
        ("target", target.into()),
        ("rows", rows.into()),
        ("threshold", sweep.threshold.into()),
        ("skipped", sweep.skipped.clone().into()),
    ]);
    let summary = vec![
        ("sweep", format!("p = {p}, l1 = {l1}, w = ({w1},{w2}), l2 in {range}")),
        ("target", target.to_string()),
        ("threshold", sweep.threshold.map_or_else(|| "none in range".into(), |t| format!("l2 = {t}"))),
    ];
    let echo = obj(vec![
        ("p", args.p.into()),
        ("l1", args.l1.into()),
        ("w", json!([args.w.0, args.w.1])),
        ("l2", range.to_string().into()),
    ]);
    let req = request("sweep csc", echo, out.format(), out.precision, out.quote_caveat);
    let mut rep = report(req, payload, summary, grid);
    if sweep.threshold.is_none() {
        rep.warnings.push(format!("no l2 in {range} reaches {target}"));
    }
    rep.caveat = true;
    Ok(rep)
}

pub fn sweep_diffeo(args: &SweepDiffeoArgs, out: &OutputArgs) -> Result<Report, CliError> {
    let l1 = JoinParams::validate(2, args.l1, 1, 1, 1)?.l1();
    let (range, values) = range_values(args.l2, args.bound);
    let partition = partition_diffeo_types(l1, &values);
    if partition.classes.is_empty() {
        return Err(CliError::invalid(format!("no l2 in {range} is coprime to l1 = {l1}")));
    }
    let class_of = |l2: u64| partition.classes.iter().position(|c| c.contains(&l2));
    let mut grid = Grid::new(&["l2", "valid", "class", "l2 mod N", "reason"]);
    let mut rows = Vec::new();
    for &l2 in &values {
        if let Some((_, e)) = partition.rejected.iter().find(|(v, _)| *v == l2) {
            grid.push(vec![l2.to_string(), "no".into(), String::new(), String::new(), e.to_string()]);
            rows.push(json!({ "l2": l2, "valid": false, "reason": e.to_string() }));
        } else {
            let class = class_of(l2).expect("accepted values are classified");
            let residue = num_bigint::BigInt::from(l2) % &partition.modulus;
            grid.push(vec![l2.to_string(), "yes".into(), class.to_string(), residue.to_string(), String::new()]);
            rows.push(json!({ "l2": l2, "valid": true, "class": class, "residue": big(&residue) }));
        }
    }
    let classes: Vec<String> = partition
        .classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    let payload = obj(vec![
        ("l1", l1.into()),
        ("modulus", big(&partition.modulus)),
        ("range", range.to_string().into()),
        ("classes", json!(partition.classes)),
        ("rows", rows.into()),
    ]);
    let summary = vec![
        ("sweep", format!("dimension 7, l1 = {l1}, w = (1,1), l2 in {range}")),
        ("modulus N", partition.modulus.to_string()),
        ("classes", classes.join(" ")),
    ];
    let echo = obj(vec![("l1", args.l1.into()), ("l2", range.to_string().into())]);
    let req = request("sweep diffeo", echo, out.format(), out.precision, out.quote_caveat);
    Ok(report(req, payload, summary, grid))
}
