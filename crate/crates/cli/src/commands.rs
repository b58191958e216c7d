use std::fs;
use std::path::Path;

use mwlab::algebra::rational::{parse_rational, to_f64};
use mwlab::algebra::{FieldSpec, Rational};
use mwlab::codes::{random_code, CodeFile, CodeTuple, CodeWord, LinearCode};
use mwlab::distribution::{
    coset_distribution, macwilliams_distribution, smoothing_lower_bound, smoothing_parameter, statistical_distance,
    verify_prop31, DistributionReport, ProbabilityTable,
};
use mwlab::enumerators::{
    dual_weight_enumerator, effective_length_enumerator, macwilliams_dual, verify_macwilliams, weight_enumerator,
    WeightEnumerator,
};
use mwlab::lattice::{
    construction_a, dual_lattice, jacobi_poisson_check, lattice_enumerate_l1, nu_closed_form, nu_partial_sum,
    nu_series, nu_truncated, theta_relation_check, verify_theorem3_exact, verify_theorem3_numeric,
    ConstructionALattice,
};
use mwlab::transforms::{
    finite_fourier_transform, ft_characteristic, ft_ew_closed_form, inverse_ft, poisson_check, MatrixFunctionTable,
    MatrixShape,
};
use mwlab::Limits;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::args::{Cli, Verb};
use crate::suite;

/// Anything that should end in exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<mwlab::Error> for InputError {
    fn from(e: mwlab::Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

pub struct Outcome {
    pub results: Value,
    pub pass: Option<bool>,
}

pub struct Ctx<'a> {
    pub cli: &'a Cli,
    pub limits: Limits,
}

pub fn run(ctx: &Ctx) -> CliResult<Outcome> {
    match ctx.cli.verb {
        Verb::CodeInfo => code_info(ctx),
        Verb::Enum => enumerate(ctx),
        Verb::VerifyMacwilliams => macwilliams(ctx),
        Verb::FtCheck => ft_check(ctx),
        Verb::PoissonCheck => poisson(ctx),
        Verb::Dist => dist(ctx),
        Verb::Smooth => smooth(ctx),
        Verb::Prop31 => distance_bound(ctx),
        Verb::LatticeNu => lattice_nu(ctx),
        Verb::LatticeTheta => lattice_theta(ctx),
        Verb::Theorem3 => nu_relation(ctx),
        Verb::JacobiPoisson => jacobi(ctx),
    }
}

pub fn parse_code_file(path: &Path) -> CliResult<LinearCode> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let file: CodeFile = serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    file.to_code().map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn codes(ctx: &Ctx) -> CliResult<Vec<LinearCode>> {
    ctx.cli.inputs.iter().map(|p| parse_code_file(p).map(|c| if ctx.cli.dual { c.dual() } else { c })).collect()
}

fn single_code(ctx: &Ctx) -> CliResult<LinearCode> {
    let mut all = codes(ctx)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        k => Err(InputError(format!("{} expects exactly one code file, got {k}", ctx.cli.verb.name()))),
    }
}

fn tuple(ctx: &Ctx) -> CliResult<CodeTuple> {
    Ok(CodeTuple::new(codes(ctx)?)?)
}

fn rational(opt: &Option<String>, name: &str) -> CliResult<Option<Rational>> {
    opt.as_deref().map(|s| parse_rational(s).map_err(|e| InputError(format!("--{name}: {e}")))).transpose()
}

fn required_rational(opt: &Option<String>, name: &str) -> CliResult<Rational> {
    rational(opt, name)?.ok_or_else(|| InputError(format!("--{name} is required")))
}

fn rational_or(opt: &Option<String>, name: &str, default: &str) -> CliResult<Rational> {
    Ok(rational(opt, name)?.unwrap_or_else(|| parse_rational(default).expect("valid default")))
}

/// Float tolerances accept `1e-12` as well as rationals.
fn float_or(opt: &Option<String>, name: &str, default: f64) -> CliResult<f64> {
    match opt.as_deref() {
        None => Ok(default),
        Some(s) => s
            .parse::<f64>()
            .ok()
            .or_else(|| parse_rational(s).ok().map(|r| to_f64(&r)))
            .ok_or_else(|| InputError(format!("--{name}: cannot parse {s:?}"))),
    }
}

fn field(q: u64) -> CliResult<FieldSpec> {
    Ok(FieldSpec::new(q, None)?)
}

fn word(w: &CodeWord) -> String {
    let labels: Vec<String> = w.iter().map(|x| x.label().to_string()).collect();
    if w.iter().all(|x| x.label() < 10) {
        labels.concat()
    } else {
        labels.join(",")
    }
}

fn enumerator_json(w: &WeightEnumerator) -> Value {
    json!({ "coeffs": w.to_json().coeffs, "polynomial": w.to_string() })
}

fn show(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Runs `count` seeded cases; each reports its own details and pass flag.
fn run_suite(
    ctx: &Ctx,
    default_count: usize,
    mut case: impl FnMut(&mut ChaCha8Rng) -> CliResult<(Map<String, Value>, bool)>,
) -> CliResult<Outcome> {
    let seed = ctx.cli.seed.unwrap_or(0);
    let count = ctx.cli.count.unwrap_or(default_count);
    let mut cases = Vec::with_capacity(count);
    let mut failures = Vec::new();
    for (i, s) in suite::case_seeds(seed, count).into_iter().enumerate() {
        let (mut details, ok) = case(&mut suite::rng(s))?;
        details.insert("case".into(), json!(i));
        details.insert("seed".into(), json!(s));
        details.insert("pass".into(), json!(ok));
        if !ok {
            failures.push(json!({ "case": i, "seed": s }));
        }
        cases.push(Value::Object(details));
    }
    let passed = count - failures.len();
    Ok(Outcome {
        pass: Some(failures.is_empty()),
        results: json!({
            "suite_seed": seed,
            "count": count,
            "passed": passed,
            "failures": failures,
            "cases": cases,
        }),
    })
}

fn describe(code: &LinearCode) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("q".into(), json!(code.field().order()));
    m.insert("n".into(), json!(code.len()));
    m.insert("k".into(), json!(code.dimension()));
    m.insert("generator".into(), json!(code.generator_labels()));
    m
}

fn code_info(ctx: &Ctx) -> CliResult<Outcome> {
    let code = single_code(ctx)?;
    let dual = code.dual();
    let w = weight_enumerator(&code, &ctx.limits)?;
    let wd = dual_weight_enumerator(&code, &ctx.limits)?;
    let mut r = describe(&code);
    r.insert("size".into(), json!(code.size().to_string()));
    r.insert("dual_generator".into(), json!(dual.generator_labels()));
    r.insert("min_distance".into(), json!(w.min_nonzero_weight()));
    r.insert("dual_min_distance".into(), json!(wd.min_nonzero_weight()));
    Ok(Outcome { results: Value::Object(r), pass: None })
}

fn enumerate(ctx: &Ctx) -> CliResult<Outcome> {
    let t = tuple(ctx)?;
    let w = if t.m() == 1 {
        weight_enumerator(&t.codes()[0], &ctx.limits)?
    } else {
        effective_length_enumerator(&t, &ctx.limits)?
    };
    let dual = macwilliams_dual(&w)?;
    Ok(Outcome {
        results: json!({
            "m": t.m(),
            "n": t.n(),
            "q": t.field().order(),
            "enumerator": enumerator_json(&w),
            "dual_enumerator": enumerator_json(&dual),
        }),
        pass: None,
    })
}

fn macwilliams_case(t: &CodeTuple, limits: &Limits) -> CliResult<(Map<String, Value>, bool)> {
    let r = verify_macwilliams(t, limits)?;
    let mut m = Map::new();
    m.insert("q".into(), json!(t.field().order()));
    m.insert("m".into(), json!(t.m()));
    m.insert("n".into(), json!(t.n()));
    m.insert("lhs".into(), json!(r.lhs.to_string()));
    m.insert("rhs".into(), json!(r.rhs.to_string()));
    m.insert("equal".into(), json!(r.equal));
    Ok((m, r.equal))
}

fn macwilliams(ctx: &Ctx) -> CliResult<Outcome> {
    if !ctx.cli.inputs.is_empty() {
        let (m, ok) = macwilliams_case(&tuple(ctx)?, &ctx.limits)?;
        return Ok(Outcome { results: Value::Object(m), pass: Some(ok) });
    }
    run_suite(ctx, 100, |rng| {
        // Some shapes admit no tuple under both caps; redraw the shape then.
        for _ in 0..64 {
            let q = suite::pick(rng, ctx.cli.q, &[2, 3, 4, 5]);
            let m = suite::pick(rng, ctx.cli.m, &[1, 2, 3]);
            let n = suite::pick(rng, ctx.cli.n, &[1, 2, 3, 4, 5, 6]);
            if let Some(t) = suite::random_tuple(rng, &field(q)?, m, n, 1 << 16, 1 << 20) {
                return macwilliams_case(&t, &ctx.limits);
            }
        }
        Err(InputError("no tuple fits the size caps for the requested shape".into()))
    })
}

/// Checks on one tuple: the transform of its indicator, the
/// closed form of `FT z^{ew}`, and an inverse-transform roundtrip.
fn ft_case(t: &CodeTuple, z: &Rational, limits: &Limits) -> CliResult<(Map<String, Value>, bool)> {
    let shape = MatrixShape::of_tuple(t);
    let chi = MatrixFunctionTable::characteristic(t, limits)?;
    let ft = finite_fourier_transform(&chi, limits)?;
    let dual = t.dual();
    let size = Rational::from_integer(t.size());
    let points = ft.values().len();
    let mut characteristic = 0usize;
    let mut pointwise = 0usize;
    for (i, v) in ft.values().iter().enumerate() {
        let x = shape.matrix_at(i);
        let expected = if dual.contains(&x) { size.clone() } else { Rational::zero() };
        if v.as_scalar() == Some(&expected) {
            characteristic += 1;
        }
        if i < 64 && ft_characteristic(t, &x, limits)?.to_rational() == *v {
            pointwise += 1;
        }
    }
    let ew = finite_fourier_transform(&MatrixFunctionTable::ew_power(&shape, z, limits)?, limits)?;
    let closed = (0..points)
        .filter(|&i| {
            let x = shape.matrix_at(i);
            ew.values()[i].as_scalar() == Some(&ft_ew_closed_form(t.field(), &x, z))
        })
        .count();
    let roundtrip = inverse_ft(&ft, limits)? == chi;
    let ok = characteristic == points && closed == points && pointwise == points.min(64) && roundtrip;
    let mut m = Map::new();
    m.insert("q".into(), json!(t.field().order()));
    m.insert("m".into(), json!(t.m()));
    m.insert("n".into(), json!(t.n()));
    m.insert("points".into(), json!(points));
    m.insert("characteristic_matches".into(), json!(characteristic));
    m.insert("closed_form_matches".into(), json!(closed));
    m.insert("roundtrip".into(), json!(roundtrip));
    Ok((m, ok))
}

fn ft_check(ctx: &Ctx) -> CliResult<Outcome> {
    let z = rational_or(&ctx.cli.z, "z", "1/3")?;
    if !ctx.cli.inputs.is_empty() {
        let (m, ok) = ft_case(&tuple(ctx)?, &z, &ctx.limits)?;
        return Ok(Outcome { results: Value::Object(m), pass: Some(ok) });
    }
    run_suite(ctx, 20, |rng| {
        let q = suite::pick(rng, ctx.cli.q, &[2, 3]);
        let m = suite::pick(rng, ctx.cli.m, &[1, 2, 3]);
        let lengths = suite::lengths_within(q, m, 1 << 12);
        let n = suite::pick(rng, ctx.cli.n, &lengths);
        let f = field(q)?;
        let t = CodeTuple::new((0..m).map(|_| random_code(&f, n, rng)).collect())?;
        ft_case(&t, &z, &ctx.limits)
    })
}

fn poisson_case(
    t: &CodeTuple,
    tables: usize,
    rng: &mut ChaCha8Rng,
    z: &Rational,
    limits: &Limits,
) -> CliResult<(Map<String, Value>, bool)> {
    let shape = MatrixShape::of_tuple(t);
    let mut equal = 0;
    for _ in 0..tables {
        let f = MatrixFunctionTable::random_integer(&shape, -10, 10, rng, limits)?;
        if poisson_check(t, &f, limits)?.equal {
            equal += 1;
        }
    }
    let ew = poisson_check(t, &MatrixFunctionTable::ew_power(&shape, z, limits)?, limits)?;
    let mut m = Map::new();
    m.insert("q".into(), json!(t.field().order()));
    m.insert("m".into(), json!(t.m()));
    m.insert("n".into(), json!(t.n()));
    m.insert("tables".into(), json!(tables));
    m.insert("tables_equal".into(), json!(equal));
    m.insert("ew_lhs".into(), json!(ew.lhs.to_string()));
    m.insert("ew_rhs".into(), json!(ew.rhs.to_string()));
    m.insert("ew_equal".into(), json!(ew.equal));
    Ok((m, equal == tables && ew.equal))
}

fn poisson(ctx: &Ctx) -> CliResult<Outcome> {
    let z = rational_or(&ctx.cli.z, "z", "1/2")?;
    if !ctx.cli.inputs.is_empty() {
        let t = tuple(ctx)?;
        let mut rng = suite::rng(ctx.cli.seed.unwrap_or(0));
        let (m, ok) = poisson_case(&t, ctx.cli.count.unwrap_or(20), &mut rng, &z, &ctx.limits)?;
        return Ok(Outcome { results: Value::Object(m), pass: Some(ok) });
    }
    run_suite(ctx, 20, |rng| {
        let q = suite::pick(rng, ctx.cli.q, &[2, 3]);
        let m = suite::pick(rng, ctx.cli.m, &[1, 2]);
        let lengths = suite::lengths_within(q, m, 1 << 10);
        let n = suite::pick(rng, ctx.cli.n, &lengths);
        let f = field(q)?;
        let t = CodeTuple::new((0..m).map(|_| random_code(&f, n, rng)).collect())?;
        poisson_case(&t, 5, rng, &z, &ctx.limits)
    })
}

fn table_rows(kind: &str, t: &ProbabilityTable, rows: &mut Vec<Value>) {
    for (w, p) in t.support.iter().zip(&t.probs) {
        rows.push(json!({ "kind": kind, "word": word(w), "prob": p.to_string() }));
    }
}

fn dist(ctx: &Ctx) -> CliResult<Outcome> {
    let code = single_code(ctx)?;
    let z = required_rational(&ctx.cli.z, "z")?;
    let p = macwilliams_distribution(&code, &z, &ctx.limits)?;
    let g = coset_distribution(&code, &z, &ctx.limits)?;
    let delta = statistical_distance(&g, &ProbabilityTable::uniform(g.support.clone()))?;
    let mut rows = Vec::new();
    table_rows("codeword", &p, &mut rows);
    table_rows("coset", &g, &mut rows);
    Ok(Outcome {
        results: json!({
            "rows": rows,
            "coset_total": g.total().to_string(),
            "delta_uniform": delta.to_string(),
        }),
        pass: None,
    })
}

fn report_value(r: &DistributionReport) -> Value {
    serde_json::to_value(r).expect("plain data")
}

fn smooth_case(
    code: &LinearCode,
    eps: &Rational,
    tol: &Rational,
    limits: &Limits,
) -> CliResult<(Map<String, Value>, bool)> {
    let r = smoothing_parameter(code, eps, tol, limits)?;
    let lower = smoothing_lower_bound(code, eps)?;
    let report = DistributionReport::smoothing(&r, &lower);
    let Value::Object(mut m) = report_value(&report) else { unreachable!() };
    m.insert("eta_approx".into(), json!(to_f64(&r.eta)));
    m.insert("code".into(), Value::Object(describe(code)));
    Ok((m, report.pass))
}

fn random_small_code(ctx: &Ctx, rng: &mut ChaCha8Rng, qs: &[u64], ns: &[usize]) -> CliResult<LinearCode> {
    let q = suite::pick(rng, ctx.cli.q, qs);
    let n = suite::pick(rng, ctx.cli.n, ns);
    Ok(random_code(&field(q)?, n, rng))
}

fn smooth(ctx: &Ctx) -> CliResult<Outcome> {
    let eps = required_rational(&ctx.cli.eps, "eps")?;
    let tol = rational_or(&ctx.cli.tol, "tol", "1/1000000000000")?;
    if !ctx.cli.inputs.is_empty() {
        let (m, ok) = smooth_case(&single_code(ctx)?, &eps, &tol, &ctx.limits)?;
        return Ok(Outcome { results: Value::Object(m), pass: Some(ok) });
    }
    run_suite(ctx, 50, |rng| {
        let code = random_small_code(ctx, rng, &[2, 3, 4, 5], &[1, 2, 3, 4, 5, 6])?;
        smooth_case(&code, &eps, &tol, &ctx.limits)
    })
}

fn distance_case(code: &LinearCode, zs: &[Rational], limits: &Limits) -> CliResult<(Map<String, Value>, bool)> {
    let mut all = true;
    let mut points = Vec::new();
    for z in zs {
        let r = verify_prop31(code, z, limits)?;
        all &= r.pass;
        let Value::Object(mut m) = report_value(&DistributionReport::from(&r)) else { unreachable!() };
        m.insert("z".into(), show(z));
        points.push(Value::Object(m));
    }
    let mut m = Map::new();
    m.insert("code".into(), Value::Object(describe(code)));
    m.insert("points".into(), Value::Array(points));
    Ok((m, all))
}

fn distance_bound(ctx: &Ctx) -> CliResult<Outcome> {
    let grid: Vec<Rational> = match rational(&ctx.cli.z, "z")? {
        Some(z) => vec![z],
        None => ["1/4", "1/3", "1/2", "3/4"].iter().map(|s| parse_rational(s).expect("valid")).collect(),
    };
    if !ctx.cli.inputs.is_empty() {
        let code = single_code(ctx)?;
        if grid.len() == 1 {
            let r = verify_prop31(&code, &grid[0], &ctx.limits)?;
            return Ok(Outcome { results: report_value(&DistributionReport::from(&r)), pass: Some(r.pass) });
        }
        let (m, ok) = distance_case(&code, &grid, &ctx.limits)?;
        return Ok(Outcome { results: Value::Object(m), pass: Some(ok) });
    }
    run_suite(ctx, 50, |rng| {
        let code = random_small_code(ctx, rng, &[2, 3, 4, 5], &[1, 2, 3, 4, 5, 6])?;
        distance_case(&code, &grid, &ctx.limits)
    })
}

fn lattice(ctx: &Ctx) -> CliResult<(LinearCode, ConstructionALattice)> {
    let code = parse_single_plain(ctx)?;
    let lat = construction_a(&code)?;
    let lat = if ctx.cli.dual { dual_lattice(&lat)? } else { lat };
    Ok((code, lat))
}

/// A single code without the `--dual` swap (lattice verbs use `--dual` for
/// the dual lattice instead).
fn parse_single_plain(ctx: &Ctx) -> CliResult<LinearCode> {
    match ctx.cli.inputs.as_slice() {
        [p] => parse_code_file(p),
        other => Err(InputError(format!("{} expects exactly one code file, got {}", ctx.cli.verb.name(), other.len()))),
    }
}

fn lattice_nu(ctx: &Ctx) -> CliResult<Outcome> {
    let (code, lat) = lattice(ctx)?;
    let Some(z) = rational(&ctx.cli.z, "z")? else {
        return nu_counts(ctx, &lat);
    };
    let series = match ctx.cli.terms {
        Some(m) => nu_partial_sum(&lat, &z, m, &ctx.limits)?,
        None => nu_truncated(&lat, &z, &rational_or(&ctx.cli.tol, "tol", "1/1000000")?, &ctx.limits)?,
    };
    // ν_{(1/2)A(C^⊥)}(z) = ν_{A(C^⊥)}(√z); the truncation already holds √z.
    let closed = if lat.is_dual() {
        let w = mwlab::algebra::rational::exact_sqrt(&z).expect("checked by the truncation");
        nu_closed_form(lat.code(), &w, &ctx.limits)?
    } else {
        nu_closed_form(&code, &z, &ctx.limits)?
    };
    let gap = &closed - &series.value;
    let ok = !gap.is_negative() && gap <= series.tail_bound;
    let mut results = serde_json::to_value(series.to_json()).expect("plain data");
    let obj = results.as_object_mut().expect("object");
    obj.insert("radius".into(), json!(series.radius));
    obj.insert("closed_form".into(), show(&closed));
    obj.insert("det".into(), show(lat.det()));
    Ok(Outcome { results, pass: Some(ok) })
}

/// Without `--z`: shell counts by enumeration against the coefficients of
/// the closed form. A dual handle is compared on its integer grid.
fn nu_counts(ctx: &Ctx, lat: &ConstructionALattice) -> CliResult<Outcome> {
    let radius = ctx.cli.terms.unwrap_or(20);
    let counts = lattice_enumerate_l1(lat, radius, &ctx.limits)?;
    let series = nu_series(lat.code(), radius, &ctx.limits)?;
    let equal = counts == series;
    let strs = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    Ok(Outcome {
        results: json!({ "radius": radius, "counts": strs(&counts), "series": strs(&series), "equal": equal }),
        pass: Some(equal),
    })
}

fn lattice_theta(ctx: &Ctx) -> CliResult<Outcome> {
    let code = parse_single_plain(ctx)?;
    let r = theta_relation_check(&code, ctx.cli.terms.unwrap_or(24), &ctx.limits)?;
    let strs = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    Ok(Outcome { results: json!({ "lhs": strs(&r.lhs), "rhs": strs(&r.rhs), "equal": r.equal }), pass: Some(r.equal) })
}

fn nu_exact_case(code: &LinearCode, us: &[Rational], limits: &Limits) -> CliResult<(Map<String, Value>, bool)> {
    let mut all = true;
    let mut points = Vec::new();
    for u in us {
        let r = verify_theorem3_exact(code, u, limits)?;
        all &= r.residual.is_zero();
        points.push(json!({ "u": show(u), "lhs": show(&r.lhs), "rhs": show(&r.rhs), "residual": show(&r.residual) }));
    }
    let mut m = Map::new();
    m.insert("code".into(), Value::Object(describe(code)));
    m.insert("points".into(), Value::Array(points));
    Ok((m, all))
}

fn nu_relation(ctx: &Ctx) -> CliResult<Outcome> {
    if let Some(beta) = ctx.cli.beta {
        let code = parse_single_plain(ctx)?;
        let tol = float_or(&ctx.cli.tol, "tol", 1e-12)?;
        let r = verify_theorem3_numeric(&code, beta, tol, &ctx.limits)?;
        return Ok(Outcome {
            results: json!({
                "beta": beta,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "diff": r.diff,
                "lhs_tail": r.lhs_tail,
                "rhs_tail": r.rhs_tail,
                "combined_tail": r.combined_tail,
                "tails_valid": r.tails_valid,
            }),
            pass: Some(r.pass),
        });
    }
    let grid: Vec<Rational> = match rational(&ctx.cli.u, "u")? {
        Some(u) => vec![u],
        None => ["1/5", "1/3", "1/2", "3/4"].iter().map(|s| parse_rational(s).expect("valid")).collect(),
    };
    if !ctx.cli.inputs.is_empty() {
        let code = parse_single_plain(ctx)?;
        if grid.len() == 1 {
            let r = verify_theorem3_exact(&code, &grid[0], &ctx.limits)?;
            let ok = r.residual.is_zero();
            return Ok(Outcome {
                results: json!({ "u": show(&grid[0]), "lhs": show(&r.lhs), "rhs": show(&r.rhs), "residual": show(&r.residual) }),
                pass: Some(ok),
            });
        }
        let (m, ok) = nu_exact_case(&code, &grid, &ctx.limits)?;
        return Ok(Outcome { results: Value::Object(m), pass: Some(ok) });
    }
    run_suite(ctx, 100, |rng| {
        let code = random_small_code(ctx, rng, &[2], &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10])?;
        nu_exact_case(&code, &grid, &ctx.limits)
    })
}

fn jacobi(ctx: &Ctx) -> CliResult<Outcome> {
    let lat = if ctx.cli.inputs.is_empty() {
        let n = ctx.cli.n.ok_or_else(|| InputError("give a code file or --n for ℤ^n".into()))?;
        construction_a(&LinearCode::full(&field(2)?, n))?
    } else {
        lattice(ctx)?.1
    };
    let t = ctx.cli.t.unwrap_or(1.0);
    let tol = float_or(&ctx.cli.tol, "tol", 1e-10)?;
    let r = jacobi_poisson_check(&lat, t, tol, &ctx.limits)?;
    Ok(Outcome {
        results: json!({
            "t": t,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "residual": r.residual,
            "lhs_tail": r.lhs_tail,
            "rhs_tail": r.rhs_tail,
        }),
        pass: Some(r.pass),
    })
}
