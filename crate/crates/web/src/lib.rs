//! Browser bindings. Each export takes a code as JSON text in the same
//! format the CLI reads and returns a JSON string, or throws the error text.

use mwlab::algebra::rational::{parse_rational, ratio, to_f64};
use mwlab::codes::{CodeFile, LinearCode};
use mwlab::distribution::{coset_distribution, smoothing_parameter, statistical_distance, GapSum, ProbabilityTable};
use mwlab::enumerators::{dual_weight_enumerator, macwilliams_dual, weight_enumerator};
use mwlab::lattice::{construction_a, lattice_enumerate_l1, nu_series};
use mwlab::Limits;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Kept well below the native default so page interactions stay snappy.
const BUDGET: u64 = 1 << 18;

fn limits() -> Limits {
    Limits::default().with_enumeration(BUDGET)
}

fn code(text: &str) -> Result<LinearCode, String> {
    let file: CodeFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    file.to_code().map_err(|e| e.to_string())
}

fn strs<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn enumerators_json(code_text: &str) -> Result<String, String> {
    let c = code(code_text)?;
    let e = |x: mwlab::Error| x.to_string();
    let w = weight_enumerator(&c, &limits()).map_err(e)?;
    let transformed = macwilliams_dual(&w).map_err(e)?;
    let brute = dual_weight_enumerator(&c, &limits()).map_err(e)?;
    Ok(json!({
        "weight": w.to_string(),
        "transformed": transformed.to_string(),
        "dual": brute.to_string(),
        "equal": transformed.same_coefficients(&brute),
    })
    .to_string())
}

/// `S(z)` and the coset distance `Δ(z)` at `z = i/points`, `0 < i < points`,
/// plus `η_ε`.
pub fn smoothing_curve_json(code_text: &str, eps: &str, points: u32) -> Result<String, String> {
    let c = code(code_text)?;
    let e = |x: mwlab::Error| x.to_string();
    let eps = parse_rational(eps).map_err(e)?;
    let gap = GapSum::new(&c, &limits()).map_err(e)?;
    let points = points.clamp(2, 200);
    let mut rows = Vec::new();
    for i in 1..points {
        let z = ratio(i.into(), points.into());
        let g = coset_distribution(&c, &z, &limits()).map_err(e)?;
        let delta = statistical_distance(&g, &ProbabilityTable::uniform(g.support.clone())).map_err(e)?;
        rows.push(json!({ "z": to_f64(&z), "s": to_f64(&gap.eval(&z)), "delta": to_f64(&delta) }));
    }
    let eta = smoothing_parameter(&c, &eps, &ratio(1, 1_000_000_000), &limits()).map_err(e)?;
    Ok(json!({ "rows": rows, "eta": to_f64(&eta.eta), "eta_exact": eta.eta.to_string() }).to_string())
}

/// L¹ shell counts of `A(C)` next to the closed-form series coefficients.
pub fn nu_series_json(code_text: &str, terms: usize) -> Result<String, String> {
    let c = code(code_text)?;
    let e = |x: mwlab::Error| x.to_string();
    let terms = terms.min(40);
    let lat = construction_a(&c).map_err(e)?;
    let counts = lattice_enumerate_l1(&lat, terms, &limits()).map_err(e)?;
    let series = nu_series(&c, terms, &limits()).map_err(e)?;
    Ok(json!({ "counts": strs(&counts), "series": strs(&series), "equal": counts == series }).to_string())
}

#[wasm_bindgen]
pub fn enumerators(code: &str) -> Result<String, JsValue> {
    enumerators_json(code).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn smoothing_curve(code: &str, eps: &str, points: u32) -> Result<String, JsValue> {
    smoothing_curve_json(code, eps, points).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn nu_shells(code: &str, terms: usize) -> Result<String, JsValue> {
    nu_series_json(code, terms).map_err(|e| JsValue::from_str(&e))
}
