//! Browser bindings for three operations: an `H_λ^{(p)}(n, m)` curve over λ, a Stirling
//! table, and a single identity check. Each export wraps a plain function returning JSON so the
//! same code runs under native tests.

use degen::identities::{find, run_identity};
use degen::numbers::h_p_series;
use degen::rational::{display, from_usize, nonneg_int_quotient, parse, ratio, Rational};
use degen::stirling::{table, StirlingKind};
use degen::EvalMode;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Debug, Serialize)]
pub struct CurvePoint {
    pub lambda: f64,
    /// `None` where the series fails (non-convergence, domain).
    pub value: Option<f64>,
    pub exact: Option<String>,
}

/// Curve abscissae are rounded to multiples of 1/840, so 1/2, 1/3, … land exactly.
const SNAP: i64 = 840;

/// `H_λ^{(p)}(n, m)` at `steps` evenly spaced λ in `[lo, hi]` (exact where `n/λ ∈ ℕ₀`,
/// numeric elsewhere, which needs 0 < λ < 1).
pub fn h_curve(n: usize, m: usize, p: usize, lo: f64, hi: f64, steps: usize) -> Result<String, String> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || !(2..=2000).contains(&steps) {
        return Err("need lo < hi and 2 ≤ steps ≤ 2000".into());
    }
    let numeric = EvalMode::numeric();
    let points: Vec<CurvePoint> = (0..steps)
        .map(|i| {
            let x = lo + (hi - lo) * i as f64 / (steps - 1) as f64;
            let snapped = ratio((x * SNAP as f64).round() as i64, SNAP);
            let lambda = degen::rational::to_f64(&snapped);
            let mode = if nonneg_int_quotient(&from_usize(n), &snapped).is_some() { EvalMode::exact() } else { numeric };
            match h_p_series(n, m, p, &snapped, &mode) {
                Ok(v) => CurvePoint { lambda, value: Some(v.to_f64()), exact: v.exact().map(display) },
                Err(_) => CurvePoint { lambda, value: None, exact: None },
            }
        })
        .collect();
    serde_json::to_string(&points).map_err(|e| e.to_string())
}

#[derive(Debug, Serialize)]
struct TableOut {
    kind: String,
    lambda: String,
    lambda1: String,
    rows: Vec<Vec<String>>,
}

/// A Stirling-type table as rows of `"num/den"` strings. `kind`: s1, s2, s1deg, s2deg, apostol.
pub fn stirling_table(kind: &str, lambda: &str, lambda1: &str, max_n: usize) -> Result<String, String> {
    if max_n > 30 {
        return Err("max_n is capped at 30".into());
    }
    let kind: StirlingKind = kind.parse().map_err(|e: degen::Error| e.to_string())?;
    let (lambda, lambda1): (Rational, Rational) =
        (parse(lambda).map_err(|e| e.to_string())?, parse(lambda1).map_err(|e| e.to_string())?);
    let t = table(kind, &lambda, &lambda1, max_n);
    let rows = t.rows().iter().map(|r| r.iter().map(display).collect()).collect();
    let out = TableOut { kind: format!("{kind:?}"), lambda: display(&lambda), lambda1: display(&lambda1), rows };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

/// Runs one registered identity and returns its report.
pub fn verify_identity(id: &str) -> Result<String, String> {
    let spec = find(id).ok_or_else(|| format!("unknown identity {id:?}"))?;
    serde_json::to_string(&run_identity(&spec)).map_err(|e| e.to_string())
}

pub fn identity_ids() -> String {
    serde_json::to_string(&degen::identities::ids()).expect("ids serialize")
}

#[wasm_bindgen(js_name = hCurve)]
pub fn h_curve_js(n: usize, m: usize, p: usize, lo: f64, hi: f64, steps: usize) -> Result<String, JsValue> {
    h_curve(n, m, p, lo, hi, steps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = stirlingTable)]
pub fn stirling_table_js(kind: &str, lambda: &str, lambda1: &str, max_n: usize) -> Result<String, JsValue> {
    stirling_table(kind, lambda, lambda1, max_n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = verifyIdentity)]
pub fn verify_identity_js(id: &str) -> Result<String, JsValue> {
    verify_identity(id).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = identityIds)]
pub fn identity_ids_js() -> String {
    identity_ids()
}
