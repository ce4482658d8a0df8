//! Browser bindings for the demo page in `www/`. Every export returns a JSON
//! string so the page needs no generated type glue.

use bessel_bounds::registry::{eval_case, find_case, log_space, Params};
use bessel_bounds::report::{tables_json, to_json_string};
use bessel_bounds::sharp::{a_ratio, estimate_a};
use bessel_bounds::specfun::{bessel_i, bessel_k, struve_l};
use bessel_bounds::tables::{reproduce_table, Table};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_POINTS: usize = 2000;

fn err(msg: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&msg.to_string())
}

fn points(n: usize) -> Result<usize, JsValue> {
    if (2..=MAX_POINTS).contains(&n) {
        Ok(n)
    } else {
        Err(err(format!("points must lie in [2, {MAX_POINTS}]")))
    }
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

/// Exponentially scaled I, K or L of order `nu` on a log-spaced grid
/// [x_min, x_max]: `{"x": [...], "y": [...]}`.
#[wasm_bindgen]
pub fn bessel_curve(func: &str, nu: f64, x_min: f64, x_max: f64, n: usize) -> Result<String, JsValue> {
    let f: fn(f64, f64, bool) -> bessel_bounds::Result<bessel_bounds::EvalResult> = match func {
        "I" => bessel_i,
        "K" => bessel_k,
        "L" => struve_l,
        _ => return Err(err(format!("unknown function `{func}`"))),
    };
    if !(x_min > 0.0 && x_max > x_min) {
        return Err(err("need 0 < x_min < x_max"));
    }
    let xs = log_space(x_min, x_max, points(n)?);
    let ys = xs
        .iter()
        .map(|&x| f(nu, x, true).map(|r| finite_or_null(r.to_f64())))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    Ok(json!({ "x": xs, "y": ys }).to_string())
}

/// Relative margin of one registered inequality along x:
/// `{"id", "statement", "x": [...], "margin": [...]}`, null where the point
/// is outside the case's domain.
#[wasm_bindgen]
pub fn margin_curve(id: &str, nu: f64, beta: f64, n_param: f64, n: usize) -> Result<String, JsValue> {
    let case = find_case(id).map_err(err)?;
    let xs = log_space(1e-3, 100.0, points(n)?);
    let margins: Vec<Value> = xs
        .iter()
        .map(|&x| {
            let p = Params::new(nu, beta, n_param, x);
            if !case.in_domain(&p) {
                return Value::Null;
            }
            eval_case(id, &p).map(|r| finite_or_null(r.rel_margin)).unwrap_or(Value::Null)
        })
        .collect();
    Ok(json!({ "id": case.id, "statement": case.statement, "x": xs, "margin": margins }).to_string())
}

/// Pointwise admissible a(x) with the estimated infimum and its x → ∞ limit.
#[wasm_bindgen]
pub fn a_ratio_curve(nu: f64, n: usize) -> Result<String, JsValue> {
    let xs = log_space(1e-2, 1e3, points(n)?);
    let ys = xs.iter().map(|&x| a_ratio(nu, x).map(|r| r.to_f64())).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let est = estimate_a(nu).map_err(err)?;
    Ok(json!({
        "x": xs,
        "y": ys,
        "estimate": est.value,
        "limit": est.meta.asymptotic,
        "argmin": est.argmin_x.to_string(),
    })
    .to_string())
}

/// Both relative-error tables with reference values.
#[wasm_bindgen]
pub fn tables() -> String {
    let cells = vec![reproduce_table(Table::T1), reproduce_table(Table::T2)];
    to_json_string(&tables_json(&cells, true))
}

/// Names of all registered cases, for the page's selector.
#[wasm_bindgen]
pub fn case_ids() -> String {
    let ids: Vec<&str> = bessel_bounds::registry::list_cases().iter().map(|c| c.id).collect();
    json!(ids).to_string()
}
