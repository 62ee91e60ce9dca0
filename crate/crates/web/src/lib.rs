//! Browser bindings for the static demo page in `www/`.
//!
//! Each export takes plain strings and returns a JSON string, or throws the
//! error message. The `*_json` functions carry the logic so they can be
//! tested natively.

use dynmult::exactpoly::{parse_rational, Rational};
use dynmult::families::Family;
use dynmult::groebner::GbLimits;
use dynmult::io;
use dynmult::monic::{
    hypersurface_eval, monic_fiber_probe, monic_map, monic_sigma_generators, MonicParams,
};
use dynmult::projdyn::DynamicalSystem;
use dynmult::sigma::{extract_sigmas, isospectral_scan, sigma_poly, SigmaMode, SigmaOptions};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

// No wall clock on wasm32-unknown-unknown, so only the counting caps apply.
fn limits() -> GbLimits {
    GbLimits {
        max_pairs: Some(200_000),
        max_coeff_bits: Some(50_000),
        time_limit_secs: None,
    }
}

fn opts() -> SigmaOptions {
    SigmaOptions {
        limits: limits(),
        ..SigmaOptions::default()
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn monic_json(params: &str, fiber: bool) -> Result<String, String> {
    let p = MonicParams::parse(params).map_err(|e| e.to_string())?;
    let v = monic_sigma_generators(&p);
    let mut out = json!({
        "map": monic_map(&p).to_string(),
        "generators": strings(&v.0),
        "hypersurface_residual": hypersurface_eval(&v).to_string(),
    });
    if fiber {
        let r = monic_fiber_probe(&v, &limits()).map_err(|e| e.to_string())?;
        out["fiber"] = json!({
            "dimension": r.dimension,
            "degree": r.degree,
            "rational_solutions": strings(&r.rational_solutions),
            "non_rational_present": r.non_rational_present,
        });
    }
    Ok(out.to_string())
}

/// `kind` is `mordell` or `quartic`; `samples` is a comma-separated list.
pub fn lattes_json(kind: &str, samples: &str, period: u32) -> Result<String, String> {
    let family = match kind {
        "mordell" => Family::Mordell,
        "quartic" => Family::Quartic,
        other => return Err(format!("unknown Lattès family `{other}`")),
    };
    let samples: Vec<Rational> = samples
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let report = isospectral_scan(
        |a| family.build(a),
        &samples,
        period,
        SigmaMode::Plain,
        &opts(),
    );
    let rows: Vec<Value> = report
        .samples
        .iter()
        .map(|(a, r)| match r {
            Ok(s) => json!({"a": a.to_string(), "map": family.build(a).map(|f| f.to_string()).unwrap_or_default(), "sigma": s.poly.to_string()}),
            Err(e) => json!({"a": a.to_string(), "error": e.to_string()}),
        })
        .collect();
    Ok(json!({"samples": rows, "isospectral": report.all_equal}).to_string())
}

/// `coords` holds one coordinate polynomial per line, in x0, x1, ...
pub fn sigma_json(coords: &str, period: u32, mode: &str) -> Result<String, String> {
    let mode: SigmaMode = mode.parse().map_err(|e: dynmult::Error| e.to_string())?;
    let lines: Vec<String> = coords
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect();
    let f = DynamicalSystem::parse(&lines, None).map_err(|e| e.to_string())?;
    let s = sigma_poly(&f, period, mode, &opts()).map_err(|e| e.to_string())?;
    let t = extract_sigmas(&s).map_err(|e| e.to_string())?;
    let file: Value =
        serde_json::from_str(&io::sigma_to_json(&s, &t)).map_err(|e| e.to_string())?;
    Ok(json!({"map": f.to_string(), "result": file}).to_string())
}

#[wasm_bindgen]
pub fn monic(params: &str, fiber: bool) -> Result<String, JsValue> {
    monic_json(params, fiber).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lattes(kind: &str, samples: &str, period: u32) -> Result<String, JsValue> {
    lattes_json(kind, samples, period).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sigma(coords: &str, period: u32, mode: &str) -> Result<String, JsValue> {
    sigma_json(coords, period, mode).map_err(|e| JsValue::from_str(&e))
}
