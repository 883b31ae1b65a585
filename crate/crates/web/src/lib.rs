//! WebAssembly bindings for the browser demo. Each export takes plain
//! strings and returns a JSON document; the same functions without the
//! `js_` prefix are callable from Rust.

use std::sync::Arc;

use serde_json::{json, Value};
use unitgroup_lab::findex::{index_group, PermGroup};
use unitgroup_lab::perm::{
    alternating_generators, alternating_group, symmetric_generators, symmetric_group, Permutation,
};
use unitgroup_lab::verify::{an_certificate, sn_certificate};
use unitgroup_lab::{AlgebraElement, Ideal, QuotientRing};
use wasm_bindgen::prelude::*;

/// Largest degree the demo builds a group algebra for.
pub const MAX_DEMO_DEGREE: usize = 5;

fn group(name: &str) -> Result<(Arc<PermGroup>, Vec<Permutation>), String> {
    let name = name.trim();
    let (family, n) = name.split_at(name.len().min(1));
    let n: usize = n.parse().map_err(|_| format!("unknown group {name:?}, expected e.g. S4 or A4"))?;
    if !(1..=MAX_DEMO_DEGREE).contains(&n) {
        return Err(format!("degree {n} is outside 1..={MAX_DEMO_DEGREE}"));
    }
    let (set, gens) = match family {
        "S" | "s" => (symmetric_group(n), symmetric_generators(n)),
        "A" | "a" => (alternating_group(n), alternating_generators(n)),
        _ => return Err(format!("unknown group {name:?}, expected e.g. S4 or A4")),
    };
    let g = index_group(&set.map_err(|e| e.to_string())?, false).map_err(|e| e.to_string())?;
    Ok((Arc::new(g), gens))
}

fn parse_elements(g: &Arc<PermGroup>, text: &str) -> Result<Vec<AlgebraElement>, String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| AlgebraElement::parse(g, l).map_err(|e| format!("{l:?}: {e}")))
        .collect()
}

/// Closes the two-sided ideal generated by the lines of `generators` in
/// F2[`group`] and describes the quotient ring.
pub fn quotient_explorer(group_name: &str, generators: &str) -> Result<String, String> {
    let (g, gens) = group(group_name)?;
    let els = parse_elements(&g, generators)?;
    let ideal = Ideal::close(&g, &gens, &els).map_err(|e| e.to_string())?;
    let witness = ideal.weight2_witness().map(|(a, b)| format!("{a} + {b}"));
    let mut out = json!({
        "group": group_name.trim(),
        "group_order": g.size(),
        "ideal_dim": ideal.dim(),
        "quotient_dim": ideal.codim(),
        "weight_two_element": witness,
    });
    match QuotientRing::build(&ideal) {
        Ok(q) => {
            let report = q.unit_report().map_err(|e| e.to_string())?;
            out["ring_size"] = json!(report.ring_size);
            out["unit_count"] = json!(report.unit_count);
            out["identity_criterion"] = json!(report.identity_criterion);
            out["spectrum"] = json!(report.spectrum);
        }
        Err(e) => out["ring_size"] = json!(format!("not enumerated: {e}")),
    }
    Ok(out.to_string())
}

/// The certificate ruling out `Sn` or `An` (`family` is "S" or "A") for one
/// degree `n` in 5..=9.
pub fn sigma_explorer(family: &str, n: u32) -> Result<String, String> {
    let report = match family.trim() {
        "S" | "s" => sn_certificate(n as usize),
        "A" | "a" => an_certificate(n as usize),
        other => return Err(format!("unknown family {other:?}, expected S or A")),
    }
    .map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&report).expect("reports serialize"))
}

/// Sum, product and inverses of two elements of F2[`group`].
pub fn algebra_calc(group_name: &str, x: &str, y: &str) -> Result<String, String> {
    let (g, _) = group(group_name)?;
    let parse = |s: &str| AlgebraElement::parse(&g, s.trim()).map_err(|e| format!("{s:?}: {e}"));
    let (x, y) = (parse(x)?, parse(y)?);
    let describe = |v: &AlgebraElement| -> Result<Value, String> {
        let inverse = v.inverse().map_err(|e| e.to_string())?;
        Ok(json!({
            "value": v.to_string(),
            "weight": v.weight(),
            "unit": inverse.is_some(),
            "inverse": inverse.map(|i| i.to_string()),
        }))
    };
    Ok(json!({
        "x": describe(&x)?,
        "y": describe(&y)?,
        "sum": describe(&(&x + &y))?,
        "product": describe(&(&x * &y))?,
        "reverse_product": describe(&(&y * &x))?,
    })
    .to_string())
}

#[wasm_bindgen(js_name = quotientExplorer)]
pub fn js_quotient_explorer(group: &str, generators: &str) -> Result<String, JsValue> {
    quotient_explorer(group, generators).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = sigmaExplorer)]
pub fn js_sigma_explorer(family: &str, n: u32) -> Result<String, JsValue> {
    sigma_explorer(family, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = algebraCalc)]
pub fn js_algebra_calc(group: &str, x: &str, y: &str) -> Result<String, JsValue> {
    algebra_calc(group, x, y).map_err(|e| JsValue::from_str(&e))
}
