//! Browser bindings. Each export returns a JSON string; the logic lives in
//! plain functions so it can be tested natively.

use charvar::arith::{Rational, Var};
use charvar::invariants::{dimension_2n, specialize_polynomial, Engine, Kind, Target};
use charvar::oracle::{build_group, character_table, conjugacy_classes, frobenius_sums, tuple_counts, Family};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest rank and genus the page offers; beyond this a browser tab stalls.
pub const MAX_N: usize = 4;
pub const MAX_G: u32 = 4;

fn bounds(n: usize, g: u32) -> Result<(), String> {
    if n == 0 || n > MAX_N || g > MAX_G {
        return Err(format!("choose 1 <= n <= {MAX_N} and 0 <= g <= {MAX_G}"));
    }
    Ok(())
}

/// Coefficients of `H_n(q,t)` as `[q-exponent, t-exponent, coefficient]`
/// cells, plus the side length `2N` of the grid.
pub fn hqt_grid(n: usize, g: u32) -> Result<Value, String> {
    bounds(n, g)?;
    let h = Engine::new().polynomial(Kind::Hqt, n, g).map_err(|e| e.to_string())?;
    let cells: Vec<Value> = h.terms().iter().map(|(m, c)| json!([m.0[0], m.0[1], c.to_string()])).collect();
    Ok(json!({
        "n": n,
        "g": g,
        "dim2N": dimension_2n(n, g).max(0),
        "terms": h.len(),
        "cells": cells,
        "text": h.render(),
    }))
}

/// `H(1,t)`, `H(q,-1)`, the pure part, and the Euler characteristic.
pub fn specializations(n: usize, g: u32) -> Result<Value, String> {
    bounds(n, g)?;
    let err = |e: charvar::Error| e.to_string();
    let h = Engine::new().polynomial(Kind::Hqt, n, g).map_err(err)?;
    let poincare = specialize_polynomial(Kind::Hqt, &h, Target::Poincare).map_err(err)?;
    let e = specialize_polynomial(Kind::Hqt, &h, Target::ToE).map_err(err)?;
    let pure = specialize_polynomial(Kind::Hqt, &h, Target::PureExtract).map_err(err)?;
    let euler = e.evaluate(&[(Var::Q, Rational::from_integer(1.into()))]).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n,
        "g": g,
        "poincare": poincare.render(),
        "E": e.render(),
        "pure": pure.render(),
        "euler": euler.to_string(),
    }))
}

/// Solutions of `Π [A_i, B_i] = ζ·Id` in `GL(2,q)` or `SL(2,q)`, counted
/// by enumeration and by the character formula.
pub fn group_count(family: &str, q: u32, g: u32, zeta_order: u64) -> Result<Value, String> {
    if g == 0 || g > 3 {
        return Err("choose 1 <= g <= 3".into());
    }
    let family: Family = family.parse().map_err(|e: charvar::oracle::OracleError| e.to_string())?;
    let group = build_group(family, q).map_err(|e| e.to_string())?;
    let xi = group.central_element(zeta_order).map_err(|e| e.to_string())?;
    let cd = conjugacy_classes(&group);
    let brute = tuple_counts(&group, &cd, g).map_err(|e| e.to_string())?[cd.class_of[xi]].clone();
    let table = character_table(&group, &cd).map_err(|e| e.to_string())?;
    let character = frobenius_sums(&group, &cd, &table, g, xi).map_err(|e| e.to_string())?.tuple_prediction;
    Ok(json!({
        "group": group.name(),
        "order": group.order(),
        "classes": cd.len(),
        "degrees": table.degrees,
        "g": g,
        "xi": group.element(xi).rows(),
        "brute": brute.to_string(),
        "character": character.to_string(),
        "agreement": brute == character,
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = hqtGrid)]
pub fn hqt_grid_js(n: usize, g: u32) -> Result<String, JsError> {
    to_js(hqt_grid(n, g))
}

#[wasm_bindgen(js_name = specializations)]
pub fn specializations_js(n: usize, g: u32) -> Result<String, JsError> {
    to_js(specializations(n, g))
}

#[wasm_bindgen(js_name = groupCount)]
pub fn group_count_js(family: &str, q: u32, g: u32, zeta_order: u32) -> Result<String, JsError> {
    to_js(group_count(family, q, g, zeta_order as u64))
}
