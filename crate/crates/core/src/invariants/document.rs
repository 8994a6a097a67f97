//! The JSON document shared by the cache and the command line.
//!
//! ```json
//! {"g":3,"kind":"E","meta":{"checks":{..},"dim2N":12},"n":2,
//!  "terms":[{"c":"1","e":[0]},..],"vars":["q"],"version":1}
//! ```
//!
//! Keys are sorted, terms ascend in graded-lex order and coefficients are
//! decimal strings, so equal results serialize to equal bytes.

use serde_json::{json, Value};

use crate::arith::{fmt_rational, parse_rational, Monomial, SparsePoly};
use crate::error::{Error, Result};

use super::{CheckReport, InvariantResult, Kind};

pub const FORMAT_VERSION: u64 = 1;

impl InvariantResult {
    pub fn to_json(&self) -> Value {
        let ctx = self.polynomial.ctx();
        let terms: Vec<Value> = self
            .polynomial
            .terms()
            .iter()
            .map(|(m, c)| json!({ "e": &m.0[..ctx.len()], "c": fmt_rational(c) }))
            .collect();
        json!({
            "kind": self.kind,
            "n": self.n,
            "g": self.g,
            "vars": ctx.names(),
            "terms": terms,
            "meta": { "dim2N": self.dimension2n, "checks": self.checks },
            "version": FORMAT_VERSION,
        })
    }

    /// Pretty-printed document with a trailing newline.
    pub fn to_document(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_document(text: &str) -> Result<InvariantResult> {
        let v: Value = serde_json::from_str(text)?;
        let bad = |what: &str| Error::InvalidArgument(format!("malformed document: {what}"));
        if v["version"].as_u64() != Some(FORMAT_VERSION) {
            return Err(bad("version"));
        }
        let kind: Kind = serde_json::from_value(v["kind"].clone())?;
        let n = v["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let g = v["g"].as_u64().ok_or_else(|| bad("g"))? as u32;
        let ctx = kind.ctx();
        let vars: Vec<String> = serde_json::from_value(v["vars"].clone())?;
        if vars != ctx.names() {
            return Err(bad("vars"));
        }
        let mut terms = Vec::new();
        for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let e: Vec<i32> = serde_json::from_value(t["e"].clone())?;
            if e.len() != ctx.len() {
                return Err(bad("exponent length"));
            }
            let c = t["c"].as_str().and_then(parse_rational).ok_or_else(|| bad("coefficient"))?;
            terms.push((Monomial::new(&e), c));
        }
        let dimension2n = v["meta"]["dim2N"].as_i64();
        let checks: CheckReport = serde_json::from_value(v["meta"]["checks"].clone())?;
        Ok(InvariantResult { kind, n, g, polynomial: SparsePoly::from_terms(ctx, terms), dimension2n, checks })
    }
}

/// Document emitted when a computation fails, e.g. on a polynomiality
/// assertion.
pub fn error_document(kind: Kind, n: usize, g: u32, err: &Error) -> String {
    let class = match err {
        Error::Arith(crate::arith::ArithError::NotPolynomial { .. }) => "NotPolynomial",
        Error::NonIntegerCoefficient { .. } => "NonIntegerCoefficient",
        _ => "Error",
    };
    let v = json!({
        "kind": kind,
        "n": n,
        "g": g,
        "error": { "class": class, "detail": err.to_string() },
        "version": FORMAT_VERSION,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("document serializes");
    s.push('\n');
    s
}
