//! The named invariants `E_n`, `H_n(q,t)`, `H_n(q,x,y)` and `PP_n`, their
//! specializations, the printed closed forms and the property checks.

mod cache;
mod checks;
mod closed_forms;
mod document;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{FactoredFraction, Flavor, Monomial, Rational, SparsePoly, Subst, Var, VarContext};
use crate::error::{Error, Result};
use crate::series::{extract_v, invariant_from_v};

pub use cache::{cache_dir_from, CacheEntry, DiskCache, CACHE_ENV};
pub use checks::{
    check_closed_form, check_degrees, check_duality, check_equal, check_euler, check_positivity, check_pp_properties,
    check_xy_symmetry, duality_scan, CheckEntry, CheckReport, Status, Suite,
};
pub use closed_forms::{closed_form, ClosedForm};
pub use document::{error_document, FORMAT_VERSION};

/// Which invariant a result holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "E")]
    E,
    #[serde(rename = "hqt")]
    Hqt,
    #[serde(rename = "hxy")]
    Hxy,
    #[serde(rename = "pp")]
    PP,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::E, Kind::Hqt, Kind::Hxy, Kind::PP];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::E => "E",
            Kind::Hqt => "hqt",
            Kind::Hxy => "hxy",
            Kind::PP => "pp",
        }
    }

    pub fn flavor(self) -> Flavor {
        match self {
            Kind::E => Flavor::E,
            Kind::Hqt => Flavor::Qt,
            Kind::Hxy => Flavor::Xy,
            Kind::PP => Flavor::Pure,
        }
    }

    pub fn ctx(self) -> VarContext {
        self.flavor().ctx()
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown kind {s:?} (expected E, hqt, hxy or pp)")))
    }
}

/// A computed invariant with its check outcomes.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantResult {
    pub kind: Kind,
    pub n: usize,
    pub g: u32,
    pub polynomial: SparsePoly,
    /// `(n²-1)(2g-2)`; `None` for the pure part.
    pub dimension2n: Option<i64>,
    pub checks: CheckReport,
}

/// `(n²-1)(2g-2)`, the complex dimension.
pub fn dimension_2n(n: usize, g: u32) -> i64 {
    let n = n as i64;
    (n * n - 1) * (2 * g as i64 - 2)
}

/// Möbius function.
pub fn moebius(mut n: u64) -> i64 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Specialization targets for [`specialize_invariant`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// `H(1, t)`.
    Poincare,
    /// `H(q, -1)`.
    ToE,
    /// Terms `q^i t^(2i)` of `H(q, t)`, kept as `t^(2i)`.
    PureExtract,
    /// `H(q, t, t)`.
    XyToQt,
    /// `H(1, -1, y)`.
    YGenus,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::Poincare => "poincare",
            Target::ToE => "to_E",
            Target::PureExtract => "pure_extract",
            Target::XyToQt => "xy_to_qt",
            Target::YGenus => "ygenus",
        }
    }

    fn source(self) -> Kind {
        match self {
            Target::Poincare | Target::ToE | Target::PureExtract => Kind::Hqt,
            Target::XyToQt | Target::YGenus => Kind::Hxy,
        }
    }
}

/// Specializes a computed invariant.
pub fn specialize_invariant(r: &InvariantResult, target: Target) -> Result<SparsePoly> {
    specialize_polynomial(r.kind, &r.polynomial, target)
}

/// As [`specialize_invariant`], for a bare polynomial of the given kind.
pub fn specialize_polynomial(kind: Kind, p: &SparsePoly, target: Target) -> Result<SparsePoly> {
    if kind != target.source() {
        return Err(Error::KindMismatch { target: target.name(), kind: kind.tag() });
    }
    let out = match target {
        Target::Poincare => p.specialize(&[(Var::Q, Subst::int(1))])?,
        Target::ToE => p.specialize(&[(Var::T, Subst::int(-1))])?,
        Target::PureExtract => {
            let terms = p
                .terms()
                .iter()
                .filter(|(m, _)| m.0[1] == 2 * m.0[0])
                .map(|(m, c)| (Monomial::new(&[m.0[1]]), c.clone()));
            SparsePoly::from_terms(VarContext::T, terms)
        }
        Target::XyToQt => p.specialize(&[(Var::X, Subst::Var(Var::T)), (Var::Y, Subst::Var(Var::T))])?,
        Target::YGenus => p.specialize(&[(Var::Q, Subst::int(1)), (Var::X, Subst::int(-1))])?,
    };
    Ok(out)
}

/// Computes invariants, memoizing the extracted `V_n` lists per flavor
/// and genus and, optionally, finished results on disk.
#[derive(Default)]
pub struct Engine {
    vs: HashMap<(Flavor, u32), Vec<FactoredFraction>>,
    polys: HashMap<(Kind, usize, u32), SparsePoly>,
    cache: Option<DiskCache>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache(cache: DiskCache) -> Self {
        Engine { cache: Some(cache), ..Self::default() }
    }

    pub fn cache(&self) -> Option<&DiskCache> {
        self.cache.as_ref()
    }

    fn v(&mut self, flavor: Flavor, g: u32, n: usize) -> Result<&FactoredFraction> {
        let have = self.vs.get(&(flavor, g)).map_or(0, Vec::len);
        if have < n {
            self.vs.insert((flavor, g), extract_v(flavor, g, n)?);
        }
        Ok(&self.vs[&(flavor, g)][n - 1])
    }

    /// The bare polynomial, without checks.
    pub fn polynomial(&mut self, kind: Kind, n: usize, g: u32) -> Result<SparsePoly> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if let Some(p) = self.polys.get(&(kind, n, g)) {
            return Ok(p.clone());
        }
        let v = self.v(kind.flavor(), g, n)?.clone();
        let p = invariant_from_v(kind.flavor(), n, g, &v)?;
        self.polys.insert((kind, n, g), p.clone());
        Ok(p)
    }

    /// The invariant with its intrinsic checks, read from or written to
    /// the disk cache when one is attached.
    pub fn compute(&mut self, kind: Kind, n: usize, g: u32) -> Result<InvariantResult> {
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.load(kind, n, g)) {
            self.polys.entry((kind, n, g)).or_insert_with(|| hit.polynomial.clone());
            return Ok(hit);
        }
        let polynomial = self.polynomial(kind, n, g)?;
        let mut result = InvariantResult {
            kind,
            n,
            g,
            polynomial,
            dimension2n: (kind != Kind::PP).then(|| dimension_2n(n, g)),
            checks: CheckReport::default(),
        };
        result.checks = checks::intrinsic(&result);
        if let Some(c) = &self.cache {
            c.store(&result)?;
        }
        Ok(result)
    }

    /// Runs a check suite for rank `n` and genus `g`.
    pub fn run_suite(&mut self, suite: Suite, n: usize, g: u32) -> Result<CheckReport> {
        checks::run_suite(self, suite, n, g)
    }
}

/// One-shot computation without caching.
pub fn compute_invariant(kind: Kind, n: usize, g: u32) -> Result<InvariantResult> {
    Engine::new().compute(kind, n, g)
}

pub(crate) fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(ctx: VarContext, s: &str) -> SparsePoly {
        SparsePoly::parse(ctx, s).unwrap()
    }

    #[test]
    fn moebius_values() {
        let got: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn kind_tags_round_trip() {
        for k in Kind::ALL {
            assert_eq!(k.tag().parse::<Kind>().unwrap(), k);
        }
        assert!("hq".parse::<Kind>().is_err());
    }

    #[test]
    fn e2_genus_three() {
        let r = compute_invariant(Kind::E, 2, 3).unwrap();
        assert_eq!(r.polynomial, poly(VarContext::Q, "1 - 4*q^2 + 6*q^4 - 14*q^6 + 6*q^8 - 4*q^10 + q^12"));
        assert_eq!(r.dimension2n, Some(12));
        assert!(r.checks.passed(), "{:?}", r.checks);
    }

    #[test]
    fn specializations_of_h2() {
        let r = compute_invariant(Kind::Hqt, 2, 3).unwrap();
        let p = specialize_invariant(&r, Target::Poincare).unwrap();
        let want = "1 + t^2 + 6*t^3 + 2*t^4 + 6*t^5 + 17*t^6 + 12*t^7 + 18*t^8 + 32*t^9 + 18*t^10 + 12*t^11 + 3*t^12";
        assert_eq!(p, poly(VarContext::T, want));
        let pure = specialize_invariant(&r, Target::PureExtract).unwrap();
        assert_eq!(pure, poly(VarContext::T, "1 + t^4 + t^8"));
        assert!(matches!(specialize_invariant(&r, Target::YGenus), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn degenerate_genera() {
        let mut e = Engine::new();
        for n in 1..=3 {
            assert!(e.polynomial(Kind::Hqt, n, 1).unwrap().is_one());
        }
        assert!(e.polynomial(Kind::Hqt, 1, 0).unwrap().is_one());
        assert!(e.polynomial(Kind::Hqt, 3, 0).unwrap().is_zero());
    }

    #[test]
    fn ygenus_matches_xy_flavor() {
        let mut e = Engine::new();
        for n in 2..=3 {
            for g in 2..=3 {
                let h = e.polynomial(Kind::Hxy, n, g).unwrap();
                let y = specialize_polynomial(Kind::Hxy, &h, Target::YGenus).unwrap();
                let c = closed_form(ClosedForm::YGenus(n), g).unwrap().as_polynomial().unwrap();
                assert_eq!(y, c, "n={n} g={g}");
            }
        }
    }

    #[test]
    fn pure_part_low_genus() {
        let mut e = Engine::new();
        for n in 1..=3 {
            assert!(e.polynomial(Kind::PP, n, 1).unwrap().is_one(), "n={n}");
        }
    }
}
