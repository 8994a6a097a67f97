use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{fmt_rational, Monomial, Rational, SparsePoly, Subst, Var, VarContext};
use crate::error::{Error, Result};

use super::{
    closed_form, dimension_2n, int, moebius, specialize_polynomial, ClosedForm, Engine, InvariantResult, Kind, Target,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one check. Failures always carry a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckEntry {
    pub fn pass(detail: impl Into<String>) -> Self {
        CheckEntry { status: Status::Pass, detail: detail.into(), witness: None }
    }

    pub fn fail(detail: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckEntry { status: Status::Fail, detail: detail.into(), witness: Some(witness.into()) }
    }

    pub fn skipped(detail: impl Into<String>) -> Self {
        CheckEntry { status: Status::Skipped, detail: detail.into(), witness: None }
    }

    fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Named check outcomes in sorted order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CheckReport(BTreeMap<String, CheckEntry>);

impl CheckReport {
    pub fn insert(&mut self, name: impl Into<String>, entry: CheckEntry) {
        self.0.insert(name.into(), entry);
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &CheckEntry)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when no entry failed.
    pub fn passed(&self) -> bool {
        self.0.values().all(CheckEntry::passed)
    }

    fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for (k, v) in other.0 {
            self.0.insert(format!("{prefix}.{k}"), v);
        }
    }
}

/// Check suites selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Euler,
    Specialization,
    ClosedForm,
    Pp,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "duality" => Suite::Duality,
            "euler" => Suite::Euler,
            "specialization" => Suite::Specialization,
            "closedform" => Suite::ClosedForm,
            "pp" => Suite::Pp,
            "all" => Suite::All,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown suite {s:?} (expected duality, euler, specialization, closedform, pp or all)"
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Duality => "duality",
            Suite::Euler => "euler",
            Suite::Specialization => "specialization",
            Suite::ClosedForm => "closedform",
            Suite::Pp => "pp",
            Suite::All => "all",
        })
    }
}

fn term_str(ctx: VarContext, m: &Monomial, c: &Rational) -> String {
    format!("{}={}", m.fmt_in(ctx), fmt_rational(c))
}

/// Curious duality with half-dimension `big_n`.
///
/// One variable: `q^(2N) p(1/q) = p(q)`. Two variables: the coefficient of
/// `q^a t^b` equals that of `q^(2N-a) t^(b+2N-2a)`, i.e.
/// `(qt)^(2N) p(1/(qt²), t) = p(q, t)`.
pub fn duality_scan(p: &SparsePoly, big_n: i64) -> CheckEntry {
    let ctx = p.ctx();
    let two_n = 2 * big_n as i32;
    let partner = |m: &Monomial| -> Monomial {
        match ctx.len() {
            1 => Monomial::new(&[two_n - m.0[0]]),
            _ => Monomial::new(&[two_n - m.0[0], m.0[1] + two_n - 2 * m.0[0]]),
        }
    };
    if !(ctx.len() == 1 || ctx == VarContext::QT) {
        return CheckEntry::skipped(format!("no duality statement for variables {:?}", ctx));
    }
    for (m, c) in p.terms() {
        let pm = partner(m);
        let pc = p.coeff(&pm);
        if &pc != c {
            return CheckEntry::fail(
                format!("N = {big_n}: coefficients differ"),
                format!("{} vs {}", term_str(ctx, m, c), term_str(ctx, &pm, &pc)),
            );
        }
    }
    let sample: Vec<String> = p
        .terms()
        .iter()
        .take(2)
        .map(|(m, c)| format!("{} <-> {}", term_str(ctx, m, c), term_str(ctx, &partner(m), c)))
        .collect();
    CheckEntry::pass(format!("N = {big_n}: all {} terms paired", p.len())).with_witness(sample.join("; "))
}

/// Duality for a computed `E` or `Hqt` invariant.
pub fn check_duality(r: &InvariantResult) -> CheckEntry {
    if !matches!(r.kind, Kind::E | Kind::Hqt) {
        return CheckEntry::skipped(format!("not stated for {}", r.kind));
    }
    let two_n = dimension_2n(r.n, r.g);
    if two_n < 0 || r.polynomial.is_zero() {
        return CheckEntry::skipped(format!("g = {}: degenerate", r.g));
    }
    duality_scan(&r.polynomial, two_n / 2)
}

/// Degree `2N` in every variable and leading coefficient 1.
pub fn check_degrees(r: &InvariantResult) -> CheckEntry {
    if !matches!(r.kind, Kind::E | Kind::Hqt) {
        return CheckEntry::skipped(format!("not stated for {}", r.kind));
    }
    let two_n = dimension_2n(r.n, r.g);
    let p = &r.polynomial;
    if two_n < 0 || p.is_zero() {
        return CheckEntry::skipped(format!("g = {}: degenerate", r.g));
    }
    let ctx = p.ctx();
    for v in ctx.vars() {
        let d = p.degree_in(v).unwrap_or(0) as i64;
        if d != two_n {
            return CheckEntry::fail(format!("{v}-degree differs from 2N = {two_n}"), format!("{v}-degree {d}"));
        }
    }
    let top = Monomial::new(&vec![two_n as i32; ctx.len()]);
    let c = p.coeff(&top);
    if c != int(1) {
        return CheckEntry::fail("leading coefficient is not 1", term_str(ctx, &top, &c));
    }
    CheckEntry::pass(format!("degree 2N = {two_n} in each variable, {} has coefficient 1", top.fmt_in(ctx)))
}

/// All coefficients non-negative.
pub fn check_positivity(p: &SparsePoly) -> CheckEntry {
    match p.terms().iter().find(|(_, c)| c.is_negative()) {
        Some((m, c)) => CheckEntry::fail("negative coefficient", term_str(p.ctx(), m, c)),
        None => CheckEntry::pass(format!("{} coefficients, all non-negative", p.len())),
    }
}

/// `E_n(1) = μ(n) n^(2g-3)` for `g >= 2`.
pub fn check_euler(r: &InvariantResult) -> CheckEntry {
    if r.kind != Kind::E {
        return CheckEntry::skipped(format!("stated for E, not {}", r.kind));
    }
    if r.g < 2 {
        return CheckEntry::skipped(format!("g = {} < 2", r.g));
    }
    let got = match r.polynomial.evaluate(&[(Var::Q, int(1))]) {
        Ok(v) => v,
        Err(e) => return CheckEntry::fail("evaluation failed", e.to_string()),
    };
    let mu = moebius(r.n as u64);
    let want = int(mu) * num_traits::pow(int(r.n as i64), 2 * r.g as usize - 3);
    let detail = format!(
        "E_{}(1) = {}, mu({}) * {}^{} = {}",
        r.n,
        fmt_rational(&got),
        r.n,
        r.n,
        2 * r.g - 3,
        fmt_rational(&want)
    );
    if got == want {
        CheckEntry::pass(detail)
    } else {
        CheckEntry::fail(detail, format!("E_{}(1) = {}", r.n, fmt_rational(&got)))
    }
}

/// Degree `2n(n-1)(g-1)`, leading coefficient 1, non-negative coefficients.
pub fn check_pp_properties(r: &InvariantResult) -> CheckEntry {
    if r.kind != Kind::PP {
        return CheckEntry::skipped(format!("stated for pp, not {}", r.kind));
    }
    if r.g == 0 {
        return CheckEntry::skipped("g = 0: degenerate");
    }
    let p = &r.polynomial;
    let want = 2 * (r.n * (r.n - 1)) as i64 * (r.g as i64 - 1);
    let Some((m, c)) = p.lead() else {
        return CheckEntry::fail("PP is zero", "0");
    };
    if m.0[0] as i64 != want || p.min_degree_in(Var::T).unwrap_or(0) < 0 {
        return CheckEntry::fail(format!("degree differs from 2n(n-1)(g-1) = {want}"), term_str(p.ctx(), m, c));
    }
    if c != &int(1) {
        return CheckEntry::fail("leading coefficient is not 1", term_str(p.ctx(), m, c));
    }
    let pos = check_positivity(p);
    if !pos.passed() {
        return pos;
    }
    CheckEntry::pass(format!("degree {want}, leading coefficient 1, coefficients non-negative"))
}

/// `H(1, x, y) = H(1, y, x)`.
pub fn check_xy_symmetry(r: &InvariantResult) -> CheckEntry {
    if r.kind != Kind::Hxy {
        return CheckEntry::skipped(format!("stated for hxy, not {}", r.kind));
    }
    let p = match r.polynomial.specialize(&[(Var::Q, Subst::int(1))]) {
        Ok(p) => p,
        Err(e) => return CheckEntry::fail("specialization failed", e.to_string()),
    };
    for (m, c) in p.terms() {
        let swapped = Monomial::new(&[m.0[1], m.0[0]]);
        let sc = p.coeff(&swapped);
        if &sc != c {
            return CheckEntry::fail(
                "H(1,x,y) is not symmetric",
                format!("{} vs {}", term_str(p.ctx(), m, c), term_str(p.ctx(), &swapped, &sc)),
            );
        }
    }
    CheckEntry::pass(format!("H(1,x,y) symmetric, {} terms", p.len()))
}

/// Exact equality with the first differing monomial as witness.
pub fn check_equal(what: &str, lhs: &SparsePoly, rhs: &SparsePoly) -> CheckEntry {
    if lhs.ctx() != rhs.ctx() {
        return CheckEntry::fail(what, format!("variables {:?} vs {:?}", lhs.ctx(), rhs.ctx()));
    }
    if lhs == rhs {
        return CheckEntry::pass(format!("{what}: equal ({} terms)", lhs.len()));
    }
    let ctx = lhs.ctx();
    let diff = lhs - rhs;
    let (m, _) = &diff.terms()[0];
    CheckEntry::fail(
        format!("{what}: differ"),
        format!("{}: {} vs {}", m.fmt_in(ctx), fmt_rational(&lhs.coeff(m)), fmt_rational(&rhs.coeff(m))),
    )
}

fn closed_form_for(kind: Kind, n: usize) -> Option<ClosedForm> {
    match (kind, n) {
        (Kind::E, 2) => Some(ClosedForm::E2),
        (Kind::Hqt, 2) => Some(ClosedForm::H2),
        (Kind::Hqt, 3) => Some(ClosedForm::H3),
        (Kind::PP, 3) => Some(ClosedForm::PP3),
        (Kind::Hxy, n) => Some(ClosedForm::YGenus(n)),
        _ => None,
    }
}

/// Extraction against the printed closed form, where one exists. For `hxy`
/// the comparison is on the y-genus specialization.
pub fn check_closed_form(r: &InvariantResult) -> CheckEntry {
    let Some(which) = closed_form_for(r.kind, r.n) else {
        return CheckEntry::skipped(format!("no closed form for {} with n = {}", r.kind, r.n));
    };
    let cf = match closed_form(which, r.g) {
        Ok(f) => f,
        Err(Error::UnsupportedGenus { .. }) => {
            return CheckEntry::skipped(format!("{which} not stated for g = {}", r.g));
        }
        Err(e) => return CheckEntry::fail(format!("{which} failed"), e.to_string()),
    };
    let cf = match cf.as_polynomial() {
        Ok(p) => p,
        Err(e) => return CheckEntry::fail(format!("{which} is not a polynomial"), e.to_string()),
    };
    let lhs = if r.kind == Kind::Hxy {
        match specialize_polynomial(Kind::Hxy, &r.polynomial, Target::YGenus) {
            Ok(p) => p,
            Err(e) => return CheckEntry::fail("y-genus specialization failed", e.to_string()),
        }
    } else {
        r.polynomial.clone()
    };
    check_equal(&format!("extraction vs {which}"), &lhs, &cf)
}

/// Checks that need nothing beyond the result itself.
pub(crate) fn intrinsic(r: &InvariantResult) -> super::CheckReport {
    let mut rep = CheckReport::default();
    match r.kind {
        Kind::E => {
            rep.insert("duality", check_duality(r));
            rep.insert("degrees", check_degrees(r));
            rep.insert("euler", check_euler(r));
        }
        Kind::Hqt => {
            rep.insert("duality", check_duality(r));
            rep.insert("degrees", check_degrees(r));
            rep.insert("positivity", check_positivity(&r.polynomial));
        }
        Kind::Hxy => {
            rep.insert("positivity", check_positivity(&r.polynomial));
            rep.insert("xy_symmetry", check_xy_symmetry(r));
        }
        Kind::PP => {
            rep.insert("pp_properties", check_pp_properties(r));
        }
    }
    rep.insert("closed_form_match", check_closed_form(r));
    rep
}

fn bare(kind: Kind, n: usize, g: u32, polynomial: SparsePoly) -> InvariantResult {
    InvariantResult {
        kind,
        n,
        g,
        polynomial,
        dimension2n: (kind != Kind::PP).then(|| dimension_2n(n, g)),
        checks: CheckReport::default(),
    }
}

fn ygenus_values(h: &SparsePoly, n: usize, g: u32) -> Result<(CheckEntry, CheckEntry)> {
    if g < 2 {
        let s = CheckEntry::skipped(format!("g = {g} < 2"));
        return Ok((s.clone(), s));
    }
    let y = specialize_polynomial(Kind::Hxy, h, Target::YGenus)?;
    let mu = moebius(n as u64);
    let at = |v: i64| y.evaluate(&[(Var::Y, int(v))]);
    let check = |got: Rational, want: Rational, label: &str| {
        let detail = format!("H_{n}(1,-1,{label}) = {}, expected {}", fmt_rational(&got), fmt_rational(&want));
        if got == want {
            CheckEntry::pass(detail)
        } else {
            CheckEntry::fail(detail, fmt_rational(&got))
        }
    };
    let minus = check(at(-1)?, int(mu) * num_traits::pow(int(n as i64), 2 * g as usize - 3), "-1");
    let plus_want =
        if n % 2 == 1 { int(mu) * num_traits::pow(int(n as i64), g as usize - 2) } else { Rational::zero() };
    let plus = check(at(1)?, plus_want, "1");
    Ok((minus, plus))
}

pub(crate) fn run_suite(engine: &mut Engine, suite: Suite, n: usize, g: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::default();
    let get = |engine: &mut Engine, kind: Kind| -> Result<InvariantResult> {
        Ok(bare(kind, n, g, engine.polynomial(kind, n, g)?))
    };
    let want = |s: Suite| suite == s || suite == Suite::All;

    if want(Suite::Duality) {
        let e = get(engine, Kind::E)?;
        let h = get(engine, Kind::Hqt)?;
        let mut sub = CheckReport::default();
        sub.insert("duality", check_duality(&e));
        rep.absorb("E", sub);
        let mut sub = CheckReport::default();
        sub.insert("duality", check_duality(&h));
        sub.insert("degrees", check_degrees(&h));
        sub.insert("positivity", check_positivity(&h.polynomial));
        rep.absorb("hqt", sub);
    }
    if want(Suite::Euler) {
        let e = get(engine, Kind::E)?;
        rep.insert("E.euler", check_euler(&e));
    }
    if want(Suite::Specialization) {
        let e = get(engine, Kind::E)?;
        let h = get(engine, Kind::Hqt)?;
        let x = get(engine, Kind::Hxy)?;
        let pp = get(engine, Kind::PP)?;
        let to_e = specialize_polynomial(Kind::Hqt, &h.polynomial, Target::ToE)?;
        rep.insert("hqt.to_E", check_equal("H(q,-1) vs E", &to_e, &e.polynomial));
        let to_qt = specialize_polynomial(Kind::Hxy, &x.polynomial, Target::XyToQt)?;
        rep.insert("hxy.xy_to_qt", check_equal("H(q,t,t) vs H(q,t)", &to_qt, &h.polynomial));
        let pure = specialize_polynomial(Kind::Hqt, &h.polynomial, Target::PureExtract)?;
        rep.insert("hqt.pure_extract", check_equal("pure part of H vs PP", &pure, &pp.polynomial));
        rep.insert("hxy.xy_symmetry", check_xy_symmetry(&x));
        let (minus, plus) = ygenus_values(&x.polynomial, n, g)?;
        rep.insert("hxy.ygenus_at_minus_one", minus);
        rep.insert("hxy.ygenus_at_one", plus);
    }
    if want(Suite::ClosedForm) {
        for kind in Kind::ALL {
            if closed_form_for(kind, n).is_some() {
                let r = get(engine, kind)?;
                rep.insert(format!("{kind}.closed_form_match"), check_closed_form(&r));
            }
        }
        if rep.is_empty() {
            rep.insert("closed_form_match", CheckEntry::skipped(format!("no closed form for n = {n}")));
        }
    }
    if want(Suite::Pp) {
        let pp = get(engine, Kind::PP)?;
        let h = get(engine, Kind::Hqt)?;
        rep.insert("pp.pp_properties", check_pp_properties(&pp));
        let pure = specialize_polynomial(Kind::Hqt, &h.polynomial, Target::PureExtract)?;
        rep.insert("hqt.pure_extract", check_equal("pure part of H vs PP", &pure, &pp.polynomial));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_palindromic_fails() {
        let p = SparsePoly::parse(VarContext::Q, "1 + q").unwrap();
        let e = duality_scan(&p, 1);
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.witness.as_deref(), Some("1=1 vs q^2=0"));
    }

    #[test]
    fn h2_duality_witnesses() {
        let mut eng = Engine::new();
        let r = bare(Kind::Hqt, 2, 3, eng.polynomial(Kind::Hqt, 2, 3).unwrap());
        let e = check_duality(&r);
        assert_eq!(e.status, Status::Pass);
        let w = e.witness.unwrap();
        assert!(w.starts_with("1=1 <-> q^12*t^12=1"), "{w}");
        let c = r.polynomial.coeff(&Monomial::new(&[2, 2]));
        assert_eq!(c, r.polynomial.coeff(&Monomial::new(&[10, 10])));
        assert_eq!(c, int(1));
        // off the diagonal: 6 q^2 t^3 pairs with 6 q^10 t^11
        let c = r.polynomial.coeff(&Monomial::new(&[2, 3]));
        assert_eq!(c, r.polynomial.coeff(&Monomial::new(&[10, 11])));
        assert_eq!(c, int(6));
    }

    #[test]
    fn suites_parse() {
        for s in ["duality", "euler", "specialization", "closedform", "pp", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("dual".parse::<Suite>().is_err());
    }

    #[test]
    fn euler_report() {
        let mut eng = Engine::new();
        let rep = eng.run_suite(Suite::Euler, 2, 3).unwrap();
        let e = rep.get("E.euler").unwrap();
        assert_eq!(e.status, Status::Pass);
        assert_eq!(e.detail, "E_2(1) = -8, mu(2) * 2^3 = -8");
    }

    #[test]
    fn full_suite_small() {
        let mut eng = Engine::new();
        for (n, g) in [(2, 2), (3, 2)] {
            let rep = eng.run_suite(Suite::All, n, g).unwrap();
            assert!(rep.passed(), "n={n} g={g}: {rep:?}");
        }
    }
}
