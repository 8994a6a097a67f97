//! Truncated power series in the bookkeeping variable `T`, the formal
//! logarithm, and extraction of the `V_n` from
//! `Π_n Z_n(T^n) = Σ_λ (hook term) T^|λ|`.

use crate::arith::{adams_substitute, FactoredFraction, Flavor, Rational, SparsePoly};
use crate::error::{Error, Result};
use crate::partitions::{hook_term, partitions_of};

/// Power series `Σ_(m <= order) c_m T^m` with fraction coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    flavor: Flavor,
    coeffs: Vec<FactoredFraction>,
}

impl TruncatedSeries {
    pub fn new(flavor: Flavor, coeffs: Vec<FactoredFraction>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        assert!(coeffs.iter().all(|c| c.ctx() == flavor.ctx()), "coefficient context");
        TruncatedSeries { flavor, coeffs }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &FactoredFraction {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[FactoredFraction] {
        &self.coeffs
    }

    /// `exp` of a series with zero constant term, via
    /// `m E_m = Σ_(k=1..m) k L_k E_(m-k)`.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        let ctx = self.flavor.ctx();
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("exp needs a zero constant term".into()));
        }
        let mut e = vec![FactoredFraction::one(ctx)];
        for m in 1..=self.order() {
            let mut acc = FactoredFraction::zero(ctx);
            for k in 1..=m {
                let term = (&self.coeffs[k] * &e[m - k]).scale(&int(k as i64));
                acc = &acc + &term;
            }
            e.push(acc.scale(&int(m as i64).recip()));
        }
        Ok(TruncatedSeries::new(self.flavor, e))
    }
}

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn sum_terms(ctx: crate::arith::VarContext, terms: Vec<FactoredFraction>) -> FactoredFraction {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        terms.into_par_iter().reduce(|| FactoredFraction::zero(ctx), |a, b| &a + &b)
    }
    #[cfg(not(feature = "parallel"))]
    {
        terms.iter().fold(FactoredFraction::zero(ctx), |a, b| &a + b)
    }
}

/// Coefficients `Σ_(|λ| = m) hook_term(λ)` for `0 <= m <= nmax`.
pub fn rhs_series(flavor: Flavor, g: u32, nmax: usize) -> TruncatedSeries {
    let ctx = flavor.ctx();
    let coeffs = (0..=nmax)
        .map(|m| {
            let terms = map_partitions(m, |p| hook_term(flavor, g, p));
            sum_terms(ctx, terms)
        })
        .collect();
    TruncatedSeries::new(flavor, coeffs)
}

fn map_partitions<F>(m: usize, f: F) -> Vec<FactoredFraction>
where
    F: Fn(&crate::partitions::Partition) -> FactoredFraction + Sync + Send,
{
    let parts = partitions_of(m);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        parts.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        parts.iter().map(f).collect()
    }
}

/// Formal logarithm by `m U_m = m S_m - Σ_(k=1..m-1) k U_k S_(m-k)`.
pub fn series_log(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    let ctx = s.flavor.ctx();
    match s.coeffs[0].as_polynomial() {
        Ok(p) if p.is_one() => {}
        _ => return Err(Error::ConstantTermNotOne),
    }
    let mut u = vec![FactoredFraction::zero(ctx)];
    for m in 1..=s.order() {
        let mut acc = FactoredFraction::zero(ctx);
        for k in 1..m {
            let term = (&u[k] * &s.coeffs[m - k]).scale(&int(k as i64));
            acc = &acc + &term;
        }
        let um = &s.coeffs[m] - &acc.scale(&int(m as i64).recip());
        u.push(um);
    }
    Ok(TruncatedSeries::new(s.flavor, u))
}

/// Solves `U_m = Σ_(r | m) (1/r) ψ_r[V_(m/r)]` for `V_1..V_order`.
pub fn v_from_log(log: &TruncatedSeries) -> Result<Vec<FactoredFraction>> {
    let flavor = log.flavor;
    let mut v: Vec<FactoredFraction> = Vec::with_capacity(log.order());
    for m in 1..=log.order() {
        let mut vm = log.coeffs[m].clone();
        for r in 2..=m {
            if m % r != 0 {
                continue;
            }
            let term = adams_substitute(&v[m / r - 1], r as u32, flavor)?;
            vm = &vm - &term.scale(&int(r as i64).recip());
        }
        v.push(vm);
    }
    Ok(v)
}

/// `[V_1, ..., V_nmax]` for the given flavor and genus.
pub fn extract_v(flavor: Flavor, g: u32, nmax: usize) -> Result<Vec<FactoredFraction>> {
    let s = rhs_series(flavor, g, nmax);
    let log = series_log(&s)?;
    v_from_log(&log)
}

/// Solves the defining relation between `V_n` and the named invariant:
///
/// * `E`: `V_n = E_n q^((1-g)n(n-1)) (q-1)^(2g-2)`
/// * `Qt`: `V_n = H_n (qt²)^((1-g)n(n-1)) (qt+1)^(2g) / ((qt²-1)(q-1))`
/// * `Xy`: `V_n = H_n (qxy)^((1-g)n(n-1)) (qx+1)^g (qy+1)^g / ((qxy-1)(q-1))`
/// * `Pure`: `V_n = PP_n t^(2(1-g)n(n-1)) / (1-t²)`
///
/// then asserts the result is a polynomial with integer coefficients.
pub fn invariant_from_v(flavor: Flavor, n: usize, g: u32, v: &FactoredFraction) -> Result<SparsePoly> {
    let ctx = flavor.ctx();
    if v.ctx() != ctx {
        return Err(Error::InvalidArgument(format!("V_{n} lives in {:?}, expected {:?}", v.ctx(), ctx)));
    }
    let shift = (1 - g as i64) * (n as i64) * (n as i64 - 1);
    let p = |s: &str| SparsePoly::parse(ctx, s).expect("normalization literal");
    let pw = |s: &str, k: i64| FactoredFraction::power_of(&p(s), k);
    let factors: Vec<FactoredFraction> = match flavor {
        Flavor::E => vec![pw("q", -shift)?, pw("q - 1", -(2 * g as i64 - 2))?],
        Flavor::Qt => vec![pw("q*t^2 - 1", 1)?, pw("q - 1", 1)?, pw("q*t^2", -shift)?, pw("q*t + 1", -(2 * g as i64))?],
        Flavor::Xy => vec![
            pw("q*x*y - 1", 1)?,
            pw("q - 1", 1)?,
            pw("q*x*y", -shift)?,
            pw("q*x + 1", -(g as i64))?,
            pw("q*y + 1", -(g as i64))?,
        ],
        Flavor::Pure => vec![pw("1 - t^2", 1)?, pw("t", -2 * shift)?],
    };
    let mut f = v.clone();
    for factor in &factors {
        f = &f * factor;
    }
    let poly = f.as_polynomial()?;
    ensure_integral(&poly)?;
    Ok(poly)
}

pub(crate) fn ensure_integral(p: &SparsePoly) -> Result<()> {
    if let Some((m, c)) = p.terms().iter().find(|(_, c)| !c.is_integer()) {
        return Err(Error::NonIntegerCoefficient { monomial: m.fmt_in(p.ctx()), coeff: crate::arith::fmt_rational(c) });
    }
    Ok(())
}

/// Convenience: the invariant for a single `n` (extracts `V_1..V_n`).
pub fn invariant(flavor: Flavor, n: usize, g: u32) -> Result<SparsePoly> {
    let v = extract_v(flavor, g, n)?;
    invariant_from_v(flavor, n, g, &v[n - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::VarContext;

    fn q(s: &str) -> SparsePoly {
        SparsePoly::parse(VarContext::Q, s).unwrap()
    }
    fn qt(s: &str) -> SparsePoly {
        SparsePoly::parse(VarContext::QT, s).unwrap()
    }
    fn poly_frac(p: SparsePoly) -> FactoredFraction {
        FactoredFraction::from_poly(p)
    }

    #[test]
    fn rhs_examples() {
        let s = rhs_series(Flavor::E, 2, 1);
        assert!(s.coeff(0).as_polynomial().unwrap().is_one());
        assert_eq!(s.coeff(1).as_polynomial().unwrap(), q("1 - 2*q + q^2"));

        let s = rhs_series(Flavor::Qt, 3, 0);
        assert_eq!(s.order(), 0);
        assert!(s.coeff(0).as_polynomial().unwrap().is_one());

        let s = rhs_series(Flavor::E, 2, 2);
        let h2 = q("1 - q - q^2 + q^3");
        let h11 = q("q^-1 - 1 - q + q^2");
        assert_eq!(s.coeff(2).as_polynomial().unwrap(), &h2.pow(2) + &h11.pow(2));
    }

    #[test]
    fn log_examples() {
        let ctx = VarContext::Q;
        let a = q("1 + q");
        let s = TruncatedSeries::new(
            Flavor::E,
            vec![FactoredFraction::one(ctx), poly_frac(a.clone()), FactoredFraction::zero(ctx)],
        );
        let l = series_log(&s).unwrap();
        assert!(l.coeff(0).is_zero());
        assert_eq!(l.coeff(1).as_polynomial().unwrap(), a);
        let half = Rational::new((-1).into(), 2.into());
        assert_eq!(l.coeff(2).as_polynomial().unwrap(), a.pow(2).scale(&half));

        let one = TruncatedSeries::new(Flavor::E, vec![FactoredFraction::one(ctx)]);
        assert!(series_log(&one).unwrap().coeff(0).is_zero());

        let c = |k: i64| poly_frac(SparsePoly::constant(ctx, Rational::new(1.into(), k.into())));
        let s = TruncatedSeries::new(Flavor::E, vec![c(1), c(1), c(2), c(6)]);
        let l = series_log(&s).unwrap();
        assert!(l.coeff(1).as_polynomial().unwrap().is_one());
        assert!(l.coeff(2).is_zero() && l.coeff(3).is_zero());

        let bad = TruncatedSeries::new(Flavor::E, vec![poly_frac(q("2"))]);
        assert!(matches!(series_log(&bad), Err(Error::ConstantTermNotOne)));
    }

    #[test]
    fn first_v_is_first_hook_term() {
        for g in 0..4 {
            let v = extract_v(Flavor::E, g, 1).unwrap();
            let want = FactoredFraction::power_of(&q("1 - q"), 2 * g as i64 - 2).unwrap();
            assert_eq!(v[0], want);
        }
        let v = extract_v(Flavor::Qt, 1, 1).unwrap();
        let want = FactoredFraction::new(qt("1 + q*t").pow(2), &[(qt("1 - q*t^2"), 1), (qt("1 - q"), 1)]).unwrap();
        assert_eq!(v[0], want);
    }

    #[test]
    fn rank_one_invariants_are_one() {
        for g in 0..5 {
            assert!(invariant(Flavor::E, 1, g).unwrap().is_one());
            assert!(invariant(Flavor::Pure, 1, g).unwrap().is_one());
        }
        for g in 1..5 {
            assert!(invariant(Flavor::Qt, 1, g).unwrap().is_one());
            assert!(invariant(Flavor::Xy, 1, g).unwrap().is_one());
        }
    }

    #[test]
    fn e2_genus_three() {
        let e = invariant(Flavor::E, 2, 3).unwrap();
        assert_eq!(e, q("q^12 - 4*q^10 + 6*q^8 - 14*q^6 + 6*q^4 - 4*q^2 + 1"));
    }

    #[test]
    fn wrong_context_rejected() {
        let v = FactoredFraction::one(VarContext::Q);
        assert!(invariant_from_v(Flavor::Qt, 1, 1, &v).is_err());
    }
}
