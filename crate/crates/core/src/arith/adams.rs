use serde::{Deserialize, Serialize};

use super::fraction::FactoredFraction;
use super::monomial::{Monomial, Var, VarContext};
use super::poly::SparsePoly;
use super::ArithError;

/// Which generating function a quantity belongs to. Fixes the variable
/// context and the sign twist of the Adams operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    /// `q`; `psi_r: q -> q^r`.
    E,
    /// `(q, t)`; `psi_r: q -> q^r, t -> -(-t)^r`.
    Qt,
    /// `(q, x, y)`; `psi_r: q -> q^r, x -> -(-x)^r, y -> -(-y)^r`.
    Xy,
    /// `t`; `psi_r: t -> t^r`.
    Pure,
}

impl Flavor {
    pub fn ctx(self) -> VarContext {
        match self {
            Flavor::E => VarContext::Q,
            Flavor::Qt => VarContext::QT,
            Flavor::Xy => VarContext::QXY,
            Flavor::Pure => VarContext::T,
        }
    }

    fn twisted(self) -> &'static [Var] {
        match self {
            Flavor::Qt => &[Var::T],
            Flavor::Xy => &[Var::X, Var::Y],
            Flavor::E | Flavor::Pure => &[],
        }
    }

    /// Whether `psi_r` flips the sign of the monomial `m`:
    /// `(-(-v)^r)^e = (-1)^(e(r+1)) v^(re)`.
    fn negates(self, r: u32, m: &Monomial) -> bool {
        if r % 2 == 1 {
            return false;
        }
        let ctx = self.ctx();
        let twisted: i64 = self.twisted().iter().map(|v| m.0[ctx.index_of(*v).unwrap()] as i64).sum();
        twisted.rem_euclid(2) == 1
    }

    fn check(self, ctx: VarContext) -> Result<(), ArithError> {
        if ctx != self.ctx() {
            return Err(ArithError::Context { left: ctx.names().join(","), right: self.ctx().names().join(",") });
        }
        Ok(())
    }
}

pub fn adams_poly(p: &SparsePoly, r: u32, flavor: Flavor) -> Result<SparsePoly, ArithError> {
    assert!(r >= 1, "Adams operations are indexed by r >= 1");
    flavor.check(p.ctx())?;
    Ok(p.map_monotone(|m| (m.pow(r as i32), flavor.negates(r, m))))
}

/// The Adams operation `psi_r` of the given flavor, applied to numerator
/// and every denominator factor.
pub fn adams_substitute(f: &FactoredFraction, r: u32, flavor: Flavor) -> Result<FactoredFraction, ArithError> {
    assert!(r >= 1, "Adams operations are indexed by r >= 1");
    flavor.check(f.ctx())?;
    if r == 1 {
        return Ok(f.clone());
    }
    Ok(f.map_parts(
        |n| n.map_monotone(|m| (m.pow(r as i32), flavor.negates(r, m))),
        |b| b.substituted(r, flavor.negates(r, &b.exponent())),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(s: &str) -> SparsePoly {
        SparsePoly::parse(VarContext::QT, s).unwrap()
    }

    #[test]
    fn twist_examples() {
        assert_eq!(adams_poly(&qt("q*t"), 2, Flavor::Qt).unwrap(), qt("-q^2*t^2"));
        assert_eq!(adams_poly(&qt("t"), 3, Flavor::Qt).unwrap(), qt("t^3"));
        assert_eq!(adams_poly(&qt("1 + q*t^2"), 1, Flavor::Qt).unwrap(), qt("1 + q*t^2"));
        let p = SparsePoly::parse(VarContext::QXY, "q*x + x*y").unwrap();
        let want = SparsePoly::parse(VarContext::QXY, "-q^2*x^2 + x^2*y^2").unwrap();
        assert_eq!(adams_poly(&p, 2, Flavor::Xy).unwrap(), want);
        let p = SparsePoly::parse(VarContext::T, "1 - t").unwrap();
        let want = SparsePoly::parse(VarContext::T, "1 - t^2").unwrap();
        assert_eq!(adams_poly(&p, 2, Flavor::Pure).unwrap(), want);
    }

    #[test]
    fn flavor_context_enforced() {
        assert!(adams_poly(&qt("q"), 2, Flavor::E).is_err());
    }

    #[test]
    fn fraction_denominators_follow() {
        let f = FactoredFraction::new(qt("1"), &[(qt("1 - q*t"), 1)]).unwrap();
        let g = adams_substitute(&f, 2, Flavor::Qt).unwrap();
        assert_eq!(g, FactoredFraction::new(qt("1"), &[(qt("1 + q^2*t^2"), 1)]).unwrap());
    }
}
