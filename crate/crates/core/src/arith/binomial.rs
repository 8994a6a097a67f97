use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use super::monomial::{Monomial, VarContext};
use super::poly::SparsePoly;
use super::{ArithError, Rational};

/// A normalized two-term factor `c0 + c1*x^v`.
///
/// `v` is graded-lex positive, `c0 > 0`, `c1 != 0` and `gcd(c0, |c1|) = 1`,
/// so the smallest monomial is `1` with positive coefficient.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialFactor {
    v: Monomial,
    c0: i64,
    c1: i64,
}

impl BinomialFactor {
    /// `1 - x^v`.
    pub fn one_minus(v: Monomial) -> Self {
        assert!(v > Monomial::ONE, "exponent must be graded-lex positive");
        BinomialFactor { v, c0: 1, c1: -1 }
    }

    /// `1 + x^v`.
    pub fn one_plus(v: Monomial) -> Self {
        assert!(v > Monomial::ONE, "exponent must be graded-lex positive");
        BinomialFactor { v, c0: 1, c1: 1 }
    }

    /// Splits a two-term polynomial as `unit * factor`, where `unit` is a
    /// rational multiple of a monomial.
    pub fn normalize(p: &SparsePoly) -> Result<(Rational, Monomial, BinomialFactor), ArithError> {
        let [(lo_m, lo_c), (hi_m, hi_c)] = p.terms() else {
            return Err(ArithError::NotBinomial(p.render()));
        };
        let ratio = hi_c / lo_c;
        let c0 = ratio.denom().clone();
        let c1 = ratio.numer().clone();
        let unit = lo_c / Rational::from_integer(c0.clone());
        let factor = BinomialFactor {
            v: hi_m.div(lo_m),
            c0: c0.to_i64().ok_or(ArithError::Overflow)?,
            c1: c1.to_i64().ok_or(ArithError::Overflow)?,
        };
        Ok((unit, *lo_m, factor))
    }

    pub fn exponent(&self) -> Monomial {
        self.v
    }

    pub fn coefficients(&self) -> (i64, i64) {
        (self.c0, self.c1)
    }

    pub fn to_poly(&self, ctx: VarContext) -> SparsePoly {
        SparsePoly::from_terms(
            ctx,
            [(Monomial::ONE, Rational::from_integer(self.c0.into())), (self.v, Rational::from_integer(self.c1.into()))],
        )
    }

    /// Image under `x^e -> ±x^(r*e)` where `negate` reports whether the
    /// exponent `v` picks up a sign.
    pub(crate) fn substituted(&self, r: u32, negate: bool) -> Self {
        BinomialFactor { v: self.v.pow(r as i32), c0: self.c0, c1: if negate { -self.c1 } else { self.c1 } }
    }

    /// Evaluates the factor at a point given as one value per context slot.
    pub(crate) fn eval(&self, point: &[Rational]) -> Result<Rational, ArithError> {
        let mut x = Rational::one();
        for (i, val) in point.iter().enumerate() {
            let k = self.v.0[i];
            if k == 0 {
                continue;
            }
            if val.is_zero() && k < 0 {
                return Err(ArithError::NegativeExponentAtZero);
            }
            let p = num_traits::pow(val.clone(), k.unsigned_abs() as usize);
            x *= if k < 0 { p.recip() } else { p };
        }
        Ok(Rational::from_integer(self.c0.into()) + Rational::from_integer(self.c1.into()) * x)
    }

    pub fn render(&self, ctx: VarContext) -> String {
        let sign = if self.c1.is_negative() { "-" } else { "+" };
        let a = self.c1.abs();
        let m = self.v.fmt_in(ctx);
        if a == 1 {
            format!("({} {} {})", self.c0, sign, m)
        } else {
            format!("({} {} {}*{})", self.c0, sign, a, m)
        }
    }
}

impl fmt::Debug for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*x^{:?})", self.c0, self.c1, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_absorbs_sign_and_monomial() {
        let ctx = VarContext::QT;
        let p = SparsePoly::parse(ctx, "q*t^2 - 1").unwrap();
        let (unit, m, f) = BinomialFactor::normalize(&p).unwrap();
        assert_eq!(unit, -Rational::one());
        assert!(m.is_one());
        assert_eq!(f, BinomialFactor::one_minus(Monomial::new(&[1, 2])));

        let p = SparsePoly::parse(ctx, "2*q - 6*q^2*t").unwrap();
        let (unit, m, f) = BinomialFactor::normalize(&p).unwrap();
        assert_eq!(unit, Rational::from_integer(2.into()));
        assert_eq!(m, Monomial::new(&[1, 0]));
        assert_eq!(f.coefficients(), (1, -3));
        assert_eq!(f.exponent(), Monomial::new(&[1, 1]));

        let p = SparsePoly::parse(ctx, "3 + 2*q").unwrap();
        let (unit, _, f) = BinomialFactor::normalize(&p).unwrap();
        assert_eq!(unit, Rational::one());
        assert_eq!(f.coefficients(), (3, 2));
        assert_eq!(f.to_poly(ctx), p);
    }
}
