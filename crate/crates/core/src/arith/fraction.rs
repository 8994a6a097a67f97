use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::binomial::BinomialFactor;
use super::monomial::{Monomial, VarContext};
use super::poly::SparsePoly;
use super::{ArithError, Rational};

/// A Laurent polynomial divided by a multiset of binomial factors.
///
/// After every operation no denominator factor divides the numerator
/// exactly; zero is represented with an empty denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct FactoredFraction {
    num: SparsePoly,
    den: BTreeMap<BinomialFactor, u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FracOp {
    Add,
    Sub,
    Mul,
}

impl FactoredFraction {
    pub fn zero(ctx: VarContext) -> Self {
        Self::from_poly(SparsePoly::zero(ctx))
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::from_poly(SparsePoly::one(ctx))
    }

    pub fn from_poly(num: SparsePoly) -> Self {
        FactoredFraction { num, den: BTreeMap::new() }
    }

    /// `num / prod(d_i^k_i)` where each `d_i` has one or two terms.
    pub fn new(num: SparsePoly, dens: &[(SparsePoly, u32)]) -> Result<Self, ArithError> {
        let mut f = Self::from_poly(num);
        for (d, k) in dens {
            f.num.checked(d)?;
            f = f.mul_unchecked(&Self::power_of(d, -(*k as i64))?);
        }
        Ok(f.cancelled())
    }

    /// `p^k` for a monomial or binomial `p` and any integer `k`.
    pub fn power_of(p: &SparsePoly, k: i64) -> Result<Self, ArithError> {
        let ctx = p.ctx();
        match p.terms() {
            [(m, c)] => {
                let c = num_traits::pow(c.clone(), k.unsigned_abs() as usize);
                let c = if k < 0 { c.recip() } else { c };
                Ok(Self::from_poly(SparsePoly::monomial(ctx, m.pow(k as i32), c)))
            }
            [_, _] if k >= 0 => Ok(Self::from_poly(p.pow(k as u32))),
            [_, _] => {
                let (unit, m, f) = BinomialFactor::normalize(p)?;
                let e = (-k) as usize;
                let unit = num_traits::pow(unit, e).recip();
                let num = SparsePoly::monomial(ctx, m.pow(k as i32), unit);
                let mut den = BTreeMap::new();
                den.insert(f, e as u32);
                Ok(FactoredFraction { num, den })
            }
            _ => Err(ArithError::NotBinomial(p.render())),
        }
    }

    pub fn ctx(&self) -> VarContext {
        self.num.ctx()
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<BinomialFactor, u32> {
        &self.den
    }

    pub fn denominator_degree(&self) -> u32 {
        self.den.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn checked(&self, other: &Self) -> Result<(), ArithError> {
        self.num.checked(&other.num)
    }

    /// Context-checked binary operation.
    pub fn combine(&self, op: FracOp, other: &Self) -> Result<Self, ArithError> {
        self.checked(other)?;
        Ok(match op {
            FracOp::Add => self.add_sub(other, false),
            FracOp::Sub => self.add_sub(other, true),
            FracOp::Mul => self.mul_unchecked(other).cancelled(),
        })
    }

    fn add_sub(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let mut den = self.den.clone();
        for (f, k) in &other.den {
            let e = den.entry(*f).or_insert(0);
            *e = (*e).max(*k);
        }
        let ctx = self.ctx();
        let lift = |part: &Self| {
            let mut n = part.num.clone();
            for (f, k) in &den {
                let have = part.den.get(f).copied().unwrap_or(0);
                for _ in have..*k {
                    n = &n * &f.to_poly(ctx);
                }
            }
            n
        };
        let a = lift(self);
        let b = lift(other);
        let num = if negate { &a - &b } else { &a + &b };
        FactoredFraction { num, den }.cancelled()
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ctx());
        }
        let mut den = self.den.clone();
        for (f, k) in &other.den {
            *den.entry(*f).or_insert(0) += k;
        }
        FactoredFraction { num: &self.num * &other.num, den }
    }

    pub fn neg(&self) -> Self {
        FactoredFraction { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx());
        }
        FactoredFraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx());
        }
        FactoredFraction { num: self.num.mul_monomial(m, c), den: self.den.clone() }
    }

    /// Removes every denominator factor that divides the numerator.
    pub fn cancelled(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let ctx = self.ctx();
        let factors: Vec<BinomialFactor> = self.den.keys().copied().collect();
        for f in factors {
            let d = f.to_poly(ctx);
            let k = self.den.get_mut(&f).unwrap();
            while *k > 0 {
                match self.num.divide_exact(&d) {
                    Ok(q) => {
                        self.num = q;
                        *k -= 1;
                    }
                    Err(_) => break,
                }
            }
            if *k == 0 {
                self.den.remove(&f);
            }
        }
        self
    }

    pub(crate) fn map_parts<F, G>(&self, num: F, factor: G) -> Self
    where
        F: FnOnce(&SparsePoly) -> SparsePoly,
        G: Fn(&BinomialFactor) -> BinomialFactor,
    {
        let mut den = BTreeMap::new();
        for (f, k) in &self.den {
            *den.entry(factor(f)).or_insert(0) += k;
        }
        FactoredFraction { num: num(&self.num), den }
    }

    /// Divides the numerator by every denominator factor; fails with the
    /// first factor that does not divide.
    pub fn as_polynomial(&self) -> Result<SparsePoly, ArithError> {
        let ctx = self.ctx();
        let mut num = self.num.clone();
        for (f, k) in &self.den {
            let d = f.to_poly(ctx);
            for _ in 0..*k {
                num = num.divide_exact(&d).map_err(|_| ArithError::NotPolynomial { factor: f.render(ctx) })?;
            }
        }
        Ok(num)
    }

    /// Exact value at a point given as one value per context variable.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, ArithError> {
        let ctx = self.ctx();
        let values: Vec<_> = ctx.vars().zip(point.iter().cloned()).collect();
        let n = self.num.evaluate(&values)?;
        let mut d = Rational::one();
        for (f, k) in &self.den {
            let x = f.eval(point)?;
            d *= num_traits::pow(x, *k as usize);
        }
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(n / d)
    }

    pub fn render(&self) -> String {
        if self.den.is_empty() {
            return self.num.render();
        }
        let ctx = self.ctx();
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(f, k)| if *k == 1 { f.render(ctx) } else { format!("{}^{}", f.render(ctx), k) })
            .collect();
        format!("({}) / {}", self.num.render(), den.join("*"))
    }
}

impl std::ops::Add for &FactoredFraction {
    type Output = FactoredFraction;
    fn add(self, rhs: &FactoredFraction) -> FactoredFraction {
        self.combine(FracOp::Add, rhs).expect("variable context mismatch")
    }
}

impl std::ops::Sub for &FactoredFraction {
    type Output = FactoredFraction;
    fn sub(self, rhs: &FactoredFraction) -> FactoredFraction {
        self.combine(FracOp::Sub, rhs).expect("variable context mismatch")
    }
}

impl std::ops::Mul for &FactoredFraction {
    type Output = FactoredFraction;
    fn mul(self, rhs: &FactoredFraction) -> FactoredFraction {
        self.combine(FracOp::Mul, rhs).expect("variable context mismatch")
    }
}

impl fmt::Debug for FactoredFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}", self.ctx(), self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(s: &str) -> SparsePoly {
        SparsePoly::parse(VarContext::Q, s).unwrap()
    }
    fn qt(s: &str) -> SparsePoly {
        SparsePoly::parse(VarContext::QT, s).unwrap()
    }
    fn frac(num: SparsePoly, dens: &[SparsePoly]) -> FactoredFraction {
        let d: Vec<_> = dens.iter().map(|d| (d.clone(), 1)).collect();
        FactoredFraction::new(num, &d).unwrap()
    }

    #[test]
    fn add_examples() {
        let a = frac(qp("1"), &[qp("1 - q")]);
        let b = frac(qp("-1"), &[qp("1 - q")]);
        let s = &a + &b;
        assert!(s.is_zero());
        assert!(s.denominator().is_empty());

        let b = frac(qp("q"), &[qp("1 - q")]);
        let s = &a + &b;
        assert_eq!(s.numerator(), &qp("1 + q"));
        assert_eq!(s.denominator().len(), 1);
    }

    #[test]
    fn mul_cancels() {
        let a = frac(qt("1 - q^2"), &[qt("1 - q*t")]);
        let b = frac(qt("1"), &[qt("1 - q")]);
        let p = &a * &b;
        assert_eq!(p.numerator(), &qt("1 + q"));
        assert_eq!(p, frac(qt("1 + q"), &[qt("1 - q*t")]));
    }

    #[test]
    fn as_polynomial_examples() {
        assert_eq!(frac(qp("1 - q^2"), &[]).as_polynomial().unwrap(), qp("1 - q^2"));
        let f =
            FactoredFraction { num: qp("1 - q^2"), den: [(BinomialFactor::one_minus(Monomial::new(&[1])), 1)].into() };
        assert_eq!(f.as_polynomial().unwrap(), qp("1 + q"));
        let f = frac(&qt("q*t^2 - 1") * &qt("q - 1"), &[qt("1 - q*t^2"), qt("1 - q")]);
        assert_eq!(f.as_polynomial().unwrap(), qt("1"));
        let f = frac(qp("1 + q"), &[qp("1 - q")]);
        match f.as_polynomial() {
            Err(ArithError::NotPolynomial { factor }) => assert_eq!(factor, "(1 - q)"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn negative_powers() {
        let f = FactoredFraction::power_of(&qp("q - 1"), -2).unwrap();
        let g = FactoredFraction::power_of(&qp("q - 1"), 2).unwrap();
        assert!((&f * &g).numerator().is_one());
        let m = FactoredFraction::power_of(&qp("2*q"), -1).unwrap();
        assert_eq!(m.numerator(), &qp("1/2*q^-1"));
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(f.evaluate(&[Rational::from_integer(3.into())]).unwrap(), half.clone() * half);
    }

    #[test]
    fn context_error() {
        let a = FactoredFraction::one(VarContext::Q);
        let b = FactoredFraction::one(VarContext::QT);
        assert!(matches!(a.combine(FracOp::Add, &b), Err(ArithError::Context { .. })));
    }
}
