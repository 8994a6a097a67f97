//! Sparse multivariate Laurent polynomials with exact rational coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var, VarContext, MAX_VARS};
use super::{ArithError, Rational};

/// A sparse Laurent polynomial over the rationals.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients and at most one term per monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    ctx: VarContext,
    terms: Vec<(Monomial, Rational)>,
}

/// Right-hand side of a specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    Value(Rational),
    Var(Var),
}

impl Subst {
    pub fn int(v: i64) -> Self {
        Subst::Value(Rational::from_integer(v.into()))
    }
}

/// Arithmetic operation selector for [`poly_arith`].
#[derive(Clone, Debug)]
pub enum PolyOp<'a> {
    Add(&'a SparsePoly),
    Sub(&'a SparsePoly),
    Mul(&'a SparsePoly),
    Pow(u32),
}

/// Context-checked polynomial arithmetic.
pub fn poly_arith(a: &SparsePoly, op: PolyOp<'_>) -> Result<SparsePoly, ArithError> {
    match op {
        PolyOp::Add(b) => a.checked(b).map(|_| a + b),
        PolyOp::Sub(b) => a.checked(b).map(|_| a - b),
        PolyOp::Mul(b) => a.checked(b).map(|_| a * b),
        PolyOp::Pow(k) => Ok(a.pow(k)),
    }
}

impl SparsePoly {
    pub fn zero(ctx: VarContext) -> Self {
        SparsePoly { ctx, terms: Vec::new() }
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: VarContext, c: Rational) -> Self {
        Self::monomial(ctx, Monomial::ONE, c)
    }

    pub fn int(ctx: VarContext, c: i64) -> Self {
        Self::constant(ctx, Rational::from_integer(c.into()))
    }

    pub fn monomial(ctx: VarContext, m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(ctx);
        }
        SparsePoly { ctx, terms: vec![(m, c)] }
    }

    /// The single variable `v` in context `ctx`.
    pub fn var(ctx: VarContext, v: Var) -> Self {
        let m = Monomial::var_power(ctx, v, 1).expect("variable not in context");
        Self::monomial(ctx, m, Rational::one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I>(ctx: VarContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ctx, acc)
    }

    /// Integer-coefficient convenience constructor: `(exponents, coeff)`.
    pub fn from_int_terms(ctx: VarContext, terms: &[(&[i32], i64)]) -> Self {
        Self::from_terms(ctx, terms.iter().map(|(e, c)| (Monomial::new(e), Rational::from_integer((*c).into()))))
    }

    fn from_map(ctx: VarContext, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        SparsePoly { ctx, terms }
    }

    fn from_sorted(ctx: VarContext, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        SparsePoly { ctx, terms }
    }

    pub fn ctx(&self) -> VarContext {
        self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Largest term in graded-lex order.
    pub fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    /// Smallest term in graded-lex order.
    pub fn trailing(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    /// The value when the polynomial is a constant.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.has_negative())
    }

    /// Largest exponent of `v`, if the polynomial is nonzero.
    pub fn degree_in(&self, v: Var) -> Option<i32> {
        let i = self.ctx.index_of(v)?;
        self.terms.iter().map(|(m, _)| m.0[i]).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<i32> {
        let i = self.ctx.index_of(v)?;
        self.terms.iter().map(|(m, _)| m.0[i]).min()
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(first, |acc, m| acc.gcd(&m)),
        }
    }

    pub(crate) fn checked(&self, other: &SparsePoly) -> Result<(), ArithError> {
        if self.ctx != other.ctx {
            return Err(ArithError::Context { left: self.ctx.names().join(","), right: other.ctx.names().join(",") });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        let terms = self.terms.iter().map(|(m, x)| (*m, x * c)).collect();
        Self::from_sorted(self.ctx, terms)
    }

    /// Multiplies by `c * m`; graded-lex order is multiplicative so the
    /// term order is preserved.
    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        let terms = self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect();
        Self::from_sorted(self.ctx, terms)
    }

    pub fn pow(&self, mut k: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = Self::one(self.ctx);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies a monomial map that is strictly increasing for graded-lex
    /// order (such as scaling all exponents by a positive integer),
    /// together with a per-term sign.
    pub(crate) fn map_monotone<F>(&self, f: F) -> SparsePoly
    where
        F: Fn(&Monomial) -> (Monomial, bool),
    {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (m2, negate) = f(m);
                (m2, if negate { -c } else { c.clone() })
            })
            .collect();
        Self::from_sorted(self.ctx, terms)
    }

    /// Exact quotient `self / div`, if one exists in the Laurent ring.
    pub fn divide_exact(&self, div: &SparsePoly) -> Result<SparsePoly, ArithError> {
        self.checked(div)?;
        if div.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.ctx));
        }
        let found = match div.terms.as_slice() {
            [(m, c)] => Some(self.mul_monomial(&m.inverse(), &c.recip())),
            [lo, hi] => self.divide_by_binomial(lo, hi),
            _ => self.long_divide(div),
        };
        found.ok_or(ArithError::NotDivisible)
    }

    /// Division by `c0*x^u + c1*x^(u+v)`.
    ///
    /// Every coset of the subgroup generated by `v` is an independent
    /// one-variable problem in `X = x^v`, solved by the recurrence
    /// `c0*q_k + c1*q_(k-1) = p_k`. The quotient exists iff the recurrence
    /// terminates with `q_kmax = 0` on every coset.
    fn divide_by_binomial(&self, lo: &(Monomial, Rational), hi: &(Monomial, Rational)) -> Option<SparsePoly> {
        let v = hi.0.div(&lo.0);
        let axis = v.0.iter().position(|&e| e != 0)?;
        let step = v.0[axis];
        let mut lines: HashMap<Monomial, Vec<(i32, &Rational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.div(&lo.0);
            let k = e.0[axis].div_euclid(step);
            let base = e.div(&v.pow(k));
            lines.entry(base).or_default().push((k, c));
        }
        let (c0, c1) = (&lo.1, &hi.1);
        let c0_inv = c0.recip();
        let mut out = Vec::new();
        for (base, mut pts) in lines {
            pts.sort_unstable_by_key(|p| p.0);
            let (kmin, kmax) = (pts[0].0, pts[pts.len() - 1].0);
            let mut prev = Rational::zero();
            let mut it = pts.into_iter().peekable();
            for k in kmin..=kmax {
                let p = match it.peek() {
                    Some(&(kk, c)) if kk == k => {
                        it.next();
                        c.clone()
                    }
                    _ => Rational::zero(),
                };
                let q = (p - c1 * &prev) * &c0_inv;
                if k == kmax {
                    if !q.is_zero() {
                        return None;
                    }
                } else if !q.is_zero() {
                    out.push((base.mul(&v.pow(k)), q.clone()));
                }
                prev = q;
            }
        }
        out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Some(Self::from_sorted(self.ctx, out))
    }

    /// Graded-lex long division after stripping monomial content; exact
    /// divisibility in the Laurent ring is equivalent to divisibility of
    /// the stripped polynomials.
    fn long_divide(&self, div: &SparsePoly) -> Option<SparsePoly> {
        let shift_n = self.monomial_content();
        let shift_d = div.monomial_content();
        let d: Vec<(Monomial, Rational)> = div.terms.iter().map(|(m, c)| (m.div(&shift_d), c.clone())).collect();
        let (d_lead, d_lead_c) = d.last().cloned()?;
        let d_lead_inv = d_lead_c.recip();
        let mut rem: BTreeMap<Monomial, Rational> =
            self.terms.iter().map(|(m, c)| (m.div(&shift_n), c.clone())).collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !m.dominates(&d_lead) {
                return None;
            }
            let qm = m.div(&d_lead);
            let qc = c * &d_lead_inv;
            for (dm, dc) in &d[..d.len() - 1] {
                let key = dm.mul(&qm);
                let val = rem.entry(key).or_insert_with(Rational::zero);
                *val -= &qc * dc;
                if val.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        let shift = shift_n.div(&shift_d);
        quot.reverse();
        let q = Self::from_sorted(self.ctx, quot);
        Some(q.mul_monomial(&shift, &Rational::one()))
    }

    /// Substitutes values or variables for some of the context variables.
    ///
    /// The result lives in the context made of the untouched variables
    /// plus every rename target.
    pub fn specialize(&self, assignment: &[(Var, Subst)]) -> Result<SparsePoly, ArithError> {
        for (v, _) in assignment {
            if !self.ctx.contains(*v) {
                return Err(ArithError::UnknownVariable(v.name()));
            }
        }
        let lookup = |v: Var| assignment.iter().find(|(w, _)| *w == v).map(|(_, s)| s);
        let mut new_vars: Vec<Var> = Vec::new();
        for v in self.ctx.vars() {
            match lookup(v) {
                None => new_vars.push(v),
                Some(Subst::Var(w)) => new_vars.push(*w),
                Some(Subst::Value(_)) => {}
            }
        }
        let new_ctx = VarContext::new(&new_vars)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut e = [0i32; MAX_VARS];
            let mut coeff = c.clone();
            for (i, v) in self.ctx.vars().enumerate() {
                let k = m.0[i];
                match lookup(v) {
                    None => e[new_ctx.index_of(v).unwrap()] += k,
                    Some(Subst::Var(w)) => e[new_ctx.index_of(*w).unwrap()] += k,
                    Some(Subst::Value(val)) => coeff *= rational_pow(val, k)?,
                }
            }
            *acc.entry(Monomial(e)).or_insert_with(Rational::zero) += coeff;
        }
        Ok(Self::from_map(new_ctx, acc))
    }

    /// Evaluates every variable, returning the exact value.
    pub fn evaluate(&self, values: &[(Var, Rational)]) -> Result<Rational, ArithError> {
        let assignment: Vec<_> = values.iter().map(|(v, x)| (*v, Subst::Value(x.clone()))).collect();
        let p = self.specialize(&assignment)?;
        p.constant_value().ok_or(ArithError::NotFullyEvaluated)
    }

    /// Canonical text form, e.g. `1 - 4*q^2 + 6*q^4`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if m.is_one() {
                s.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                s.push_str(&m.fmt_in(self.ctx));
            } else {
                s.push_str(&fmt_rational(&a));
                s.push('*');
                s.push_str(&m.fmt_in(self.ctx));
            }
        }
        s
    }

    /// Parses the canonical text form (and simple variations of it).
    pub fn parse(ctx: VarContext, text: &str) -> Result<SparsePoly, ArithError> {
        let bad = || ArithError::Parse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut pieces = Vec::new();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = Rational::one();
            let mut e = [0i32; MAX_VARS];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(bad());
                }
                if factor.as_bytes()[0].is_ascii_digit() {
                    coeff *= parse_rational(factor).ok_or_else(bad)?;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, x)) => (n, x.parse::<i32>().map_err(|_| bad())?),
                        None => (factor, 1),
                    };
                    let v = Var::from_name(name).ok_or_else(bad)?;
                    let i = ctx.index_of(v).ok_or(ArithError::UnknownVariable(v.name()))?;
                    e[i] += exp;
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((Monomial(e), coeff));
        }
        Ok(Self::from_terms(ctx, terms))
    }
}

pub(crate) fn rational_pow(val: &Rational, k: i32) -> Result<Rational, ArithError> {
    if k == 0 {
        return Ok(Rational::one());
    }
    if val.is_zero() {
        return if k < 0 { Err(ArithError::NegativeExponentAtZero) } else { Ok(Rational::zero()) };
    }
    if val.is_one() {
        return Ok(Rational::one());
    }
    if *val == -Rational::one() {
        return Ok(if k % 2 == 0 { Rational::one() } else { -Rational::one() });
    }
    let p = num_traits::pow(val.clone(), k.unsigned_abs() as usize);
    Ok(if k < 0 { p.recip() } else { p })
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Greatest common divisor of the integer coefficients; `None` when some
/// coefficient is not an integer.
pub fn integer_content(p: &SparsePoly) -> Option<BigInt> {
    let mut g = BigInt::zero();
    for (_, c) in p.terms() {
        if !c.is_integer() {
            return None;
        }
        g = g.gcd(c.numer());
    }
    Some(g)
}

fn merge(a: &SparsePoly, b: &SparsePoly, negate_b: bool) -> SparsePoly {
    assert_eq!(a.ctx, b.ctx, "variable context mismatch");
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let (x, y) = (&a.terms, &b.terms);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = if negate_b { -&y[j].1 } else { y[j].1.clone() };
                out.push((y[j].0, c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    for (m, c) in &y[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    SparsePoly::from_sorted(a.ctx, out)
}

impl std::ops::Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        merge(self, rhs, false)
    }
}

impl std::ops::Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        merge(self, rhs, true)
    }
}

impl std::ops::Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        SparsePoly::from_sorted(self.ctx, terms)
    }
}

impl std::ops::Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.ctx, rhs.ctx, "variable context mismatch");
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        match small.terms.len() {
            0 => SparsePoly::zero(self.ctx),
            1 => big.mul_monomial(&small.terms[0].0, &small.terms[0].1),
            2 => {
                let a = big.mul_monomial(&small.terms[0].0, &small.terms[0].1);
                let b = big.mul_monomial(&small.terms[1].0, &small.terms[1].1);
                &a + &b
            }
            _ => {
                let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(big.len() * 2);
                for (m1, c1) in &small.terms {
                    for (m2, c2) in &big.terms {
                        let prod = c1 * c2;
                        match acc.entry(m1.mul(m2)) {
                            std::collections::hash_map::Entry::Occupied(mut o) => {
                                *o.get_mut() += prod;
                            }
                            std::collections::hash_map::Entry::Vacant(v) => {
                                v.insert(prod);
                            }
                        }
                    }
                }
                SparsePoly::from_map(self.ctx, acc)
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl std::ops::$tr for SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: SparsePoly) -> SparsePoly {
                std::ops::$tr::$f(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}", self.ctx, self.render())
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

    #[test]
    fn arith_examples() {
        assert_eq!(&qp("1 - q") + &qp("q"), qp("1"));
        assert_eq!(&qp("1 - q") * &qp("1 + q"), qp("1 - q^2"));
        assert_eq!(qt("1 + q*t").pow(2), qt("1 + 2*q*t + q^2*t^2"));
        assert_eq!(qp("1 - q") - qp("1 - q"), SparsePoly::zero(VarContext::Q));
    }

    #[test]
    fn context_mismatch() {
        let err = poly_arith(&qp("q"), PolyOp::Add(&qt("t"))).unwrap_err();
        assert!(matches!(err, ArithError::Context { .. }));
        assert!(poly_arith(&qp("q"), PolyOp::Pow(3)).is_ok());
    }

    #[test]
    fn render_roundtrip() {
        let p = qp("q^12 - 4*q^10 + 6*q^8 - 14*q^6 + 6*q^4 - 4*q^2 + 1");
        assert_eq!(p.render(), "1 - 4*q^2 + 6*q^4 - 14*q^6 + 6*q^8 - 4*q^10 + q^12");
        assert_eq!(qp(&p.render()), p);
        let r = qt("-1/2*q^-1*t + 3");
        assert_eq!(r.render(), "-1/2*q^-1*t + 3");
        assert_eq!(SparsePoly::zero(VarContext::Q).render(), "0");
        assert_eq!(qp("-q").render(), "-q");
    }

    #[test]
    fn divide_examples() {
        assert_eq!(qp("1 - q^2").divide_exact(&qp("1 - q")).unwrap(), qp("1 + q"));
        assert_eq!(qt("1 - q^3*t^3").divide_exact(&qt("1 - q*t")).unwrap(), qt("1 + q*t + q^2*t^2"));
        assert_eq!(qp("1 + q").divide_exact(&qp("1 - q")).unwrap_err(), ArithError::NotDivisible);
    }

    #[test]
    fn divide_laurent_and_general() {
        let a = qt("q^-2*t + 3 - t^4");
        let b = qt("1 + q + q*t^2");
        let prod = &a * &b;
        assert_eq!(prod.divide_exact(&b).unwrap(), a);
        assert_eq!(prod.divide_exact(&a).unwrap(), b);
        let bin = qt("q^-1 - 2*t^3");
        let prod = &a * &bin;
        assert_eq!(prod.divide_exact(&bin).unwrap(), a);
        assert!((&prod + &qt("q")).divide_exact(&bin).is_err());
        assert!((&prod + &qt("q")).divide_exact(&b).is_err());
    }

    #[test]
    fn specialize_examples() {
        let p = qt("1 + q*t^2");
        assert_eq!(p.specialize(&[(Var::T, Subst::int(-1))]).unwrap(), qp("1 + q"));
        let p = qt("q^2*t^4");
        let got = p.specialize(&[(Var::Q, Subst::int(1))]).unwrap();
        assert_eq!(got, SparsePoly::parse(VarContext::T, "t^4").unwrap());
        let p = SparsePoly::parse(VarContext::QXY, "1 + q*x*y^2").unwrap();
        let got = p.specialize(&[(Var::X, Subst::Var(Var::T)), (Var::Y, Subst::Var(Var::T))]).unwrap();
        assert_eq!(got, qt("1 + q*t^3"));
        let err = qp("q^-1").specialize(&[(Var::Q, Subst::int(0))]).unwrap_err();
        assert_eq!(err, ArithError::NegativeExponentAtZero);
        assert_eq!(
            qp("3 + q^2").evaluate(&[(Var::Q, Rational::from_integer(2.into()))]).unwrap(),
            Rational::from_integer(7.into())
        );
    }
}
