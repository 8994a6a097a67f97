//! Variables, variable contexts and Laurent monomials.

use std::cmp::Ordering;
use std::fmt;

use super::ArithError;

/// A formal variable. The declaration order is the global variable order
/// used by every context and by the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T,
    X,
    Y,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::T, Var::X, Var::Y];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::X => "x",
            Var::Y => "y",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Maximum number of variables a single context may carry.
pub const MAX_VARS: usize = 3;

/// An ordered set of variables (a subset of `q, t, x, y` in that order).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarContext(u8);

impl VarContext {
    pub const CONST: VarContext = VarContext(0);
    pub const Q: VarContext = VarContext(0b0001);
    pub const T: VarContext = VarContext(0b0010);
    pub const Y: VarContext = VarContext(0b1000);
    pub const QT: VarContext = VarContext(0b0011);
    pub const QXY: VarContext = VarContext(0b1101);

    pub fn new(vars: &[Var]) -> Result<Self, ArithError> {
        let mask = vars.iter().fold(0u8, |m, v| m | v.bit());
        if mask.count_ones() as usize > MAX_VARS {
            return Err(ArithError::TooManyVariables(mask.count_ones() as usize));
        }
        Ok(VarContext(mask))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & v.bit() != 0
    }

    pub fn vars(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }

    /// Slot of `v` in exponent vectors of this context.
    pub fn index_of(self, v: Var) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        Some((self.0 & (v.bit() - 1)).count_ones() as usize)
    }

    pub fn names(self) -> Vec<&'static str> {
        self.vars().map(Var::name).collect()
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(","))
    }
}

/// A Laurent monomial: one signed exponent per context variable, unused
/// slots are zero.
///
/// Ordered graded-lexicographically: total degree first, then the
/// exponent vector lexicographically in variable order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i32; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn new(exps: &[i32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    /// Monomial `v^k` in context `ctx`.
    pub fn var_power(ctx: VarContext, v: Var, k: i32) -> Option<Self> {
        let i = ctx.index_of(v)?;
        let mut e = [0; MAX_VARS];
        e[i] = k;
        Some(Monomial(e))
    }

    pub fn exps(&self) -> &[i32; MAX_VARS] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; MAX_VARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a -= b;
        }
        Monomial(e)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.map(|e| e * k))
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = (*a).min(b);
        }
        Monomial(e)
    }

    /// True when every exponent of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a >= b)
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&e| e < 0)
    }

    pub fn fmt_in(&self, ctx: VarContext) -> String {
        let mut parts = Vec::new();
        for (i, v) in ctx.vars().enumerate() {
            match self.0[i] {
                0 => {}
                1 => parts.push(v.name().to_string()),
                e => parts.push(format!("{}^{}", v.name(), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_slots() {
        assert_eq!(VarContext::QXY.index_of(Var::Q), Some(0));
        assert_eq!(VarContext::QXY.index_of(Var::X), Some(1));
        assert_eq!(VarContext::QXY.index_of(Var::Y), Some(2));
        assert_eq!(VarContext::QXY.index_of(Var::T), None);
        assert_eq!(VarContext::T.index_of(Var::T), Some(0));
        assert_eq!(VarContext::QT.names(), vec!["q", "t"]);
        assert!(VarContext::new(&Var::ALL).is_err());
    }

    #[test]
    fn graded_lex() {
        let one = Monomial::new(&[0, 0]);
        let t = Monomial::new(&[0, 1]);
        let q = Monomial::new(&[1, 0]);
        let t2 = Monomial::new(&[0, 2]);
        let qinv = Monomial::new(&[-1, 0]);
        let mut v = vec![t2, q, one, qinv, t];
        v.sort();
        assert_eq!(v, vec![qinv, one, t, q, t2]);
    }
}
