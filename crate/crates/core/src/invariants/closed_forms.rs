//! Printed closed forms for small ranks, transcribed term by term.

use std::fmt;

use crate::arith::{FactoredFraction, Rational, SparsePoly, VarContext};
use crate::error::{Error, Result};

use super::moebius;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `E_2(q)`.
    E2,
    /// `H_2(q, t)`.
    H2,
    /// `H_3(q, t)`.
    H3,
    /// Pure-part Poincaré polynomial `PP_3(t)`.
    PP3,
    /// Conjectured y-genus `H_n(1, -1, y)` of rank `n`.
    YGenus(usize),
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::E2 => f.write_str("E2"),
            ClosedForm::H2 => f.write_str("H2"),
            ClosedForm::H3 => f.write_str("H3"),
            ClosedForm::PP3 => f.write_str("PP3"),
            ClosedForm::YGenus(n) => write!(f, "ygenus({n})"),
        }
    }
}

/// One summand `c * mono * Π factor^k`; negative `k` requires a binomial.
struct Term<'a> {
    coeff: (i64, i64),
    mono: String,
    factors: Vec<(&'a str, i64)>,
}

fn term<'a>(coeff: (i64, i64), mono: String, factors: &[(&'a str, i64)]) -> Term<'a> {
    Term { coeff, mono, factors: factors.to_vec() }
}

fn build(ctx: VarContext, terms: Vec<Term<'_>>) -> FactoredFraction {
    let mut total = FactoredFraction::zero(ctx);
    for t in terms {
        let c = Rational::new(t.coeff.0.into(), t.coeff.1.into());
        let mono = SparsePoly::parse(ctx, &t.mono).expect("closed-form literal");
        let mut f = FactoredFraction::from_poly(mono.scale(&c));
        for (s, k) in t.factors {
            let p = SparsePoly::parse(ctx, s).expect("closed-form literal");
            let factor = if k >= 0 {
                FactoredFraction::from_poly(p.pow(k as u32))
            } else {
                FactoredFraction::power_of(&p, k).expect("closed-form denominators are binomials")
            };
            f = &f * &factor;
        }
        total = &total + &f;
    }
    total
}

/// The closed form as an exact fraction.
pub fn closed_form(which: ClosedForm, g: u32) -> Result<FactoredFraction> {
    let min = if matches!(which, ClosedForm::YGenus(_)) { 2 } else { 1 };
    if g < min {
        return Err(Error::UnsupportedGenus { which: which.to_string(), g, min });
    }
    let g = g as i64;
    let one = (1, 1);
    let half = (-1, 2);
    Ok(match which {
        ClosedForm::E2 => {
            let e = 2 * g - 2;
            let w = format!("q^{}", 2 * g - 2);
            build(
                VarContext::Q,
                vec![
                    term(one, "1".into(), &[("q^2 - 1", e)]),
                    term(one, w.clone(), &[("q^2 - 1", e)]),
                    term(half, w.clone(), &[("q - 1", e)]),
                    term(half, w, &[("q + 1", e)]),
                ],
            )
        }
        ClosedForm::H2 => {
            let w = format!("q^{}*t^{}", 2 * g - 2, 4 * g - 4);
            let e = 2 * g;
            build(
                VarContext::QT,
                vec![
                    term(one, "1".into(), &[("q^2*t^3 + 1", e), ("q^2*t^2 - 1", -1), ("q^2*t^4 - 1", -1)]),
                    term(one, w.clone(), &[("q^2*t + 1", e), ("q^2 - 1", -1), ("q^2*t^2 - 1", -1)]),
                    term(half, w.clone(), &[("q*t + 1", e), ("q*t^2 - 1", -1), ("q - 1", -1)]),
                    term(half, w, &[("q*t - 1", e), ("q + 1", -1), ("q*t^2 + 1", -1)]),
                ],
            )
        }
        ClosedForm::H3 => {
            let w6 = format!("q^{}*t^{}", 6 * g - 6, 12 * g - 12);
            let w4 = format!("q^{}*t^{}", 4 * g - 4, 8 * g - 8);
            let e = 2 * g;
            build(
                VarContext::QT,
                vec![
                    term(
                        one,
                        "1".into(),
                        &[
                            ("q^3*t^5 + 1", e),
                            ("q^2*t^3 + 1", e),
                            ("q^3*t^6 - 1", -1),
                            ("q^3*t^4 - 1", -1),
                            ("q^2*t^4 - 1", -1),
                            ("q^2*t^2 - 1", -1),
                        ],
                    ),
                    term(
                        one,
                        w6.clone(),
                        &[
                            ("q^3*t + 1", e),
                            ("q^2*t + 1", e),
                            ("q^3*t^2 - 1", -1),
                            ("q^3 - 1", -1),
                            ("q^2*t^2 - 1", -1),
                            ("q^2 - 1", -1),
                        ],
                    ),
                    term(
                        one,
                        w4.clone(),
                        &[
                            ("q^3*t^3 + 1", e),
                            ("q*t + 1", e),
                            ("q^3*t^4 - 1", -1),
                            ("q^3*t^2 - 1", -1),
                            ("q*t^2 - 1", -1),
                            ("q - 1", -1),
                        ],
                    ),
                    term((1, 3), w6.clone(), &[("q*t + 1", 2 * e), ("q*t^2 - 1", -2), ("q - 1", -2)]),
                    // 1/((q²t⁴+qt²+1)(q²+q+1)) = (qt²-1)(q-1)/((q³t⁶-1)(q³-1))
                    term(
                        (-1, 3),
                        w6.clone(),
                        &[
                            ("q^2*t^2 - q*t + 1", e),
                            ("q*t^2 - 1", 1),
                            ("q - 1", 1),
                            ("q^3*t^6 - 1", -1),
                            ("q^3 - 1", -1),
                        ],
                    ),
                    term(
                        (-1, 1),
                        w4,
                        &[
                            ("q^2*t^3 + 1", e),
                            ("q*t + 1", e),
                            ("q^2*t^4 - 1", -1),
                            ("q^2*t^2 - 1", -1),
                            ("q*t^2 - 1", -1),
                            ("q - 1", -1),
                        ],
                    ),
                    term(
                        (-1, 1),
                        w6,
                        &[
                            ("q^2*t + 1", e),
                            ("q*t + 1", e),
                            ("q^2*t^2 - 1", -1),
                            ("q^2 - 1", -1),
                            ("q*t^2 - 1", -1),
                            ("q - 1", -1),
                        ],
                    ),
                ],
            )
        }
        ClosedForm::PP3 => {
            let w12 = format!("t^{}", 12 * g - 12);
            let w8 = format!("t^{}", 8 * g - 8);
            build(
                VarContext::T,
                vec![
                    term(one, "1".into(), &[("t^6 - 1", -1), ("t^4 - 1", -1)]),
                    term(one, w12.clone(), &[]),
                    term((-1, 1), w8.clone(), &[("t^2 - 1", -1)]),
                    term((1, 3), w12.clone(), &[("t^2 - 1", -2)]),
                    // 1/(t⁴+t²+1) = (t²-1)/(t⁶-1)
                    term((-1, 3), w12.clone(), &[("t^2 - 1", 1), ("t^6 - 1", -1)]),
                    term((-1, 1), w8, &[("t^4 - 1", -1), ("t^2 - 1", -1)]),
                    term(one, w12, &[("t^2 - 1", -1)]),
                ],
            )
        }
        ClosedForm::YGenus(n) => FactoredFraction::from_poly(ygenus_polynomial(n, g as u32)),
    })
}

/// `(1 - y + ... + (-y)^(n-1))^(g-1) Σ_(m|n) μ(m)/m ((-y)^(n(n-n/m)) m Π_(i<n/m) (1-(-y)^(mi))²)^(g-1)`
fn ygenus_polynomial(n: usize, g: u32) -> SparsePoly {
    let ctx = VarContext::Y;
    let neg_y_pow = |k: usize| {
        let c = if k % 2 == 0 { 1 } else { -1 };
        SparsePoly::from_int_terms(ctx, &[(&[k as i32], c)])
    };
    let mut geometric = SparsePoly::zero(ctx);
    for k in 0..n {
        geometric = &geometric + &neg_y_pow(k);
    }
    let mut sum = SparsePoly::zero(ctx);
    for m in (1..=n).filter(|m| n % m == 0) {
        let mu = moebius(m as u64);
        if mu == 0 {
            continue;
        }
        let d = n / m;
        let mut inner = neg_y_pow(n * (n - d)).scale(&Rational::from_integer((m as i64).into()));
        for i in 1..d {
            let f = &SparsePoly::one(ctx) - &neg_y_pow(m * i);
            inner = &inner * &f.pow(2);
        }
        let c = Rational::new(mu.into(), (m as i64).into());
        sum = &sum + &inner.pow(g - 1).scale(&c);
    }
    &geometric.pow(g - 1) * &sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Var;

    #[test]
    fn e2_genus_three() {
        let p = closed_form(ClosedForm::E2, 3).unwrap().as_polynomial().unwrap();
        let want = SparsePoly::parse(VarContext::Q, "q^12 - 4*q^10 + 6*q^8 - 14*q^6 + 6*q^4 - 4*q^2 + 1");
        assert_eq!(p, want.unwrap());
    }

    #[test]
    fn genus_guards() {
        assert!(matches!(closed_form(ClosedForm::H2, 0), Err(Error::UnsupportedGenus { .. })));
        assert!(matches!(closed_form(ClosedForm::YGenus(2), 1), Err(Error::UnsupportedGenus { .. })));
        assert!(closed_form(ClosedForm::E2, 1).unwrap().as_polynomial().unwrap().is_one());
    }

    #[test]
    fn ygenus_n2_at_minus_one() {
        for g in 2..6u32 {
            let p = closed_form(ClosedForm::YGenus(2), g).unwrap().as_polynomial().unwrap();
            let v = p.evaluate(&[(Var::Y, Rational::from_integer((-1).into()))]).unwrap();
            let want = -num_traits::pow(Rational::from_integer(2.into()), 2 * g as usize - 3);
            assert_eq!(v, want);
        }
    }
}
