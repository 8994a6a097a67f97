use charvar::arith::{
    adams_poly, adams_substitute, FactoredFraction, Flavor, Monomial, Rational, SparsePoly, VarContext,
};
use charvar::series::{extract_v, series_log, v_from_log, TruncatedSeries};
use proptest::prelude::*;

const DENOMINATORS: [&str; 5] = ["1 - q", "1 - q*t^2", "1 + q*t", "1 - q^2*t^4", "1 + q"];

fn arb_poly(max_terms: usize) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(((0i32..4, 0i32..5), -6i64..=6), 0..=max_terms).prop_map(|terms| {
        SparsePoly::from_terms(
            VarContext::QT,
            terms.into_iter().map(|((a, b), c)| (Monomial::new(&[a, b]), Rational::from_integer(c.into()))),
        )
    })
}

fn arb_nonzero_poly() -> impl Strategy<Value = SparsePoly> {
    arb_poly(3).prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_fraction() -> impl Strategy<Value = FactoredFraction> {
    (arb_poly(3), prop::collection::vec((0..DENOMINATORS.len(), 1u32..=2), 0..=2)).prop_map(|(num, dens)| {
        let dens: Vec<(SparsePoly, u32)> =
            dens.into_iter().map(|(i, k)| (SparsePoly::parse(VarContext::QT, DENOMINATORS[i]).unwrap(), k)).collect();
        FactoredFraction::new(num, &dens).unwrap()
    })
}

fn same(a: &FactoredFraction, b: &FactoredFraction) -> bool {
    (a - b).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fraction_addition_commutes(a in arb_fraction(), b in arb_fraction()) {
        prop_assert!(same(&(&a + &b), &(&b + &a)));
    }

    #[test]
    fn fraction_addition_associates(a in arb_fraction(), b in arb_fraction(), c in arb_fraction()) {
        prop_assert!(same(&(&(&a + &b) + &c), &(&a + &(&b + &c))));
    }

    #[test]
    fn fraction_multiplication_distributes(a in arb_fraction(), b in arb_fraction(), c in arb_fraction()) {
        prop_assert!(same(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
    }

    #[test]
    fn fraction_results_are_reduced(a in arb_fraction(), b in arb_fraction()) {
        // no denominator factor divides the numerator; binomials such as
        // 1 - q^2*t^4 stay unfactored, so equal values may still differ in form
        for f in [&a + &b, &a * &b, &(&a + &b) - &b] {
            for factor in f.denominator().keys() {
                prop_assert!(f.numerator().divide_exact(&factor.to_poly(VarContext::QT)).is_err(), "{:?}", f);
            }
        }
        prop_assert!(same(&(&(&a + &b) - &b), &a));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(4), b in arb_nonzero_poly()) {
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn embedded_polynomials_come_back(p in arb_poly(5)) {
        prop_assert_eq!(FactoredFraction::from_poly(p.clone()).as_polynomial().unwrap(), p);
    }

    #[test]
    fn adams_is_a_ring_morphism(a in arb_poly(3), b in arb_poly(3), r in 1u32..4) {
        let psi = |p: &SparsePoly| adams_poly(p, r, Flavor::Qt).unwrap();
        prop_assert_eq!(psi(&(&a * &b)), &psi(&a) * &psi(&b));
        prop_assert_eq!(psi(&(&a + &b)), &psi(&a) + &psi(&b));
    }

    #[test]
    fn adams_operations_compose(p in arb_poly(4), r in 1u32..4, s in 1u32..4) {
        let twice = adams_poly(&adams_poly(&p, s, Flavor::Qt).unwrap(), r, Flavor::Qt).unwrap();
        prop_assert_eq!(twice, adams_poly(&p, r * s, Flavor::Qt).unwrap());
    }

    #[test]
    fn adams_on_fractions_is_multiplicative(a in arb_fraction(), b in arb_fraction(), r in 1u32..4) {
        let psi = |f: &FactoredFraction| adams_substitute(f, r, Flavor::Qt).unwrap();
        prop_assert!(same(&psi(&(&a * &b)), &(&psi(&a) * &psi(&b))));
    }

    #[test]
    fn exp_then_log_is_identity(coeffs in prop::collection::vec(arb_fraction(), 1..=4)) {
        let mut u = vec![FactoredFraction::zero(VarContext::QT)];
        u.extend(coeffs);
        let s = TruncatedSeries::new(Flavor::Qt, u.clone());
        let back = series_log(&s.exp().unwrap()).unwrap();
        for (m, c) in u.iter().enumerate() {
            prop_assert!(same(back.coeff(m), c), "coefficient {}", m);
        }
    }

    #[test]
    fn plethystic_round_trip(vs in prop::collection::vec(arb_fraction(), 1..=4)) {
        // U_m = Σ_(r | m) ψ_r[V_(m/r)] / r, then exp, log and Möbius back
        let order = vs.len();
        let mut u = vec![FactoredFraction::zero(VarContext::QT); order + 1];
        for (i, v) in vs.iter().enumerate() {
            let n = i + 1;
            for r in (1..=order / n).map(|r| r as u32) {
                let term = adams_substitute(v, r, Flavor::Qt).unwrap();
                let scaled = term.scale(&Rational::new(1.into(), (r as i64).into()));
                let m = n * r as usize;
                u[m] = &u[m] + &scaled;
            }
        }
        let z = TruncatedSeries::new(Flavor::Qt, u).exp().unwrap();
        let back = v_from_log(&series_log(&z).unwrap()).unwrap();
        prop_assert_eq!(back.len(), order);
        for (got, want) in back.iter().zip(&vs) {
            prop_assert!(same(got, want));
        }
    }
}

#[test]
fn extraction_is_stable_under_longer_truncation() {
    for flavor in [Flavor::E, Flavor::Qt, Flavor::Xy, Flavor::Pure] {
        for g in 0..=2 {
            let short = extract_v(flavor, g, 2).unwrap();
            let long = extract_v(flavor, g, 4).unwrap();
            assert_eq!(short[..], long[..2], "{flavor:?} g={g}");
        }
    }
}
