use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::Var;
use crate::invariants::{Engine, Kind};

use super::characters::{character_table, CharacterTable};
use super::classes::{conjugacy_classes, tuple_counts, ConjugacyData};
use super::cyclotomic::{cyclotomic_polynomial, reduce, CyclotomicValue};
use super::group::{build_group, Family, MatrixGroup};
use super::OracleError;

/// Character-side counts at a central element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSums {
    /// `|G|^(2g-1) Σ_χ χ(ξ)/χ(1)^(2g-1)`.
    pub tuple_prediction: BigUint,
    /// `Σ_χ |G|^(2g-2) χ(ξ)/χ(1)^(2g-1)`, which is `tuple_prediction / |G|`.
    pub point_count: BigRational,
}

/// Evaluates the Frobenius count for `ξ`, which must be central.
pub fn frobenius_sums(
    group: &MatrixGroup,
    cd: &ConjugacyData,
    table: &CharacterTable,
    g: u32,
    xi: usize,
) -> Result<FrobeniusSums, OracleError> {
    if g == 0 {
        return Err(OracleError::Invalid("genus must be at least 1".into()));
    }
    let cls = cd.class_of[xi];
    if cd.classes[cls].size() != 1 {
        return Err(OracleError::NotCentral(xi));
    }
    let e = table.exponent;
    let n = BigInt::from(group.order());
    let k2 = 2 * g as usize - 2;
    // χ(ξ) = χ(1) ζ^k; clear denominators χ(1)^(2g-2) with their lcm
    let lcm = table.degrees.iter().fold(BigInt::one(), |acc, &d| acc.lcm(&num_traits::pow(BigInt::from(d), k2)));
    let numer = num_traits::pow(n.clone(), 2 * g as usize - 1) * &lcm;
    let mut full = vec![BigInt::zero(); e as usize];
    for (d, row) in table.degrees.iter().zip(&table.rows) {
        let k = (0..e as u64)
            .find(|&k| CyclotomicValue::from_powers(e, &[(k, *d as i64)]) == row[cls])
            .ok_or_else(|| OracleError::NonIntegralCount(format!("χ(ξ)/χ(1) is not a root of unity for degree {d}")))?;
        full[k as usize] += &numer / num_traits::pow(BigInt::from(*d), k2);
    }
    let reduced = reduce(full, e as usize, &cyclotomic_polynomial(e as usize));
    if reduced[1..].iter().any(|c| !c.is_zero()) {
        return Err(OracleError::NonIntegralCount("character sum is not rational".into()));
    }
    let (count, rem) = reduced[0].div_rem(&lcm);
    if !rem.is_zero() || count.is_negative() {
        return Err(OracleError::NonIntegralCount(format!("{}/{}", reduced[0], lcm)));
    }
    let point_count = BigRational::new(count.clone(), n);
    Ok(FrobeniusSums { tuple_prediction: count.to_biguint().unwrap(), point_count })
}

/// Which normalization of the `GL` point count the tuple counts support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport {
    pub q: u32,
    pub g: u32,
    pub group_order: u64,
    pub pgl_order: u64,
    pub tuple_count: BigUint,
    /// `E_2(q)` from the extracted polynomial.
    pub e2_at_q: BigInt,
    /// `|PGL(2,q)| (q-1)^(2g) E_2(q)`.
    pub predicted: BigInt,
    /// `tuple_count / |G|`, the character formula as printed.
    pub character_formula: BigRational,
    /// `tuple_count / |PGL(2,q)|`, the orbit count of the free action.
    pub orbit_count: BigRational,
    /// `orbit_count / character_formula`.
    pub ratio: BigRational,
}

impl BridgeReport {
    /// `tuple_count = |PGL(2,q)| (q-1)^(2g) E_2(q)`.
    pub fn holds(&self) -> bool {
        BigInt::from(self.tuple_count.clone()) == self.predicted
    }

    /// Reads the ratio between the count the character formula gives and
    /// `(q-1)^(2g) E_2(q)`.
    pub fn normalization(&self) -> String {
        let e_gl = BigRational::from_integer(self.predicted.clone() / BigInt::from(self.pgl_order));
        if self.character_formula == e_gl {
            "character formula equals (q-1)^(2g) E_2(q)".to_string()
        } else if self.orbit_count == e_gl {
            format!("orbit count equals (q-1)^(2g) E_2(q); character formula is smaller by a factor {}", self.ratio)
        } else {
            format!("neither normalization matches; orbit/character ratio {}", self.ratio)
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "g": self.g,
            "group_order": self.group_order,
            "pgl_order": self.pgl_order,
            "tuple_count": self.tuple_count.to_string(),
            "e2_at_q": self.e2_at_q.to_string(),
            "predicted": self.predicted.to_string(),
            "character_formula": self.character_formula.to_string(),
            "orbit_count": self.orbit_count.to_string(),
            "ratio": self.ratio.to_string(),
            "holds": self.holds(),
            "normalization": self.normalization(),
        })
    }
}

/// Tuple count in `GL(2,q)` at `-Id` against `E_2` of genus `g`.
pub fn gl_bridge(engine: &mut Engine, q: u32, g: u32) -> crate::Result<BridgeReport> {
    let group = build_group(Family::GL, q)?;
    let xi = group.central_element(2)?;
    let cd = conjugacy_classes(&group);
    let tuples = tuple_counts(&group, &cd, g)?[cd.class_of[xi]].clone();
    let e2 = engine.polynomial(Kind::E, 2, g)?;
    let e2_at_q = e2.evaluate(&[(Var::Q, BigRational::from_integer(q.into()))])?;
    if !e2_at_q.is_integer() {
        return Err(OracleError::NonIntegralCount(format!("E_2({q}) = {e2_at_q}")).into());
    }
    let e2_at_q = e2_at_q.to_integer();
    let order = group.order() as u64;
    let pgl = order / (q as u64 - 1);
    let predicted = BigInt::from(pgl) * num_traits::pow(BigInt::from(q - 1), 2 * g as usize) * &e2_at_q;
    let t = BigInt::from(tuples.clone());
    let character_formula = BigRational::new(t.clone(), order.into());
    let orbit_count = BigRational::new(t, pgl.into());
    let ratio = if character_formula.is_zero() { BigRational::zero() } else { &orbit_count / &character_formula };
    Ok(BridgeReport {
        q,
        g,
        group_order: order,
        pgl_order: pgl,
        tuple_count: tuples,
        e2_at_q,
        predicted,
        character_formula,
        orbit_count,
        ratio,
    })
}

/// Brute-force and character-side counts for one group, genus and central
/// element.
pub fn compare_counts(group: &MatrixGroup, g: u32, xi: usize) -> Result<(BigUint, BigUint), OracleError> {
    let cd = conjugacy_classes(group);
    let brute = tuple_counts(group, &cd, g)?[cd.class_of[xi]].clone();
    let table = character_table(group, &cd)?;
    let sums = frobenius_sums(group, &cd, &table, g, xi)?;
    Ok((brute, sums.tuple_prediction))
}
