use std::ops::{AddAssign, Mul, SubAssign};

use num_traits::Zero;
use serde::Serialize;

/// Coefficients of the `e`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(e: usize) -> Vec<i64> {
    assert!(e >= 1);
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; e + 1];
    num[0] = -1;
    num[e] = 1;
    for d in (1..e).filter(|d| e % d == 0) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let m = den.len() - 1;
    let mut r = num.to_vec();
    let mut q = vec![0i64; num.len() - m];
    for i in (m..num.len()).rev() {
        let c = r[i];
        q[i - m] = c;
        for (j, d) in den.iter().enumerate() {
            r[i - m + j] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Reduces `Σ c_i ζ^i` to the basis `1, ζ, ..., ζ^(φ(e)-1)`.
pub(crate) fn reduce<T>(mut c: Vec<T>, e: usize, phi: &[i64]) -> Vec<T>
where
    T: Clone + Zero + AddAssign + SubAssign + Mul<Output = T> + From<i64>,
{
    let m = phi.len() - 1;
    if c.len() > e {
        for i in e..c.len() {
            let v = std::mem::replace(&mut c[i], T::zero());
            c[i % e] += v;
        }
        c.truncate(e);
    }
    for i in (m..c.len()).rev() {
        let lead = c[i].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, p) in phi.iter().enumerate() {
            c[i - m + j] -= lead.clone() * T::from(*p);
        }
    }
    c.resize(m, T::zero());
    c
}

/// An element of `Z[ζ_e]` in the power basis of length `φ(e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclotomicValue {
    e: u32,
    coords: Vec<i64>,
}

impl CyclotomicValue {
    /// `Σ m_k ζ^k`.
    pub fn from_powers(e: u32, powers: &[(u64, i64)]) -> Self {
        let mut c = vec![0i64; e as usize];
        for &(k, m) in powers {
            c[(k % e as u64) as usize] += m;
        }
        Self::from_full(e, c)
    }

    fn from_full(e: u32, c: Vec<i64>) -> Self {
        let phi = cyclotomic_polynomial(e as usize);
        CyclotomicValue { e, coords: reduce(c, e as usize, &phi) }
    }

    pub fn int(e: u32, v: i64) -> Self {
        Self::from_powers(e, &[(0, v)])
    }

    pub fn order(&self) -> u32 {
        self.e
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// The rational integer this value equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coords[1..].iter().all(|&c| c == 0).then_some(self.coords[0])
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let e = self.e as usize;
        let mut c = vec![0i64; e];
        for (k, v) in self.coords.iter().enumerate() {
            c[(e - k) % e] += v;
        }
        Self::from_full(self.e, c)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.e, o.e);
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        CyclotomicValue { e: self.e, coords }
    }

    pub fn scale(&self, k: i64) -> Self {
        CyclotomicValue { e: self.e, coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.e, o.e);
        let mut c = vec![0i64; self.coords.len() + o.coords.len()];
        for (i, a) in self.coords.iter().enumerate() {
            for (j, b) in o.coords.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_full(self.e, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(120).len() - 1, 32);
    }

    #[test]
    fn root_sums() {
        // 1 + ζ + ζ² = 0 for a primitive cube root, seen inside Z[ζ_12]
        let z = CyclotomicValue::from_powers(12, &[(0, 1), (4, 1), (8, 1)]);
        assert_eq!(z.as_integer(), Some(0));
        let w = CyclotomicValue::from_powers(12, &[(1, 1)]);
        assert_eq!(w.mul(&w.conj()).as_integer(), Some(1));
        assert_eq!(CyclotomicValue::from_powers(12, &[(6, 1)]).as_integer(), Some(-1));
    }
}
