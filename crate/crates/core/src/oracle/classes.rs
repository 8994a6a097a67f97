use num_bigint::BigUint;
use num_traits::Zero;

use super::group::MatrixGroup;
use super::OracleError;

/// A conjugacy class: representative and sorted member indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub rep: usize,
    pub members: Vec<usize>,
}

impl Class {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes with the class multiplication coefficients
/// `a[i][j][k] = #{(x, y) in C_i x C_j : xy = rep(C_k)}`.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<Class>,
    pub class_of: Vec<usize>,
    coeffs: Vec<u32>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    #[inline]
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.classes.len();
        self.coeffs[(i * r + j) * r + k]
    }

    /// Class of `x⁻¹` for `x` in class `i`.
    pub fn inverse_class(&self, group: &MatrixGroup, i: usize) -> usize {
        self.class_of[group.inv(self.classes[i].rep)]
    }

    /// Per-class values of a per-element function, failing if it is not
    /// constant on some class.
    pub fn class_values(&self, f: &[u64]) -> Result<Vec<u64>, OracleError> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let v = f[c.rep];
                match c.members.iter().find(|&&m| f[m] != v) {
                    Some(&m) => Err(OracleError::NotClassFunction { class: i, element: m }),
                    None => Ok(v),
                }
            })
            .collect()
    }
}

/// Orbits under conjugation, in order of first element; the identity's
/// class comes first.
pub fn conjugacy_classes(group: &MatrixGroup) -> ConjugacyData {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for g in 0..n {
            let y = group.mul(group.mul(g, x), group.inv(g));
            if class_of[y] == usize::MAX {
                class_of[y] = id;
                members.push(y);
            }
        }
        members.sort_unstable();
        classes.push(Class { rep: x, members });
    }
    let r = classes.len();
    let mut coeffs = vec![0u32; r * r * r];
    for (k, ck) in classes.iter().enumerate() {
        let z = ck.rep;
        for x in 0..n {
            let y = group.mul(group.inv(x), z);
            coeffs[(class_of[x] * r + class_of[y]) * r + k] += 1;
        }
    }
    ConjugacyData { classes, class_of, coeffs }
}

/// `c(z) = #{(A, B) : [A, B] = z}` for every element `z`.
pub fn commutator_distribution(group: &MatrixGroup) -> Vec<u64> {
    let n = group.order();
    let row = |a: usize| {
        let mut c = vec![0u64; n];
        for b in 0..n {
            c[group.commutator(a, b)] += 1;
        }
        c
    };
    let merge = |mut x: Vec<u64>, y: Vec<u64>| {
        for (a, b) in x.iter_mut().zip(y) {
            *a += b;
        }
        x
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(row).reduce(|| vec![0u64; n], merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(row).fold(vec![0u64; n], merge)
    }
}

/// Convolution of two class functions through the class algebra.
fn convolve(cd: &ConjugacyData, f: &[BigUint], h: &[BigUint]) -> Vec<BigUint> {
    let r = cd.len();
    (0..r)
        .map(|k| {
            let mut acc = BigUint::zero();
            for (i, fi) in f.iter().enumerate() {
                if fi.is_zero() {
                    continue;
                }
                for (j, hj) in h.iter().enumerate() {
                    let a = cd.coeff(i, j, k);
                    if a != 0 && !hj.is_zero() {
                        acc += fi * hj * a;
                    }
                }
            }
            acc
        })
        .collect()
}

/// Number of `(A_1, B_1, ..., A_g, B_g)` with `Π [A_i, B_i] = z`, per class
/// of `z`, from the `g`-fold convolution of the commutator distribution.
pub fn tuple_counts(group: &MatrixGroup, cd: &ConjugacyData, g: u32) -> Result<Vec<BigUint>, OracleError> {
    if g == 0 {
        return Err(OracleError::Invalid("genus must be at least 1".into()));
    }
    let c: Vec<BigUint> = cd.class_values(&commutator_distribution(group))?.into_iter().map(BigUint::from).collect();
    let mut acc = c.clone();
    for _ in 1..g {
        acc = convolve(cd, &acc, &c);
    }
    Ok(acc)
}

/// `N_g(ξ)` for a single element `ξ`.
pub fn tuple_count(group: &MatrixGroup, g: u32, xi: usize) -> Result<BigUint, OracleError> {
    let cd = conjugacy_classes(group);
    let counts = tuple_counts(group, &cd, g)?;
    Ok(counts[cd.class_of[xi]].clone())
}

#[cfg(test)]
mod tests {
    use super::super::group::{build_group, Family, MatrixGroup};
    use super::*;

    #[test]
    fn class_counts() {
        for (fam, q, want, total) in [(Family::SL, 3, 7, 24), (Family::GL, 3, 8, 48), (Family::SL, 5, 9, 120)] {
            let g = build_group(fam, q).unwrap();
            let cd = conjugacy_classes(&g);
            assert_eq!(cd.len(), want);
            assert_eq!(cd.classes.iter().map(Class::size).sum::<usize>(), total);
            assert_eq!(cd.classes[0].members, vec![0]);
        }
    }

    #[test]
    fn coefficients_count_pairs() {
        let g = build_group(Family::SL, 3).unwrap();
        let cd = conjugacy_classes(&g);
        let r = cd.len();
        for i in 0..r {
            for j in 0..r {
                let total: u64 = (0..r).map(|k| cd.coeff(i, j, k) as u64 * cd.classes[k].size() as u64).sum();
                assert_eq!(total, (cd.classes[i].size() * cd.classes[j].size()) as u64);
            }
        }
    }

    #[test]
    fn distribution_properties() {
        let g = build_group(Family::SL, 3).unwrap();
        let c = commutator_distribution(&g);
        assert_eq!(c.iter().sum::<u64>(), 576);
        let cd = conjugacy_classes(&g);
        assert!(cd.class_values(&c).is_ok());
    }

    #[test]
    fn abelian_fixture() {
        let d = MatrixGroup::diagonal(5).unwrap();
        let n = d.order() as u64;
        let c = commutator_distribution(&d);
        assert_eq!(c[0], n * n);
        assert!(c[1..].iter().all(|&v| v == 0));
        for g in 1..=3u32 {
            assert_eq!(tuple_count(&d, g, 0).unwrap(), BigUint::from(n).pow(2 * g));
            assert!(tuple_count(&d, g, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn genus_one_is_distribution() {
        let g = build_group(Family::GL, 3).unwrap();
        let z = g.central_element(2).unwrap();
        let c = commutator_distribution(&g);
        assert_eq!(tuple_count(&g, 1, z).unwrap(), BigUint::from(c[z]));
        assert_eq!(c[z], 96);
    }

    #[test]
    fn genus_two_brute_force_small() {
        // direct enumeration of Π [A_i, B_i] over SL(2,3)^4 restricted by
        // first summing over (A_1, B_1)
        let g = build_group(Family::SL, 3).unwrap();
        let c = commutator_distribution(&g);
        let n = g.order();
        let mut direct = vec![0u64; n];
        for x in 0..n {
            for y in 0..n {
                direct[g.mul(x, y)] += c[x] * c[y];
            }
        }
        let cd = conjugacy_classes(&g);
        let conv = tuple_counts(&g, &cd, 2).unwrap();
        for z in 0..n {
            assert_eq!(conv[cd.class_of[z]], BigUint::from(direct[z]));
        }
    }
}
