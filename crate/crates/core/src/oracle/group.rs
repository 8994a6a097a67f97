use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::OracleError;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_BOUND: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    GL,
    SL,
}

impl std::str::FromStr for Family {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Family, OracleError> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::GL),
            "sl" => Ok(Family::SL),
            _ => Err(OracleError::Invalid(format!("unknown family {s:?} (expected gl or sl)"))),
        }
    }
}

/// A 2x2 matrix over a prime field, row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2(pub [u32; 4]);

impl Mat2 {
    pub fn identity() -> Self {
        Mat2([1, 0, 0, 1])
    }

    pub fn scalar(z: u32) -> Self {
        Mat2([z, 0, 0, z])
    }

    pub fn mul(&self, o: &Mat2, f: PrimeField) -> Mat2 {
        let [a, b, c, d] = self.0;
        let [e, g, h, k] = o.0;
        Mat2([
            f.add(f.mul(a, e), f.mul(b, h)),
            f.add(f.mul(a, g), f.mul(b, k)),
            f.add(f.mul(c, e), f.mul(d, h)),
            f.add(f.mul(c, g), f.mul(d, k)),
        ])
    }

    pub fn det(&self, f: PrimeField) -> u32 {
        let [a, b, c, d] = self.0;
        f.sub(f.mul(a, d), f.mul(b, c))
    }

    pub fn rows(&self) -> [[u32; 2]; 2] {
        [[self.0[0], self.0[1]], [self.0[2], self.0[3]]]
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// An enumerated group of 2x2 matrices with its multiplication table.
///
/// Element 0 is the identity; the rest follow in lexicographic order.
#[derive(Clone)]
pub struct MatrixGroup {
    name: String,
    field: PrimeField,
    elements: Vec<Mat2>,
    index: HashMap<Mat2, usize>,
    table: Vec<u16>,
    inverse: Vec<u16>,
}

impl fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order())
    }
}

/// `GL(2, q)` or `SL(2, q)` with the default element bound.
pub fn build_group(family: Family, q: u32) -> Result<MatrixGroup, OracleError> {
    build_group_bounded(family, q, DEFAULT_BOUND)
}

pub fn build_group_bounded(family: Family, q: u32, bound: usize) -> Result<MatrixGroup, OracleError> {
    let f = PrimeField::new(q)?;
    let q64 = q as u64;
    let gl = (q64 * q64 - 1) * (q64 * q64 - q64);
    let order = match family {
        Family::GL => gl,
        Family::SL => gl / (q64 - 1),
    };
    if order > bound as u64 {
        return Err(OracleError::GroupTooLarge { order, bound });
    }
    let name = match family {
        Family::GL => format!("GL(2,{q})"),
        Family::SL => format!("SL(2,{q})"),
    };
    let mut elements = Vec::with_capacity(order as usize);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = Mat2([a, b, c, d]);
                    let det = m.det(f);
                    let keep = match family {
                        Family::GL => det != 0,
                        Family::SL => det == 1,
                    };
                    if keep {
                        elements.push(m);
                    }
                }
            }
        }
    }
    MatrixGroup::from_elements(name, f, elements)
}

impl MatrixGroup {
    fn from_elements(name: String, field: PrimeField, mut elements: Vec<Mat2>) -> Result<Self, OracleError> {
        elements.sort();
        let id = Mat2::identity();
        let pos = elements.iter().position(|m| *m == id).ok_or_else(|| OracleError::Invalid("no identity".into()))?;
        let id = elements.remove(pos);
        elements.insert(0, id);
        let n = elements.len();
        if n > u16::MAX as usize {
            return Err(OracleError::GroupTooLarge { order: n as u64, bound: u16::MAX as usize });
        }
        let index: HashMap<Mat2, usize> = elements.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut table = vec![0u16; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let p = a.mul(b, field);
                let k = *index.get(&p).ok_or_else(|| OracleError::Invalid(format!("{name} is not closed")))?;
                table[i * n + j] = k as u16;
            }
        }
        let mut inverse = vec![0u16; n];
        for i in 0..n {
            let j = (0..n).find(|&j| table[i * n + j] == 0).ok_or_else(|| OracleError::Invalid("no inverse".into()))?;
            inverse[i] = j as u16;
        }
        Ok(MatrixGroup { name, field, elements, index, table, inverse })
    }

    /// The subgroup generated by `gens`, enumerated breadth first.
    pub fn generated(name: &str, field: PrimeField, gens: &[Mat2], bound: usize) -> Result<Self, OracleError> {
        let mut seen: HashMap<Mat2, ()> = HashMap::new();
        let mut queue = VecDeque::from([Mat2::identity()]);
        seen.insert(Mat2::identity(), ());
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.mul(g, field);
                if seen.insert(y, ()).is_none() {
                    if seen.len() > bound {
                        return Err(OracleError::GroupTooLarge { order: seen.len() as u64, bound });
                    }
                    queue.push_back(y);
                }
            }
        }
        Self::from_elements(name.to_string(), field, seen.into_keys().collect())
    }

    /// Diagonal matrices in `GL(2, q)`: an abelian test group of order `(q-1)²`.
    pub fn diagonal(q: u32) -> Result<Self, OracleError> {
        let f = PrimeField::new(q)?;
        let mut els = Vec::new();
        for a in 1..q {
            for d in 1..q {
                els.push(Mat2([a, 0, 0, d]));
            }
        }
        Self::from_elements(format!("Diag(2,{q})"), f, els)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> Mat2 {
        self.elements[i]
    }

    pub fn index_of(&self, m: &Mat2) -> Option<usize> {
        self.index.get(m).copied()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.elements.len() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// `a b a⁻¹ b⁻¹`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ab_ai = self.mul(ab, self.inv(a));
        self.mul(ab_ai, self.inv(b))
    }

    pub fn power(&self, i: usize, k: u64) -> usize {
        let mut r = 0;
        for _ in 0..k {
            r = self.mul(r, i);
        }
        r
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |e, i| num_integer::lcm(e, self.element_order(i)))
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order()).all(|x| self.mul(x, z) == self.mul(z, x))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order()).filter(|&z| self.is_central(z)).collect()
    }

    /// `ζ·Id` for the smallest `ζ` of exact order `n` in the field, when it
    /// lies in the group.
    pub fn central_element(&self, n: u64) -> Result<usize, OracleError> {
        let q = self.field.p();
        let unavailable = OracleError::CentralElementUnavailable { n, q };
        let z = self.field.element_of_order(n).ok_or(unavailable.clone())?;
        self.index_of(&Mat2::scalar(z)).ok_or(unavailable)
    }
}
