//! Character tables by Dixon's method: simultaneous eigenvectors of the
//! class matrices over a prime field `F_p` with `e | p - 1`, lifted to
//! exact cyclotomic values through eigenvalue multiplicities.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::classes::ConjugacyData;
use super::cyclotomic::CyclotomicValue;
use super::field::{is_prime, PrimeField};
use super::group::MatrixGroup;
use super::OracleError;

const SEED: u64 = 0x5eed_d1c5;
const ATTEMPTS: usize = 64;

/// Irreducible characters as rows of exact values over the classes.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: String,
    pub order: usize,
    /// Exponent `e` of the group; values live in `Z[ζ_e]`.
    pub exponent: u32,
    pub class_sizes: Vec<usize>,
    pub class_reps: Vec<[[u32; 2]; 2]>,
    pub degrees: Vec<u64>,
    pub rows: Vec<Vec<CyclotomicValue>>,
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > bound`.
fn dixon_prime(e: u64, bound: u64) -> u64 {
    let mut p = (bound / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

/// Basis of the null space of `m` over `f`.
fn nullspace(mut m: Vec<Vec<u32>>, f: PrimeField) -> Vec<Vec<u32>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let k = m[i][c];
                for j in 0..cols {
                    let sub = f.mul(k, m[r][j]);
                    m[i][j] = f.sub(m[i][j], sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.sub(0, m[i][fc]);
            }
            v
        })
        .collect()
}

/// One eigenvector per eigenvalue of a random combination of class
/// matrices, once all eigenspaces are one-dimensional.
fn common_eigenvectors(cd: &ConjugacyData, f: PrimeField) -> Result<Vec<Vec<u32>>, OracleError> {
    let r = cd.len();
    let p = f.p();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..ATTEMPTS {
        let coef: Vec<u32> = (0..r).map(|_| rng.next_u32() % p).collect();
        let mut m = vec![vec![0u32; r]; r];
        for (i, &c) in coef.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, row) in m.iter_mut().enumerate() {
                for (k, x) in row.iter_mut().enumerate() {
                    let a = cd.coeff(i, j, k) % p;
                    *x = f.add(*x, f.mul(c, a));
                }
            }
        }
        let mut vecs = Vec::new();
        let mut split = true;
        for lambda in 0..p {
            let mut shifted = m.clone();
            for (j, row) in shifted.iter_mut().enumerate() {
                row[j] = f.sub(row[j], lambda);
            }
            let ns = nullspace(shifted, f);
            if ns.len() > 1 {
                split = false;
                break;
            }
            vecs.extend(ns);
            if vecs.len() == r {
                break;
            }
        }
        if split && vecs.len() == r {
            return Ok(vecs);
        }
    }
    Err(OracleError::LiftFailure(format!("class matrices did not split after {ATTEMPTS} attempts")))
}

/// Exact character table of `group`.
pub fn character_table(group: &MatrixGroup, cd: &ConjugacyData) -> Result<CharacterTable, OracleError> {
    let n = group.order() as u64;
    let e = group.exponent();
    let p = dixon_prime(e, 2 * n);
    let f = PrimeField::new(p as u32)?;
    let generator = (2..f.p()).find(|&a| f.order(a) == p - 1).expect("prime fields are cyclic");
    let z = f.pow(generator, (p - 1) / e);
    let r = cd.len();
    let sizes: Vec<u32> = cd.classes.iter().map(|c| c.size() as u32).collect();
    let inverse_class: Vec<usize> = (0..r).map(|i| cd.inverse_class(group, i)).collect();
    let orders: Vec<u64> = cd.classes.iter().map(|c| group.element_order(c.rep)).collect();
    let power_class: Vec<Vec<usize>> = cd
        .classes
        .iter()
        .zip(&orders)
        .map(|(c, &o)| (0..o).map(|l| cd.class_of[group.power(c.rep, l)]).collect())
        .collect();

    let mut chars = Vec::with_capacity(r);
    for v in common_eigenvectors(cd, f)? {
        let lead =
            f.inv(v[0]).ok_or_else(|| OracleError::LiftFailure("eigenvector vanishes at the identity".into()))?;
        let omega: Vec<u32> = v.iter().map(|&x| f.mul(x, lead)).collect();
        let mut s = 0;
        for j in 0..r {
            let t = f.mul(omega[j], omega[inverse_class[j]]);
            s = f.add(s, f.mul(t, f.inv(sizes[j]).unwrap()));
        }
        let s_inv = f.inv(s).ok_or_else(|| OracleError::LiftFailure("degree sum vanishes".into()))?;
        let d2 = f.mul(f.reduce(n as i64), s_inv) as u64;
        let d = (d2 as f64).sqrt().round() as u64;
        if d == 0 || d * d != d2 || n % d != 0 {
            return Err(OracleError::LiftFailure(format!("{d2} is not a square degree")));
        }
        let modular: Vec<u32> = (0..r).map(|j| f.mul(f.mul(d as u32, omega[j]), f.inv(sizes[j]).unwrap())).collect();
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            let o = orders[j];
            let zo = f.pow(z, e / o);
            let o_inv = f.inv(f.reduce(o as i64)).unwrap();
            let mut powers = Vec::new();
            let mut total = 0u64;
            for k in 0..o {
                let mut acc = 0;
                for l in 0..o {
                    let w = f.pow(zo, (o - (k * l) % o) % o);
                    acc = f.add(acc, f.mul(modular[power_class[j][l as usize]], w));
                }
                let m = f.mul(acc, o_inv) as u64;
                if m > d {
                    return Err(OracleError::LiftFailure(format!("multiplicity {m} exceeds degree {d} at class {j}")));
                }
                total += m;
                if m > 0 {
                    powers.push((k * (e / o), m as i64));
                }
            }
            if total != d {
                return Err(OracleError::LiftFailure(format!("multiplicities at class {j} sum to {total}, not {d}")));
            }
            row.push(CyclotomicValue::from_powers(e as u32, &powers));
        }
        chars.push((d, row));
    }
    // trivial character first, then by degree and values
    let one = CyclotomicValue::int(e as u32, 1);
    chars.sort_by_key(|(d, row)| (*d, row.iter().any(|v| *v != one), row.clone()));
    let table = CharacterTable {
        group: group.name().to_string(),
        order: group.order(),
        exponent: e as u32,
        class_sizes: sizes.iter().map(|&s| s as usize).collect(),
        class_reps: cd.classes.iter().map(|c| group.element(c.rep).rows()).collect(),
        degrees: chars.iter().map(|(d, _)| *d).collect(),
        rows: chars.into_iter().map(|(_, row)| row).collect(),
    };
    let (row_ok, col_ok) = table.orthogonality();
    if !row_ok || !col_ok {
        return Err(OracleError::LiftFailure(format!("orthogonality failed (rows: {row_ok}, columns: {col_ok})")));
    }
    Ok(table)
}

impl CharacterTable {
    /// Row and column orthogonality, checked exactly.
    pub fn orthogonality(&self) -> (bool, bool) {
        let e = self.exponent;
        let r = self.rows.len();
        let n = self.order as i64;
        let mut rows_ok = r == self.class_sizes.len();
        for a in 0..r {
            for b in 0..r {
                let mut acc = CyclotomicValue::int(e, 0);
                for (j, &s) in self.class_sizes.iter().enumerate() {
                    acc = acc.add(&self.rows[a][j].mul(&self.rows[b][j].conj()).scale(s as i64));
                }
                rows_ok &= acc.as_integer() == Some(if a == b { n } else { 0 });
            }
        }
        let mut cols_ok = true;
        for i in 0..self.class_sizes.len() {
            for j in 0..self.class_sizes.len() {
                let mut acc = CyclotomicValue::int(e, 0);
                for row in &self.rows {
                    acc = acc.add(&row[i].mul(&row[j].conj()));
                }
                let want = if i == j { n / self.class_sizes[i] as i64 } else { 0 };
                cols_ok &= acc.as_integer() == Some(want);
            }
        }
        (rows_ok, cols_ok)
    }

    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .class_reps
            .iter()
            .zip(&self.class_sizes)
            .map(|(rep, size)| json!({ "rep": rep, "size": size }))
            .collect();
        let characters: Vec<Value> = self
            .degrees
            .iter()
            .zip(&self.rows)
            .map(|(d, row)| {
                let values: Vec<&[i64]> = row.iter().map(CyclotomicValue::coords).collect();
                json!({ "degree": d, "values": values })
            })
            .collect();
        json!({
            "group": self.group,
            "order": self.order,
            "exponent": self.exponent,
            "basis": "powers of a primitive e-th root of unity, reduced modulo the e-th cyclotomic polynomial",
            "classes": classes,
            "characters": characters,
        })
    }
}
