//! Integer partitions, Ferrers-diagram statistics and the hook-polynomial
//! terms attached to each partition by the generating functions.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{FactoredFraction, Flavor, Monomial, Rational, SparsePoly, VarContext};

/// A partition `λ1 >= λ2 >= ... >= λl > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parts must be positive and weakly decreasing: {0:?}")]
pub struct InvalidPartition(pub Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, InvalidPartition> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// One entry per diagram point, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (i, &row_len) in self.parts.iter().enumerate() {
            for j in 0..row_len {
                let arm = row_len - j - 1;
                let leg = conj.parts[j] - i - 1;
                out.push(Cell { row: i + 1, col: j + 1, arm, leg, hook: arm + leg + 1 });
            }
        }
        out
    }

    /// `n(λ') = Σ_z l(z)`, the sum of all leg lengths.
    pub fn leg_sum(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A point of a Ferrers diagram, 1-based `(row, col)`, with its statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    pub hook: usize,
}

impl Cell {
    /// Lattice coordinates `(i, j)` with `i <= 0` indexing rows downward
    /// and `j >= 0` columns, i.e. `{(i,j) : j < λ_(1-i)}`.
    pub fn lattice_position(&self) -> (i64, i64) {
        (1 - self.row as i64, self.col as i64 - 1)
    }
}

/// Diagram statistics of a partition.
#[derive(Clone, Debug)]
pub struct CellStats {
    pub cells: Vec<Cell>,
    pub conjugate: Partition,
    pub leg_sum: usize,
}

pub fn cell_stats(p: &Partition) -> CellStats {
    CellStats { cells: p.cells(), conjugate: p.conjugate(), leg_sum: p.leg_sum() }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            cur.push(first);
            go(rest - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn poly(ctx: VarContext, terms: &[(&[i32], i64)]) -> SparsePoly {
    SparsePoly::from_int_terms(ctx, terms)
}

fn monomial(ctx: VarContext, e: &[i32]) -> SparsePoly {
    SparsePoly::monomial(ctx, Monomial::new(e), Rational::one())
}

/// The summand the flavor's generating function attaches to `λ`:
///
/// * `E`: `(Π q^(-l)(1 - q^h))^(2g-2)`
/// * `Qt`: `Π (qt²)^((2-2g)l) (1 + q^h t^(2l+1))^(2g) / ((1 - q^h t^(2l+2))(1 - q^h t^(2l)))`
/// * `Xy`: `Π (qxy)^((2-2g)l) (1 + q^h y^l x^(l+1))^g (1 + q^h x^l y^(l+1))^g
///   / ((1 - q^h (xy)^(l+1))(1 - q^h (xy)^l))`
/// * `Pure`: `t^(4(1-g)n(λ')) Π_(a=0) 1/(1 - t^(2h))`
pub fn hook_term(flavor: Flavor, g: u32, p: &Partition) -> FactoredFraction {
    let ctx = flavor.ctx();
    let gi = g as i32;
    let mut num = SparsePoly::one(ctx);
    let mut dens: Vec<(SparsePoly, u32)> = Vec::new();
    match flavor {
        Flavor::E => {
            let e = 2 * gi - 2;
            for c in p.cells() {
                let (l, h) = (c.leg as i32, c.hook as i32);
                let binom = poly(ctx, &[(&[0], 1), (&[h], -1)]);
                num = &num * &monomial(ctx, &[-l * e]);
                if e >= 0 {
                    num = &num * &binom.pow(e as u32);
                } else {
                    dens.push((binom, (-e) as u32));
                }
            }
        }
        Flavor::Qt => {
            for c in p.cells() {
                let (l, h) = (c.leg as i32, c.hook as i32);
                let k = (2 - 2 * gi) * l;
                num = &num * &monomial(ctx, &[k, 2 * k]);
                let top = poly(ctx, &[(&[0, 0], 1), (&[h, 2 * l + 1], 1)]);
                num = &num * &top.pow(2 * g);
                dens.push((poly(ctx, &[(&[0, 0], 1), (&[h, 2 * l + 2], -1)]), 1));
                dens.push((poly(ctx, &[(&[0, 0], 1), (&[h, 2 * l], -1)]), 1));
            }
        }
        Flavor::Xy => {
            for c in p.cells() {
                let (l, h) = (c.leg as i32, c.hook as i32);
                let k = (2 - 2 * gi) * l;
                num = &num * &monomial(ctx, &[k, k, k]);
                let a = poly(ctx, &[(&[0, 0, 0], 1), (&[h, l + 1, l], 1)]);
                let b = poly(ctx, &[(&[0, 0, 0], 1), (&[h, l, l + 1], 1)]);
                num = &num * &(&a * &b).pow(g);
                dens.push((poly(ctx, &[(&[0, 0, 0], 1), (&[h, l + 1, l + 1], -1)]), 1));
                dens.push((poly(ctx, &[(&[0, 0, 0], 1), (&[h, l, l], -1)]), 1));
            }
        }
        Flavor::Pure => {
            let k = 4 * (1 - gi) * p.leg_sum() as i32;
            num = monomial(ctx, &[k]);
            for c in p.cells().iter().filter(|c| c.arm == 0) {
                dens.push((poly(ctx, &[(&[0], 1), (&[2 * c.hook as i32], -1)]), 1));
            }
        }
    }
    FactoredFraction::new(num, &dens).expect("hook denominators are binomials")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Subst, Var};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let four: Vec<_> = partitions_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(partitions_of(6).len(), 11);
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn diagram_example() {
        let p = part(&[5, 5, 4, 3, 1]);
        let z = p.cells().into_iter().find(|c| c.lattice_position() == (-1, 1)).unwrap();
        assert_eq!((z.arm, z.leg, z.hook), (3, 2, 6));
    }

    #[test]
    fn small_stats() {
        let one = cell_stats(&part(&[1]));
        assert_eq!(one.cells.len(), 1);
        assert_eq!((one.cells[0].arm, one.cells[0].leg, one.cells[0].hook), (0, 0, 1));

        let s = cell_stats(&part(&[2, 1]));
        let mut hooks: Vec<_> = s.cells.iter().map(|c| c.hook).collect();
        hooks.sort();
        assert_eq!(hooks, vec![1, 1, 3]);
        assert_eq!(s.leg_sum, 1);
        assert_eq!(s.leg_sum, s.cells.iter().map(|c| c.leg).sum::<usize>());
    }

    #[test]
    fn cell_invariants_up_to_eight() {
        for n in 0..=8 {
            for p in partitions_of(n) {
                let cells = p.cells();
                assert!(cells.iter().all(|c| c.hook == c.arm + c.leg + 1));
                assert_eq!(cells.iter().map(|c| c.leg).sum::<usize>(), p.leg_sum());
                assert_eq!(cells.iter().filter(|c| c.arm == 0).count(), p.len());
                let conj = p.conjugate().cells();
                for c in &cells {
                    let d = conj.iter().find(|d| d.row == c.col && d.col == c.row).unwrap();
                    assert_eq!((d.arm, d.leg), (c.leg, c.arm));
                }
            }
        }
    }

    fn qt(s: &str) -> SparsePoly {
        SparsePoly::parse(VarContext::QT, s).unwrap()
    }

    #[test]
    fn hook_term_examples() {
        let single = part(&[1]);
        let e = hook_term(Flavor::E, 2, &single);
        assert_eq!(e.as_polynomial().unwrap(), SparsePoly::parse(VarContext::Q, "1 - 2*q + q^2").unwrap());

        assert!(hook_term(Flavor::Qt, 3, &Partition::empty()).as_polynomial().unwrap().is_one());

        for g in 0..4 {
            let got = hook_term(Flavor::Qt, g, &single);
            let want =
                FactoredFraction::new(qt("1 + q*t").pow(2 * g), &[(qt("1 - q*t^2"), 1), (qt("1 - q"), 1)]).unwrap();
            assert_eq!(got, want);
        }

        let pure = hook_term(Flavor::Pure, 2, &single);
        let t = |s: &str| SparsePoly::parse(VarContext::T, s).unwrap();
        assert_eq!(pure, FactoredFraction::new(t("1"), &[(t("1 - t^2"), 1)]).unwrap());
    }

    #[test]
    fn genus_zero_e_term_is_fraction() {
        let f = hook_term(Flavor::E, 0, &part(&[1, 1]));
        assert_eq!(f.denominator_degree(), 4);
        let back = &f * &hook_term(Flavor::E, 2, &part(&[1, 1]));
        assert!(back.as_polynomial().unwrap().is_one());
    }

    fn eval_frac(f: &FactoredFraction, pt: &[i64]) -> Rational {
        let pt: Vec<_> = pt.iter().map(|&x| Rational::from_integer(x.into())).collect();
        f.evaluate(&pt).unwrap()
    }

    #[test]
    fn qt_term_at_minus_one_is_e_term() {
        for n in 0..=4 {
            for p in partitions_of(n) {
                for g in [2, 3] {
                    let qt = hook_term(Flavor::Qt, g, &p);
                    let e = hook_term(Flavor::E, g, &p);
                    for q in [2i64, 3, 5] {
                        assert_eq!(eval_frac(&qt, &[q, -1]), eval_frac(&e, &[q]), "{p} g={g}");
                    }
                    // the numerator itself specializes cleanly
                    let spec = qt.numerator().specialize(&[(Var::T, Subst::int(-1))]);
                    assert!(spec.is_ok());
                }
            }
        }
    }

    #[test]
    fn xy_term_on_diagonal_is_qt_term() {
        for n in 0..=4 {
            for p in partitions_of(n) {
                for g in [1, 2, 3] {
                    let xy = hook_term(Flavor::Xy, g, &p);
                    let qt = hook_term(Flavor::Qt, g, &p);
                    for (q, t) in [(2i64, 3i64), (3, -2), (5, 7)] {
                        assert_eq!(eval_frac(&xy, &[q, t, t]), eval_frac(&qt, &[q, t]), "{p} g={g}");
                    }
                }
            }
        }
    }
}
