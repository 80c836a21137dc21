//! Exact linear algebra over prime fields and the rationals.

use super::coefficient::{inv_mod, Coefficient, CoefficientMode};
use crate::error::{Error, Result};
use num_rational::BigRational;
use std::fmt::Debug;

/// A field in which row reduction is performed.
pub trait LinearField {
    type E: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn from_coefficient(&self, c: &Coefficient, mode: CoefficientMode) -> Result<Self::E>;
    fn to_coefficient(&self, a: &Self::E) -> Coefficient;
}

/// The prime field `F_p`, elements stored as `u64` in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP(pub u64);

impl LinearField for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0).expect("inverse of zero")
    }
    fn from_coefficient(&self, c: &Coefficient, mode: CoefficientMode) -> Result<u64> {
        mode.residue(c, self.0)
    }
    fn to_coefficient(&self, a: &u64) -> Coefficient {
        Coefficient::Modular(*a)
    }
}

/// A rational number kept as a reduced `i64` fraction while it fits, and as
/// a [`BigRational`] otherwise. Both forms are canonical, so equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rat {
    /// Numerator and positive denominator, coprime.
    Small(i64, i64),
    Big(BigRational),
}

impl Rat {
    fn from_i128(num: i128, den: i128) -> Rat {
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(BigRational::new(n.into(), d.into())),
        }
    }

    fn from_big(q: BigRational) -> Rat {
        use num_traits::ToPrimitive;
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(q),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new((*n).into(), (*d).into()),
            Rat::Big(q) => q.clone(),
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    (a as i128).max(1)
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl LinearField for Rationals {
    type E = Rat;
    fn zero(&self) -> Rat {
        Rat::Small(0, 1)
    }
    fn one(&self) -> Rat {
        Rat::Small(1, 1)
    }
    fn is_zero(&self, a: &Rat) -> bool {
        matches!(a, Rat::Small(0, _))
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        match (a, b) {
            (Rat::Small(0, _), _) => b.clone(),
            (_, Rat::Small(0, _)) => a.clone(),
            (Rat::Small(n1, d1), Rat::Small(n2, d2)) if d1 == d2 => Rat::from_i128(*n1 as i128 + *n2 as i128, *d1 as i128),
            (Rat::Small(n1, d1), Rat::Small(n2, d2)) => {
                let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
                // |n d| < 2^126, so the sum cannot overflow.
                Rat::from_i128(n1 * d2 + n2 * d1, d1 * d2)
            }
            _ => Rat::from_big(a.to_big() + b.to_big()),
        }
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        match (a, b) {
            (Rat::Small(0, _), _) | (_, Rat::Small(0, _)) => self.zero(),
            (Rat::Small(n1, d1), Rat::Small(n2, d2)) => {
                Rat::from_i128(*n1 as i128 * *n2 as i128, *d1 as i128 * *d2 as i128)
            }
            _ => Rat::from_big(a.to_big() * b.to_big()),
        }
    }
    fn neg(&self, a: &Rat) -> Rat {
        match a {
            Rat::Small(n, d) if *n != i64::MIN => Rat::Small(-n, *d),
            _ => Rat::from_big(-a.to_big()),
        }
    }
    fn inv(&self, a: &Rat) -> Rat {
        match a {
            Rat::Small(n, d) => Rat::from_i128(*d as i128, *n as i128),
            Rat::Big(q) => Rat::from_big(q.recip()),
        }
    }
    fn from_coefficient(&self, c: &Coefficient, _mode: CoefficientMode) -> Result<Rat> {
        match c {
            Coefficient::Exact(q) => Ok(Rat::from_big(q.clone())),
            Coefficient::Modular(_) => Err(Error::DimensionMismatch(
                "residue used where a rational was expected".into(),
            )),
        }
    }
    fn to_coefficient(&self, a: &Rat) -> Coefficient {
        Coefficient::Exact(a.to_big())
    }
}

/// A sparse row: strictly increasing column indices with nonzero values.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Incremental reduced row echelon form. Columns are ordered by preference:
/// the pivot of a new row is its smallest nonzero column.
#[derive(Clone, Debug)]
pub struct Echelon<F: LinearField> {
    field: F,
    ncols: usize,
    pivot_row: Vec<Option<usize>>,
    rows: Vec<SparseRow<F::E>>,
    pivots: Vec<usize>,
}

impl<F: LinearField> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            pivot_row: vec![None; ncols],
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Reduces a dense vector against the current rows in place.
    pub fn reduce_dense(&self, v: &mut [F::E]) {
        let f = &self.field;
        for (r, &pc) in self.pivots.iter().enumerate() {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let c = v[pc].clone();
            for (col, x) in &self.rows[r] {
                v[*col] = f.sub(&v[*col], &f.mul(&c, x));
            }
        }
    }

    /// Adds a row given in sparse form. Returns true when the rank grows.
    pub fn insert_sparse(&mut self, row: &[(usize, F::E)]) -> bool {
        let mut v = vec![self.field.zero(); self.ncols];
        for (c, x) in row {
            v[*c] = self.field.add(&v[*c], x);
        }
        self.insert_dense(v)
    }

    /// Adds a row given densely. Returns true when the rank grows.
    pub fn insert_dense(&mut self, mut v: Vec<F::E>) -> bool {
        self.reduce_dense(&mut v);
        let f = &self.field;
        let Some(pc) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let s = f.inv(&v[pc]);
        let new_row: SparseRow<F::E> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !f.is_zero(x))
            .map(|(c, x)| (c, f.mul(x, &s)))
            .collect();
        for r in 0..self.rows.len() {
            let pos = self.rows[r].binary_search_by_key(&pc, |e| e.0);
            if let Ok(k) = pos {
                let c = self.rows[r][k].1.clone();
                self.rows[r] = axpy(f, &self.rows[r], &c, &new_row);
            }
        }
        self.pivot_row[pc] = Some(self.rows.len());
        self.pivots.push(pc);
        self.rows.push(new_row);
        true
    }

    /// Pivot columns in insertion order.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// The reduced row whose pivot is `col`, if any.
    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseRow<F::E>> {
        self.pivot_row[col].map(|r| &self.rows[r])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

}

/// `a - c * b` for sparse rows.
fn axpy<F: LinearField>(f: &F, a: &[(usize, F::E)], c: &F::E, b: &[(usize, F::E)]) -> SparseRow<F::E> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.neg(&f.mul(c, &b[j].1))));
            j += 1;
        } else {
            let v = f.sub(&a[i].1, &f.mul(c, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a dense matrix.
pub fn rank<F: LinearField + Clone>(f: &F, rows: &[Vec<F::E>], ncols: usize) -> usize {
    let mut ech = Echelon::new(f.clone(), ncols);
    for r in rows {
        ech.insert_dense(r.clone());
    }
    ech.rank()
}

/// Basis of the right kernel `{x : A x = 0}` of a dense `rows x ncols` matrix.
pub fn kernel<F: LinearField + Clone>(f: &F, rows: &[Vec<F::E>], ncols: usize) -> Vec<Vec<F::E>> {
    let mut ech = Echelon::new(f.clone(), ncols);
    for r in rows {
        ech.insert_dense(r.clone());
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !ech.is_pivot(c)) {
        let mut x = vec![f.zero(); ncols];
        x[free] = f.one();
        for &pc in ech.pivot_columns() {
            let row = ech.row_for_pivot(pc).expect("pivot row");
            if let Ok(k) = row.binary_search_by_key(&free, |e| e.0) {
                x[pc] = f.neg(&row[k].1);
            }
        }
        basis.push(x);
    }
    basis
}

/// One solution of `A x = b`, if any.
pub fn solve<F: LinearField + Clone>(f: &F, rows: &[Vec<F::E>], ncols: usize, b: &[F::E]) -> Option<Vec<F::E>> {
    // Augment with -b so that solutions are kernel vectors with last entry 1.
    let aug: Vec<Vec<F::E>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut v = r.clone();
            v.push(f.neg(bi));
            v
        })
        .collect();
    let mut ech = Echelon::new(f.clone(), ncols + 1);
    for r in &aug {
        ech.insert_dense(r.clone());
    }
    if ech.is_pivot(ncols) {
        return None;
    }
    let mut x = vec![f.zero(); ncols];
    for &pc in ech.pivot_columns() {
        let row = ech.row_for_pivot(pc).expect("pivot row");
        if let Ok(k) = row.binary_search_by_key(&ncols, |e| e.0) {
            x[pc] = f.neg(&row[k].1);
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_rank_mod_p() {
        let f = ModP(3);
        let a = vec![vec![1, 2, 0], vec![2, 1, 0]];
        // rows are dependent mod 3: 2*(1,2,0) = (2,1,0)
        assert_eq!(rank(&f, &a, 3), 1);
        let k = kernel(&f, &a, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            for r in &a {
                let s = r.iter().zip(x).fold(0, |acc, (p, q)| (acc + p * q) % 3);
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn solve_over_rationals() {
        let f = Rationals;
        let q = |v: i64| Rat::from_i128(v.into(), 1);
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(&f, &a, 2, &[q(3), q(4)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        let singular = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&f, &singular, 2, &[q(1), q(3)]).is_none());
    }

    #[test]
    fn hybrid_rationals_promote_and_demote() {
        let big = Rat::from_i128(i128::MAX / 3, 7);
        let f = Rationals;
        let sq = f.mul(&big, &big);
        assert!(matches!(sq, Rat::Big(_)));
        let back = f.mul(&sq, &f.inv(&big));
        assert_eq!(back, big);
        assert_eq!(f.sub(&sq, &sq), f.zero());
        assert_eq!(Rat::from_big(sq.to_big()), sq);
    }

    #[test]
    fn echelon_is_reduced() {
        let f = ModP(5);
        let mut e = Echelon::new(f, 4);
        assert!(e.insert_dense(vec![0, 1, 2, 3]));
        assert!(e.insert_dense(vec![1, 1, 0, 0]));
        assert!(!e.insert_dense(vec![1, 2, 2, 3]));
        for &pc in e.pivot_columns() {
            for &other in e.pivot_columns() {
                if other != pc {
                    let row = e.row_for_pivot(other).unwrap();
                    assert!(row.binary_search_by_key(&pc, |x| x.0).is_err());
                }
            }
        }
    }
}
