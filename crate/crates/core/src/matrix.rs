//! Dense matrices over any commutative ring used in the crate.

use crate::error::{Error, Result};
use crate::ring::artin::{ArtinTestRing, Elem};
use crate::ring::{PolyContext, QuotientModel, TruncatedPolynomial};
use std::fmt::Debug;
use std::sync::Arc;

/// The operations matrices need from their entries.
pub trait CommRing {
    type Elem: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// `F_p` with elements in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField(pub u64);

impl CommRing for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

impl CommRing for ArtinTestRing {
    type Elem = Elem;
    fn zero(&self) -> Elem {
        0
    }
    fn one(&self) -> Elem {
        1
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        ArtinTestRing::add(self, *a, *b)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        ArtinTestRing::mul(self, *a, *b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        ArtinTestRing::neg(self, *a)
    }
    fn is_zero(&self, a: &Elem) -> bool {
        *a == 0
    }
}

impl CommRing for Arc<PolyContext> {
    type Elem = TruncatedPolynomial;
    fn zero(&self) -> TruncatedPolynomial {
        TruncatedPolynomial::zero(self)
    }
    fn one(&self) -> TruncatedPolynomial {
        TruncatedPolynomial::one(self)
    }
    fn add(&self, a: &TruncatedPolynomial, b: &TruncatedPolynomial) -> TruncatedPolynomial {
        a + b
    }
    fn mul(&self, a: &TruncatedPolynomial, b: &TruncatedPolynomial) -> TruncatedPolynomial {
        a * b
    }
    fn neg(&self, a: &TruncatedPolynomial) -> TruncatedPolynomial {
        -a
    }
    fn is_zero(&self, a: &TruncatedPolynomial) -> bool {
        a.is_zero()
    }
}

/// Elements are polynomials in normal form.
impl CommRing for QuotientModel {
    type Elem = TruncatedPolynomial;
    fn zero(&self) -> TruncatedPolynomial {
        TruncatedPolynomial::zero(self.context())
    }
    fn one(&self) -> TruncatedPolynomial {
        self.normal_form(&TruncatedPolynomial::one(self.context())).expect("same ring")
    }
    fn add(&self, a: &TruncatedPolynomial, b: &TruncatedPolynomial) -> TruncatedPolynomial {
        a + b
    }
    fn mul(&self, a: &TruncatedPolynomial, b: &TruncatedPolynomial) -> TruncatedPolynomial {
        QuotientModel::mul(self, a, b).expect("same ring")
    }
    fn neg(&self, a: &TruncatedPolynomial) -> TruncatedPolynomial {
        -a
    }
    fn is_zero(&self, a: &TruncatedPolynomial) -> bool {
        a.is_zero()
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros<R: CommRing<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: CommRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for k in 0..n {
            m.set(k, k, ring.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<F, T: Clone>(&self, f: F) -> Matrix<T>
    where
        F: Fn(&E) -> T,
    {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<F, T: Clone>(&self, f: F) -> Result<Matrix<T>>
    where
        F: Fn(&E) -> Result<T>,
    {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<Vec<_>>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Copies `block` into this matrix with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Matrix<E>) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix<E> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in r0..r0 + rows {
            for c in c0..c0 + cols {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn mul<R: CommRing<Elem = E>>(&self, ring: &R, other: &Matrix<E>) -> Result<Matrix<E>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if ring.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let v = ring.add(out.get(r, c), &ring.mul(a, b));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add<R: CommRing<Elem = E>>(&self, ring: &R, other: &Matrix<E>) -> Result<Matrix<E>> {
        self.zip(other, |a, b| ring.add(a, b))
    }

    pub fn sub<R: CommRing<Elem = E>>(&self, ring: &R, other: &Matrix<E>) -> Result<Matrix<E>> {
        self.zip(other, |a, b| ring.sub(a, b))
    }

    pub fn scale<R: CommRing<Elem = E>>(&self, ring: &R, s: &E) -> Matrix<E> {
        self.map(|a| ring.mul(s, a))
    }

    fn zip(&self, other: &Matrix<E>, f: impl Fn(&E, &E) -> E) -> Result<Matrix<E>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn pow<R: CommRing<Elem = E>>(&self, ring: &R, k: u32) -> Result<Matrix<E>> {
        let mut acc = Matrix::identity(ring, self.rows);
        for _ in 0..k {
            acc = acc.mul(ring, self)?;
        }
        Ok(acc)
    }

    pub fn is_zero<R: CommRing<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|a| ring.is_zero(a))
    }

    /// Positions `(r, c)` of nonzero entries.
    pub fn support<R: CommRing<Elem = E>>(&self, ring: &R) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !ring.is_zero(self.get(r, c)) {
                    out.push((r, c));
                }
            }
        }
        out
    }
}

impl<E: std::fmt::Display> std::fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.data[r * self.cols + c].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_over_prime_field() {
        let f = PrimeField(5);
        let a = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let b = a.mul(&f, &a).unwrap();
        assert_eq!(b, Matrix::from_rows(vec![vec![2, 0], vec![0, 2]]));
        assert_eq!(a.pow(&f, 0).unwrap(), Matrix::identity(&f, 2));
    }

    #[test]
    fn shape_errors() {
        let f = PrimeField(2);
        let a = Matrix::from_rows(vec![vec![1, 0, 1]]);
        assert!(a.mul(&f, &a).is_err());
        assert!(a.add(&f, &a.transpose()).is_err());
    }
}
