//! Polynomials truncated above a fixed grade.

use super::coefficient::{Coefficient, CoefficientMode};
use super::monomial::{Grading, Monomial};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// The ambient ring `k[t1..tn] / (monomials of grade >= d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyContext {
    n: usize,
    d: u32,
    grading: Grading,
    mode: CoefficientMode,
}

impl PolyContext {
    /// Standard grading: truncation by total degree.
    pub fn new(n: usize, d: u32, mode: CoefficientMode) -> Arc<Self> {
        Self::with_grading(Grading::standard(n), d, mode)
    }

    /// Weights `1, 2, ..., n`.
    pub fn weighted(n: usize, d: u32, mode: CoefficientMode) -> Arc<Self> {
        Self::with_grading(Grading::weighted(n), d, mode)
    }

    pub fn with_grading(grading: Grading, d: u32, mode: CoefficientMode) -> Arc<Self> {
        assert!(d >= 1, "truncation degree must be at least 1");
        Arc::new(PolyContext {
            n: grading.weights().len(),
            d,
            grading,
            mode,
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Truncation grade: terms of grade `>= d` are discarded.
    pub fn truncation(&self) -> u32 {
        self.d
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn mode(&self) -> CoefficientMode {
        self.mode
    }

    /// Same variables and grading, different truncation or mode.
    pub fn derive(&self, d: u32, mode: CoefficientMode) -> Arc<Self> {
        Self::with_grading(self.grading.clone(), d, mode)
    }
}

/// An element of a [`PolyContext`]. Stores no zero coefficients and no terms
/// of grade at or above the truncation.
#[derive(Clone, Debug)]
pub struct TruncatedPolynomial {
    ctx: Arc<PolyContext>,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl PartialEq for TruncatedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx) && self.terms == other.terms
    }
}

impl Eq for TruncatedPolynomial {}

fn same_ctx(a: &Arc<PolyContext>, b: &Arc<PolyContext>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "polynomial rings differ: n={} D={} {} vs n={} D={} {}",
            a.n, a.d, a.mode, b.n, b.d, b.mode
        )))
    }
}

impl TruncatedPolynomial {
    pub fn zero(ctx: &Arc<PolyContext>) -> Self {
        TruncatedPolynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<PolyContext>) -> Self {
        Self::constant(ctx, ctx.mode.one())
    }

    pub fn constant(ctx: &Arc<PolyContext>, c: Coefficient) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.n), c)
    }

    pub fn from_i64(ctx: &Arc<PolyContext>, v: i64) -> Self {
        Self::constant(ctx, ctx.mode.from_i64(v))
    }

    /// The variable `t_j`, 1-based.
    pub fn var(ctx: &Arc<PolyContext>, j: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.n, j), ctx.mode.one())
    }

    pub fn monomial(ctx: &Arc<PolyContext>, m: Monomial, c: Coefficient) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(exponents, integer coefficient)` pairs.
    pub fn from_int_terms(ctx: &Arc<PolyContext>, terms: &[(&[u32], i64)]) -> Self {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            p.add_term(Monomial::from_exponents(e.to_vec()), ctx.mode.from_i64(*c));
        }
        p
    }

    pub fn context(&self) -> &Arc<PolyContext> {
        &self.ctx
    }

    pub fn mode(&self) -> CoefficientMode {
        self.ctx.mode
    }

    /// Adds `c * m` in place, respecting the truncation.
    pub fn add_term(&mut self, m: Monomial, c: Coefficient) {
        assert_eq!(m.nvars(), self.ctx.n, "monomial has wrong number of variables");
        let mode = self.ctx.mode;
        if mode.is_zero(&c) || self.ctx.grading.grade(&m) >= self.ctx.d {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = mode.add(v, &c);
                if mode.is_zero(v) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ctx.mode.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&Monomial::one(self.ctx.n))
    }

    /// Smallest grade of a term; `None` for zero (grade minus infinity).
    pub fn low_grade(&self) -> Option<u32> {
        self.terms.keys().map(|m| self.ctx.grading.grade(m)).min()
    }

    pub fn high_grade(&self) -> Option<u32> {
        self.terms.keys().map(|m| self.ctx.grading.grade(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.low_grade() == self.high_grade()
    }

    /// Terms sorted by decreasing grade, ties broken by the monomial order.
    pub fn sorted_terms_desc(&self) -> Vec<(&Monomial, &Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        let g = &self.ctx.grading;
        v.sort_by(|a, b| g.cmp(b.0, a.0));
        v
    }

    /// Leading term under the graded order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.sorted_terms_desc().into_iter().next()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_ctx(&self.ctx, &other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        same_ctx(&self.ctx, &other.ctx)?;
        let mode = self.ctx.mode;
        let g = &self.ctx.grading;
        let d = self.ctx.d;
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            let ga = g.grade(ma);
            for (mb, cb) in &other.terms {
                if ga + g.grade(mb) >= d {
                    continue;
                }
                out.add_term(ma.mul(mb), mode.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mode = self.ctx.mode;
        TruncatedPolynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), mode.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), self.ctx.mode.mul(v, c));
        }
        out
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (k, v) in &self.terms {
            out.add_term(k.mul(m), v.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps only the terms of the given grade.
    pub fn homogeneous_part(&self, grade: u32) -> Self {
        let g = &self.ctx.grading;
        TruncatedPolynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| g.grade(m) == grade)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the polynomial in another context with the same number
    /// of variables, converting coefficients and re-truncating.
    pub fn convert(&self, ctx: &Arc<PolyContext>) -> Result<Self> {
        if ctx.n != self.ctx.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot move a polynomial in {} variables into {}",
                self.ctx.n, ctx.n
            )));
        }
        let mut out = Self::zero(ctx);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), ctx.mode.convert(c, self.ctx.mode)?);
        }
        Ok(out)
    }

    /// Substitutes `t_j -> values[j-1]` inside the ring of the values.
    pub fn substitute(&self, values: &[TruncatedPolynomial]) -> Result<TruncatedPolynomial> {
        if values.len() != self.ctx.n {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} variables",
                values.len(),
                self.ctx.n
            )));
        }
        let target = match values.first() {
            Some(v) => v.ctx.clone(),
            None => return Ok(self.clone()),
        };
        let mut out = TruncatedPolynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = TruncatedPolynomial::constant(&target, target.mode.convert(c, self.ctx.mode)?);
            for (j, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = term.checked_mul(&values[j])?;
                }
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Graded comparison of leading terms, used to sort generator lists.
    pub fn cmp_leading(&self, other: &Self) -> Ordering {
        let g = &self.ctx.grading;
        let a = self.sorted_terms_desc();
        let b = other.sorted_terms_desc();
        for (x, y) in a.iter().zip(b.iter()) {
            let o = g.cmp(x.0, y.0);
            if o != Ordering::Equal {
                return o;
            }
        }
        a.len().cmp(&b.len())
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mode = self.ctx.mode;
        for (k, (m, c)) in self.sorted_terms_desc().into_iter().enumerate() {
            let negative = matches!(c, Coefficient::Exact(q) if q < &num_rational::BigRational::from_integer(0.into()));
            let abs = if negative { mode.neg(c) } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if mode.is_one(&abs) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&TruncatedPolynomial> for &TruncatedPolynomial {
            type Output = TruncatedPolynomial;
            /// Panics when the operands live in different rings; use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &TruncatedPolynomial) -> TruncatedPolynomial {
                self.$checked(rhs).expect("polynomial operands from different rings")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;
    fn neg(self) -> TruncatedPolynomial {
        TruncatedPolynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> Arc<PolyContext> {
        PolyContext::new(2, d, CoefficientMode::Integer)
    }

    #[test]
    fn additive_inverse() {
        let c = ctx(5);
        let t1 = TruncatedPolynomial::var(&c, 1);
        assert!((&t1 + &t1.neg()).is_zero());
    }

    #[test]
    fn characteristic_two() {
        let c = PolyContext::new(2, 5, CoefficientMode::Prime(2));
        let t1 = TruncatedPolynomial::var(&c, 1);
        assert!((&t1 + &t1).is_zero());
    }

    #[test]
    fn truncation() {
        let c = ctx(3);
        let t1 = TruncatedPolynomial::var(&c, 1);
        let t1sq = &t1 * &t1;
        assert!((&t1 * &t1sq).is_zero());
        let c4 = ctx(4);
        let t1 = TruncatedPolynomial::var(&c4, 1);
        let t2 = TruncatedPolynomial::var(&c4, 2);
        let p = &(&t2 + &(&t1 * &t1)) * &t1;
        assert_eq!(p, &(&t1 * &t2) + &t1.pow(3));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = TruncatedPolynomial::var(&ctx(3), 1);
        let b = TruncatedPolynomial::var(&ctx(4), 1);
        assert!(matches!(a.checked_add(&b), Err(Error::DimensionMismatch(_))));
        let p = TruncatedPolynomial::var(&PolyContext::new(2, 3, CoefficientMode::Prime(2)), 1);
        assert!(a.checked_mul(&p).is_err());
    }

    #[test]
    fn text_form_weighted() {
        let c = PolyContext::weighted(2, 20, CoefficientMode::Integer);
        let p = TruncatedPolynomial::from_int_terms(&c, &[(&[0, 2], 1), (&[2, 1], 1)]);
        assert_eq!(p.to_string(), "t2^2 + t1^2*t2");
        let q = TruncatedPolynomial::from_int_terms(&c, &[(&[1, 1], 2), (&[3, 0], 1)]);
        assert_eq!(q.to_string(), "2*t1*t2 + t1^3");
        let r = TruncatedPolynomial::from_int_terms(&c, &[(&[0, 1], 1), (&[2, 0], -1)]);
        assert_eq!(r.to_string(), "t2 - t1^2");
        assert_eq!(TruncatedPolynomial::from_i64(&c, -3).to_string(), "-3");
    }
}
