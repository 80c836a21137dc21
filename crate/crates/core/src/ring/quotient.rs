//! Ideals of truncated polynomial rings and their quotient models.
//!
//! A [`QuotientModel`] of `J` at truncation `D` is a monomial basis of
//! `k[t] / (J + (grade >= D))` together with the normal form of every monomial.
//!
//! Two elimination strategies are used. When every generator is homogeneous
//! for the grading, the quotient is built one grade at a time: grade `w` is
//! spanned by `t_j * S` for standard monomials `S` of grade `w - wt(t_j)`,
//! modulo the generators of grade `w` and the relations identifying the two
//! ways of reaching `t_a * t_b * S`. Otherwise all monomials below `D` are
//! reduced at once, preferring pivots of low grade.
//!
//! Both strategies certify finite dimension: if every monomial whose grade
//! lies in a window `[s, s + maxweight)` is zero in the model, then by
//! Nakayama's lemma every monomial of grade `>= s` lies in `J` itself.

use super::coefficient::{Coefficient, CoefficientMode};
use super::linalg::{Echelon, LinearField, ModP, Rationals};
use super::monomial::Monomial;
use super::poly::{PolyContext, TruncatedPolynomial};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

/// Column cap for the non-homogeneous elimination.
const GLOBAL_COLUMN_CAP: usize = 60_000;

/// A finite list of nonzero generators in one polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    ctx: Arc<PolyContext>,
    generators: Vec<TruncatedPolynomial>,
}

impl IdealBasis {
    /// Zero generators are dropped; all generators must share `ctx`.
    pub fn new(ctx: &Arc<PolyContext>, generators: Vec<TruncatedPolynomial>) -> Result<Self> {
        for g in &generators {
            if g.context() != ctx {
                return Err(Error::DimensionMismatch(
                    "generator does not belong to the ideal's ring".into(),
                ));
            }
        }
        Ok(IdealBasis {
            ctx: ctx.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    /// The zero ideal of `ctx`. Over zero variables this is the ideal whose
    /// quotient is the field itself.
    pub fn zero(ctx: &Arc<PolyContext>) -> Self {
        IdealBasis {
            ctx: ctx.clone(),
            generators: Vec::new(),
        }
    }

    pub fn context(&self) -> &Arc<PolyContext> {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn generators(&self) -> &[TruncatedPolynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// The ideal with generator `k` removed.
    pub fn without(&self, k: usize) -> IdealBasis {
        let mut g = self.generators.clone();
        g.remove(k);
        IdealBasis {
            ctx: self.ctx.clone(),
            generators: g,
        }
    }

    /// Moves the generators into another context with the same variables.
    pub fn convert(&self, ctx: &Arc<PolyContext>) -> Result<IdealBasis> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.convert(ctx))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(ctx, gens)
    }

    /// True when `p` is a `k`-linear combination of the generators. This is
    /// a sufficient condition for membership that needs no quotient model.
    pub fn spans(&self, p: &TruncatedPolynomial) -> Result<bool> {
        let mode = self.ctx.mode();
        if !mode.is_field() {
            return Err(Error::UnsupportedMode(mode.to_string()));
        }
        match mode {
            CoefficientMode::Prime(q) => spans_in(&ModP(q), self, p),
            _ => spans_in(&Rationals, self, p),
        }
    }
}

fn spans_in<F: LinearField + Clone>(f: &F, ideal: &IdealBasis, p: &TruncatedPolynomial) -> Result<bool> {
    let mode = ideal.ctx.mode();
    let mut cols: HashMap<Monomial, usize> = HashMap::new();
    let index = |m: &Monomial, cols: &mut HashMap<Monomial, usize>| {
        let k = cols.len();
        *cols.entry(m.clone()).or_insert(k)
    };
    let mut rows = Vec::new();
    for g in ideal.generators.iter().chain(std::iter::once(p)) {
        let mut r = Vec::new();
        for (m, c) in g.terms() {
            r.push((index(m, &mut cols), f.from_coefficient(c, mode)?));
        }
        rows.push(r);
    }
    let n = cols.len();
    let mut ech = Echelon::new(f.clone(), n);
    let target = rows.pop().expect("target row");
    for r in &rows {
        ech.insert_sparse(r);
    }
    let before = ech.rank();
    ech.insert_sparse(&target);
    Ok(ech.rank() == before)
}

/// A monomial basis and normal forms for `k[t] / (J + (grade >= D))`.
#[derive(Clone, Debug)]
pub struct QuotientModel {
    ideal: IdealBasis,
    truncation: u32,
    standard: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    normal_forms: HashMap<Monomial, Vec<(usize, Coefficient)>>,
    stop: u32,
    witness: Option<u32>,
    hilbert: Vec<usize>,
    graded: bool,
}

struct Built<E> {
    standard: Vec<Monomial>,
    normal_forms: HashMap<Monomial, Vec<(usize, E)>>,
    stop: u32,
    witness: Option<u32>,
}

impl QuotientModel {
    /// Builds the model at truncation `min(d, D_ctx)`. Requires a field.
    pub fn build(ideal: &IdealBasis, d: u32) -> Result<Self> {
        if d < 1 {
            return Err(Error::Domain("truncation must be at least 1".into()));
        }
        let mode = ideal.ctx.mode();
        let d = d.min(ideal.ctx.truncation());
        let graded = ideal.is_homogeneous();
        match mode {
            CoefficientMode::Integer => Err(Error::UnsupportedMode(mode.to_string())),
            CoefficientMode::Prime(p) => Self::finish(&ModP(p), ideal, d, graded),
            CoefficientMode::Rational => Self::finish(&Rationals, ideal, d, graded),
        }
    }

    fn finish<F: LinearField + Clone>(f: &F, ideal: &IdealBasis, d: u32, graded: bool) -> Result<Self> {
        let b = if graded {
            build_graded(f, ideal, d)?
        } else {
            build_global(f, ideal, d)?
        };
        let g = ideal.ctx.grading();
        let mut hilbert = vec![0usize; b.stop as usize];
        for m in &b.standard {
            hilbert[g.grade(m) as usize] += 1;
        }
        let index = b.standard.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let normal_forms = b
            .normal_forms
            .into_iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(m, v)| (m, v.iter().map(|(k, e)| (*k, f.to_coefficient(e))).collect()))
            .collect();
        Ok(QuotientModel {
            ideal: ideal.clone(),
            truncation: d,
            standard: b.standard,
            index,
            normal_forms,
            stop: b.stop,
            witness: b.witness,
            hilbert,
            graded,
        })
    }

    pub fn ideal(&self) -> &IdealBasis {
        &self.ideal
    }

    pub fn context(&self) -> &Arc<PolyContext> {
        self.ideal.context()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// `k`-dimension of the modeled quotient.
    pub fn dimension(&self) -> usize {
        self.standard.len()
    }

    /// Standard monomials in increasing graded order.
    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    /// Dimension of each graded piece below the first certified-zero grade.
    pub fn hilbert_function(&self) -> &[usize] {
        &self.hilbert
    }

    /// True when the model equals the untruncated quotient `k[[t]]/J`.
    pub fn is_certified(&self) -> bool {
        self.witness.is_some()
    }

    /// Smallest truncation at which the certificate is visible.
    pub fn witness(&self) -> Option<u32> {
        self.witness
    }

    /// Whether the grade-by-grade strategy was used.
    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Normal form of a monomial as `(standard index, coefficient)` pairs.
    pub fn reduce_monomial(&self, m: &Monomial) -> Vec<(usize, Coefficient)> {
        if self.context().grading().grade(m) >= self.stop {
            return Vec::new();
        }
        if let Some(&k) = self.index.get(m) {
            return vec![(k, self.context().mode().one())];
        }
        self.normal_forms.get(m).cloned().unwrap_or_default()
    }

    /// Coordinates of `p` in the standard basis.
    pub fn coordinates(&self, p: &TruncatedPolynomial) -> Result<Vec<Coefficient>> {
        self.check(p)?;
        let mode = self.context().mode();
        let mut v = vec![mode.zero(); self.dimension()];
        for (m, c) in p.terms() {
            for (k, x) in self.reduce_monomial(m) {
                v[k] = mode.add(&v[k], &mode.mul(c, &x));
            }
        }
        Ok(v)
    }

    /// The polynomial with the given standard-basis coordinates.
    pub fn from_coordinates(&self, v: &[Coefficient]) -> TruncatedPolynomial {
        let mut p = TruncatedPolynomial::zero(self.context());
        for (k, c) in v.iter().enumerate() {
            p.add_term(self.standard[k].clone(), c.clone());
        }
        p
    }

    pub fn normal_form(&self, p: &TruncatedPolynomial) -> Result<TruncatedPolynomial> {
        Ok(self.from_coordinates(&self.coordinates(p)?))
    }

    /// True iff the normal form of `p` is zero.
    pub fn contains(&self, p: &TruncatedPolynomial) -> Result<bool> {
        let mode = self.context().mode();
        Ok(self.coordinates(p)?.iter().all(|c| mode.is_zero(c)))
    }

    /// Product in the quotient.
    pub fn mul(&self, a: &TruncatedPolynomial, b: &TruncatedPolynomial) -> Result<TruncatedPolynomial> {
        self.normal_form(&a.checked_mul(b)?)
    }

    fn check(&self, p: &TruncatedPolynomial) -> Result<()> {
        let a = p.context();
        let b = self.context();
        if a.nvars() != b.nvars() || a.mode() != b.mode() || a.grading() != b.grading() {
            return Err(Error::DimensionMismatch(
                "polynomial and quotient model live in different rings".into(),
            ));
        }
        Ok(())
    }
}

/// Membership of `p` in the modeled ideal.
pub fn ideal_membership(p: &TruncatedPolynomial, model: &QuotientModel) -> Result<bool> {
    model.contains(p)
}

/// Each generator of one ideal lies in the other's model at truncation `d`.
pub fn ideal_equal(a: &IdealBasis, b: &IdealBasis, d: u32) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch("ideals in different variable counts".into()));
    }
    Ok(ideal_contains_all(a, b, d)? && ideal_contains_all(b, a, d)?)
}

/// Every generator of `b` lies in `a` (modulo truncation `d`). Generators that
/// are `k`-combinations of `a`'s generators are accepted without a model.
pub fn ideal_contains_all(a: &IdealBasis, b: &IdealBasis, d: u32) -> Result<bool> {
    let mut pending = Vec::new();
    for g in b.generators() {
        if !a.spans(g)? {
            pending.push(g);
        }
    }
    if pending.is_empty() {
        return Ok(true);
    }
    let model = QuotientModel::build(a, d)?;
    for g in pending {
        if !model.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds models at `d0`, doubling up to `dmax`, until the model certifies
/// that the untruncated quotient is finite dimensional. Returns the
/// dimension and the witness truncation.
pub fn quotient_dimension_stabilized(j: &IdealBasis, d0: u32, dmax: u32) -> Result<(usize, u32)> {
    if d0 >= dmax {
        return Err(Error::Domain(format!("need D0 < Dmax, got {d0} and {dmax}")));
    }
    let dmax = dmax.min(j.context().truncation());
    let mut d = d0.max(1);
    let mut last = 0;
    loop {
        // Graded models stop on their own once certified, so go straight to the cap.
        let model = QuotientModel::build(j, if j.is_homogeneous() { dmax } else { d })?;
        if let Some(w) = model.witness() {
            return Ok((model.dimension(), w));
        }
        last = last.max(model.dimension());
        if d >= dmax || j.is_homogeneous() {
            return Err(Error::NotArtinianWithinBound { dmax, last_dimension: last });
        }
        d = (2 * d).min(dmax);
    }
}

fn to_field_terms<F: LinearField>(f: &F, p: &TruncatedPolynomial) -> Result<Vec<(Monomial, F::E)>> {
    let mode = p.mode();
    p.terms()
        .map(|(m, c)| Ok((m.clone(), f.from_coefficient(c, mode)?)))
        .collect()
}

fn build_graded<F: LinearField + Clone>(f: &F, ideal: &IdealBasis, d: u32) -> Result<Built<F::E>> {
    let ctx = ideal.context();
    let n = ctx.nvars();
    let g = ctx.grading();
    let maxw = g.max_weight();
    let mut gens_by_grade: HashMap<u32, Vec<Vec<(Monomial, F::E)>>> = HashMap::new();
    for p in ideal.generators() {
        gens_by_grade
            .entry(p.low_grade().expect("nonzero generator"))
            .or_default()
            .push(to_field_terms(f, p)?);
    }

    // Per grade: standard monomials (increasing), their local index, and the
    // normal form of every other monomial in local coordinates.
    let mut std: Vec<Vec<Monomial>> = Vec::new();
    let mut std_idx: Vec<HashMap<Monomial, usize>> = Vec::new();
    let mut nf: Vec<HashMap<Monomial, Vec<(usize, F::E)>>> = Vec::new();
    let mut zero_run = 0u32;
    let mut stop = d;
    let mut witness = None;

    for w in 0..d {
        // Column set B_w, smallest monomial first so it is the preferred pivot.
        // Pivoting on large monomials instead makes the rational normal forms of
        // J_n(m) blow up by orders of magnitude.
        let mut cols: Vec<Monomial> = if w == 0 {
            vec![Monomial::one(n)]
        } else {
            let mut v = Vec::new();
            for j in 1..=n {
                let wj = g.weight(j);
                if wj <= w {
                    for s in &std[(w - wj) as usize] {
                        v.push(s.times_var(j));
                    }
                }
            }
            v.sort();
            v.dedup();
            v
        };
        if w > 0 && cols.is_empty() {
            cols.clear();
        }
        let col_of: HashMap<Monomial, usize> = cols.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();

        // t_j * NF(M / t_j) as a vector over B_w.
        let psi = |j: usize, m: &Monomial| -> Vec<(usize, F::E)> {
            let lower = m.div_var(j).expect("variable divides monomial");
            let gw = (w - g.weight(j)) as usize;
            let mut out: Vec<(usize, F::E)> = match std_idx[gw].get(&lower) {
                Some(_) => vec![(col_of[&lower.times_var(j)], f.one())],
                None => nf[gw]
                    .get(&lower)
                    .map(|v| {
                        v.iter()
                            .map(|(s, c)| (col_of[&std[gw][*s].times_var(j)], c.clone()))
                            .collect()
                    })
                    .unwrap_or_default(),
            };
            out.sort_by_key(|e| e.0);
            out
        };
        let dense = |terms: &[(usize, F::E)], scale: &F::E, acc: &mut Vec<F::E>| {
            for (c, x) in terms {
                acc[*c] = f.add(&acc[*c], &f.mul(scale, x));
            }
        };

        let mut ech = Echelon::new(f.clone(), cols.len());
        if !cols.is_empty() {
            if w > 0 {
                for a in 1..=n {
                    for b in (a + 1)..=n {
                        let wab = g.weight(a) + g.weight(b);
                        if wab > w {
                            continue;
                        }
                        for s in &std[(w - wab) as usize] {
                            let m = s.times_var(a).times_var(b);
                            let mut v = vec![f.zero(); cols.len()];
                            dense(&psi(a, &m), &f.one(), &mut v);
                            dense(&psi(b, &m), &f.neg(&f.one()), &mut v);
                            ech.insert_dense(v);
                        }
                    }
                }
            }
            if let Some(list) = gens_by_grade.get(&w) {
                for gen in list {
                    let mut v = vec![f.zero(); cols.len()];
                    for (m, c) in gen {
                        if w == 0 {
                            v[0] = f.add(&v[0], c);
                        } else {
                            let j = m.first_var().expect("positive grade");
                            dense(&psi(j, m), c, &mut v);
                        }
                    }
                    ech.insert_dense(v);
                }
            }
        }

        let mut free: Vec<Monomial> = (0..cols.len()).filter(|&c| !ech.is_pivot(c)).map(|c| cols[c].clone()).collect();
        free.sort();
        let local: HashMap<Monomial, usize> = free.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let col_to_local: Vec<Option<usize>> = cols.iter().map(|m| local.get(m).copied()).collect();

        let mut forms: HashMap<Monomial, Vec<(usize, F::E)>> = HashMap::new();
        for m in g.monomials_of_grade(w) {
            if local.contains_key(&m) {
                continue;
            }
            let mut v = vec![f.zero(); cols.len()];
            if w > 0 && !cols.is_empty() {
                let j = m.first_var().expect("positive grade");
                dense(&psi(j, &m), &f.one(), &mut v);
                ech.reduce_dense(&mut v);
            }
            let form: Vec<(usize, F::E)> = v
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !f.is_zero(x))
                .map(|(c, x)| (col_to_local[c].expect("reduced vector lives on free columns"), x))
                .collect();
            forms.insert(m, form);
        }

        let dim = free.len();
        std.push(free);
        std_idx.push(local);
        nf.push(forms);

        if dim == 0 {
            zero_run += 1;
            if zero_run == maxw {
                stop = w + 1 - maxw;
                witness = Some(w + 1);
                break;
            }
        } else {
            zero_run = 0;
        }
    }

    let mut offset = Vec::with_capacity(std.len());
    let mut standard = Vec::new();
    for s in std.iter().take(stop as usize) {
        offset.push(standard.len());
        standard.extend(s.iter().cloned());
    }
    let mut normal_forms = HashMap::new();
    for (w, forms) in nf.into_iter().enumerate().take(stop as usize) {
        for (m, v) in forms {
            let v = v.into_iter().map(|(k, x)| (offset[w] + k, x)).collect();
            normal_forms.insert(m, v);
        }
    }
    Ok(Built {
        standard,
        normal_forms,
        stop,
        witness,
    })
}

fn build_global<F: LinearField + Clone>(f: &F, ideal: &IdealBasis, d: u32) -> Result<Built<F::E>> {
    let ctx = ideal.context();
    let g = ctx.grading();
    let maxw = g.max_weight();
    let mut cols: Vec<Monomial> = Vec::new();
    let mut grade_start = Vec::new();
    for w in 0..d {
        grade_start.push(cols.len());
        let mut ms = g.monomials_of_grade(w);
        ms.reverse();
        cols.extend(ms);
        if cols.len() > GLOBAL_COLUMN_CAP {
            return Err(Error::cap("monomials below the truncation", cols.len(), GLOBAL_COLUMN_CAP));
        }
    }
    let col_of: HashMap<Monomial, usize> = cols.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let mut ech = Echelon::new(f.clone(), cols.len());
    for p in ideal.generators() {
        let terms = to_field_terms(f, p)?;
        let low = p.low_grade().expect("nonzero generator");
        for u in &cols {
            if g.grade(u) + low >= d {
                continue;
            }
            let mut row: Vec<(usize, F::E)> = terms
                .iter()
                .filter_map(|(m, c)| col_of.get(&m.mul(u)).map(|&k| (k, c.clone())))
                .collect();
            row.sort_by_key(|e| e.0);
            ech.insert_sparse(&row);
        }
    }
    let mut free: Vec<usize> = (0..cols.len()).filter(|&c| !ech.is_pivot(c)).collect();
    free.sort_by(|&a, &b| g.cmp(&cols[a], &cols[b]));
    let standard: Vec<Monomial> = free.iter().map(|&c| cols[c].clone()).collect();
    let local: HashMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut normal_forms = HashMap::new();
    for (c, m) in cols.iter().enumerate() {
        if local.contains_key(&c) {
            continue;
        }
        let row = ech.row_for_pivot(c).expect("non-free column is a pivot");
        let form: Vec<(usize, F::E)> = row
            .iter()
            .filter(|(k, _)| *k != c)
            .map(|(k, x)| (local[k], f.neg(x)))
            .collect();
        normal_forms.insert(m.clone(), form);
    }
    let top = standard.iter().map(|m| g.grade(m) as i64).max().unwrap_or(-1);
    let s = (top + 1) as u32;
    let (stop, witness) = if d >= s + maxw { (s, Some(s + maxw)) } else { (d, None) };
    Ok(Built {
        standard,
        normal_forms,
        stop,
        witness,
    })
}
