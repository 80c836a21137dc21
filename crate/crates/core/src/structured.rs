//! The matrices `N_n` and `Ñ_n`, the polynomials `h_{a,ν}`, and the ideals
//! `J_n(m)`.
//!
//! `N_n` has first row `(0, ..., 0, t_n)` and below it `I_{n-1}` on the left
//! with the column `(t_{n-1}, ..., t_1)` on the right. `Ñ_n` is `N_{n+1}` with
//! `t_{n+1} = 0`. The `(a, b)` entry of `N_n^ν` is `h_{a, ν+b-1}`, where
//!
//! ```text
//! h_{1,0} = 1,  h_{a,0} = 0 (a >= 2),
//! h_{1,ν} = t_n h_{n,ν-1},  h_{a,ν} = h_{a-1,ν-1} + t_{n-a+1} h_{n,ν-1}.
//! ```

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::ring::{CoefficientMode, IdealBasis, PolyContext, TruncatedPolynomial};
use std::sync::Arc;

/// A matrix of truncated polynomials sharing one context.
pub type PolyMatrix = Matrix<TruncatedPolynomial>;

/// Truncation used for presentations and symbolic verification.
pub const PRESENTATION_TRUNCATION: u32 = 64;

fn need_vars(ctx: &Arc<PolyContext>, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("N_0 is not defined; J_0 is the zero ideal".into()));
    }
    if ctx.nvars() < n {
        return Err(Error::DimensionMismatch(format!(
            "N_{n} needs {n} variables, ring has {}",
            ctx.nvars()
        )));
    }
    Ok(())
}

/// `N_n` over `ctx`.
pub fn build_nn(ctx: &Arc<PolyContext>, n: usize) -> Result<PolyMatrix> {
    need_vars(ctx, n)?;
    let mut m = Matrix::zeros(ctx, n, n);
    m.set(0, n - 1, TruncatedPolynomial::var(ctx, n));
    for r in 1..n {
        m.set(r, r - 1, TruncatedPolynomial::one(ctx));
        m.set(r, n - 1, TruncatedPolynomial::var(ctx, n - r));
    }
    Ok(m)
}

/// `Ñ_n` over `ctx`: an `(n+1) x (n+1)` matrix with zero first row.
pub fn build_nn_tilde(ctx: &Arc<PolyContext>, n: usize) -> Result<PolyMatrix> {
    need_vars(ctx, n)?;
    let mut m = Matrix::zeros(ctx, n + 1, n + 1);
    for r in 1..=n {
        m.set(r, r - 1, TruncatedPolynomial::one(ctx));
        m.set(r, n, TruncatedPolynomial::var(ctx, n + 1 - r));
    }
    Ok(m)
}

/// Memoized values `h_{a,ν}` for `1 <= a <= n`, `0 <= ν <= max_nu`.
#[derive(Clone, Debug)]
pub struct HPolynomialTable {
    ctx: Arc<PolyContext>,
    n: usize,
    values: Vec<Vec<TruncatedPolynomial>>,
}

impl HPolynomialTable {
    pub fn new(ctx: &Arc<PolyContext>, max_nu: usize) -> Result<Self> {
        let n = ctx.nvars();
        need_vars(ctx, n)?;
        let mut t = HPolynomialTable {
            ctx: ctx.clone(),
            n,
            values: vec![Vec::new(); n],
        };
        for a in 0..n {
            t.values[a].push(if a == 0 {
                TruncatedPolynomial::one(ctx)
            } else {
                TruncatedPolynomial::zero(ctx)
            });
        }
        t.extend(max_nu);
        Ok(t)
    }

    /// Grows the table up to `max_nu`.
    pub fn extend(&mut self, max_nu: usize) {
        let n = self.n;
        let ctx = self.ctx.clone();
        while self.values[0].len() <= max_nu {
            let nu = self.values[0].len();
            let last = self.values[n - 1][nu - 1].clone();
            let mut col = Vec::with_capacity(n);
            for a in 1..=n {
                let tail = &TruncatedPolynomial::var(&ctx, n - a + 1) * &last;
                col.push(if a == 1 {
                    tail
                } else {
                    &self.values[a - 2][nu - 1] + &tail
                });
            }
            for (a, v) in col.into_iter().enumerate() {
                self.values[a].push(v);
            }
        }
    }

    pub fn context(&self) -> &Arc<PolyContext> {
        &self.ctx
    }

    pub fn max_nu(&self) -> usize {
        self.values[0].len() - 1
    }

    /// `h_{a,ν}` with `a` 1-based.
    pub fn h(&self, a: usize, nu: usize) -> Result<&TruncatedPolynomial> {
        if a == 0 || a > self.n {
            return Err(Error::OutOfRange(format!("a = {a} not in 1..={}", self.n)));
        }
        self.values[a - 1]
            .get(nu)
            .ok_or_else(|| Error::OutOfRange(format!("ν = {nu} beyond table size {}", self.max_nu())))
    }

    /// The matrix with `(a, b)` entry `h_{a, ν+b-1}`.
    pub fn matrix_power_closed_form(&self, nu: usize) -> Result<PolyMatrix> {
        let n = self.n;
        let mut m = Matrix::zeros(&self.ctx, n, n);
        for a in 1..=n {
            for b in 1..=n {
                m.set(a - 1, b - 1, self.h(a, nu + b - 1)?.clone());
            }
        }
        Ok(m)
    }
}

/// Single `h_{a,ν}` in `n` integer variables.
pub fn h_poly(n: usize, a: usize, nu: usize) -> Result<TruncatedPolynomial> {
    let ctx = PolyContext::new(n, nu as u32 + 2, CoefficientMode::Integer);
    let t = HPolynomialTable::new(&ctx, nu)?;
    t.h(a, nu).cloned()
}

fn first_difference(a: &PolyMatrix, b: &PolyMatrix) -> Option<String> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Some(format!("shape {}x{} vs {}x{}", a.rows(), a.cols(), b.rows(), b.cols()));
    }
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if a.get(r, c) != b.get(r, c) {
                return Some(format!("entry ({}, {}): {} vs {}", r + 1, c + 1, a.get(r, c), b.get(r, c)));
            }
        }
    }
    None
}

/// Checks, for one `n` and all `1 <= ν <= nu_max`, that direct powers of
/// `N_n` match the closed form, the two recurrence identities, and the block
/// form of `Ñ_n^ν`. Uses exact integer arithmetic.
pub fn verify_power_lemma(n: usize, nu_max: usize) -> Result<Report> {
    // Every compared entry has degree at most max(nu_max, n + 1).
    let d = (nu_max.max(n + 1) + 2) as u32;
    let ctx = PolyContext::new(n, d, CoefficientMode::Integer);
    let table = HPolynomialTable::new(&ctx, nu_max + n + 1)?;
    let nn = build_nn(&ctx, n)?;
    let nt = build_nn_tilde(&ctx, n)?;
    let mut report = Report::new();

    let mut power = Matrix::identity(&ctx, n);
    let mut powers = vec![power.clone()];
    for _ in 1..=nu_max.max(n) {
        power = power.mul(&ctx, &nn)?;
        powers.push(power.clone());
    }
    let mut tilde_power = Matrix::identity(&ctx, n + 1);
    let mut tilde_powers = vec![tilde_power.clone()];
    for _ in 1..=nu_max.max(n + 1) {
        tilde_power = tilde_power.mul(&ctx, &nt)?;
        tilde_powers.push(tilde_power.clone());
    }

    for nu in 1..=nu_max {
        let closed = table.matrix_power_closed_form(nu)?;
        let diff = first_difference(&powers[nu], &closed);
        report.push(
            format!("closed_form n={n} nu={nu}"),
            diff.is_none(),
            diff.unwrap_or_default(),
        );

        // Ñ^ν = [[0, 0], [N^{ν-1}, (h_{a, n+ν-1})_a]]
        let mut block = Matrix::zeros(&ctx, n + 1, n + 1);
        block.put_block(1, 0, &powers[nu - 1]);
        for a in 1..=n {
            block.set(a, n, table.h(a, n + nu - 1)?.clone());
        }
        let diff = first_difference(&tilde_powers[nu], &block);
        report.push(format!("tilde_block n={n} nu={nu}"), diff.is_none(), diff.unwrap_or_default());
    }

    // N^n = sum_{j=1}^{n} t_{n-j+1} N^{j-1}
    let mut rhs = Matrix::zeros(&ctx, n, n);
    for j in 1..=n {
        rhs = rhs.add(&ctx, &powers[j - 1].scale(&ctx, &TruncatedPolynomial::var(&ctx, n - j + 1)))?;
    }
    let diff = first_difference(&powers[n], &rhs);
    report.push(format!("cayley_hamilton n={n}"), diff.is_none(), diff.unwrap_or_default());

    // Ñ^{n+1} = sum_{j=1}^{n} t_{n-j+1} Ñ^j
    let mut rhs = Matrix::zeros(&ctx, n + 1, n + 1);
    for j in 1..=n {
        rhs = rhs.add(&ctx, &tilde_powers[j].scale(&ctx, &TruncatedPolynomial::var(&ctx, n - j + 1)))?;
    }
    let diff = first_difference(&tilde_powers[n + 1], &rhs);
    report.push(format!("cayley_hamilton_tilde n={n}"), diff.is_none(), diff.unwrap_or_default());

    let negative = (1..=n)
        .flat_map(|a| (0..=nu_max).map(move |nu| (a, nu)))
        .find(|&(a, nu)| {
            table
                .h(a, nu)
                .map(|p| p.terms().any(|(_, c)| !c.is_nonnegative_integer()))
                .unwrap_or(false)
        });
    report.push(
        format!("h_nonnegative n={n}"),
        negative.is_none(),
        negative.map(|(a, nu)| format!("h_{{{a},{nu}}} has a negative coefficient")).unwrap_or_default(),
    );
    Ok(report)
}

/// Context used for presentations: `n` variables with weights `1..n`.
pub fn presentation_context(n: usize, mode: CoefficientMode) -> Arc<PolyContext> {
    PolyContext::weighted(n, PRESENTATION_TRUNCATION, mode)
}

/// `J_n(m) = (h_{1,m}, ..., h_{n,m})` inside `ctx` (whose variable count is
/// `n`). For `n = 0` this is the zero ideal of the field.
pub fn j_ideal(ctx: &Arc<PolyContext>, m: usize) -> Result<IdealBasis> {
    let n = ctx.nvars();
    if n == 0 {
        return Ok(IdealBasis::zero(ctx));
    }
    if m == 0 {
        return Err(Error::Domain("J_n(m) needs m >= 1".into()));
    }
    let table = HPolynomialTable::new(ctx, m)?;
    let gens = (1..=n).map(|a| table.h(a, m).cloned()).collect::<Result<Vec<_>>>()?;
    IdealBasis::new(ctx, gens)
}

/// `J_n(m)` over the integers in the presentation context.
pub fn build_j_ideal(n: usize, m: usize) -> Result<IdealBasis> {
    j_ideal(&presentation_context(n, CoefficientMode::Integer), m)
}

/// The ideal generated by all `n^2` entries of `N_n^m`.
pub fn power_entries_ideal(ctx: &Arc<PolyContext>, m: usize) -> Result<IdealBasis> {
    let n = ctx.nvars();
    let p = build_nn(ctx, n)?.pow(ctx, m as u32)?;
    IdealBasis::new(ctx, p.entries().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ictx(n: usize) -> Arc<PolyContext> {
        PolyContext::new(n, 20, CoefficientMode::Integer)
    }

    #[test]
    fn small_matrices() {
        let c = ictx(2);
        let n2 = build_nn(&c, 2).unwrap();
        assert_eq!(n2.get(0, 0).to_string(), "0");
        assert_eq!(n2.get(0, 1).to_string(), "t2");
        assert_eq!(n2.get(1, 0).to_string(), "1");
        assert_eq!(n2.get(1, 1).to_string(), "t1");
        let c1 = ictx(1);
        assert_eq!(build_nn(&c1, 1).unwrap().get(0, 0).to_string(), "t1");
        let nt = build_nn_tilde(&c, 2).unwrap();
        let rows: Vec<Vec<String>> = (0..3).map(|r| (0..3).map(|k| nt.get(r, k).to_string()).collect()).collect();
        assert_eq!(rows, vec![vec!["0", "0", "0"], vec!["1", "0", "t2"], vec!["0", "1", "t1"]]);
        assert!(build_nn(&c, 0).is_err());
    }

    #[test]
    fn h_values() {
        assert_eq!(h_poly(2, 1, 0).unwrap().to_string(), "1");
        assert!(h_poly(2, 2, 1).unwrap() == TruncatedPolynomial::one(&PolyContext::new(2, 3, CoefficientMode::Integer)));
        let h23 = h_poly(2, 2, 3).unwrap();
        let c = h23.context().clone();
        assert_eq!(h23, TruncatedPolynomial::from_int_terms(&c, &[(&[0, 1], 1), (&[2, 0], 1)]));
        assert!(h_poly(2, 3, 1).is_err());
    }

    #[test]
    fn square_of_n2() {
        let c = ictx(2);
        let sq = build_nn(&c, 2).unwrap().pow(&c, 2).unwrap();
        let t = HPolynomialTable::new(&c, 4).unwrap();
        assert_eq!(sq, t.matrix_power_closed_form(2).unwrap());
        let e = |x: &[(&[u32], i64)]| TruncatedPolynomial::from_int_terms(&c, x);
        assert_eq!(sq.get(0, 0), &e(&[(&[0, 1], 1)]));
        assert_eq!(sq.get(0, 1), &e(&[(&[1, 1], 1)]));
        assert_eq!(sq.get(1, 0), &e(&[(&[1, 0], 1)]));
        assert_eq!(sq.get(1, 1), &e(&[(&[0, 1], 1), (&[2, 0], 1)]));
    }

    #[test]
    fn j_ideal_strings() {
        let s = |n, m| {
            build_j_ideal(n, m)
                .unwrap()
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(s(1, 3), vec!["t1^3"]);
        assert_eq!(s(2, 3), vec!["t1*t2", "t2 + t1^2"]);
        assert_eq!(s(2, 4), vec!["t2^2 + t1^2*t2", "2*t1*t2 + t1^3"]);
    }

    #[test]
    fn power_lemma_small() {
        for n in 1..=3 {
            let r = verify_power_lemma(n, 8).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
