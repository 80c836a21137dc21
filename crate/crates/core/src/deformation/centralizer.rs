use super::lift::UniversalLift;
use crate::error::{Error, Result};
use crate::matrix::{CommRing, Matrix};
use crate::nakayama::spec::ThetaProfile;
use crate::report::Report;
use crate::ring::{QuotientModel, TruncatedPolynomial};
use crate::structured::{build_nn, build_nn_tilde};
use serde::Serialize;
use std::collections::BTreeMap;

/// The centralizer of the universal lift as found by elimination.
#[derive(Clone, Debug, Serialize)]
pub struct CentralizerDescription {
    /// `θ(1, n, i)`, the length of the parameter vector `c`.
    pub parameters: usize,
    /// Matrix positions (0-based) left free by the elimination.
    pub free_positions: Vec<(usize, usize)>,
    /// `M(c)` or `M'(c)` for each diagonal block.
    pub block_recipe: Vec<String>,
    pub k_dimension: usize,
}

type Form = BTreeMap<usize, TruncatedPolynomial>;

/// Inverse of `u` in the Artinian quotient if its constant term is nonzero.
fn unit_inverse(model: &QuotientModel, u: &TruncatedPolynomial) -> Result<Option<TruncatedPolynomial>> {
    let mode = u.mode();
    let c0 = u.constant_term();
    if mode.is_zero(&c0) {
        return Ok(None);
    }
    let c0_inv = mode.inv(&c0)?;
    let one = model.one();
    // u = c0 (1 + x) with x nilpotent.
    let x = model.normal_form(&u.scale(&c0_inv).checked_sub(&one)?)?;
    let minus_x = x.neg();
    let mut term = one.clone();
    let mut acc = one;
    for _ in 0..=model.dimension() {
        term = model.mul(&term, &minus_x)?;
        if term.is_zero() {
            return Ok(Some(acc.scale(&c0_inv)));
        }
        acc = acc.checked_add(&term)?;
    }
    Err(Error::Internal(format!("{u} is not invertible in a nilpotent way")))
}

fn add_scaled(model: &QuotientModel, target: &mut Form, src: &Form, factor: &TruncatedPolynomial) -> Result<()> {
    for (&k, c) in src {
        let prod = model.mul(c, factor)?;
        let sum = match target.get(&k) {
            Some(old) => old.checked_add(&prod)?,
            None => prod,
        };
        if sum.is_zero() {
            target.remove(&k);
        } else {
            target.insert(k, sum);
        }
    }
    Ok(())
}

/// Solves `Σ τ(g) = τ(g) Σ` over the quotient by eliminating with unit pivots.
///
/// Returns the free variables and, for every solved variable, its expression
/// in them, together with the residual equations that had no unit pivot.
fn eliminate(
    model: &QuotientModel,
    gens: &[&Matrix<TruncatedPolynomial>],
    d: usize,
    keep_free: &[usize],
) -> Result<(Vec<usize>, BTreeMap<usize, Form>, Vec<Form>)> {
    let mut equations: Vec<Form> = Vec::new();
    for g in gens {
        for r in 0..d {
            for c in 0..d {
                let mut eq = Form::new();
                for k in 0..d {
                    let a = g.get(k, c);
                    if !a.is_zero() {
                        add_scaled(model, &mut eq, &Form::from([(r * d + k, model.one())]), a)?;
                    }
                    let b = g.get(r, k);
                    if !b.is_zero() {
                        add_scaled(model, &mut eq, &Form::from([(k * d + c, model.one())]), &b.neg())?;
                    }
                }
                if !eq.is_empty() {
                    equations.push(eq);
                }
            }
        }
    }
    let mut solved: BTreeMap<usize, Form> = BTreeMap::new();
    loop {
        // Prefer variables outside `keep_free`, then larger indices.
        let mut best: Option<((bool, usize), usize)> = None;
        for (qi, eq) in equations.iter().enumerate() {
            for (&var, coef) in eq {
                if coef.mode().is_zero(&coef.constant_term()) {
                    continue;
                }
                let key = (!keep_free.contains(&var), var);
                if best.as_ref().map(|b| key > b.0).unwrap_or(true) {
                    best = Some((key, qi));
                }
            }
        }
        let Some(((_, var), qi)) = best else { break };
        let inv = unit_inverse(model, &equations[qi][&var])?.expect("unit pivot");
        let eq = equations.swap_remove(qi);
        // var = -inv * (eq - coef*var)
        let mut expr = Form::new();
        let mut rest = eq.clone();
        rest.remove(&var);
        add_scaled(model, &mut expr, &rest, &inv.neg())?;
        let substitute = |form: &mut Form| -> Result<()> {
            if let Some(c) = form.remove(&var) {
                add_scaled(model, form, &expr, &c)?;
            }
            Ok(())
        };
        for f in equations.iter_mut() {
            substitute(f)?;
        }
        for f in solved.values_mut() {
            substitute(f)?;
        }
        equations.retain(|f| !f.is_empty());
        solved.insert(var, expr);
    }
    let free: Vec<usize> = (0..d * d).filter(|v| !solved.contains_key(v)).collect();
    Ok((free, solved, equations))
}

/// `M_θ`: `N_n` for `i = 0`, `Ñ_n` otherwise, in normal form.
fn companion(lift: &UniversalLift) -> Result<Matrix<TruncatedPolynomial>> {
    let ctx = lift.model.context();
    let m = if lift.i == 0 { build_nn(ctx, lift.n)? } else { build_nn_tilde(ctx, lift.n)? };
    m.try_map(|p| lift.model.normal_form(p))
}

/// `M(c)`: column `b` is `M_θ^{b-1} c`.
fn m_of(model: &QuotientModel, comp: &Matrix<TruncatedPolynomial>, c: &[TruncatedPolynomial]) -> Result<Matrix<TruncatedPolynomial>> {
    let t = c.len();
    let mut out = Matrix::zeros(model, t, t);
    let mut col = Matrix::from_rows(c.iter().map(|x| vec![x.clone()]).collect());
    for b in 0..t {
        for r in 0..t {
            out.set(r, b, col.get(r, 0).clone());
        }
        col = comp.mul(model, &col)?;
    }
    Ok(out)
}

/// The block-diagonal matrix with blocks `M(c)` and `M'(c)`.
pub fn recipe_matrix(lift: &UniversalLift, c: &[TruncatedPolynomial]) -> Result<Matrix<TruncatedPolynomial>> {
    let e = lift.spec.e();
    let theta = ThetaProfile::new(e, lift.n, lift.i);
    let model = &lift.model;
    let m = m_of(model, &companion(lift)?, c)?;
    let m_prime = m.block(1, 1, m.rows() - 1, m.cols() - 1);
    let mut sigma = Matrix::zeros(model, theta.total(), theta.total());
    for a in 1..=e {
        let block = if lift.i == 0 || a <= lift.i { &m } else { &m_prime };
        sigma.put_block(theta.offset(a), theta.offset(a), block);
    }
    Ok(sigma)
}

fn commutes(lift: &UniversalLift, sigma: &Matrix<TruncatedPolynomial>) -> Result<bool> {
    let model = &lift.model;
    for g in lift.reduced.generators() {
        if sigma.mul(model, g)? != g.mul(model, sigma)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Computes the centralizer of the universal lift and checks it against the
/// `M(c)` / `M'(c)` description.
pub fn centralizer_structure(lift: &UniversalLift) -> Result<(CentralizerDescription, Report)> {
    let model = &lift.model;
    let d = lift.reduced.dim();
    let theta = ThetaProfile::new(lift.spec.e(), lift.n, lift.i);
    let t1 = theta.size(1);
    let first_column: Vec<usize> = (0..t1).map(|r| r * d).collect();
    let gens: Vec<&Matrix<TruncatedPolynomial>> = lift.reduced.generators().collect();
    let (free, solved, residual) = eliminate(model, &gens, d, &first_column)?;
    let mut report = Report::new();
    report.push(
        "residual conditions vanish",
        residual.is_empty(),
        format!("{} equations without a unit pivot remain nonzero", residual.len()),
    );
    report.push(
        "free parameters are the first column of block 1",
        free == first_column,
        format!("free positions {:?}", free.iter().map(|v| (v / d + 1, v % d + 1)).collect::<Vec<_>>()),
    );
    report.push(
        "parameter count is theta(1,n,i)",
        free.len() == t1,
        format!("{} free, theta(1,n,i) = {t1}", free.len()),
    );
    let zero = model.zero();
    let mut recipe_ok = true;
    let mut recipe_commutes = true;
    for (b, &fv) in free.iter().enumerate().take(t1) {
        let mut solution = Matrix::zeros(model, d, d);
        for v in 0..d * d {
            let val = if v == fv {
                model.one()
            } else if let Some(form) = solved.get(&v) {
                form.get(&fv).cloned().unwrap_or_else(|| zero.clone())
            } else {
                zero.clone()
            };
            solution.set(v / d, v % d, val);
        }
        let c: Vec<TruncatedPolynomial> = (0..t1).map(|r| if r == b { model.one() } else { zero.clone() }).collect();
        let recipe = recipe_matrix(lift, &c)?;
        recipe_ok &= recipe == solution;
        recipe_commutes &= commutes(lift, &recipe)?;
    }
    report.push("solved centralizer matches M(c), M'(c)", recipe_ok, "one check per basis vector of c");
    report.push("recipe matrices commute with the lift", recipe_commutes, "Sigma(e_b) tau = tau Sigma(e_b)");
    report.push("identity commutes", commutes(lift, &Matrix::identity(model, d))?, "trivial");
    let mut scalars = true;
    for j in 1..=lift.n {
        let t = model.normal_form(&TruncatedPolynomial::var(model.context(), j))?;
        scalars &= commutes(lift, &Matrix::identity(model, d).scale(model, &t))?;
    }
    report.push("t_j I commutes", scalars, format!("j = 1..{}", lift.n));
    let k_dimension = free.len() * model.dimension();
    report.push(
        "k-dimension is theta(1,n,i) dim R",
        k_dimension == t1 * model.dimension(),
        format!("{k_dimension} = {} * {}", free.len(), model.dimension()),
    );
    let block_recipe = (1..=lift.spec.e())
        .map(|a| if lift.i == 0 || a <= lift.i { "M(c)".to_string() } else { "M'(c)".to_string() })
        .collect();
    let desc = CentralizerDescription {
        parameters: t1,
        free_positions: free.iter().map(|v| (v / d, v % d)).collect(),
        block_recipe,
        k_dimension,
    };
    Ok((desc, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nakayama::NakayamaSpec;
    use crate::ring::CoefficientMode;

    #[test]
    fn small_example() {
        let spec = NakayamaSpec::new(2, 5).unwrap();
        let lift = UniversalLift::build(spec, 1, 0, CoefficientMode::Prime(2)).unwrap();
        let (desc, report) = centralizer_structure(&lift).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!((desc.parameters, desc.k_dimension), (1, 2));
    }

    #[test]
    fn grid() {
        for e in 1..=3 {
            for ell in 2..=9 {
                let spec = NakayamaSpec::new(e, ell).unwrap();
                for n in 1..=ell / e {
                    for i in 0..e {
                        if 2 * (n * e + i) > ell {
                            continue;
                        }
                        let lift = UniversalLift::build(spec, n, i, CoefficientMode::Rational).unwrap();
                        let (_, r) = centralizer_structure(&lift).unwrap();
                        assert!(r.passed(), "e={e} ell={ell} n={n} i={i}\n{r}");
                    }
                }
            }
        }
    }
}
