use crate::error::{Error, Result};
use crate::matrix::{CommRing, Matrix};
use crate::nakayama::rep::{build_rho, deformed_vertex, verify_rep, MatrixRep};
use crate::nakayama::spec::{NakayamaSpec, ThetaProfile};
use crate::report::Report;
use crate::ring::artin::{ArtinTestRing, Elem};
use crate::ring::homs::evaluate;
use crate::ring::{ideal_equal, CoefficientMode, IdealBasis, PolyContext, QuotientModel, TruncatedPolynomial};
use crate::structured::{j_ideal, presentation_context};
use std::sync::Arc;

use super::presentation::m_v;

/// `f_{n,i}` with entries in `k[[t_1..t_n]]`, before any quotient.
pub fn free_lift(ctx: &Arc<PolyContext>, spec: NakayamaSpec, n: usize, i: usize) -> Result<MatrixRep<TruncatedPolynomial>> {
    if ctx.nvars() != n {
        return Err(Error::DimensionMismatch(format!("{} variables for n = {n}", ctx.nvars())));
    }
    let mut rep = build_rho(ctx, spec, n, i)?;
    if n == 0 {
        return Ok(rep);
    }
    let e = spec.e();
    let theta = ThetaProfile::new(e, n, i);
    let v = deformed_vertex(e, i);
    let target = if v < e { v + 1 } else { 1 };
    let col = theta.offset(v) + theta.size(v) - 1;
    let mut a = rep.arrow(v).clone();
    // Rows of the block read t_n, t_{n-1}, ..., t_1 from the top.
    for r in 0..theta.size(target) {
        let row = theta.offset(target) + r;
        let entry = a.get(row, col) + &TruncatedPolynomial::var(ctx, n - r);
        a.set(row, col, entry);
    }
    rep.set_arrow(v, a)?;
    Ok(rep)
}

/// The lift `ρ_{U,n,i}` over `k[[t_1..t_n]]/J_{n,i}`.
#[derive(Clone, Debug)]
pub struct UniversalLift {
    pub spec: NakayamaSpec,
    pub n: usize,
    pub i: usize,
    pub model: QuotientModel,
    /// Entries as polynomials, unreduced.
    pub free: MatrixRep<TruncatedPolynomial>,
    /// Entries in normal form modulo the ideal.
    pub reduced: MatrixRep<TruncatedPolynomial>,
    /// The arrow `α_v`, `v ≡ i (mod e)`, that carries the deformation.
    pub deformed_arrow: usize,
}

impl UniversalLift {
    /// `f_{n,i}` over the quotient by `J_n(m_i)` in a field `mode`.
    pub fn build(spec: NakayamaSpec, n: usize, i: usize, mode: CoefficientMode) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n = 0: the lift is the representation itself over k".into()));
        }
        let ctx = presentation_context(n, mode.validate()?);
        let m = m_v(spec.mu(), spec.ell_prime(), i);
        Self::with_ideal(spec, n, i, &j_ideal(&ctx, m)?)
    }

    /// `f_{n,i}` over an arbitrary ideal, used for negative controls.
    pub fn with_ideal(spec: NakayamaSpec, n: usize, i: usize, ideal: &IdealBasis) -> Result<Self> {
        if i >= spec.e() || 2 * (n * spec.e() + i) > spec.ell() {
            return Err(Error::Domain(format!("(n, i) = ({n}, {i}) is outside the normalized range of {spec}")));
        }
        let ctx = ideal.context().clone();
        let model = QuotientModel::build(ideal, ctx.truncation())?;
        let free = free_lift(&ctx, spec, n, i)?;
        let reduced = free.try_map(|p| model.normal_form(p))?;
        Ok(UniversalLift {
            spec,
            n,
            i,
            model,
            free,
            reduced,
            deformed_arrow: deformed_vertex(spec.e(), i),
        })
    }

    /// The lift pushed along `t_j -> values[j-1]` into a test ring.
    pub fn specialize(&self, ring: &ArtinTestRing, values: &[Elem]) -> Result<MatrixRep<Elem>> {
        if values.len() != self.n {
            return Err(Error::DimensionMismatch(format!("{} values for {} variables", values.len(), self.n)));
        }
        self.free.try_map(|p| evaluate(p, ring, values))
    }

    /// The lift with every `t_j` set to 0, over `F_p`.
    pub fn reduction(&self, p: u64) -> Result<MatrixRep<u64>> {
        self.free.try_map(|q| q.mode().residue(&q.constant_term(), p))
    }
}

/// The homomorphism relations of the lift inside the quotient model.
pub fn verify_lift_relations(lift: &UniversalLift) -> Result<Report> {
    let model = &lift.model;
    let mut report = Report::new();
    report.push(
        "quotient model certified",
        model.is_certified(),
        format!("dimension {}, witness {:?}", model.dimension(), model.witness()),
    );
    let base = verify_rep(model, &lift.reduced)?;
    for c in base.checks.into_iter().filter(|c| !c.name.starts_with("relation")) {
        report.push(c.name, c.pass, c.detail);
    }
    for v in lift.spec.vertices() {
        let prod = lift.reduced.path(model, v, lift.spec.ell())?;
        let bad: Vec<String> = prod
            .support(model)
            .into_iter()
            .take(3)
            .map(|(r, c)| format!("({}, {}) = {}", r + 1, c + 1, prod.get(r, c)))
            .collect();
        report.push(
            format!("relation E{v}"),
            bad.is_empty(),
            if bad.is_empty() {
                "all entries vanish modulo the ideal".to_string()
            } else {
                format!("nonzero entries {}", bad.join("; "))
            },
        );
    }
    let p = match lift.model.context().mode() {
        CoefficientMode::Prime(p) => p,
        _ => 2,
    };
    let rho = build_rho(&crate::matrix::PrimeField(p), lift.spec, lift.n, lift.i)?;
    report.push("reduces to rho_n,i", lift.reduction(p)? == rho, "t_j -> 0");
    let ctx = lift.model.context();
    let plain = build_rho(ctx, lift.spec, lift.n, lift.i)?;
    let deviating: Vec<usize> = lift
        .spec
        .vertices()
        .filter(|&v| lift.free.arrow(v) != plain.arrow(v))
        .collect();
    report.push(
        "only the arrow at v = i mod e deviates",
        deviating == [lift.deformed_arrow],
        format!("deviating arrows {deviating:?}"),
    );
    Ok(report)
}

/// Entries of `E_v` computed without quotienting, as an ideal.
fn relation_entries(
    ctx: &Arc<PolyContext>,
    rep: &MatrixRep<TruncatedPolynomial>,
    vs: impl Iterator<Item = usize>,
) -> Result<IdealBasis> {
    let ell = rep.spec().ell();
    let mut gens = Vec::new();
    for v in vs {
        let prod: Matrix<TruncatedPolynomial> = rep.path(ctx, v, ell)?;
        gens.extend(prod.entries().iter().filter(|p| !ctx.is_zero(p)).cloned());
    }
    IdealBasis::new(ctx, gens)
}

/// Truncation at which membership of every generator in `ideals` is decided
/// exactly: one above the largest grade, capped at `d`. Valid because all
/// ideals involved are homogeneous for the weighted grading.
fn membership_truncation(d: u32, ideals: &[&IdealBasis]) -> u32 {
    let mut top = 0;
    for g in ideals.iter().flat_map(|i| i.generators()) {
        if !g.is_homogeneous() {
            return d;
        }
        top = top.max(g.high_grade().unwrap_or(0));
    }
    d.min(top + 1)
}

/// The entries of all `E_v` generate exactly `J_n(m_V)`, the entries of
/// `E_{v0}` with `v0 ≡ ℓ'` already do, and `h_{1,m_V}` cannot be dropped.
///
/// Everything is graded, so a truncation at the certified witness of `J` is
/// exact for the entries, and each membership test only needs the grades up
/// to the polynomial being tested.
pub fn verify_minimality(spec: NakayamaSpec, n: usize, i: usize, mode: CoefficientMode) -> Result<Report> {
    if n == 0 {
        return Err(Error::Domain("minimality needs n >= 1".into()));
    }
    let full = presentation_context(n, mode.validate()?);
    let m = m_v(spec.mu(), spec.ell_prime(), i);
    let j_full = j_ideal(&full, m)?;
    let model = QuotientModel::build(&j_full, full.truncation())?;
    let d = model
        .witness()
        .ok_or_else(|| Error::NotArtinianWithinBound { dmax: full.truncation(), last_dimension: model.dimension() })?;
    let ctx = full.derive(d, mode);
    let j = j_full.convert(&ctx)?;
    let rep = free_lift(&ctx, spec, n, i)?;
    let mut report = Report::new();
    let all = relation_entries(&ctx, &rep, spec.vertices())?;
    report.push(
        "entries of all E_v generate J",
        ideal_equal(&all, &j, membership_truncation(d, &[&all, &j]))?,
        format!("{} nonzero entries, truncation {d}", all.generators().len()),
    );
    let v0 = spec.vertex(spec.ell_prime() as i64);
    let single = relation_entries(&ctx, &rep, std::iter::once(v0))?;
    report.push(
        format!("entries of E{v0} generate J"),
        ideal_equal(&single, &j, membership_truncation(d, &[&single, &j]))?,
        format!("v0 = {v0} = l' mod e"),
    );
    let rest = j.without(0);
    let h1 = &j.generators()[0];
    let rest_model = QuotientModel::build(&rest, membership_truncation(d, &[&rest, &IdealBasis::new(&ctx, vec![h1.clone()])?]))?;
    report.push(
        "h_1 is not redundant",
        !rest_model.contains(h1)?,
        format!("h_1 = {h1}"),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structured::j_ideal;

    #[test]
    fn one_vertex_lift_shape() {
        let spec = NakayamaSpec::new(1, 5).unwrap();
        let lift = UniversalLift::build(spec, 2, 0, CoefficientMode::Rational).unwrap();
        let a: Vec<String> = lift.free.arrow(1).entries().iter().map(|p| p.to_string()).collect();
        assert_eq!(a, vec!["0", "t2", "1", "t1"]);
    }

    #[test]
    fn two_vertex_deforms_second_arrow() {
        let spec = NakayamaSpec::new(2, 5).unwrap();
        let lift = UniversalLift::build(spec, 1, 0, CoefficientMode::Rational).unwrap();
        assert_eq!(lift.deformed_arrow, 2);
        let r = verify_lift_relations(&lift).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn relations_on_grid() {
        for e in 1..=3 {
            for ell in 2..=9 {
                let spec = NakayamaSpec::new(e, ell).unwrap();
                for n in 1..=ell / e {
                    for i in 0..e {
                        if 2 * (n * e + i) > ell {
                            continue;
                        }
                        let lift = UniversalLift::build(spec, n, i, CoefficientMode::Rational).unwrap();
                        let r = verify_lift_relations(&lift).unwrap();
                        assert!(r.passed(), "e={e} ell={ell} n={n} i={i}\n{r}");
                        let r = verify_minimality(spec, n, i, CoefficientMode::Rational).unwrap();
                        assert!(r.passed(), "e={e} ell={ell} n={n} i={i}\n{r}");
                    }
                }
            }
        }
    }

    #[test]
    fn smaller_ideal_breaks_relations() {
        let spec = NakayamaSpec::new(2, 9).unwrap();
        for (n, i) in [(1, 0), (2, 0), (1, 1)] {
            let ctx = presentation_context(n, CoefficientMode::Rational);
            let m = m_v(spec.mu(), spec.ell_prime(), i);
            let lift = UniversalLift::with_ideal(spec, n, i, &j_ideal(&ctx, m + 1).unwrap()).unwrap();
            assert!(!verify_lift_relations(&lift).unwrap().passed());
        }
    }
}
