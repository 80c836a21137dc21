use super::centralizer::centralizer_structure;
use super::lift::{verify_lift_relations, verify_minimality, UniversalLift};
use super::presentation::udr_presentation;
use super::tangent::verify_tangent_specializations;
use crate::error::Result;
use crate::nakayama::hom::ext1_report;
use crate::nakayama::{NakayamaSpec, UniserialModule};
use crate::report::Report;
use crate::ring::CoefficientMode;

/// Prime used for checks that need a finite field when `mode` has none.
fn check_prime(mode: CoefficientMode) -> u64 {
    match mode {
        CoefficientMode::Prime(p) => p,
        _ => 2,
    }
}

/// Every check on the normalized lift `ρ_{U,n,i}`: relations, minimality,
/// centralizer and tangent specializations.
pub fn verify_normalized(spec: NakayamaSpec, n: usize, i: usize, mode: CoefficientMode) -> Result<Report> {
    let lift = UniversalLift::build(spec, n, i, mode)?;
    let mut report = Report::new();
    report.extend_prefixed("lift", verify_lift_relations(&lift)?);
    report.extend_prefixed("minimality", verify_minimality(spec, n, i, mode)?);
    report.extend_prefixed("centralizer", centralizer_structure(&lift)?.1);
    let p = check_prime(mode);
    let tangent_lift = match mode {
        CoefficientMode::Prime(_) => lift,
        _ => UniversalLift::build(spec, n, i, CoefficientMode::Prime(p))?,
    };
    report.extend_prefixed("tangent", verify_tangent_specializations(&tangent_lift, p)?);
    Ok(report)
}

/// Checks attached to the presentation of one module, without the lift:
/// `Ext^1`, invariance under `Ω`, and the Artinian witness.
pub fn verify_presentation(v: &UniserialModule, mode: CoefficientMode) -> Result<Report> {
    let mut report = Report::new();
    let pres = udr_presentation(v, mode)?;
    if pres.projective {
        report.push("projective gives k", pres.n == 0 && pres.k_dimension == 1, pres.ring_string());
        return Ok(report);
    }
    report.extend_prefixed("ext1", ext1_report(v, check_prime(mode))?);
    let omega = udr_presentation(&v.syzygy()?, mode)?;
    report.push(
        "Omega V has the same presentation",
        pres.same_presentation(&omega),
        format!("{} vs {}", pres.ring_string(), omega.ring_string()),
    );
    if pres.n >= 1 {
        report.push(
            "m_V at least 2",
            pres.m_v.is_some_and(|m| m >= 2),
            format!("m_V = {}", pres.m_v.unwrap_or(0)),
        );
    }
    if pres.n == 1 {
        report.push(
            "one variable: dimension is m_V",
            Some(pres.k_dimension) == pres.m_v,
            format!("dim {} for {}", pres.k_dimension, pres.ring_string()),
        );
    }
    Ok(report)
}

/// [`verify_presentation`] followed by [`verify_normalized`] when `n >= 1`.
pub fn verify_module(v: &UniserialModule, mode: CoefficientMode) -> Result<Report> {
    let mut report = verify_presentation(v, mode)?;
    if !v.is_projective() {
        let norm = v.normalize()?.module;
        if norm.n() >= 1 {
            report.extend(verify_normalized(v.spec(), norm.n(), norm.i(), mode)?);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_module_of_small_algebras() {
        for (e, ell) in [(1, 4), (2, 5), (3, 7)] {
            let spec = NakayamaSpec::new(e, ell).unwrap();
            for top in 1..=e {
                for len in 1..=ell {
                    let v = UniserialModule::new(spec, top, len).unwrap();
                    let r = verify_module(&v, CoefficientMode::Rational).unwrap();
                    assert!(r.passed(), "{v}\n{r}");
                }
            }
        }
    }
}
