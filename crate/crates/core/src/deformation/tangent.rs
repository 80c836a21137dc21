use super::lift::UniversalLift;
use crate::error::Result;
use crate::matrix::Matrix;
use crate::nakayama::ext::{dual_number_lift, strictly_equivalent_first_order, tangent_ranks, FirstOrderLift};
use crate::report::Report;
use crate::ring::Monomial;

/// The specialization `t_s -> ε`, `t_j -> 0` for `j != s`, over `F_p[ε]`.
pub fn specialize_tangent(lift: &UniversalLift, s: usize, p: u64) -> Result<FirstOrderLift> {
    let ts = Monomial::var(lift.n, s);
    let base = lift.reduction(p)?;
    let mut perturbation = Vec::with_capacity(lift.spec.e());
    for a in lift.free.arrows() {
        let mut x = Matrix::filled(a.rows(), a.cols(), 0u64);
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                let q = a.get(r, c);
                x.set(r, c, q.mode().residue(&q.coefficient(&ts), p)?);
            }
        }
        perturbation.push(x);
    }
    FirstOrderLift::new(base, perturbation, p)
}

/// Each tangent specialization is strictly equivalent to the lift built from
/// the corresponding extension, and the `n` classes are independent.
pub fn verify_tangent_specializations(lift: &UniversalLift, p: u64) -> Result<Report> {
    let mut report = Report::new();
    let mut specialized = Vec::new();
    for s in 1..=lift.n {
        let spec_s = specialize_tangent(lift, s, p)?;
        let reference = dual_number_lift(lift.spec, lift.n, lift.i, s, p)?;
        report.push(
            format!("s={s}/reduces mod eps"),
            spec_s.base == reference.base,
            "specialization modulo eps is rho_n,i",
        );
        report.push(
            format!("s={s}/strictly equivalent to rho_n,i,s"),
            strictly_equivalent_first_order(&spec_s, &reference)?,
            "solved (I + eps Y) tau = tau' (I + eps Y)",
        );
        specialized.push(spec_s);
    }
    let (cob, total) = tangent_ranks(&specialized)?;
    report.push(
        "tangent classes independent",
        total == cob + lift.n,
        format!("coboundary rank {cob}, with specializations {total}, n = {}", lift.n),
    );
    let mut pairwise = true;
    for a in 0..specialized.len() {
        for b in a + 1..specialized.len() {
            pairwise &= !strictly_equivalent_first_order(&specialized[a], &specialized[b])?;
        }
    }
    report.push("distinct s give inequivalent lifts", pairwise, format!("{} specializations", lift.n));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nakayama::NakayamaSpec;
    use crate::ring::CoefficientMode;

    #[test]
    fn tangent_grid() {
        for e in 1..=3 {
            for ell in 2..=9 {
                let spec = NakayamaSpec::new(e, ell).unwrap();
                for n in 1..=2 {
                    for i in 0..e {
                        if 2 * (n * e + i) > ell {
                            continue;
                        }
                        let lift = UniversalLift::build(spec, n, i, CoefficientMode::Prime(2)).unwrap();
                        let r = verify_tangent_specializations(&lift, 2).unwrap();
                        assert!(r.passed(), "e={e} ell={ell} n={n} i={i}\n{r}");
                    }
                }
            }
        }
    }
}
