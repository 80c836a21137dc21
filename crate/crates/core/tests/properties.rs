//! Invariants that hold for every input, checked on random samples.

use nakayama_udr::cli::record::{InputEcho, ResultRecord};
use nakayama_udr::deformation::udr_presentation;
use nakayama_udr::nakayama::{syzygy_by_kernel, NakayamaSpec, UniserialModule};
use nakayama_udr::report::Report;
use nakayama_udr::ring::{ArtinTestRing, CoefficientMode, Monomial, QuotientModel, TruncatedPolynomial};
use nakayama_udr::structured::{j_ideal, presentation_context};
use proptest::prelude::*;

fn ring_from(index: usize, p: u64) -> ArtinTestRing {
    let rings = ArtinTestRing::catalog(p).unwrap();
    rings[index % rings.len()].clone()
}

fn element(r: &ArtinTestRing, raw: u64) -> u32 {
    (raw % r.size() as u64) as u32
}

/// A non-projective module of `N(e, ℓ)` picked from three raw numbers.
fn module(e: usize, ell: usize, top: usize, len: usize) -> UniserialModule {
    let spec = NakayamaSpec::new(e, ell).unwrap();
    UniserialModule::new(spec, 1 + top % e, 1 + len % (ell - 1)).unwrap()
}

fn poly(n: usize, terms: &[(Vec<u32>, i64)]) -> TruncatedPolynomial {
    let ctx = presentation_context(n, CoefficientMode::Rational);
    let mut p = TruncatedPolynomial::zero(&ctx);
    for (exps, c) in terms {
        let m = Monomial::from_exponents(exps[..n].to_vec());
        p = p.checked_add(&TruncatedPolynomial::monomial(&ctx, m, CoefficientMode::Rational.from_i64(*c))).unwrap();
    }
    p
}

fn terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 2), -5i64..6), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn test_rings_are_commutative_rings(idx in 0usize..5, p in prop::sample::select(vec![2u64, 3]), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let r = ring_from(idx, p);
        let (a, b, c) = (element(&r, a), element(&r, b), element(&r, c));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.mul(r.one(), a), a);
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
        match r.inv(a) {
            Some(x) => prop_assert_eq!(r.mul(a, x), r.one()),
            None => prop_assert!(r.in_max_ideal(a)),
        }
    }

    #[test]
    fn normal_form_is_an_idempotent_linear_map(m in 2usize..6, a in terms(), b in terms()) {
        let ctx = presentation_context(2, CoefficientMode::Rational);
        let model = QuotientModel::build(&j_ideal(&ctx, m).unwrap(), ctx.truncation()).unwrap();
        let (p, q) = (poly(2, &a), poly(2, &b));
        let np = model.normal_form(&p).unwrap();
        prop_assert_eq!(model.normal_form(&np).unwrap(), np.clone());
        let sum = model.normal_form(&p.checked_add(&q).unwrap()).unwrap();
        prop_assert_eq!(sum, np.checked_add(&model.normal_form(&q).unwrap()).unwrap());
        let prod = model.normal_form(&p.checked_mul(&q).unwrap()).unwrap();
        prop_assert_eq!(prod, model.mul(&np, &model.normal_form(&q).unwrap()).unwrap());
    }

    #[test]
    fn syzygy_shifts_by_the_algebra(e in 1usize..5, ell in 2usize..13, top in 0usize..8, len in 0usize..16) {
        let v = module(e, ell, top, len);
        let w = v.syzygy().unwrap();
        prop_assert_eq!(w.len() + v.len(), ell);
        prop_assert_eq!(w.syzygy().unwrap(), v.rotate(e * ell - ell % e));
        prop_assert_eq!(w.ar_distance().unwrap(), v.ar_distance().unwrap());
        prop_assert_eq!(syzygy_by_kernel(&v, 2).unwrap(), w);
    }

    #[test]
    fn presentation_ignores_syzygy_and_rotation(e in 1usize..5, ell in 2usize..10, top in 0usize..8, len in 0usize..16, shift in 0usize..8) {
        let v = module(e, ell, top, len);
        let pv = udr_presentation(&v, CoefficientMode::Integer).unwrap();
        let pw = udr_presentation(&v.syzygy().unwrap(), CoefficientMode::Integer).unwrap();
        let pr = udr_presentation(&v.rotate(shift), CoefficientMode::Integer).unwrap();
        prop_assert!(pv.same_presentation(&pw), "{} vs {}", pv.ring_string(), pw.ring_string());
        prop_assert!(pv.same_presentation(&pr));
        prop_assert_eq!(pv.n * e + pv.provenance.i, v.ar_distance().unwrap() + 1);
    }

    #[test]
    fn dual_number_points_count_the_tangent_space(e in 1usize..4, ell in 2usize..10, top in 0usize..8, len in 0usize..16, p in prop::sample::select(vec![2u64, 3, 5])) {
        let v = module(e, ell, top, len);
        let pres = udr_presentation(&v, CoefficientMode::Prime(p)).unwrap();
        let eps = ArtinTestRing::dual_numbers(p).unwrap();
        prop_assert_eq!(pres.count_homs(&eps, 1 << 20).unwrap(), p.pow(pres.n as u32));
    }

    #[test]
    fn result_records_round_trip_through_json(e in 1usize..4, ell in 2usize..9, top in 0usize..8, len in 0usize..16, checks in prop::collection::vec(("[a-z ]{1,12}", any::<bool>(), "[ -~]{0,20}"), 0..5)) {
        let v = module(e, ell, top, len);
        let pres = udr_presentation(&v, CoefficientMode::Integer).unwrap();
        let input = InputEcho { command: "ring".into(), e: Some(e), ell: Some(ell), mode: "integer".into(), ..Default::default() };
        let mut rec = ResultRecord::new(input).with_presentation(&pres);
        let mut report = Report::new();
        for (name, pass, detail) in checks {
            report.push(name, pass, detail);
        }
        rec.add_report(report);
        let json = serde_json::to_string(&rec).unwrap();
        let back: ResultRecord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, rec);
    }
}
