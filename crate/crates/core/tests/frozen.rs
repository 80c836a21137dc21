//! Reference values computed once and frozen.

use nakayama_udr::deformation::udr_presentation;
use nakayama_udr::nakayama::{ext1_dim, NakayamaSpec, UniserialModule};
use nakayama_udr::oracle::{def_classes, tangent_dimension, OracleCaps};
use nakayama_udr::ring::{ArtinTestRing, CoefficientMode, QuotientModel};
use nakayama_udr::structured::{j_ideal, presentation_context};

fn module(e: usize, ell: usize, top: usize, len: usize) -> UniserialModule {
    UniserialModule::new(NakayamaSpec::new(e, ell).unwrap(), top, len).unwrap()
}

fn ring(e: usize, ell: usize, top: usize, len: usize) -> (String, usize) {
    let p = udr_presentation(&module(e, ell, top, len), CoefficientMode::Integer).unwrap();
    (p.ring_string(), p.k_dimension)
}

#[test]
fn presentations() {
    let cases = [
        ((2, 5, 1, 2), "k[[t1]]/(t1^2)", 2),
        ((1, 3, 1, 1), "k[[t1]]/(t1^3)", 3),
        ((3, 7, 1, 3), "k[[t1]]/(t1^2)", 2),
        ((3, 10, 1, 1), "k", 1),
        ((1, 5, 1, 2), "k[[t1,t2]]/(2*t1*t2^2 + t1^3*t2, t2^2 + 3*t1^2*t2 + t1^4)", 10),
        ((2, 9, 2, 4), "k[[t1,t2]]/(t2^2 + t1^2*t2, 2*t1*t2 + t1^3)", 6),
        (
            (1, 8, 1, 2),
            "k[[t1,t2]]/(t2^4 + 6*t1^2*t2^3 + 5*t1^4*t2^2 + t1^6*t2, 4*t1*t2^3 + 10*t1^3*t2^2 + 6*t1^5*t2 + t1^7)",
            28,
        ),
    ];
    for ((e, ell, top, len), want, dim) in cases {
        assert_eq!(ring(e, ell, top, len), (want.to_string(), dim), "N({e}, {ell}) top {top} len {len}");
    }
}

#[test]
fn one_vertex_dimensions_are_binomial() {
    // dim k[[t]]/J_n(8) for n = 1..4.
    for (len, dim) in [(1, 8), (2, 28), (3, 56), (4, 70)] {
        assert_eq!(ring(1, 8, 1, len).1, dim);
    }
}

#[test]
fn quotient_basis_of_j_2_4() {
    let ctx = presentation_context(2, CoefficientMode::Rational);
    let model = QuotientModel::build(&j_ideal(&ctx, 4).unwrap(), ctx.truncation()).unwrap();
    assert_eq!(model.hilbert_function(), &[1, 1, 2, 1, 1]);
    assert_eq!(model.witness(), Some(7));
    let basis: Vec<String> = model.standard_monomials().iter().map(|m| m.to_string()).collect();
    assert_eq!(basis, ["1", "t1", "t1^2", "t2", "t1*t2", "t2^2"]);
}

#[test]
fn oracle_counts() {
    let caps = OracleCaps::default();
    let v = module(1, 4, 1, 2);
    for (name, count) in [("field", 1), ("dual-numbers", 4), ("u3", 8), ("xy2", 16)] {
        let r = ArtinTestRing::by_name(name, 2).unwrap();
        assert_eq!(def_classes(&v, &r, caps).unwrap().count(), count, "{name}");
    }
    let v = module(2, 6, 1, 3);
    assert_eq!(def_classes(&v, &ArtinTestRing::by_name("xy2", 2).unwrap(), caps).unwrap().count(), 4);
}

#[test]
fn tangent_dimensions() {
    for (e, ell, len, t) in [(1, 4, 2, 2), (1, 7, 3, 3), (2, 5, 2, 1), (3, 7, 2, 0)] {
        let v = module(e, ell, 1, len);
        for p in [2, 3] {
            assert_eq!(tangent_dimension(&v, p, OracleCaps::default()).unwrap(), t);
            assert_eq!(ext1_dim(&v, p).unwrap(), t);
        }
    }
}
