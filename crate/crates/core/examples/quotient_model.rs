//! A certified monomial basis of `k[[t1, t2]]/J_2(4)` and some normal forms.
//!
//! `cargo run --example quotient_model`

use nakayama_udr::ring::{CoefficientMode, QuotientModel, TruncatedPolynomial};
use nakayama_udr::structured::{j_ideal, presentation_context};

fn main() -> nakayama_udr::Result<()> {
    let ctx = presentation_context(2, CoefficientMode::Rational);
    let j = j_ideal(&ctx, 4)?;
    for g in j.generators() {
        println!("generator {g}");
    }
    let model = QuotientModel::build(&j, ctx.truncation())?;
    println!("certified: {}, witness grade {:?}", model.is_certified(), model.witness());
    println!("dimension {} with Hilbert function {:?}", model.dimension(), model.hilbert_function());
    let basis: Vec<String> = model.standard_monomials().iter().map(|m| m.to_string()).collect();
    println!("standard monomials: {}", basis.join(", "));
    let t1 = TruncatedPolynomial::var(&ctx, 1);
    let t2 = TruncatedPolynomial::var(&ctx, 2);
    for (name, p) in [("t1^4", t1.pow(4)), ("t2^2", t2.pow(2)), ("t1^2 t2", t1.pow(2).checked_mul(&t2)?)] {
        println!("NF({name}) = {}", model.normal_form(&p)?);
    }
    Ok(())
}
