//! Powers of the structured matrix `N_n` from the `h`-polynomial table,
//! checked against repeated multiplication.
//!
//! `cargo run --example power_lemma`

use nakayama_udr::ring::{CoefficientMode, PolyContext};
use nakayama_udr::structured::{build_nn, verify_power_lemma, HPolynomialTable};

fn main() -> nakayama_udr::Result<()> {
    let ctx = PolyContext::weighted(3, 32, CoefficientMode::Integer);
    let n3 = build_nn(&ctx, 3)?;
    println!("N_3 =\n{n3}");
    let table = HPolynomialTable::new(&ctx, 6)?;
    let closed = table.matrix_power_closed_form(4)?;
    println!("N_3^4 from the table =\n{closed}");
    println!("equals the direct product: {}", closed == n3.pow(&ctx, 4)?);
    for a in 1..=3 {
        println!("h_{a},4 = {}", table.h(a, 4)?);
    }
    let report = verify_power_lemma(4, 8)?;
    println!("power lemma n = 4, nu <= 8: {} checks, passed: {}", report.len(), report.passed());
    Ok(())
}
