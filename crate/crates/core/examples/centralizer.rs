//! The centralizer of a universal lift, solved by elimination and compared
//! with the block recipe `M(c)`, `M'(c)`.
//!
//! `cargo run --example centralizer`

use nakayama_udr::deformation::{centralizer_structure, UniversalLift};
use nakayama_udr::nakayama::NakayamaSpec;
use nakayama_udr::ring::CoefficientMode;

fn main() -> nakayama_udr::Result<()> {
    for (e, ell, n, i) in [(2, 9, 2, 0), (3, 10, 1, 1), (3, 11, 1, 2)] {
        let spec = NakayamaSpec::new(e, ell)?;
        let lift = UniversalLift::build(spec, n, i, CoefficientMode::Rational)?;
        let (desc, report) = centralizer_structure(&lift)?;
        println!("{spec} n={n} i={i}: {} parameters, blocks {:?}", desc.parameters, desc.block_recipe);
        println!("    k-dimension {}, all checks pass: {}", desc.k_dimension, report.passed());
    }
    Ok(())
}
