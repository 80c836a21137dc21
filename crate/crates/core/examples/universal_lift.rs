//! The universal lift of `V_{2,0}` over `N(2, 9)`: its matrices, the relations
//! modulo `J`, and the minimality of `J`.
//!
//! `cargo run --example universal_lift`

use nakayama_udr::deformation::{verify_lift_relations, verify_minimality, UniversalLift};
use nakayama_udr::nakayama::NakayamaSpec;
use nakayama_udr::ring::CoefficientMode;

fn main() -> nakayama_udr::Result<()> {
    let spec = NakayamaSpec::new(2, 9)?;
    let lift = UniversalLift::build(spec, 2, 0, CoefficientMode::Rational)?;
    for (v, a) in lift.free.arrows().iter().enumerate() {
        println!("arrow {}:\n{a}", v + 1);
    }
    println!("deformed arrow: {}", lift.deformed_arrow);
    println!("quotient dimension: {}", lift.model.dimension());
    print!("{}", verify_lift_relations(&lift)?);
    print!("{}", verify_minimality(spec, 2, 0, CoefficientMode::Rational)?);
    Ok(())
}
