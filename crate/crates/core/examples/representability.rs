//! Brute force: lifts of `V` over small Artinian rings up to strict
//! equivalence, against local homomorphisms out of the presented ring.
//!
//! `cargo run --release --example representability`

use nakayama_udr::deformation::udr_presentation;
use nakayama_udr::nakayama::{NakayamaSpec, UniserialModule};
use nakayama_udr::oracle::{check_representability, def_classes, OracleCaps};
use nakayama_udr::ring::{ArtinTestRing, CoefficientMode};

fn main() -> nakayama_udr::Result<()> {
    let caps = OracleCaps::default();
    for (e, ell, len) in [(1, 4, 2), (2, 5, 2), (2, 6, 3)] {
        let v = UniserialModule::new(NakayamaSpec::new(e, ell)?, 1, len)?;
        let pres = udr_presentation(&v, CoefficientMode::Prime(2))?;
        println!("{v}: R = {}", pres.ring_string());
        for ring in ArtinTestRing::catalog(2)? {
            let classes = def_classes(&v, &ring, caps)?;
            let homs = pres.count_homs(&ring, caps.candidates)?;
            let ok = check_representability(&v, &pres, &ring, caps)?.passed();
            println!(
                "    {:<12} {} classes ({:?}), {homs} homomorphisms, pass: {ok}",
                ring.name(),
                classes.count(),
                classes.mode
            );
        }
    }
    Ok(())
}
