//! Universal deformation rings for a few uniserial modules.
//!
//! `cargo run --example ring_presentation`

use nakayama_udr::deformation::udr_presentation;
use nakayama_udr::nakayama::{NakayamaSpec, UniserialModule};
use nakayama_udr::ring::CoefficientMode;

fn main() -> nakayama_udr::Result<()> {
    for (e, ell, top, len) in [(1, 5, 1, 2), (2, 5, 1, 2), (2, 9, 2, 4), (3, 7, 1, 3), (2, 6, 1, 6)] {
        let v = UniserialModule::new(NakayamaSpec::new(e, ell)?, top, len)?;
        let pres = udr_presentation(&v, CoefficientMode::Integer)?;
        let m_v = pres.m_v.map(|m| m.to_string()).unwrap_or_else(|| "-".into());
        println!("{v}: R = {}", pres.ring_string());
        println!("    n = {}, m_V = {m_v}, dim_k R = {}", pres.n, pres.k_dimension);
        let prov = &pres.provenance;
        println!(
            "    mu = {}, l' = {}, l_V = {}, i = {}, Omega applied: {}, rotation {}",
            prov.mu, prov.ell_prime, prov.ell_v, prov.i, prov.applied_omega, prov.rotation
        );
    }
    Ok(())
}
