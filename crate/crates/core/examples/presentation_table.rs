//! Every indecomposable module of `N(2, 7)` with its ring, its AR distance and
//! the ring of its syzygy.
//!
//! `cargo run --example presentation_table`

use nakayama_udr::deformation::udr_presentation;
use nakayama_udr::nakayama::{NakayamaSpec, UniserialModule};
use nakayama_udr::ring::CoefficientMode;

fn main() -> nakayama_udr::Result<()> {
    let spec = NakayamaSpec::new(2, 7)?;
    for top in 1..=spec.e() {
        for len in 1..spec.ell() {
            let v = UniserialModule::new(spec, top, len)?;
            let w = v.syzygy()?;
            let pv = udr_presentation(&v, CoefficientMode::Integer)?;
            let pw = udr_presentation(&w, CoefficientMode::Integer)?;
            println!(
                "{v}  d_V = {}  {}  Omega = {w}  same: {}",
                v.ar_distance()?,
                pv.ring_string(),
                pv.same_presentation(&pw)
            );
        }
    }
    Ok(())
}
