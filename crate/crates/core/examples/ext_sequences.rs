//! `Ext^1(V, V)` by counting and by an intertwiner solve, and the explicit
//! extensions that span it.
//!
//! `cargo run --example ext_sequences`

use nakayama_udr::nakayama::{ext1_dim, hom_dim, verify_ext_sequences, NakayamaSpec, UniserialModule};

fn main() -> nakayama_udr::Result<()> {
    let spec = NakayamaSpec::new(2, 9)?;
    for len in 1..9 {
        let v = UniserialModule::new(spec, 1, len)?;
        println!("{v}: dim Hom = {}, dim Ext^1 = {}", hom_dim(&v, &v, 2)?, ext1_dim(&v, 2)?);
    }
    let report = verify_ext_sequences(spec, 2, 0, 3)?;
    print!("{report}");
    Ok(())
}
