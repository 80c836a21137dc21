//! `|Def(V, F_p[eps])|` by orbit enumeration, compared with `dim Ext^1`.
//!
//! `cargo run --release --example tangent_space`

use nakayama_udr::nakayama::{ext1_dim, NakayamaSpec, UniserialModule};
use nakayama_udr::oracle::{tangent_dimension, OracleCaps};

fn main() -> nakayama_udr::Result<()> {
    for p in [2, 3] {
        for (e, ell, len) in [(1, 4, 2), (1, 7, 3), (2, 5, 2), (3, 7, 2)] {
            let v = UniserialModule::new(NakayamaSpec::new(e, ell)?, 1, len)?;
            let t = tangent_dimension(&v, p, OracleCaps::default())?;
            println!("p = {p}, {v}: tangent dimension {t}, dim Ext^1 = {}", ext1_dim(&v, p)?);
        }
    }
    Ok(())
}
