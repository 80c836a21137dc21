//! Centralizers of lifts surject along every small extension in the catalog.
//!
//! `cargo run --release --example centralizer_lifting`

use nakayama_udr::nakayama::{NakayamaSpec, UniserialModule};
use nakayama_udr::oracle::{check_centralizer_lifting, OracleCaps};
use nakayama_udr::ring::SmallExtension;

fn main() -> nakayama_udr::Result<()> {
    let v = UniserialModule::new(NakayamaSpec::new(2, 5)?, 1, 2)?;
    for ext in SmallExtension::catalog(2)? {
        let report = check_centralizer_lifting(&v, &ext, OracleCaps::default())?;
        print!("{report}");
    }
    Ok(())
}
