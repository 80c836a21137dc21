//! Deformation rings for modules of a Brauer tree algebra, by the `m_V` split
//! and by the presentation on the stably equivalent Nakayama algebra.
//!
//! `cargo run --example brauer_tree`

use nakayama_udr::cli::brauer::{brauer_check, brauer_mv, BrauerTreeSpec};

fn main() -> nakayama_udr::Result<()> {
    for (e, m) in [(1, 2), (2, 2), (3, 2), (4, 3)] {
        let tree = BrauerTreeSpec::new(e, m)?;
        println!("e = {e}, m = {m}: stably equivalent to {}", tree.nakayama());
        for d in 0..=tree.max_distance() {
            let b = brauer_mv(e, m, d)?;
            let m_v = b.m_v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
            let ok = brauer_check(e, m, d)?.passed();
            println!("    d_V = {d}: n = {}, i = {}, m_V = {m_v}, agrees: {ok}", b.n, b.i);
        }
    }
    Ok(())
}
