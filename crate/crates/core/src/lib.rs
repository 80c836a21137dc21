//! Universal deformation rings of uniserial modules over the self-injective
//! Nakayama algebras `N(e, ℓ)`, with exact verification of the defining lift
//! and brute-force oracles over small Artinian rings.
//!
//! The layers, bottom up:
//!
//! - [`ring`]: truncated polynomials over `Z`, `Q` or `F_p`, ideals and
//!   certified quotient models, and explicit finite local rings.
//! - [`matrix`]: dense matrices over any [`matrix::CommRing`].
//! - [`nakayama`]: the algebras, their uniserial modules, matrix
//!   representations, `Hom`, `Ext^1` and syzygies.
//! - [`structured`]: the matrices `N_n`, `Ñ_n`, the `h`-polynomials and `J_n(m)`.
//! - [`deformation`]: presentations, the universal lift, its centralizer and
//!   tangent specializations.
//! - [`oracle`]: enumeration of lifts up to strict equivalence over finite rings.
//! - [`cli`]: the `nakayama-udr` binary.
//!
//! Each capability has a runnable example under `examples/`:
//!
//! | example | shows |
//! |---|---|
//! | `ring_presentation` | `R(V)` with its provenance |
//! | `presentation_table` | every module of one algebra next to its syzygy |
//! | `power_lemma` | closed-form powers of `N_n` |
//! | `quotient_model` | a monomial basis and normal forms modulo `J_n(m)` |
//! | `universal_lift` | the lift, its relations and the minimality of `J` |
//! | `ext_sequences` | `Ext^1` and the extensions spanning it |
//! | `centralizer` | the centralizer of the lift |
//! | `representability` | lift classes against homomorphism counts |
//! | `tangent_space` | first-order deformations by enumeration |
//! | `centralizer_lifting` | surjectivity along small extensions |
//! | `brauer_tree` | rings for Brauer tree algebras |

pub mod cli;
pub mod deformation;
pub mod error;
pub mod matrix;
pub mod nakayama;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod structured;

pub use error::{Error, Result};
