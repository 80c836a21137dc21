//! The self-injective Nakayama algebras `N(e, ℓ)` and their uniserial modules.

pub mod ext;
pub mod hom;
pub mod module;
pub mod rep;
pub mod spec;

pub use ext::{dual_number_lift, verify_ext_sequences, ExtSequence, FirstOrderLift};
pub use hom::{ext1_dim, hom_dim, projective_check, syzygy_by_kernel};
pub use module::{Normalization, UniserialModule};
pub use rep::{build_rho, uniserial_rep, verify_rep, MatrixRep};
pub use spec::{decompose_ell, theta, NakayamaSpec, ThetaProfile};
