//! Universal deformation rings of uniserial modules and the universal lift.

pub mod centralizer;
pub mod lift;
pub mod presentation;
pub mod tangent;
pub mod verify;

pub use centralizer::{centralizer_structure, CentralizerDescription};
pub use lift::{free_lift, verify_lift_relations, verify_minimality, UniversalLift};
pub use presentation::{m_v, udr_presentation, DeformationPresentation, Provenance};
pub use tangent::{specialize_tangent, verify_tangent_specializations};
pub use verify::{verify_module, verify_normalized, verify_presentation};
