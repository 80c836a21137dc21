//! Brute-force deformation functor over finite test rings.

pub mod checks;
pub mod enumerate;
pub mod orbits;

pub use checks::{
    base_rep, centralizer_kernel, check_centralizer_lifting, check_representability, def_classes, tangent_dimension,
    tangent_report,
};
pub use enumerate::{enumerate_lifts, Frame, LiftCandidate, LiftEnumeration, OracleCaps};
pub use orbits::{
    affine_classes, deformation_classes, orbit_labels, strict_equiv_classes, union_find_classes, ClassSummary,
    OrbitMode, StrictEquivClass,
};
