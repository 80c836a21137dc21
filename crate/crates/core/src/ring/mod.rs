//! Exact arithmetic: coefficients, truncated polynomials, quotient models,
//! and finite local test rings.

pub mod artin;
pub mod coefficient;
pub mod homs;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod quotient;

pub use artin::{ArtinTestRing, SmallExtension};
pub use coefficient::{Coefficient, CoefficientMode};
pub use homs::count_homs;
pub use monomial::{Grading, Monomial};
pub use poly::{PolyContext, TruncatedPolynomial};
pub use quotient::{ideal_equal, ideal_membership, quotient_dimension_stabilized, IdealBasis, QuotientModel};
