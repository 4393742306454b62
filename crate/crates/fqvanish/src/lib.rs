//! Exact computer algebra over finite fields F_q, built around the ideal
//! of field equations X_i^q - X_i and its projective counterpart.
//!
//! The crate provides:
//! - arithmetic in F_q for prime powers q up to 2^20 (`field`),
//! - sparse multivariate polynomials with lex, grlex, and grevlex orders,
//!   including the division algorithm (`poly`, `monomial`),
//! - canonical reduced forms modulo the field equations, affine and
//!   projective, with vanishing tests (`reduce`),
//! - Buchberger's algorithm, footprints, and ideal membership (`groebner`),
//! - brute-force rational point enumeration over affine and projective
//!   space, indicator and interpolation polynomials, and the footprint and
//!   degree bounds on the number of zeros (`variety`).
//!
//! Everything is exact; there is no floating point anywhere.

pub mod error;
pub mod field;
pub mod groebner;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod reduce;
pub mod variety;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec, MAX_FIELD_ORDER};
pub use groebner::{Footprint, GroebnerBasis, GroebnerLimits};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, polynomial_text, VarStyle};
pub use poly::{IdealPresentation, Polynomial};
pub use reduce::{AffineReducedForm, ProjectiveReducedForm};
pub use variety::{AffinePointSet, OreBound, ProjectivePointSet};
