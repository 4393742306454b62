//! Error type shared across the crate.

use std::fmt;

/// Everything that can go wrong when constructing fields, parsing
/// polynomials, or running the ideal-theoretic algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The characteristic passed to a field constructor is not prime.
    NonPrime(u64),
    /// The modulus polynomial supplied for an extension field factors over F_p.
    ReducibleModulus,
    /// The modulus polynomial does not have the expected degree, or is not monic.
    DegreeMismatch { expected: usize, found: usize },
    /// Extension degree must be at least 1.
    InvalidExtensionDegree(usize),
    /// Inversion of the zero element.
    DivisionByZero,
    /// Two elements from different fields met in one operation.
    FieldMismatch,
    /// Two polynomials from different rings (field or variable count) met in one operation.
    RingMismatch,
    /// An evaluation point has the wrong number of coordinates.
    DimensionMismatch { expected: usize, found: usize },
    /// A projective operation received a non-homogeneous polynomial.
    NotHomogeneous,
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// An ideal presentation needs at least one generator.
    EmptyGenerators,
    /// A generator list contains the zero polynomial.
    ZeroGenerator,
    /// A divisor list contains the zero polynomial.
    ZeroDivisor,
    /// Interpolation over an empty point set.
    EmptyPointSet,
    /// Interpolation over a point set with repeated points.
    DuplicatePoints,
    /// A configured cap on Groebner-basis work was exceeded.
    ResourceLimit(String),
    /// An enumeration request exceeds the hard candidate cap.
    TooLarge { size: u128, limit: u128 },
    /// Malformed polynomial or element text.
    Syntax { pos: usize, msg: String },
    /// A variable outside the declared ring appeared in parsed text.
    UnknownVariable { pos: usize, name: String },
    /// A coefficient literal that is not a canonical element of the field.
    CoefficientNotInField { pos: usize, text: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrime(p) => write!(f, "{p} is not prime"),
            Error::ReducibleModulus => write!(f, "modulus polynomial is reducible over F_p"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "modulus degree mismatch: expected monic of degree {expected}, found degree {found}")
            }
            Error::InvalidExtensionDegree(e) => {
                write!(f, "extension degree must be at least 1, got {e}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch => write!(f, "elements belong to different fields"),
            Error::RingMismatch => write!(f, "polynomials belong to different rings"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} coordinates, found {found}")
            }
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::ZeroPolynomial => write!(f, "the zero polynomial is not allowed here"),
            Error::EmptyGenerators => write!(f, "generator list is empty"),
            Error::ZeroGenerator => write!(f, "generator list contains the zero polynomial"),
            Error::ZeroDivisor => write!(f, "divisor list contains the zero polynomial"),
            Error::EmptyPointSet => write!(f, "point set is empty"),
            Error::DuplicatePoints => write!(f, "point set contains duplicate points"),
            Error::ResourceLimit(what) => write!(f, "resource limit exceeded: {what}"),
            Error::TooLarge { size, limit } => {
                write!(f, "enumeration of {size} candidates exceeds the cap of {limit}")
            }
            Error::Syntax { pos, msg } => write!(f, "syntax error at position {pos}: {msg}"),
            Error::UnknownVariable { pos, name } => {
                write!(f, "unknown variable `{name}` at position {pos}")
            }
            Error::CoefficientNotInField { pos, text } => {
                write!(f, "coefficient `{text}` at position {pos} is not an element of the field")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
