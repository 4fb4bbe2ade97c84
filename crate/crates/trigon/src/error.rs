//! Crate-wide error type.

use crate::geometry::GeometryKind;
use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, TrigonError>;

/// Every failure mode of the library surface.
///
/// The CLI maps these onto its exit-code contract: triangle-domain failures
/// (`NonPositiveSide`, `TriangleInequalityViolated`, `SphericalDomainViolated`,
/// `NonFiniteInput`, `NonPositiveInput`, `RadiusUndefined`) exit 65, everything
/// else is a usage error and exits 64.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrigonError {
    /// A side is not strictly positive (beyond the degeneracy margin) or not finite.
    #[error("side {side} = {value} must be finite and exceed the degeneracy margin")]
    NonPositiveSide { side: &'static str, value: f64 },

    /// The strict triangle inequality fails (within the degeneracy margin).
    #[error("sides ({a}, {b}, {c}) violate the strict triangle inequality (margin {margin:e})")]
    TriangleInequalityViolated { a: f64, b: f64, c: f64, margin: f64 },

    /// A spherical side reaches or exceeds pi (within the degeneracy margin).
    #[error("spherical side {side} = {value} must stay below pi")]
    SphericalDomainViolated { side: &'static str, value: f64 },

    /// A raw real input is NaN or infinite.
    #[error("input value {value} is not finite")]
    NonFiniteInput { value: f64 },

    /// A raw real input that must be strictly positive is not.
    #[error("input {name} = {value} must be finite and strictly positive")]
    NonPositiveInput { name: &'static str, value: f64 },

    /// A chain was paired with a geometry it is not defined for.
    #[error("chain '{chain}' is not defined for {kind} geometry")]
    KindMismatch { chain: &'static str, kind: GeometryKind },

    /// A term index does not exist in the chain.
    #[error("term index {index} is out of range for a chain of {len} terms")]
    IndexOutOfRange { index: usize, len: usize },

    /// A gap was requested with indices out of order or equal.
    #[error("invalid term index pair ({i}, {j}): need i < j")]
    InvalidIndexPair { i: usize, j: usize },

    /// The requested quantity has no meaning in the given geometry.
    #[error("{what} is not defined in {kind} geometry")]
    UnsupportedKind { kind: GeometryKind, what: &'static str },

    /// The triangle is valid but the requested radius does not exist.
    #[error("{what} is undefined for this triangle: {detail}")]
    RadiusUndefined { what: &'static str, detail: String },

    /// A certification box has no intersection with the validity domain.
    #[error("the box does not intersect the triangle validity domain")]
    EmptyIntersection,

    /// A search domain contains no valid triangle at the sampling resolution.
    #[error("no valid triangle found in the search domain")]
    EmptyDomain,

    /// A box or domain specification is malformed.
    #[error("malformed box or domain: {detail}")]
    BadBox { detail: String },

    /// An unrecognized chain identifier.
    #[error("unknown chain id '{name}'")]
    UnknownChain { name: String },
}

impl TrigonError {
    /// True when the error describes invalid triangle data (CLI exit 65)
    /// rather than a usage problem (CLI exit 64).
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            TrigonError::NonPositiveSide { .. }
                | TrigonError::TriangleInequalityViolated { .. }
                | TrigonError::SphericalDomainViolated { .. }
                | TrigonError::NonFiniteInput { .. }
                | TrigonError::NonPositiveInput { .. }
                | TrigonError::RadiusUndefined { .. }
        )
    }
}
