//! Exact-arithmetic toolkit for integral affine manifolds with singularities.
//!
//! The library builds compact affine manifolds by gluing lattice polytopes along
//! integral affine face identifications, equips each vertex with a complete fan
//! structure, and computes the objects attached to that data: piecewise linear
//! functions and their Newton polytopes, the discrete Legendre transform, the
//! combinatorial central fiber of a toric degeneration, and the holonomy and
//! monodromy of the associated torus fibration.
//!
//! Everything is exact: integers are arbitrary precision, rationals are kept in
//! lowest terms, and no floating point enters any computation.

pub mod complex;
pub mod degeneration;
pub mod exact;
pub mod fans;
pub mod fibration;
pub mod mpl;
pub mod polytopes;

use thiserror::Error;

/// Error type shared by the whole crate.
///
/// Construction-time validation failures and mathematical impossibilities are
/// kept as distinct variants so callers (and the CLI exit codes) can tell a
/// malformed input from a geometric obstruction.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported dimension {0} for this operation")]
    UnsupportedDimension(usize),

    #[error("matrix is not invertible over the integers")]
    NotInvertibleOverZ,

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid vertex reference: {0}")]
    InvalidVertex(String),

    #[error("cone is not strongly convex: {0}")]
    NotStronglyConvex(String),

    #[error("fan is not complete: {0}")]
    IncompleteFan(String),

    #[error("piecewise linear function is not convex: {0}")]
    NotConvex(String),

    #[error("fan structure mismatch: {0}")]
    FanStructureMismatch(String),

    #[error("glued cells do not form a manifold: {0}")]
    NotAManifold(String),

    #[error("ambiguous transition: {0}")]
    AmbiguousTransition(String),

    #[error("path word is not a loop: {0}")]
    NotALoop(String),

    #[error("dimension defect: {0}")]
    DimensionDefect(String),

    #[error("family is not reduced along the divisor: {0}")]
    NotReducedAlongDivisor(String),

    #[error("not a toric decomposition: {0}")]
    NotToricDecomposition(String),

    #[error("translation is not integral and no scaling was requested")]
    NonIntegralTranslation,

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("unknown example name: {0}")]
    UnknownExample(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
