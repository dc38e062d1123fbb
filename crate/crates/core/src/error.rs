use thiserror::Error;

use crate::complex::Face;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("the void complex (no faces at all) is not supported")]
    VoidComplex,

    #[error("vertex {vertex} is out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {vertex} does not appear in any facet")]
    PhantomVertex { vertex: usize },

    #[error("facets do not form an antichain: {smaller} is contained in {larger}")]
    NotAntichain { smaller: Face, larger: Face },

    #[error("{face} is not a face of the complex")]
    NotAFace { face: Face },

    #[error("{face} is not a facet of the complex")]
    NotAFacet { face: Face },

    #[error("expected a complex of dimension {expected}, got dimension {actual}")]
    Dimension { expected: isize, actual: isize },

    #[error("cycle of length {0} is not flag (lengths must be at least 4)")]
    NonFlagCycle(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition failed: input is not {0}")]
    Precondition(&'static str),

    #[error("non-integral intermediate while evaluating {0}")]
    NonIntegral(&'static str),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed JSON complex: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
