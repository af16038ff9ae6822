use thiserror::Error;

/// Errors raised by the generators, the construction engine and the exact
/// geometry routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The parameters are outside the range the construction supports.
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    /// A facet family that cannot be the facet family of a polytope.
    #[error("not polytopal: {0}")]
    NotPolytopal(String),
    /// Points or facets that fail to span the required affine space.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// A beneath/beyond step with an empty beyond or beneath side.
    #[error("degenerate step adding vertex {vertex}: {beyond} beyond, {beneath} beneath")]
    DegenerateStep {
        vertex: usize,
        beyond: usize,
        beneath: usize,
    },
    /// The strict sign system for the next construction point has no solution.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// Malformed polytope, realization or log document.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}
