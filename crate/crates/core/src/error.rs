use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid representation graph: {0}")]
    InvalidGraph(ValidationReport),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not a tree: a directed round fold map exists if and only if there exists a representation graph for the manifold which collapses to a point")]
    NotATree,

    #[error("unknown example `{name}`; available: {}", available.join(", "))]
    UnknownExample { name: String, available: Vec<&'static str> },

    #[error("rotation system inconsistent with graph at dart {dart}: {reason}")]
    InconsistentRotation { dart: usize, reason: String },

    #[error("rotation search space too large ({0} systems)")]
    SearchTooLarge(u128),

    #[error("invalid round map descriptor: {0}")]
    InvalidDescriptor(ValidationReport),

    #[error("S-map parameters violate {clause}: {message}")]
    SMapParameters { clause: &'static str, message: String },

    #[error("fiber graph is bordered (border end `{0}`); no closed-manifold graph exists")]
    Bordered(String),

    #[error("invalid fiber graph: {0}")]
    InvalidFiberGraph(ValidationReport),

    #[error("invalid polyhedron: {0}")]
    InvalidPolyhedron(ValidationReport),

    #[error("circle `{0}` is not a border")]
    NotABorder(String),

    #[error("unknown circle `{0}`")]
    UnknownCircle(String),

    #[error("inconsistent sheet pattern ({0}, {1}, {2}): two sheets cannot realize exactly an odd number of different-sheet pairs")]
    InconsistentSheets(u8, u8, u8),

    #[error("invalid template parameter: {0}")]
    TemplateParameter(String),

    #[error("polyhedron is not the one built from the supplied fiber graph")]
    PolyhedronMismatch,

    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("internal invariant breached: {0}")]
    Internal(String),
}
