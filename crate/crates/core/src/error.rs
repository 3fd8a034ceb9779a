use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown vertex, bad shape, wrong base graph, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A brute-force operation was asked to exceed its configured size cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A representation failed validation (disconnected set, empty set, ...).
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    /// A seeded generator could not produce a valid object within its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),

    /// An internal consistency check failed; indicates a violated precondition
    /// (e.g. a crossing representation fed to the mixed-thin builder) or a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
