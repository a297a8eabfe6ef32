use thiserror::Error;

/// Errors surfaced by the library. Input problems (bad rank, malformed
/// catalog) are distinguished from mathematical inconsistencies detected at
/// runtime (a restricted system that is not a character, a non-scalar
/// Killing ratio), which always indicate bad embedding data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {bound}")]
    InvalidRank {
        family: &'static str,
        rank: usize,
        bound: &'static str,
    },

    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} violates the ambient-space constraint: {1}")]
    BadAmbient(String, &'static str),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not algebraically integral")]
    NotIntegral(String),

    #[error("quotient {quotient} is not admissible for type {family}: {why}")]
    BadQuotient {
        family: &'static str,
        quotient: String,
        why: &'static str,
    },

    #[error("weight {0} is not a member of the integral weight lattice")]
    NotInLattice(String),

    #[error("restricted system is not a character of the subalgebra: {0}")]
    NotACharacter(String),

    #[error("representation type mismatch: {0}")]
    RepType(String),

    #[error("weight pairing failed while building the restriction map: {0}")]
    Pairing(String),

    #[error("embedding validation failed: {0}")]
    EmbeddingInvalid(String),

    #[error("Killing ratio on ideal {ideal} is not scalar")]
    NonScalarRatio { ideal: usize },

    #[error("Einstein constant {0} violates the bounds [1/2, 1]")]
    EinsteinBounds(String),

    #[error("catalog parse error at line {line}: {msg}")]
    CatalogParse { line: usize, msg: String },

    #[error("catalog entry {entry}: {msg}")]
    CatalogEntry { entry: String, msg: String },

    #[error("parameter constraint violated for {entry}: {constraint}")]
    ConstraintViolation { entry: String, constraint: String },

    #[error("entry {0} has no embedding data (needs-explicit-matrix)")]
    PendingEmbedding(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
