use thiserror::Error;

/// Errors raised by the library. Every variant names the offending input so the
/// command line can report it verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: parts must be weakly decreasing")]
    InvalidPartition { parts: Vec<u32> },

    #[error("partition with {rows} rows does not fit rank {rank}")]
    RowOverflow { rows: usize, rank: usize },

    #[error("{vars} variables cannot resolve a partition with {rows} rows")]
    InsufficientVariables { vars: usize, rows: usize },

    #[error("virtual difference is only available for (1,1), got {0}")]
    UnsupportedVirtual(String),

    #[error("group algebra degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("partition of {size} does not match degree {degree}")]
    SizeMismatch { size: usize, degree: usize },

    #[error("tensor power of dimension {dim} exceeds the bound {limit}")]
    SizeBound { dim: u128, limit: usize },

    #[error("residue cardinalities differ: {0} vs {1}")]
    QMismatch(u64, u64),

    #[error("Euler factor diverges at place with q = {q}: |weight|*q^-Re(s) = {modulus}")]
    DivergenceGuard { q: u64, modulus: f64 },

    #[error("invalid unramified parameter: {0}")]
    InvalidParameter(String),

    #[error("element not in domain: {0}")]
    NotInDomain(String),

    #[error("invalid generalized Cartan matrix: {0}")]
    InvalidGcm(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
