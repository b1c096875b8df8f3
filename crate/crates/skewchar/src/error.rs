use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("{what} exceeds the cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("matrix is not antisymmetric at ({i},{j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("signed Hamiltonian count requires an even vertex count >= 4, got {0}")]
    HamiltonianArity(usize),

    #[error("set system is not a delta-matroid: {0}")]
    NotDeltaMatroid(String),

    #[error("delta-matroid is not even: feasible sets of sizes {0} and {1}")]
    NotEven(usize, usize),

    #[error("delta-matroid is not binary: no twist by a feasible set is graphic")]
    NotBinary,

    #[error("coefficient {0} does not fit the JSON interchange range (i64)")]
    CoefficientRange(String),

    #[error("non-integral result: linear evaluation produced coefficient {0}")]
    NonIntegral(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidInput(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
