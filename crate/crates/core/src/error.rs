//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch")]
    AmbientMismatch,
    #[error("invalid simple type: {0}")]
    InvalidType(String),
    #[error("element is zero or not nilpotent")]
    NotNilpotent,
    #[error("ad has non-integer or non-rational spectrum")]
    BadSpectrum,
    #[error("element outside the expected subalgebra: {0}")]
    NotInSubalgebra(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("degenerate shift direction: {0}")]
    DegenerateDirection(String),
    #[error("operation only supported in type A")]
    TypeAOnly,
    #[error("pairing matrix of order {0} exceeds the supported bound")]
    MatrixOrder(usize),
    #[error("torus search failed: {0}")]
    TorusSearch(String),
    #[error("orbit table parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("orbit record `{label}` failed validation: {msg}")]
    RecordValidation { label: String, msg: String },
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn at_stage(self, stage: &'static str) -> Error {
        Error::Stage { stage, source: Box::new(self) }
    }
}
