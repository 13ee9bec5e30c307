use thiserror::Error;

/// Errors produced by exact-arithmetic and geometry operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("galois index {k} is not a unit modulo {n}")]
    NonUnitGaloisIndex { k: u32, n: u32 },
    #[error("element is not real at the requested embedding")]
    NonRealElement,
    #[error("polynomial is reducible: {0}")]
    ReduciblePolynomial(String),
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("hermitian form is degenerate under the requested embedding")]
    DegenerateForm,
    #[error("vector is null for the form")]
    NullVector,
    #[error("matrix {0} does not preserve the subspace")]
    SubspaceNotPreserved(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("relation check failed at construction: {0}")]
    RelationFailed(String),
    #[error("projective order exceeds bound {bound} and torsion status could not be certified")]
    OrderUncertified { bound: u32 },
    #[error("word is empty")]
    EmptyWord,
    #[error("cannot parse word: {0}")]
    WordSyntax(String),
    #[error("trace field generation exhausted budget {budget}; field degree so far {degree}")]
    BudgetExhausted { budget: usize, degree: usize },
    #[error("census classes are inconsistent: {0}")]
    InconsistentCensus(String),
    #[error("signature is not hyperbolic (orbifold Euler characteristic >= 0)")]
    NotHyperbolic,
    #[error("matrix is not elliptic; no fixed point inside the disk")]
    NotElliptic,
    #[error("the form is definite under this embedding; there is no disk action")]
    BoundedEmbedding,
    #[error("precision exhausted at {bits} bits: {what}")]
    PrecisionExhausted { bits: u32, what: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
