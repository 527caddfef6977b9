use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("operands live over different algebras")]
    AlgebraMismatch,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("the ideal is the whole algebra; the quotient is the zero ring")]
    ZeroRing,
    #[error("subspace is not stable under the action")]
    NotSubmodule,
    #[error("inadmissible Kupisch series: {0}")]
    Inadmissible(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("algebra is not gendo-symmetric: {0}")]
    NotGendoSymmetric(String),
    #[error("dominant dimension of the module is below two")]
    DominantDimensionTooSmall,
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("randomized search undecided after {attempts} attempts: {what}")]
    Undecided { what: String, attempts: usize },
    #[error("unknown corpus name {0:?}")]
    UnknownCorpus(String),
    #[error("unknown module {0:?}")]
    UnknownModule(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
