use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("the zero matrix has no non-isotropic vector")]
    ZeroMatrix,
    #[error("characteristic polynomial has a multiple root")]
    MultipleRoot,
    #[error("not a good pair: {0}")]
    NotGoodPair(String),
    #[error("square root of {0} is not rational; use the numeric normalization")]
    NeedsNumericExtension(String),
    #[error("slice coordinate at infinity has no finite formula")]
    InfiniteCoordinate,
    #[error("degenerate slice: t = {0} lies in {{0, 1/4}}")]
    DegenerateSlice(String),
    #[error("coincident eigenvalues: {0}")]
    CoincidentEigenvalues(String),
    #[error("root polishing did not converge: {0}")]
    PolishingDiverged(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
