use thiserror::Error;

use crate::mask::SubsetMask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set of {0} elements exceeds the supported maximum")]
    TooManyElements(usize),
    #[error("element {element} is outside a ground set of {n} elements")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("basis family is empty")]
    EmptyBasisFamily,
    #[error("bases have different cardinalities ({expected} and {found})")]
    BasisSizeMismatch { expected: usize, found: usize },
    #[error("basis exchange fails for {first} and {second}")]
    ExchangeViolation { first: SubsetMask, second: SubsetMask },
    #[error("rank table violates the matroid axioms at {0}")]
    InvalidRankTable(SubsetMask),
    #[error("the empty set cannot be a circuit")]
    EmptyCircuit,
    #[error("circuit {inner} is contained in circuit {outer}")]
    CircuitContainment { inner: SubsetMask, outer: SubsetMask },
    #[error("listed sets are not the circuits of any matroid (derived circuit {0} is not listed)")]
    CircuitMismatch(SubsetMask),
    #[error("unsupported field size {0}; expected one of 2, 3, 5, 7")]
    UnsupportedField(u32),
    #[error("matrix rows have inconsistent lengths")]
    RaggedMatrix,
    #[error("{0} is not a circuit-hyperplane")]
    NotCircuitHyperplane(SubsetMask),
    #[error("operation requires a 3-connected matroid")]
    NotThreeConnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
