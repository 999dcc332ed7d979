use thiserror::Error;

/// Every failure the library can report.
///
/// Variants split into three groups: bad input (wrong shapes, mixed fields,
/// non-prime moduli), mathematical refusals (`Singular`, `CapacityExceeded`,
/// `DistributionImpossible`, `BudgetExceeded`), and `InternalVerificationFailed`,
/// which is only ever raised when a post-hoc check of a construction fails and
/// therefore indicates a bug rather than a bad argument.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different fields ({left} vs {right})")]
    MixedFields { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("block list is empty")]
    EmptyBlockList,

    #[error("polynomial division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial has degree zero")]
    DegreeZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} outside the supported range 2..2^31")]
    ModulusOutOfRange(u64),

    #[error("entry {entry:?} is not an element of {field}")]
    EntryOutOfField { entry: String, field: String },

    #[error("index constraint violated: {0}")]
    IndexConstraintViolated(String),

    #[error("{zeros} zero blocks exceed host capacity {capacity}")]
    CapacityExceeded { zeros: usize, capacity: usize },

    #[error("zero blocks cannot be distributed: {zeros} blocks, total capacity {capacity}")]
    DistributionImpossible { zeros: usize, capacity: usize },

    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),

    #[error("exhaustive search needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("exhaustive search is only defined over prime fields")]
    RationalsUnsupported,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
