use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (must be below {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("permutation is not an involution: {0}")]
    NotInvolutive(String),
    #[error("Weyl element is not a twisted involution for this θ (θ(w) ≠ w⁻¹)")]
    NotTwisted,
    #[error("compact part would leave the character lattice: {0}")]
    NonIntegral(String),
    #[error("weight does not lie in the span of the roots")]
    OutsideRootSpan,
    #[error(
        "character is not dominant: ⟨Re λ, α⟩ < 0 for the simple root with 0-based index {simple}; \
         normalize it with langlands::dominant_representative first"
    )]
    NotDominant { simple: usize },
    #[error("Weyl group of order {order} exceeds the enumeration budget of {budget}")]
    WeylBudget { order: u128, budget: u64 },
    #[error("degree {requested} exceeds the degree budget of {budget}")]
    DegreeBudget { requested: u32, budget: u32 },
    #[error("lattice search exceeded {limit} nodes; partial per-degree counts: {partial:?}")]
    SearchBudget { limit: u64, partial: Vec<u128> },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// Coarse classification of [`Error`]s, used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input document or one of its parts is malformed or invalid.
    Parse,
    /// A configured enumeration or search limit was hit.
    Budget,
    /// Well-formed input that violates an operation's precondition.
    Precondition,
    /// A cross-check failed; indicates a bug.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidCartan(_)
            | Error::InvalidRootSystem(_)
            | Error::InvalidInvolution(_)
            | Error::Parse(_) => ErrorKind::Parse,
            Error::WeylBudget { .. } | Error::DegreeBudget { .. } | Error::SearchBudget { .. } => {
                ErrorKind::Budget
            }
            Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::NotInvolutive(_)
            | Error::NotTwisted
            | Error::NonIntegral(_)
            | Error::OutsideRootSpan
            | Error::NotDominant { .. } => ErrorKind::Precondition,
            Error::Internal(_) => ErrorKind::Internal,
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
