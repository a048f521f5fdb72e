use thiserror::Error;

use crate::kernel::ExpVec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad failure classes; the CLI maps them onto exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// A mathematical precondition failed (Jacobi, singular matrix, bad order).
    Domain,
    /// A configured cap was hit, or a construction is infinite.
    Resource,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("length mismatch: expected {expected} variables, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("letter {letter} out of range for an alphabet of {alphabet} letters")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("invalid monomial ordering: {0}")]
    InvalidOrder(String),

    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// `triple` and the residue's basis indices are 1-based; the residue
    /// lists the nonzero coordinates of the cyclic sum.
    #[error(
        "Jacobi identity fails for generators ({}, {}, {}): residue {}",
        triple[0], triple[1], triple[2], render_residue(residue, |k| format!("X{k}"))
    )]
    JacobiFailure {
        triple: [usize; 3],
        residue: Vec<(usize, String)>,
    },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("monomial {0} does not lie in the monomial ideal")]
    NotInIdeal(ExpVec),

    #[error(
        "U-set of leading monomial {monomial} is infinite (no pure power of variable {variable} \
         in the colon ideal); a general linear change of the Lie basis may help"
    )]
    InfiniteUSet { monomial: ExpVec, variable: usize },

    #[error("symbol mismatch: preimage has symbol {found}, expected {expected}")]
    SymbolMismatch { expected: String, found: String },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("resource cap exceeded in {stage}: {detail}")]
    ResourceCap { stage: &'static str, detail: String },
}

/// Formats a Jacobi residue as `(c)*name + ...`.
pub fn render_residue(residue: &[(usize, String)], name: impl Fn(usize) -> String) -> String {
    residue
        .iter()
        .map(|(k, c)| format!("({c})*{}", name(*k)))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InfiniteUSet { .. } | Error::ResourceCap { .. } => ErrorClass::Resource,
            _ => ErrorClass::Domain,
        }
    }
}
