use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the lattice model and the surface calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Vector or matrix sizes disagree.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Gram matrix is not symmetric at the given entry.
    AsymmetricGram {
        row: usize,
        col: usize,
    },
    DuplicateLabel(String),
    UnknownLabel(String),
    /// The Gram matrix of a ℤ-basis has zero determinant.
    DegenerateLattice,
    /// The Gram matrix of a ℤ-basis has non-integral entries.
    NonIntegralGram,
    /// An argument is outside the documented domain.
    InvalidArgument(String),
    /// The even-set family is not closed under symmetric difference.
    NotLinear,
    /// A node set is not even (its half-sum is not a lattice vector).
    NotEven,
    /// A fiber configuration outside the supported Kodaira types.
    UnrecognizedFiber(String),
    /// A fiber meets the branch locus in a way the double-cover transform
    /// does not model.
    PartialBranchIncidence(String),
    /// The branch class is not divisible by two in the modeled Picard group.
    BranchNotDivisible,
    /// A numerical identity failed.
    IdentityFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Self::AsymmetricGram { row, col } => {
                write!(f, "gram matrix is not symmetric at ({row}, {col})")
            }
            Self::DuplicateLabel(l) => write!(f, "duplicate basis label {l:?}"),
            Self::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
            Self::DegenerateLattice => write!(f, "lattice is degenerate (zero determinant)"),
            Self::NonIntegralGram => write!(f, "gram matrix of the lattice is not integral"),
            Self::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Self::NotLinear => write!(f, "even-set family not linear"),
            Self::NotEven => write!(f, "not an even set"),
            Self::UnrecognizedFiber(graph) => {
                write!(f, "unrecognized fiber configuration: {graph}")
            }
            Self::PartialBranchIncidence(fiber) => write!(
                f,
                "branch/fiber incidence not covered by the supported cases: {fiber}"
            ),
            Self::BranchNotDivisible => write!(f, "branch not 2-divisible"),
            Self::IdentityFailed(what) => write!(f, "identity failed: {what}"),
        }
    }
}

impl core::error::Error for Error {}
