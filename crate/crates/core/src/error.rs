use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    /// Characteristic 2 is excluded throughout.
    CharacteristicTwo,
    PrimeTooLarge(u64),
    DivisionByZero,
    NotAUnit,
    IncompatibleVariables,
    TooManyVariables(usize),
    NotHomogeneous,
    IncompatibleDegrees { expected: u32, found: u32 },
    Parse { pos: usize, msg: String },
    PositiveDimensional,
    Inconclusive,
    PointNotOnVariety,
    NotSingularAtP0,
    NotOrdinaryNode,
    NoGeneralMemberFound { tries: u32 },
    DegenerateNodes { rank: usize },
    NotInGeneralPosition,
    UnexpectedKernelDim { expected: usize, found: usize },
    UnexpectedTangentDim { expected: usize, found: usize },
    NonGenericPivot,
    /// The ε = 0 reduction of a first-order computation disagreed with the
    /// unperturbed pipeline.
    ReductionMismatch(&'static str),
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::CharacteristicTwo => write!(f, "characteristic 2 is not supported"),
            Error::PrimeTooLarge(p) => write!(f, "prime {p} does not fit below 2^31"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotAUnit => write!(f, "element is not a unit"),
            Error::IncompatibleVariables => write!(f, "incompatible variable sets"),
            Error::TooManyVariables(n) => write!(f, "{n} variables exceeds the supported maximum"),
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::IncompatibleDegrees { expected, found } => {
                write!(f, "expected degree {expected}, found {found}")
            }
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::PositiveDimensional => write!(f, "ideal is not zero-dimensional"),
            Error::Inconclusive => write!(f, "randomized test was inconclusive"),
            Error::PointNotOnVariety => write!(f, "point does not lie on the hypersurface"),
            Error::NotSingularAtP0 => write!(f, "quartic is not singular at P0"),
            Error::NotOrdinaryNode => write!(f, "singularity at P0 is not an ordinary node"),
            Error::NoGeneralMemberFound { tries } => {
                write!(f, "no general member found after {tries} tries")
            }
            Error::DegenerateNodes { rank } => {
                write!(f, "node conditions are degenerate (rank {rank})")
            }
            Error::NotInGeneralPosition => write!(f, "points are not in linear general position"),
            Error::UnexpectedKernelDim { expected, found } => {
                write!(f, "kernel has dimension {found}, expected {expected}")
            }
            Error::UnexpectedTangentDim { expected, found } => {
                write!(f, "tangent space has dimension {found}, expected {expected}")
            }
            Error::NonGenericPivot => write!(f, "elimination met a non-unit pivot"),
            Error::ReductionMismatch(stage) => {
                write!(f, "reduction mod ε disagrees with the base computation at {stage}")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
