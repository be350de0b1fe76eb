//! Error type shared by the whole crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong when building matrices, tables, or
/// evaluating powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational was constructed with a zero denominator.
    ZeroDenominator,
    /// 0 raised to a negative power.
    ZeroToNegativePower,
    /// A rational literal did not match the `[-]digits[/digits]` format.
    InvalidRational(String),
    /// A rational function was constructed with the zero polynomial as
    /// denominator.
    ZeroDenominatorPolynomial,
    /// The denominator vanishes at zero, so the value has no limit there.
    PoleAtZero,
    /// A matrix was given with dimension zero.
    EmptyMatrix,
    /// Row `row` (1-based) does not have the same length as the others.
    RaggedRow { row: usize },
    /// A nonzero entry sits below the diagonal at (row, col), 1-based.
    NotUpperTriangular { row: usize, col: usize },
    /// A cell index (i, j) fell outside 1 <= i <= j <= k.
    CellOutOfRange { i: usize, j: usize, k: usize },
    /// Two diagonal entries are equal where pairwise-distinct values are
    /// required (positions are 1-based).
    DuplicateDiagonal { first: usize, second: usize },
    /// A perturbation plan violates its construction rules.
    InvalidPlan(String),
    /// A perturbation plan was applied to a matrix of a different size.
    PlanDimensionMismatch { plan: usize, matrix: usize },
    /// A diagonal entry is zero where an inverse is needed (1-based).
    SingularMatrix { position: usize },
    /// A non-positive power was requested for a singular matrix.
    NonPositivePowerOfSingular { n: i64 },
    /// The confluent linear system was singular; this indicates a broken
    /// grouping and should never happen for valid inputs.
    ConfluentSystemSingular,
    /// The limit at zero hit a pole during coefficient extraction; this
    /// indicates a broken perturbation plan and should never happen for
    /// plans built by this crate.
    UnexpectedPole { i: usize, j: usize },
    /// n_min > n_max in a range request.
    InvalidRange { n_min: i64, n_max: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::ZeroToNegativePower => write!(f, "0 cannot be raised to a negative power"),
            Error::InvalidRational(s) => write!(f, "invalid rational literal {s:?}"),
            Error::ZeroDenominatorPolynomial => {
                write!(f, "rational function denominator is the zero polynomial")
            }
            Error::PoleAtZero => write!(f, "denominator vanishes at zero (pole)"),
            Error::EmptyMatrix => write!(f, "matrix dimension must be positive"),
            Error::RaggedRow { row } => write!(f, "row {row} has the wrong length"),
            Error::NotUpperTriangular { row, col } => {
                write!(f, "nonzero entry below the diagonal at ({row}, {col})")
            }
            Error::CellOutOfRange { i, j, k } => {
                write!(f, "cell ({i}, {j}) out of range for dimension {k}")
            }
            Error::DuplicateDiagonal { first, second } => write!(
                f,
                "diagonal entries {first} and {second} are equal; \
                 distinct diagonal entries are required"
            ),
            Error::InvalidPlan(why) => write!(f, "invalid perturbation plan: {why}"),
            Error::PlanDimensionMismatch { plan, matrix } => write!(
                f,
                "perturbation plan is for dimension {plan}, matrix has dimension {matrix}"
            ),
            Error::SingularMatrix { position } => {
                write!(f, "matrix is singular: diagonal entry {position} is zero")
            }
            Error::NonPositivePowerOfSingular { n } => {
                write!(f, "power {n} requires a nonsingular matrix")
            }
            Error::ConfluentSystemSingular => {
                write!(f, "confluent linear system is singular (internal invariant broken)")
            }
            Error::UnexpectedPole { i, j } => write!(
                f,
                "pole at zero while extracting coefficients for cell ({i}, {j}) \
                 (internal invariant broken)"
            ),
            Error::InvalidRange { n_min, n_max } => {
                write!(f, "invalid power range: {n_min} > {n_max}")
            }
        }
    }
}

impl core::error::Error for Error {}
