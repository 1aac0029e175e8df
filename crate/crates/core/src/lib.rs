//! Exact-arithmetic calculus for low-dimensional topology.
//!
//! The crate computes, over arbitrary-precision integers and rationals:
//!
//! * Seifert-invariant bookkeeping: normalization, Euler numbers, first
//!   homology, lens-space recognition, slope transforms, and tightness
//!   criteria for circle-invariant contact structures ([`seifert`]);
//! * rational open books with periodic monodromy on Seifert manifolds:
//!   feasibility, construction, multiplicities, page topology, and the
//!   combinatorial type of the supported contact structure ([`openbook`]);
//! * symplectic 2-handle attachment along binding components: framings,
//!   the boundary transform, canonical-class pairings, and area-ratio
//!   constraints ([`handles`]);
//! * rational unicuspidal curves with one Puiseux pair: the dual pair, the
//!   self-intersection bound `m_{p,q}`, multiplicity sequences, and the
//!   classification of the surgered manifolds `M_{p,q,m}` ([`cuspidal`]);
//! * plumbing-graph linear algebra: intersection forms, determinants,
//!   positive-solution tests, and star-shaped graph conversions
//!   ([`plumbing`]);
//! * a catalog of named verification cases with pinned expected values
//!   ([`scenarios`]).
//!
//! There is no floating point anywhere: every quantity is an exact integer
//! or rational, and every sign decision is exact.

pub mod arith;
pub mod cuspidal;
pub mod handles;
pub mod openbook;
pub mod plumbing;
pub mod scenarios;
pub mod seifert;
pub mod wire;

pub use arith::{IntMatrix, Integer, Rational};
pub use seifert::{AbelianGroup, LensSpace, NormalForm, SeifertData};

/// Broad classification of an error, used by frontends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input violates a precondition or is malformed.
    InvalidInput,
    /// The input is valid but the requested object does not exist.
    Infeasible,
    /// An internal consistency check failed; indicates a bug or bad data.
    Internal,
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("modulus must be at least 2")]
    ModulusTooSmall,
    #[error("negative continued fraction requires num > den >= 1 and gcd(num, den) = 1")]
    ContinuedFractionInput,
    #[error("matrix shape invalid: {0}")]
    MatrixShape(&'static str),
    #[error("matrix is not square")]
    NonSquare,
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("operation undefined when a fiber has alpha = 0")]
    ZeroAlphaFiber,
    #[error("invalid Seifert data: {0}")]
    InvalidSeifert(String),
    #[error("operation requires genus 0")]
    GenusUnsupported,
    #[error("more than two exceptional fibers")]
    TooManyExceptional,
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("first homology is infinite")]
    InfiniteHomology,
    #[error("division by zero")]
    ZeroDenominator,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no admissible isotropy weights: {0}")]
    WeightCondition(String),
    #[error("invalid open book data: {0}")]
    InvalidOpenBook(String),
    #[error("orientation quantity vanishes for a binding with nonzero alpha")]
    ZeroOrientationQuantity,
    #[error("fixed-point components are not allowed here")]
    FixedComponent,
    #[error("requested framing is not positive relative to the page framing")]
    InfeasibleFraming,
    #[error("congruence failed: target multiplicity is incompatible with the binding pair")]
    CongruenceFailed,
    #[error("feasible set is empty")]
    EmptyFeasibleSet,
    #[error("invalid Puiseux pair: {0}")]
    InvalidPuiseux(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not star-shaped: {0}")]
    NotAStar(String),
    #[error("arm weight must be at most -2 away from the center")]
    BadArmWeight,
    #[error("result is not an integer: {0}")]
    NonIntegral(String),
    #[error("internal consistency check failed: {0}")]
    InternalCheck(String),
    #[error("unknown case name: {0}")]
    UnknownCase(String),
    #[error("case data: {0}")]
    DataFile(String),
    #[error("value out of range for the wire format: {0}")]
    WireRange(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InfeasibleFraming | Error::EmptyFeasibleSet => ErrorClass::Infeasible,
            Error::NonIntegral(_) | Error::InternalCheck(_) => ErrorClass::Internal,
            _ => ErrorClass::InvalidInput,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
