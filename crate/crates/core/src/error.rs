use thiserror::Error;

use crate::sort::Elem;
use crate::table::Point;

/// Errors raised by the library. Absence of a decomposition or of an
/// equivalence is reported as a value, never through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("element {elem} is outside a sort of size {size}")]
    ForeignElement { elem: Elem, size: usize },

    #[error("argument index {index} is out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("value table has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("arity must be at least 1")]
    ZeroArity,

    #[error("table of arity {arity} over a sort of size {size} is too large")]
    TooLarge { size: usize, arity: usize },

    #[error("argument set of a section must be nonempty")]
    EmptyArgumentSet,

    #[error("map sends argument {index} to {target}, outside [0, {bound})")]
    MapOutOfRange {
        index: usize,
        target: usize,
        bound: usize,
    },

    #[error("sort mismatch: {0}")]
    SortMismatch(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("pivotal function undefined at {triple} (needed at point {point}, pivot {pivot})")]
    DomainNotCovered {
        triple: String,
        point: Point,
        pivot: usize,
    },

    #[error("coordinate {index} = {value} lies outside [0, 1]")]
    OutsideUnitInterval { index: usize, value: String },

    #[error("invalid pivotal family parameters: {0}")]
    InvalidFamily(String),

    #[error("codomain is not totally ordered")]
    NotTotallyOrdered,

    #[error("lattice: {0}")]
    Lattice(#[from] crate::lattice::LatticeError),

    #[error("coefficient map is not order-preserving: c({lower:#b}) is not below c({upper:#b})")]
    NotOrderPreserving { lower: usize, upper: usize },

    #[error("unary map {index} violates phi(x) = med(phi(x), phi(1), phi(0)) at x = {at}")]
    PhiRange { index: usize, at: Elem },

    #[error("invalid class id {0}: expected 1..=16")]
    InvalidClassId(u8),

    #[error("diagram rule {rule} is incompatible: {reason}")]
    RuleMismatch { rule: String, reason: String },

    #[error("median rule needs nondecreasing vertex data; violated between masks {lower:#b} and {upper:#b}")]
    NotMonotone { lower: usize, upper: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
