use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad structure-constant tensor: {0}")]
    BadTensorShape(String),
    #[error("structure constants are not associative on basis triple ({i}, {j}, {l})")]
    NotAssociative { i: usize, j: usize, l: usize },
    #[error("unity vector is not a two-sided identity (fails on basis element {0})")]
    NoUnity(usize),
    #[error("invalid basis label {0:?}")]
    InvalidLabel(String),
    #[error("ring has more than 2^64 elements")]
    TooLarge,
    #[error("ring has {size} elements, above the enumeration budget of {budget}")]
    BudgetExceeded { size: u64, budget: u64 },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator {name:?} at byte {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error("not an inner inverse: a·a0·a != a")]
    NotInnerInverse,
    #[error("not a reflexive inverse of the element")]
    NotReflexiveInverse,
    #[error("element is not regular")]
    NotRegular,
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("ring is not the example fixture: {0}")]
    WrongRing(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
