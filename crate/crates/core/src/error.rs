use thiserror::Error;

use crate::algebra::Counterexample;

/// Errors raised while building algebras, parsing input or running analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    InvalidRank,
    #[error("an algebra needs at least one element")]
    EmptyCarrier,
    #[error("invalid element name {0:?}")]
    InvalidName(String),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element index {index} out of range for carrier of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("table entry has {found} arguments, expected {expected}")]
    EntryArity { expected: usize, found: usize },
    #[error("missing entry for ({0})")]
    MissingEntry(String),
    #[error("duplicate entry for ({0})")]
    DuplicateEntry(String),
    #[error("superassociativity fails at {description}")]
    NotSuperassociative {
        counterexample: Box<Counterexample>,
        description: String,
    },
    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    CapacityExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("slot {slot} out of range for rank {rank}")]
    SlotOutOfRange { slot: usize, rank: usize },
    #[error("argument vector has {found} components, expected {expected}")]
    ArgLength { expected: usize, found: usize },
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("node {head:?} has {found} arguments, expected {expected}")]
    ArityMismatch {
        head: String,
        expected: usize,
        found: usize,
    },
    #[error("a node has more than one argument containing the variable")]
    MultipleVariables,
    #[error("a node has no argument containing the variable")]
    NoVariable,
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("subset is not a block of the relation")]
    NotABlock,
    #[error("operation needs at least one partition")]
    EmptyPartitionList,
    #[error("carrier sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("generator family is empty")]
    NoGenerators,
    #[error("table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn capacity(what: &'static str, needed: u128, limit: u128) -> Self {
        Error::CapacityExceeded {
            what,
            needed,
            limit,
        }
    }
}
