//! Error type shared by every module of the library.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: entries must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("columns {columns:?} are not of type eps={eps}: rows of {parity} length must occur an even number of times")]
    NotTypePartition {
        columns: Vec<usize>,
        eps: i8,
        parity: &'static str,
    },
    #[error("no {kind}-collapse for a partition of size {size}")]
    CollapseSize { kind: char, size: usize },
    #[error("orbit {columns:?} is outside Nil^p for parity {parity}: {reason}")]
    NotInNilP {
        columns: Vec<usize>,
        parity: u8,
        reason: String,
    },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("type mismatch: {0}")]
    Kind(String),
    #[error("no theta lift: {0}")]
    NoLift(String),
    #[error("no generalized descent: {0}")]
    NoGeneralizedDescent(String),
    #[error("induction out of range: {0}")]
    Induction(String),
    #[error("illegal signature {plus},{minus} for {form}: {reason}")]
    IllegalSignature {
        plus: usize,
        minus: usize,
        form: String,
        reason: &'static str,
    },
    #[error("not a signed diagram: {0}")]
    NotSignedDiagram(String),
    #[error("diagram is not realizable: {0}")]
    NotRealizable(String),
    #[error("not a descent pair: {0}")]
    NotDescentPair(String),
    #[error("oracle: {0}")]
    Oracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
