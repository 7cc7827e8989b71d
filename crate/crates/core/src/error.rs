//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has zero weight")]
    ZeroWeight { u: usize, v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not a cycle")]
    NotACycle,
    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(usize),
    #[error("vertex {0} has no pendant twin")]
    NoTwin(usize),
    #[error("vertex {0} does not lie on the cycle")]
    NotOnCycle(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("graph has more than one cycle")]
    UnsupportedClass,
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("order {0} is outside the supported enumeration range")]
    OrderTooLarge(usize),
    #[error("girth out of range for this characterization")]
    GirthOutOfRange,
    #[error("order too small for this characterization")]
    OrderTooSmall,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
