use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("scale r = {r} is not below dimension n = {n}; the tail degree is zero")]
    DegenerateScale { n: u32, r: u32 },

    #[error("dimension n = {n} exceeds the materialization ceiling {max}")]
    DimensionTooLarge { n: u32, max: u32 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("header declares {declared} edges but {found} were read")]
    InconsistentHeader { declared: usize, found: usize },

    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertex(usize),

    #[error("{what} {size} exceeds the configured cap {cap}")]
    TooLarge { what: &'static str, size: u64, cap: u64 },

    #[error("witness has an odd number of vertices ({0})")]
    OddCount(usize),

    #[error("witness lists vertex {0} more than once")]
    DuplicateVertex(u64),

    #[error("vertex {vertex} is out of range for {bound} vertices")]
    VertexOutOfRange { vertex: u64, bound: u64 },

    #[error("boundary dimension {p} outside 1..={max}")]
    DimensionOutOfRange { p: usize, max: usize },

    #[error("homology up to dimension {up_to} needs simplices of dimension {needed}, complex stops at {max_dim}")]
    TruncationTooShallow { up_to: usize, needed: usize, max_dim: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures caused by a configured resource cap.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::DimensionTooLarge { .. })
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
