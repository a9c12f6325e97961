use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {value} appears more than once")]
    DuplicateElement { value: usize },
    #[error("element {value} is outside 1..={n}")]
    ElementOutOfRange { value: usize, n: usize },
    #[error("order {n} is outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("cannot parse permutation {0:?}")]
    PermutationSyntax(String),
    #[error("window starting at {start} with length {k} does not fit in order {n}")]
    WindowOutOfBounds { start: usize, k: usize, n: usize },
    #[error("window size {k} is outside 2..={n}")]
    InvalidK { k: usize, n: usize },
    #[error("index {index} is outside 0..{n}!")]
    IndexOutOfRange { index: u64, n: usize },
    #[error("objective expects order {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("table has no entry for {0}")]
    MissingTableEntry(String),
    #[error("size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("this digraph mode requires an objective")]
    MissingObjective,
    #[error("optimum set is empty")]
    EmptyOptima,
    #[error("objective document: {0}")]
    Parse(String),
    #[error("table is missing {} entries: {}", missing.len(), missing.join(", "))]
    IncompleteTable { missing: Vec<String> },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Stable numeric identity of an [`Error`], shared with the C interface.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorCode {
    Ok = 0,
    DuplicateElement = 1,
    ElementOutOfRange = 2,
    OrderOutOfRange = 3,
    PermutationSyntax = 4,
    WindowOutOfBounds = 5,
    InvalidK = 6,
    IndexOutOfRange = 7,
    ArityMismatch = 8,
    MissingTableEntry = 9,
    CapExceeded = 10,
    MissingObjective = 11,
    EmptyOptima = 12,
    ParseError = 13,
    IncompleteTable = 14,
    InvalidParams = 15,
    InvalidConfig = 16,
    IoError = 17,
}

impl ErrorCode {
    pub fn name(self) -> &'static str {
        match self {
            ErrorCode::Ok => "Ok",
            ErrorCode::DuplicateElement => "DuplicateElement",
            ErrorCode::ElementOutOfRange => "ElementOutOfRange",
            ErrorCode::OrderOutOfRange => "OrderOutOfRange",
            ErrorCode::PermutationSyntax => "PermutationSyntax",
            ErrorCode::WindowOutOfBounds => "WindowOutOfBounds",
            ErrorCode::InvalidK => "InvalidK",
            ErrorCode::IndexOutOfRange => "IndexOutOfRange",
            ErrorCode::ArityMismatch => "ArityMismatch",
            ErrorCode::MissingTableEntry => "MissingTableEntry",
            ErrorCode::CapExceeded => "CapExceeded",
            ErrorCode::MissingObjective => "MissingObjective",
            ErrorCode::EmptyOptima => "EmptyOptima",
            ErrorCode::ParseError => "ParseError",
            ErrorCode::IncompleteTable => "IncompleteTable",
            ErrorCode::InvalidParams => "InvalidParams",
            ErrorCode::InvalidConfig => "InvalidConfig",
            ErrorCode::IoError => "IoError",
        }
    }
}

impl Error {
    pub fn code(&self) -> ErrorCode {
        match self {
            Error::DuplicateElement { .. } => ErrorCode::DuplicateElement,
            Error::ElementOutOfRange { .. } => ErrorCode::ElementOutOfRange,
            Error::OrderOutOfRange { .. } => ErrorCode::OrderOutOfRange,
            Error::PermutationSyntax(_) => ErrorCode::PermutationSyntax,
            Error::WindowOutOfBounds { .. } => ErrorCode::WindowOutOfBounds,
            Error::InvalidK { .. } => ErrorCode::InvalidK,
            Error::IndexOutOfRange { .. } => ErrorCode::IndexOutOfRange,
            Error::ArityMismatch { .. } => ErrorCode::ArityMismatch,
            Error::MissingTableEntry(_) => ErrorCode::MissingTableEntry,
            Error::CapExceeded { .. } => ErrorCode::CapExceeded,
            Error::MissingObjective => ErrorCode::MissingObjective,
            Error::EmptyOptima => ErrorCode::EmptyOptima,
            Error::Parse(_) => ErrorCode::ParseError,
            Error::IncompleteTable { .. } => ErrorCode::IncompleteTable,
            Error::InvalidParams(_) => ErrorCode::InvalidParams,
            Error::InvalidConfig(_) => ErrorCode::InvalidConfig,
            Error::Io { .. } => ErrorCode::IoError,
        }
    }

    /// Errors caused by malformed arguments rather than by an infeasible
    /// request or the environment.
    pub fn is_usage(&self) -> bool {
        !matches!(
            self,
            Error::CapExceeded { .. } | Error::Io { .. } | Error::MissingTableEntry(_) | Error::EmptyOptima
        )
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
