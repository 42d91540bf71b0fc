use thiserror::Error;

/// Failure while reading words, presentations or group descriptions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: unexpected character {ch:?} at position {position}")]
    BadCharacter { line: usize, position: usize, ch: char },
    #[error("line {line}: generator {name} is not declared")]
    UndeclaredGenerator { line: usize, name: String },
    #[error("line {line}: generator {name} declared twice")]
    DuplicateGenerator { line: usize, name: String },
    #[error("empty generator list")]
    NoGenerators,
    #[error("missing `gens:` line")]
    MissingGenerators,
    #[error("line {line}: empty relator")]
    EmptyRelator { line: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

impl ParseError {
    /// Re-anchor a single-line error at a line of a larger document.
    pub(crate) fn at_line(self, line: usize) -> Self {
        match self {
            ParseError::BadCharacter { position, ch, .. } => ParseError::BadCharacter { line, position, ch },
            ParseError::UndeclaredGenerator { name, .. } => ParseError::UndeclaredGenerator { line, name },
            ParseError::DuplicateGenerator { name, .. } => ParseError::DuplicateGenerator { line, name },
            ParseError::EmptyRelator { .. } => ParseError::EmptyRelator { line },
            ParseError::Syntax { message, .. } => ParseError::Syntax { line, message },
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("generator index {index} out of range 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCap { cap: usize },
    #[error("search budget of {budget} candidate assignments exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid coset table: {0}")]
    InvalidCosetTable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no epimorphism onto the target group was found")]
    NoEpimorphism,
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// Budget and size limits, as opposed to bad input.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::OrderCap { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
