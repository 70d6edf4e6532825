use thiserror::Error;

/// Errors raised by the symbolic engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable universes do not match")]
    UniverseMismatch,
    #[error("coefficient flavors do not match: {0} vs {1}")]
    FlavorMismatch(&'static str, &'static str),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("series truncation orders do not match: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("charts do not match")]
    ChartMismatch,
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("function is not in the vanishing ideal")]
    NotInIdeal,
    #[error("product is not adapted: {0}")]
    NotAdapted(String),
    #[error("product is not projectable: {0}")]
    NotProjectable(String),
    #[error("vertical form is not closed")]
    NotClosed,
    #[error("obstruction cocycle is not exact: {0}")]
    ObstructionNotExact(String),
    #[error("negative power of the deformation parameter produced: {0}")]
    NegativeNuPower(String),
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("depth {0} exceeds the implemented bound {1}")]
    DepthTooLarge(usize, usize),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
