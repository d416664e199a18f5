use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands use different variable tables")]
    MismatchedTables,
    #[error("operands use different coefficient fields")]
    MismatchedFields,
    #[error("operands use different monomial orders")]
    MismatchedOrders,
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable x[{i},{j}]")]
    UnknownVariable { i: usize, j: usize },
    #[error("invalid coefficient `{0}`")]
    BadCoefficient(String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("Gröbner basis computation exceeded its time budget")]
    Timeout,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
