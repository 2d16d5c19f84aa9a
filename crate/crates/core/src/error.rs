use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("expected a polynomial, found a rational function with denominator {0}")]
    NotPolynomial(String),

    #[error("both arguments have degree 0 in `{0}`")]
    BothDegreeZero(String),

    #[error("degree in `{var}` is {degree}, need at least {needed}")]
    DegreeTooLow {
        var: String,
        degree: u32,
        needed: u32,
    },

    #[error("resultant vanishes identically: {0}")]
    ZeroResultant(String),

    #[error("invalid web: {reason} (offending factor {factor})")]
    InvalidWeb { reason: String, factor: String },

    #[error("zero input: {0}")]
    ZeroInput(String),

    #[error("constant input: {0}")]
    ConstantInput(String),

    #[error("form is not saturated: common factor {0}")]
    NotSaturated(String),

    #[error("component {0} is not a graph over any coordinate chart")]
    NotAGraph(String),

    #[error("curve {0} is not invariant")]
    NotInvariant(String),

    #[error("not bihomogeneous: {0}")]
    NotBihomogeneous(String),

    #[error("point not exactly representable: {0}")]
    NotRepresentable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Errors raised while reading user text, as opposed to mathematical
    /// precondition failures.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::UnknownVariable(_) | Error::NotPolynomial(_)
        )
    }
}
