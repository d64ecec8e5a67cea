use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rule pattern `{0}` overlaps itself; single-rule confluence is not guaranteed")]
    Overlap(String),
    #[error("rule replacement `{replacement}` is not shorter than pattern `{pattern}`")]
    NotReducing {
        pattern: String,
        replacement: String,
    },
    #[error("letter `{letter}` is not in the alphabet {{{first},{second}}}")]
    InvalidLetter {
        letter: char,
        first: char,
        second: char,
    },
    #[error("word `{0}` contains the factor aax and is not reduced")]
    NotReduced(String),
    #[error("subword depth {requested} exceeds monomial depth {depth}")]
    Depth { requested: usize, depth: usize },
    #[error("operation is undefined on the zero element")]
    ZeroElement,
    #[error("element `{0}` is not in Ra")]
    NotInRa(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("nilpotency of `{0}` is undecided within the iteration cap")]
    Undecided(String),
    #[error("sampler found only zero after {0} attempts")]
    SamplerExhausted(usize),
    #[error("ring of order {order} exceeds the cap {cap} for this predicate")]
    SizeCap { order: usize, cap: usize },
    #[error("tables violate the ring axioms: {0}")]
    RingAxiom(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}
